#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hbcell/error.hpp"

namespace hbcell {

/// Dense row-major matrix addressed with 1-based (row, col) indices, the
/// convention used for every Hilbert-Burch shaped matrix in this library.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw Error(ErrorCode::shape_mismatch, "index (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") outside " +
                                                 std::to_string(rows_) + "x" +
                                                 std::to_string(cols_));
    }
    return static_cast<std::size_t>((i - 1) * cols_ + (j - 1));
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Grid<int>;

}  // namespace hbcell

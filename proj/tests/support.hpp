#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hbcell/cell.hpp"
#include "hbcell/hilburch.hpp"
#include "hbcell/io.hpp"

namespace hbcell::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(HBCELL_TEST_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MonomialCell small_cell() { return make_cell({0, 5, 7, 11}); }
inline MonomialCell wide_cell() { return make_cell({0, 3, 4, 5, 10, 11, 12, 14, 15, 16, 19, 20, 21}); }
inline MonomialCell worked_cell() { return make_cell({0, 2, 3, 5}); }

inline std::vector<BiPoly> worked_generators(const FieldSpec& field = FieldSpec::rationals()) {
  return parse_generators(read_data("worked_generators.txt"), field);
}

inline UniMatrix uni_matrix(const FieldSpec& field, const std::vector<std::vector<std::string>>& rows) {
  UniMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), UniPoly(field));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = UniPoly::parse(field, rows[i][j]);
    }
  }
  return m;
}

inline BiMatrix bi_matrix(const FieldSpec& field, const std::vector<std::vector<std::string>>& rows) {
  BiMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), BiPoly(field));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = BiPoly::parse(field, rows[i][j]);
    }
  }
  return m;
}

// Final canonical matrix of the worked reduction.
inline ParamMatrix worked_answer(const FieldSpec& field = FieldSpec::rationals()) {
  return check_membership(worked_cell(), field,
                          uni_matrix(field, {{"2*y - 2", "-2*y + 1", "0"},
                                             {"-2", "2", "4"},
                                             {"y - 2", "3", "4"},
                                             {"-1", "1", "y + 1"}}));
}

inline std::vector<std::string> worked_answer_generators() {
  return {"x^3 - x^2*y - 2*x*y^2 + 2*y^3 - 2*x^2 + x*y + y^2 - x + 2*y - 2",
          "x^2*y^2 - x*y^3 - y^4 + 2*x^2*y - 8*x*y^2 + 5*y^3 - 2*x^2 - x*y + 3*y^2 + 6*x - 3*y",
          "x*y^3 - y^4 - 2*x^2*y + 6*x*y^2 - 5*y^3 + x^2 - x*y + 2*y^2 - 3*x + 4*y - 2",
          "y^5 - 2*x*y^3 + 4*y^4 + 5*x*y^2 + 2*y^3 - 6*y^2 - 4*x - 12*y + 8"};
}

/// Uniformly chosen lex-segment cell of colength <= max_colength.
inline MonomialCell random_lex_cell(std::mt19937_64& rng, int max_colength) {
  static thread_local std::vector<MonomialCell> pool;
  static thread_local int pool_size = -1;
  if (pool_size != max_colength) {
    pool = enumerate_lex_cells(max_colength);
    pool_size = max_colength;
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

}  // namespace hbcell::testing

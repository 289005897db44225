#include "hbcell/io.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

namespace hbcell {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void json_fail(const std::string& what) {
  throw Error(ErrorCode::parse_error, "parameter matrix JSON: " + what);
}

}  // namespace

MonomialCell parse_m_vector(std::string_view text) {
  std::vector<int> m;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw Error(ErrorCode::parse_error, "bad m-vector entry '" + std::string(piece) + "'");
    }
    m.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return make_cell(std::move(m));
}

std::vector<BiPoly> parse_generators(std::string_view text, const FieldSpec& field) {
  std::vector<BiPoly> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    out.push_back(BiPoly::parse(field, body));
  }
  if (out.empty()) throw Error(ErrorCode::parse_error, "no generators found");
  return out;
}

std::string param_matrix_to_json(const ParamMatrix& a) {
  Json j;
  j["m"] = std::vector<int>(a.cell().m_vector().begin(), a.cell().m_vector().end());
  j["index_base"] = 1;
  j["field"] = a.field().name();
  Json rows = Json::array();
  for (int i = 1; i <= a.rows(); ++i) {
    Json row = Json::array();
    for (int k = 1; k <= a.cols(); ++k) row.push_back(a(i, k).to_string());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

ParamMatrix param_matrix_from_json(std::string_view text, const FieldSpec& field,
                                   const std::optional<MonomialCell>& cell) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    json_fail(e.what());
  }
  if (!j.is_object()) json_fail("expected an object");
  if (j.contains("index_base") && j["index_base"] != 1) json_fail("only index_base 1 is supported");
  if (j.contains("field") && j["field"] != field.name()) {
    throw Error(ErrorCode::field_mismatch,
                "matrix is over " + j["field"].dump() + " but the active field is " + field.name());
  }
  std::optional<MonomialCell> target = cell;
  if (j.contains("m")) {
    if (!j["m"].is_array()) json_fail("\"m\" must be an array");
    std::vector<int> m;
    for (const auto& v : j["m"]) {
      if (!v.is_number_integer()) json_fail("\"m\" must hold integers");
      m.push_back(v.get<int>());
    }
    MonomialCell from_file = make_cell(std::move(m));
    if (target && !(*target == from_file)) {
      throw Error(ErrorCode::bad_m_vector, "the m-vector in the matrix file differs from --m");
    }
    target = std::move(from_file);
  }
  if (!target) throw Error(ErrorCode::bad_m_vector, "no m-vector given");
  if (!j.contains("entries") || !j["entries"].is_array()) json_fail("missing \"entries\"");
  const auto& rows = j["entries"];
  const int t = target->t();
  if (static_cast<int>(rows.size()) != t + 1) {
    throw Error(ErrorCode::shape_mismatch, "expected " + std::to_string(t + 1) + " rows");
  }
  UniMatrix a(t + 1, t, UniPoly(field));
  for (int i = 1; i <= t + 1; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != t) {
      throw Error(ErrorCode::shape_mismatch, "row " + std::to_string(i) + " must have " + std::to_string(t) + " entries");
    }
    for (int k = 1; k <= t; ++k) {
      const auto& cell_value = row[static_cast<std::size_t>(k - 1)];
      if (cell_value.is_string()) {
        a(i, k) = UniPoly::parse(field, cell_value.get<std::string>());
      } else if (cell_value.is_number_integer()) {
        a(i, k) = UniPoly::constant(field, cell_value.get<long long>());
      } else {
        json_fail("entry (" + std::to_string(i) + "," + std::to_string(k) + ") must be a string");
      }
    }
  }
  return check_membership(*target, field, std::move(a));
}

}  // namespace hbcell

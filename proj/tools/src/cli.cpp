#include "hbcell_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "hbcell/betti.hpp"
#include "hbcell/canonical.hpp"
#include "hbcell/groebner.hpp"
#include "hbcell/io.hpp"
#include "hbcell/projective.hpp"

namespace hbcell::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string m;
  std::string matrix;
  std::string gens;
  std::string field = "qq";
  std::uint64_t prime = 0;
  std::optional<std::uint64_t> seed;
  int trials = 1;
  bool json = false;
  bool homogeneous = false;
  std::string beta;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FieldSpec field_of(const Options& o) {
  if (o.field == "qq") {
    if (o.prime != 0) throw Error(ErrorCode::bad_prime, "--prime needs --field fp");
    return FieldSpec::rationals();
  }
  if (o.prime == 0) throw Error(ErrorCode::bad_prime, "--field fp needs --prime");
  return FieldSpec::prime_field(o.prime);
}

std::optional<MonomialCell> optional_cell(const Options& o) {
  if (o.m.empty()) return std::nullopt;
  return parse_m_vector(o.m);
}

ParamMatrix load_matrix(const Options& o) {
  return param_matrix_from_json(read_file(o.matrix), field_of(o), optional_cell(o));
}

Json to_json(std::span<const int> v) { return Json(std::vector<int>(v.begin(), v.end())); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const std::map<int, int>& counts) {
  Json j = Json::object();
  for (const auto& [deg, n] : counts) j[std::to_string(deg)] = n;
  return j;
}

Json to_json(const std::set<int>& s) { return Json(std::vector<int>(s.begin(), s.end())); }

template <class P>
Json to_json(const std::vector<P>& polys) {
  Json j = Json::array();
  for (const auto& p : polys) j.push_back(p.to_string());
  return j;
}

Json to_json(const ParamMatrix& a) { return Json::parse(param_matrix_to_json(a)); }

std::string join(std::span<const int> v, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

std::string join(const std::set<int>& s) {
  const std::vector<int> v(s.begin(), s.end());
  return v.empty() ? "-" : join(v);
}

std::string join(const std::map<int, int>& counts) {
  std::string out;
  for (const auto& [deg, n] : counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(deg) + ":" + std::to_string(n);
  }
  return out.empty() ? "-" : out;
}

template <class Cell>
void print_table(std::ostream& out, const Grid<Cell>& m, auto&& render) {
  std::size_t width = 1;
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) width = std::max(width, render(m(i, j)).size());
  }
  for (int i = 1; i <= m.rows(); ++i) {
    out << ' ';
    for (int j = 1; j <= m.cols(); ++j) out << ' ' << std::setw(static_cast<int>(width)) << render(m(i, j));
    out << '\n';
  }
}

void print_int_table(std::ostream& out, const IntMatrix& m) {
  print_table(out, m, [](int v) { return std::to_string(v); });
}

void print_param(std::ostream& out, const ParamMatrix& a) {
  print_table(out, a.entries(), [](const UniPoly& p) { return p.to_string(); });
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(14) << key << std::right << value << '\n';
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

bool has_bounds(const MonomialCell& cell) { return cell.lex_segment() && cell.colength() >= 2; }

Json bounds_json(const MonomialCell& cell) {
  if (!has_bounds(cell)) return Json();
  const DimensionBounds b = dimension_bounds(cell);
  return Json{{"lower", b.lower}, {"upper", b.upper}};
}

std::string bounds_text(const MonomialCell& cell) {
  const DimensionBounds b = dimension_bounds(cell);
  return std::to_string(b.lower) + " <= N <= " + std::to_string(b.upper);
}

int cmd_cell(const Options& o, std::ostream& out) {
  const MonomialCell cell = parse_m_vector(o.m);
  const bool lex = cell.lex_segment();
  const auto h = hilbert_function(cell);
  const int n = lex ? dimension(cell) : parameter_count(cell);
  const auto special = special_indices(cell);
  if (o.json) {
    Json j;
    j["m"] = to_json(cell.m_vector());
    j["index_base"] = 1;
    j["t"] = cell.t();
    j["d"] = cell.d_vector();
    j["lex_segment"] = lex;
    j["colength"] = cell.colength();
    j["h"] = h;
    j["degree_matrix"] = to_json(degree_matrix(cell));
    j["bound_matrix"] = to_json(bound_matrix(cell));
    j["N"] = n;
    j["dimension_bounds"] = bounds_json(cell);
    j["special_indices"] = {{"I", to_json(special.three_or_more)}, {"J", to_json(special.two_or_more)}};
    j["lex_betti"] = lex ? to_json(lex_betti(cell)) : Json();
    j["below_diagonal"] = {{"linear_slots", below_diagonal_linear_slots(cell)},
                           {"zero_slots", below_diagonal_zero_slots(cell)}};
    emit(out, j);
    return kOk;
  }
  row(out, "m", join(cell.m_vector()));
  row(out, "t", std::to_string(cell.t()));
  row(out, "d", join(cell.d_vector()));
  row(out, "lex-segment", lex ? "yes" : "no");
  row(out, "colength", std::to_string(cell.colength()));
  row(out, "h", join(h));
  row(out, "N", std::to_string(n));
  if (has_bounds(cell)) row(out, "bounds", bounds_text(cell));
  row(out, "I", join(special.three_or_more));
  row(out, "J", join(special.two_or_more));
  if (lex) row(out, "lex betti", join(lex_betti(cell)));
  row(out, "below diag", std::to_string(below_diagonal_linear_slots(cell)) + " linear, " +
                             std::to_string(below_diagonal_zero_slots(cell)) + " zero");
  out << "degree matrix\n";
  print_int_table(out, degree_matrix(cell));
  out << "bound matrix\n";
  print_int_table(out, bound_matrix(cell));
  return kOk;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const MonomialCell cell = parse_m_vector(o.m);
  const int n = dimension(cell);
  const auto h = hilbert_function(cell);
  if (o.json) {
    Json j;
    j["m"] = to_json(cell.m_vector());
    j["N"] = n;
    j["formula"] = dimension_formula(h);
    j["compact_formula"] = dimension_formula_compact(h);
    j["dimension_bounds"] = bounds_json(cell);
    emit(out, j);
    return kOk;
  }
  out << "N = " << n;
  if (has_bounds(cell)) out << "  (" << bounds_text(cell) << ")";
  out << '\n';
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.seed) throw Error(ErrorCode::parse_error, "sample requires --seed");
  if (o.trials < 1) throw Error(ErrorCode::parse_error, "--trials must be positive");
  const MonomialCell cell = parse_m_vector(o.m);
  const FieldSpec field = field_of(o);
  if (!char_ok(field, hilbert_function(cell))) {
    err << "warning: characteristic " << field.prime() << " does not exceed the top degree of h\n";
  }
  std::vector<ParamMatrix> draws;
  for (int k = 0; k < o.trials; ++k) {
    draws.push_back(sample(cell, field, *o.seed ^ static_cast<std::uint64_t>(k)));
  }
  if (o.json) {
    if (o.trials == 1) {
      emit(out, to_json(draws.front()));
    } else {
      Json trials = Json::array();
      for (int k = 0; k < o.trials; ++k) {
        trials.push_back({{"trial", k},
                          {"seed", *o.seed ^ static_cast<std::uint64_t>(k)},
                          {"matrix", to_json(draws[static_cast<std::size_t>(k)])}});
      }
      emit(out, Json{{"trials", std::move(trials)}});
    }
    return kOk;
  }
  for (int k = 0; k < o.trials; ++k) {
    out << "trial " << k << " (seed " << (*o.seed ^ static_cast<std::uint64_t>(k)) << ")\n";
    print_param(out, draws[static_cast<std::size_t>(k)]);
  }
  return kOk;
}

int cmd_psi(const Options& o, std::ostream& out) {
  const ParamMatrix a = load_matrix(o);
  Json gens;
  if (o.homogeneous) {
    gens = to_json(psi_bar(a).F);
  } else {
    gens = to_json(psi(a).f);
  }
  if (o.json) {
    Json j;
    j["m"] = to_json(a.cell().m_vector());
    j["field"] = a.field().name();
    j["homogeneous"] = o.homogeneous;
    j["generators"] = std::move(gens);
    emit(out, j);
    return kOk;
  }
  const char* name = o.homogeneous ? "F_" : "f_";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    out << name << k << " = " << gens[k].get<std::string>() << '\n';
  }
  return kOk;
}

int cmd_canonicalize(const Options& o, std::ostream& out) {
  const auto gens = parse_generators(read_file(o.gens), field_of(o));
  const CanonicalRun run = canonicalize_traced(gens, optional_cell(o));
  const auto regenerated = psi(run.result).f;
  if (o.json) {
    Json moves = Json::array();
    for (const auto& mv : run.moves) moves.push_back({{"i", mv.i}, {"j", mv.j}});
    Json j;
    j["matrix"] = to_json(run.result);
    j["moves"] = std::move(moves);
    j["generators"] = to_json(regenerated);
    emit(out, j);
    return kOk;
  }
  out << "cell m = (" << join(run.result.cell().m_vector(), ",") << "), " << run.moves.size()
      << " reduction moves\nA =\n";
  print_param(out, run.result);
  for (std::size_t k = 0; k < regenerated.size(); ++k) {
    out << "f'_" << k << " = " << regenerated[k].to_string() << '\n';
  }
  return kOk;
}

int cmd_betti(const Options& o, std::ostream& out) {
  const ParamMatrix a = load_matrix(o);
  const BettiTable table = betti_numbers(a);
  std::map<int, int> codim;
  for (const auto& [j, w] : table.lex_beta0) {
    const auto it = table.beta0.find(j);
    codim[j] = strata_codim(a.cell(), j, it == table.beta0.end() ? 0 : it->second);
  }
  const int total = strata_codim_total(a.cell(), table.beta0);
  if (o.json) {
    Json j;
    j["m"] = to_json(a.cell().m_vector());
    j["beta0"] = to_json(table.beta0);
    j["beta1"] = to_json(table.beta1);
    j["lex_baseline"] = {{"beta0", to_json(table.lex_beta0)}, {"beta1", to_json(table.lex_beta1)}};
    j["per_degree_codim"] = to_json(codim);
    j["codim_total"] = total;
    emit(out, j);
    return kOk;
  }
  row(out, "beta0", join(table.beta0));
  row(out, "beta1", join(table.beta1));
  row(out, "lex beta0", join(table.lex_beta0));
  row(out, "lex beta1", join(table.lex_beta1));
  row(out, "codim", join(codim));
  row(out, "codim total", std::to_string(total));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.matrix.empty() == o.gens.empty()) {
    throw Error(ErrorCode::parse_error, "verify needs exactly one of --matrix and --gens");
  }
  std::string message;
  Json j;
  if (!o.matrix.empty()) {
    const ParamMatrix a = load_matrix(o);
    const IdealBasis basis = psi(a);
    const bool certified = verify_groebner_property(basis);
    const auto in = initial_ideal(buchberger<2>(basis.f));
    const auto expected_list = a.cell().minimal_generators();
    const bool initial = in == minimal_monomial_generators<2>(expected_list);
    if (!certified || !initial) {
      throw Error(ErrorCode::structure_violation, "psi(A) failed the Groebner check");
    }
    j["m"] = to_json(a.cell().m_vector());
    j["s_pairs"] = a.cell().t();
    message = "OK: in(I_t(X+A)) = I0; GB certified via " + std::to_string(a.cell().t()) + " S-pairs";
  } else {
    const auto gens = parse_generators(read_file(o.gens), field_of(o));
    const MonomialCell cell = o.m.empty() ? infer_cell(gens) : parse_m_vector(o.m);
    const IdealBasis basis = prepare_basis(gens, cell);
    if (!verify_groebner_property(basis)) {
      throw Error(ErrorCode::structure_violation, "prepared basis failed the S-pair check");
    }
    j["m"] = to_json(cell.m_vector());
    j["s_pairs"] = cell.t();
    message = "OK: in(I) = I0 for m = (" + join(cell.m_vector(), ",") + "); GB certified via " +
              std::to_string(cell.t()) + " S-pairs";
  }
  if (o.json) {
    j["ok"] = true;
    j["message"] = message;
    emit(out, j);
  } else {
    out << message << '\n';
  }
  return kOk;
}

std::map<int, int> parse_beta(const std::string& text) {
  std::map<int, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    int j = 0;
    int u = 0;
    const bool ok = eq != std::string::npos &&
                    std::from_chars(item.data(), item.data() + eq, j).ptr == item.data() + eq &&
                    std::from_chars(item.data() + eq + 1, item.data() + item.size(), u).ptr ==
                        item.data() + item.size();
    if (!ok) throw Error(ErrorCode::parse_error, "bad --beta item '" + item + "', expected j=u");
    out[j] = u;
  }
  return out;
}

int cmd_strata(const Options& o, std::ostream& out) {
  const MonomialCell cell = parse_m_vector(o.m);
  if (!cell.lex_segment()) throw Error(ErrorCode::not_lexsegment, "strata-codim needs a lex-segment cell");
  const auto beta = parse_beta(o.beta);
  std::map<int, int> per_degree;
  for (const auto& [j, u] : beta) per_degree[j] = strata_codim(cell, j, u);
  const int total = strata_codim_total(cell, beta);
  if (o.json) {
    Json j;
    j["m"] = to_json(cell.m_vector());
    j["per_degree"] = to_json(per_degree);
    j["total"] = total;
    emit(out, j);
    return kOk;
  }
  for (const auto& [j, c] : per_degree) {
    out << "j=" << j << " u=" << beta.at(j) << " codim " << c << '\n';
  }
  out << "total " << total << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Burch parametrization of Groebner cells in K[x,y]", "hbcell"};
  app.require_subcommand(1);
  Options o;

  auto add_m = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--m", o.m, "m-vector, e.g. 0,5,7,11");
    if (required) opt->required();
  };
  auto add_field = [&](CLI::App* c) {
    c->add_option("--field", o.field, "coefficient field")->check(CLI::IsMember({"qq", "fp"}));
    c->add_option("--prime", o.prime, "characteristic for --field fp");
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "machine-readable output"); };

  auto* cell = app.add_subcommand("cell", "cell data: h, degree and bound matrices, N");
  add_m(cell, true);
  add_json(cell);
  auto* dim = app.add_subcommand("dim", "dimension of a lex-segment cell");
  add_m(dim, true);
  add_json(dim);
  auto* smp = app.add_subcommand("sample", "random point of the cell");
  add_m(smp, true);
  add_field(smp);
  smp->add_option("--seed", o.seed, "64-bit seed");
  smp->add_option("--trials", o.trials, "number of draws");
  add_json(smp);
  auto* ps = app.add_subcommand("psi", "signed maximal minors of X + A");
  add_m(ps, false);
  ps->add_option("--matrix", o.matrix, "parameter matrix JSON")->required();
  add_field(ps);
  ps->add_flag("--homogeneous", o.homogeneous, "lift to K[x,y,z]");
  add_json(ps);
  auto* can = app.add_subcommand("canonicalize", "canonical matrix of an ideal");
  can->add_option("--gens", o.gens, "generator file")->required();
  add_m(can, false);
  add_field(can);
  add_json(can);
  auto* bet = app.add_subcommand("betti", "graded Betti numbers and strata");
  add_m(bet, false);
  bet->add_option("--matrix", o.matrix, "parameter matrix JSON")->required();
  add_field(bet);
  add_json(bet);
  auto* ver = app.add_subcommand("verify", "check the initial ideal and the Groebner property");
  add_m(ver, false);
  ver->add_option("--matrix", o.matrix, "parameter matrix JSON");
  ver->add_option("--gens", o.gens, "generator file");
  add_field(ver);
  add_json(ver);
  auto* str = app.add_subcommand("strata-codim", "codimension of Betti strata");
  add_m(str, true);
  str->add_option("--beta", o.beta, "j=u[,j=u...]");
  add_json(str);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (cell->parsed()) return cmd_cell(o, out);
    if (dim->parsed()) return cmd_dim(o, out);
    if (smp->parsed()) return cmd_sample(o, out, err);
    if (ps->parsed()) return cmd_psi(o, out);
    if (can->parsed()) return cmd_canonicalize(o, out);
    if (bet->parsed()) return cmd_betti(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (str->parsed()) return cmd_strata(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_internal_defect(e.code()) ? kInternalDefect : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalDefect;
  }
  return kInputError;
}

}  // namespace hbcell::cli

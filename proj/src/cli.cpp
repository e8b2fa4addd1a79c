#include "qcpn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "qcpn/basis_cert.hpp"
#include "qcpn/corep.hpp"
#include "qcpn/errors.hpp"
#include "qcpn/pairing.hpp"
#include "qcpn/qsphere.hpp"

#ifndef QCPN_VERSION
#define QCPN_VERSION "0.0.0"
#endif

namespace qcpn::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json strings(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(strings(m.row(r)));
  return out;
}

Json class_json(const KClass& c) { return Json{{"n", c.n()}, {"coeffs", strings(c.coeffs())}}; }

std::string csv_line(const std::vector<BigInt>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ",";
    line += to_decimal(values[i]);
  }
  return line + "\n";
}

Json report_json(const ReductionReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back({{"input", m.input}, {"form_a", m.form_a}, {"form_b", m.form_b}});
  return Json{{"inputs", r.inputs},
              {"max_steps", r.max_steps},
              {"step_cap_hits", r.step_cap_hits},
              {"degree_violations", r.degree_violations},
              {"mismatches", mismatches},
              {"passed", r.passed()}};
}

Json degree_json(const NCPoly& p) {
  auto d = u1_degree(p);
  return d ? Json(*d) : Json("inhomogeneous");
}

// Envelope fields first, payload keys merged in at top level.
Json envelope(const std::string& command, Json params, const Json& payload) {
  Json out{{"command", command}, {"version", QCPN_VERSION}, {"params", std::move(params)}};
  for (const auto& [key, value] : payload.items()) out[key] = value;
  return out;
}

std::size_t step_cap_from_env() {
  const char* raw = std::getenv("QCPN_STEP_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultStepCap;
  std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("QCPN_STEP_CAP must be a positive integer, got '" + text + "'");
  std::size_t cap = 0;
  std::istringstream(text) >> cap;
  if (cap == 0) throw UsageError("QCPN_STEP_CAP must be a positive integer, got '" + text + "'");
  return cap;
}

std::vector<BigInt> parse_coeff_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty entry in --coeffs");
    item = item.substr(first, last - first + 1);
    BigInt v;
    if (v.set_str(item, 10) != 0) throw UsageError("bad integer in --coeffs: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// Shared "--m M | --coeffs c0,c1,..." class selector.
struct ClassArgs {
  int n = 1;
  std::optional<long> m;
  std::optional<std::string> coeffs;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "Dimension of CP^n_q")->required();
    auto* m_opt = cmd->add_option("--m", m, "Line bundle L^n_m");
    auto* c_opt = cmd->add_option("--coeffs", coeffs, "t-coefficients c0,c1,...,cn");
    m_opt->excludes(c_opt);
  }

  KClass build() const {
    if (m) return line_class(n, *m);
    if (!coeffs) throw UsageError("one of --m or --coeffs is required");
    auto values = parse_coeff_list(*coeffs);
    return KClass(TruncatedPoly(n, std::move(values)));
  }

  Json params() const {
    Json p{{"n", n}};
    if (m) p["m"] = *m;
    if (coeffs) p["coeffs"] = *coeffs;
    return p;
  }
};

struct Invocation {
  std::string format = "json";

  std::int64_t kbasis_n = 1;
  int line_n = 1;
  long line_m = 0;
  int assoc_n = 1;
  int assoc_su = 2;
  ClassArgs pair_args;
  ClassArgs restrict_args;
  int restrict_to = 1;

  std::optional<int> nc_n;
  std::string nc_expr;
  std::string orientation = "zero-adjacent";
  int fuzz_max_len = 6;
  std::size_t fuzz_trials = 10000;
  std::uint64_t fuzz_seed = 42;
};

RewriteOptions rewrite_options(const Invocation& inv) {
  RewriteOptions o;
  o.orientation = inv.orientation == "stars-ascending" ? Orientation::kStarsAscending
                                                       : Orientation::kZeroAdjacent;
  o.step_cap = step_cap_from_env();
  return o;
}

void add_format(CLI::App* cmd, Invocation& inv) {
  cmd->add_option("--format", inv.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void add_orientation(CLI::App* cmd, Invocation& inv) {
  cmd->add_option("--orientation", inv.orientation, "Letter order the rewrite rules sort towards")
      ->check(CLI::IsMember({"zero-adjacent", "stars-ascending"}))
      ->capture_default_str();
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

int dispatch(CLI::App& app, Invocation& inv, std::ostream& out) {
  const bool csv = inv.format == "csv";
  auto* kbasis = app.get_subcommand("kbasis");
  auto* kclass = app.get_subcommand("kclass");
  auto* pair = app.get_subcommand("pair");
  auto* restrict_cmd = app.get_subcommand("restrict");
  auto* nc = app.get_subcommand("nc");

  if (kbasis->parsed()) {
    if (inv.kbasis_n < 1 || inv.kbasis_n > 100000) throw DomainError("--n must be >= 1");
    const auto cert = certify_basis(static_cast<int>(inv.kbasis_n));
    if (csv) {
      for (std::size_t r = 0; r < cert.matrix.rows(); ++r) out << csv_line(cert.matrix.row(r));
      return kExitOk;
    }
    emit(out, envelope("kbasis", {{"n", cert.n}, {"format", inv.format}},
                       {{"n", cert.n},
                        {"matrix", matrix_json(cert.matrix)},
                        {"det", to_decimal(cert.det)},
                        {"inverse", matrix_json(cert.inverse)}}));
    return kExitOk;
  }

  if (kclass->parsed()) {
    if (kclass->get_subcommand("line")->parsed()) {
      const KClass c = line_class(inv.line_n, inv.line_m);
      if (csv) {
        out << csv_line(c.coeffs());
        return kExitOk;
      }
      emit(out, envelope("kclass line", {{"n", inv.line_n}, {"m", inv.line_m}, {"format", inv.format}},
                         {{"n", c.n()}, {"coeffs", strings(c.coeffs())}, {"text", c.to_string()}}));
      return kExitOk;
    }
    const WeightVector w = pi_weights(inv.assoc_su);
    const KClass c = associated_class(inv.assoc_n, w);
    if (csv) {
      out << csv_line(c.coeffs());
      return kExitOk;
    }
    Json decomposition = Json::array();
    for (const auto& [label, mult] : w.multiplicities())
      decomposition.push_back({{"label", label}, {"multiplicity", mult}});
    emit(out, envelope("kclass assoc", {{"n", inv.assoc_n}, {"su", inv.assoc_su}, {"format", inv.format}},
                       {{"n", c.n()},
                        {"weights", w.weights()},
                        {"determinant_condition", check_determinant_condition(w)},
                        {"decomposition", decomposition},
                        {"coeffs", strings(c.coeffs())},
                        {"text", c.to_string()}}));
    return kExitOk;
  }

  if (pair->parsed()) {
    const KClass c = inv.pair_args.build();
    const auto pv = pair_vector(c);
    if (csv) {
      out << csv_line(pv.values);
      return kExitOk;
    }
    Json params = inv.pair_args.params();
    params["format"] = inv.format;
    emit(out, envelope("pair", params,
                       {{"n", c.n()}, {"class", class_json(c)}, {"pairings", strings(pv.values)}}));
    return kExitOk;
  }

  if (restrict_cmd->parsed()) {
    const KClass source = inv.restrict_args.build();
    const KClass c = restrict_to(source, inv.restrict_to);
    if (csv) {
      out << csv_line(c.coeffs());
      return kExitOk;
    }
    Json params = inv.restrict_args.params();
    params["to"] = inv.restrict_to;
    params["format"] = inv.format;
    emit(out, envelope("restrict", params,
                       {{"n", c.n()},
                        {"coeffs", strings(c.coeffs())},
                        {"text", c.to_string()},
                        {"source", class_json(source)}}));
    return kExitOk;
  }

  if (nc->parsed()) {
    const RewriteOptions options = rewrite_options(inv);
    const std::string orientation = inv.orientation;
    if (nc->get_subcommand("reduce")->parsed()) {
      const int n = *inv.nc_n;
      const NCPoly p = parse_nc(inv.nc_expr, n);
      std::size_t steps = 0;
      const NCPoly nf = RewriteSystem(n, options).reduce(p, RedexStrategy::kLeftmost, nullptr, &steps);
      emit(out, envelope("nc reduce", {{"n", n}, {"expr", inv.nc_expr}, {"orientation", orientation}},
                         {{"expression", p.to_string()},
                          {"normal_form", nf.to_string()},
                          {"degree", degree_json(nf)},
                          {"steps", steps}}));
      return kExitOk;
    }
    if (nc->get_subcommand("degree")->parsed()) {
      const NCPoly p = inv.nc_n ? parse_nc(inv.nc_expr, *inv.nc_n) : parse_nc(inv.nc_expr);
      Json params{{"expr", inv.nc_expr}};
      if (inv.nc_n) params["n"] = *inv.nc_n;
      emit(out, envelope("nc degree", params,
                         {{"expression", p.to_string()}, {"degree", degree_json(p)}}));
      return kExitOk;
    }
    if (nc->get_subcommand("fuzz")->parsed()) {
      const int n = *inv.nc_n;
      const auto report = fuzz_confluence(n, inv.fuzz_max_len, inv.fuzz_trials, inv.fuzz_seed, options);
      emit(out, envelope("nc fuzz",
                         {{"n", n},
                          {"max_len", inv.fuzz_max_len},
                          {"trials", inv.fuzz_trials},
                          {"seed", inv.fuzz_seed},
                          {"orientation", orientation}},
                         {{"report", report_json(report)}}));
      return report.passed() ? kExitOk : kExitDomainError;
    }
    const int n = *inv.nc_n;
    const auto report = verify_defining_relations(n, options);
    emit(out, envelope("nc relations", {{"n", n}, {"orientation", orientation}},
                       {{"report", report_json(report)}}));
    return report.passed() ? kExitOk : kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-theory of quantum projective spaces and the quantum-sphere algebra.\n"
               "Line bundles follow [L^n_m] = (1 - t)^m with t = [1] - [L^n_1]; this is the\n"
               "opposite sign to the convention L_m of some references (L^n_m = L_{-m} there).",
               "qcpn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QCPN_VERSION);
  Invocation inv;

  auto* kbasis = app.add_subcommand("kbasis", "Certify that E^n_0..E^n_n form a Z-basis");
  kbasis->add_option("--n", inv.kbasis_n, "Dimension n >= 1")->required();
  add_format(kbasis, inv);

  auto* kclass = app.add_subcommand("kclass", "K-classes of bundles in the t-basis");
  kclass->require_subcommand(1);
  auto* line = kclass->add_subcommand("line", "Line bundle class [L^n_m] = (1-t)^m");
  line->add_option("--n", inv.line_n, "Dimension n >= 0")->required();
  line->add_option("--m", inv.line_m, "Any integer m")->required();
  add_format(line, inv);
  auto* assoc = kclass->add_subcommand("assoc", "Bundle associated with the fundamental corep of SU_q(M)");
  assoc->add_option("--n", inv.assoc_n, "Dimension n >= 1")->required();
  assoc->add_option("--su", inv.assoc_su, "M >= 2")->required();
  add_format(assoc, inv);

  auto* pair = app.add_subcommand("pair", "Index pairings <mu_k, class> for k = 0..n");
  inv.pair_args.attach(pair);
  add_format(pair, inv);

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a class to CP^K_q");
  inv.restrict_args.attach(restrict_cmd);
  restrict_cmd->add_option("--to", inv.restrict_to, "Target dimension K")->required();
  add_format(restrict_cmd, inv);

  auto* nc = app.add_subcommand("nc", "Quantum-sphere algebra O(S^{2n+1}_q)");
  nc->require_subcommand(1);
  auto* reduce = nc->add_subcommand("reduce", "Normal form of an expression");
  reduce->add_option("--n", inv.nc_n, "Ambient n")->required();
  reduce->add_option("--expr", inv.nc_expr, "Expression, e.g. \"q^-2 * z0 * z0s\"")->required();
  add_orientation(reduce, inv);
  auto* degree = nc->add_subcommand("degree", "U(1)-degree of an expression");
  degree->add_option("--n", inv.nc_n, "Ambient n (default: largest index used)");
  degree->add_option("--expr", inv.nc_expr, "Expression")->required();
  auto* fuzz = nc->add_subcommand("fuzz", "Seeded confluence fuzzing");
  fuzz->add_option("--n", inv.nc_n, "Ambient n")->required();
  fuzz->add_option("--max-len", inv.fuzz_max_len, "Maximum word length (>= 2)")->capture_default_str();
  fuzz->add_option("--trials", inv.fuzz_trials, "Number of random words")->capture_default_str();
  fuzz->add_option("--seed", inv.fuzz_seed, "RNG seed")->capture_default_str();
  add_orientation(fuzz, inv);
  auto* relations = nc->add_subcommand("relations", "Check every defining relation and its image under phi");
  relations->add_option("--n", inv.nc_n, "Ambient n >= 1")->required();
  add_orientation(relations, inv);

  std::vector<const char*> argv{"qcpn"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << QCPN_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qcpn: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return dispatch(app, inv, out);
  } catch (const UsageError& e) {
    err << "qcpn: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "qcpn: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace qcpn::cli

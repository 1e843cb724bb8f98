// orbitlift: lift curves over invariants, measure derivative norms, scan
// critical exponents, build covers and check admissible data.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitlift/analysis.hpp"
#include "orbitlift/core.hpp"
#include "orbitlift/covers.hpp"
#include "orbitlift/csv.hpp"
#include "orbitlift/invariants.hpp"
#include "orbitlift/lifting.hpp"
#include "orbitlift/matching.hpp"
#include "orbitlift/reduction.hpp"

namespace {

using json = nlohmann::json;
using namespace orbitlift;

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_numerical = 3;
constexpr int exit_property = 4;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string spec;
  int d = 2;
  std::vector<double> p{1.0};
  int levels = 1;
  std::string family = "radical";
  double p_min = 1.0;
  double p_max = 0.0;  // 0: 2d'
  int p_steps = 41;
  double B = 0.25;
  double D = 0.2;
  double L = 1.0;
  double gap = 1e-7;
  double tol = 1e-8;
  int max_depth = 20;
  std::vector<int> degrees;
  double t0 = std::nan("");
  std::string output_dir;
  std::string config_file;
  std::uint64_t seed = default_seed;

  json to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["seed"] = seed;
    j["tol"] = tol;
    j["max_depth"] = max_depth;
    j["output_dir"] = output_dir;
    if (command == "radical" || command == "roots") {
      j["p"] = p;
      j["levels"] = levels;
      if (command == "radical") j["d"] = d;
    } else if (command == "scan") {
      j["family"] = family;
      j["d"] = d;
      j["p_min"] = p_min;
      j["p_max"] = p_max;
      j["p_steps"] = p_steps;
      j["levels"] = levels;
    } else if (command == "cover") {
      j["L"] = L;
      j["D"] = D;
      j["degrees"] = degrees;
    } else if (command == "verify") {
      j["B"] = B;
      j["degrees"] = degrees;
      j["t0"] = std::isnan(t0) ? json(nullptr) : json(t0);
    } else if (command == "grid2d") {
      j["spec"] = spec;
    }
    return j;
  }
};

void diagnostic(const std::string& level, const std::string& code, const std::string& message,
                const json& extra = json::object()) {
  json j = extra;
  j["level"] = level;
  j["code"] = code;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::RefinementBudgetExhausted:
    case ErrorCode::RootSolveFailure:
    case ErrorCode::DiscontinuousAtZeroSet:
    case ErrorCode::NoReconcilingElement:
    case ErrorCode::AllZeroAtPoint:
    case ErrorCode::VanishingDominant:
    case ErrorCode::DominantVanishes:
    case ErrorCode::ClustersNotSeparated:
      return exit_numerical;
    case ErrorCode::CoverPropertyViolation:
      return exit_property;
    default:
      return exit_input;
  }
}

json norm_row(const NormReport& r) {
  return {{"kind", to_string(r.kind)}, {"p", r.p}, {"level", r.level}, {"value", r.value}, {"grid_size", r.grid_size}};
}

json report_header(const RunConfig& cfg) { return {{"schema", 1}, {"config", cfg.to_json()}}; }

/// Writes `name` under the output directory when one is configured.
void write_artifact(const RunConfig& cfg, const std::string& name, const std::string& content) {
  if (cfg.output_dir.empty()) return;
  std::filesystem::create_directories(cfg.output_dir);
  std::ofstream out(std::filesystem::path(cfg.output_dir) / name);
  if (!out) throw Error(ErrorCode::InputError, "cannot write to '" + cfg.output_dir + "'");
  out << content;
}

std::string lift_csv(const LiftedCurve& lift) {
  std::ostringstream out;
  out << "t,branch,re,im\n";
  for (std::size_t b = 0; b < lift.branch_count(); ++b)
    for (std::size_t i = 0; i < lift.size(); ++i)
      for (std::size_t c = 0; c < lift.dim(); ++c)
        out << csv::format_number(lift.grid[i]) << ',' << b * lift.dim() + c << ','
            << csv::format_number(lift.branches[b][i][c].real()) << ','
            << csv::format_number(lift.branches[b][i][c].imag()) << '\n';
  return out.str();
}

void emit(const RunConfig& cfg, const json& report) {
  std::string text = report.dump(2);
  std::cout << text << '\n';
  write_artifact(cfg, "report.json", text + "\n");
}

LiftOptions lift_options(const RunConfig& cfg) {
  LiftOptions o;
  o.tol = cfg.tol;
  o.max_depth = cfg.max_depth;
  return o;
}

/// Lift and norms of a curve at `levels` uniform bisection levels of the input grid.
int run_lift_command(const RunConfig& cfg, bool radical) {
  auto input = csv::read_curve_file(cfg.inputs.at(0));
  if (radical && input.components() != 1)
    throw Error(ErrorCode::InputError, "radical input must have one complex component (re_1, im_1)");
  json report = report_header(cfg);
  json norms = json::array();
  std::string table = "# level p lp weak_lp normalized_lp normalized_weak grid_size\n";
  std::optional<LiftedCurve> lifted_last;
  SampledCurve curve = input;
  for (int level = 0; level < cfg.levels; ++level) {
    if (level > 0) {
      std::vector<std::size_t> all(curve.size() - 1);
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      curve = refine(curve, all);
    }
    lifted_last = radical ? continuous_radical(curve, cfg.d, nullptr, lift_options(cfg))
                          : continuous_roots(curve, nullptr, lift_options(cfg));
    auto lifted = lifted_last->as_curve();
    const double measure = lifted.grid().length();
    for (double p : cfg.p) {
      auto lp = lp_derivative_norm(lifted, p);
      auto weak = weak_lp_quasinorm(lifted, p);
      lp.level = weak.level = level;
      auto nlp = normalized(lp, measure), nweak = normalized(weak, measure);
      for (const auto& r : {lp, weak, nlp, nweak}) norms.push_back(norm_row(r));
      table += std::to_string(level) + ' ' + csv::format_number(p) + ' ' + csv::format_number(lp.value) + ' ' +
               csv::format_number(weak.value) + ' ' + csv::format_number(nlp.value) + ' ' +
               csv::format_number(nweak.value) + ' ' + std::to_string(lifted.size()) + '\n';
    }
  }
  const LiftedCurve& final_lift = *lifted_last;
  if (!final_lift.complete())
    diagnostic("warning", "RefinementBudgetExhausted", final_lift.diagnostic);
  report["lift"] = {{"residual", final_lift.residual},
                    {"refinement_level", final_lift.refinement_level},
                    {"ambiguous_cells", final_lift.ambiguous_cells},
                    {"branches", final_lift.branch_count()},
                    {"grid_size", final_lift.size()}};
  report["norms"] = norms;
  write_artifact(cfg, "lift.csv", lift_csv(final_lift));
  write_artifact(cfg, "norms.dat", table);
  emit(cfg, report);
  return exit_ok;
}

int run_scan(const RunConfig& cfg) {
  if (cfg.d < 2) throw Error(ErrorCode::InputError, "scan needs d >= 2");
  ScanProblem pb{RepresentationSpec::cyclic(cfg.d), [](double t) { return CVec{cplx{t, 0.0}}; }};
  if (cfg.family == "roots") {
    pb.spec = RepresentationSpec::symmetric(cfg.d);
    const int q = cfg.d;
    pb.oracle = [q](double t) {
      CVec a(static_cast<std::size_t>(q), cplx{0.0, 0.0});
      a.back() = t;
      return a;
    };
  } else if (cfg.family != "radical") {
    throw Error(ErrorCode::InputError, "unknown family '" + cfg.family + "'");
  }
  const double crit = pb.spec.critical_exponent();
  const double p_max = cfg.p_max > 0.0 ? cfg.p_max : 2.0 * crit;
  auto r = critical_exponent_scan(pb, linspace(cfg.p_min, p_max, cfg.p_steps), cfg.levels);
  json report = report_header(cfg);
  json rows = json::array();
  std::string table = "# p level value\n";
  for (std::size_t ip = 0; ip < r.p_grid.size(); ++ip)
    for (std::size_t l = 0; l < r.values[ip].size(); ++l) {
      rows.push_back({{"kind", "lp"}, {"p", r.p_grid[ip]}, {"level", l}, {"value", r.values[ip][l]}});
      table += csv::format_number(r.p_grid[ip]) + ' ' + std::to_string(l) + ' ' + csv::format_number(r.values[ip][l]) +
               '\n';
    }
  json verdicts = json::array();
  for (std::size_t ip = 0; ip < r.p_grid.size(); ++ip)
    verdicts.push_back({{"p", r.p_grid[ip]}, {"verdict", to_string(r.verdicts[ip])}});
  report["scan"] = {{"d", r.d},
                    {"critical_exponent", crit},
                    {"p_star", std::isnan(r.p_star) ? json(nullptr) : json(r.p_star)},
                    {"at_boundary", r.at_boundary},
                    {"grid_sizes", r.grid_sizes},
                    {"verdicts", verdicts},
                    {"values", rows}};
  write_artifact(cfg, "scan.dat", table);
  emit(cfg, report);
  return exit_ok;
}

std::vector<int> degrees_for(const RunConfig& cfg, std::size_t components) {
  if (cfg.degrees.empty()) return std::vector<int>(components, 1);
  if (cfg.degrees.size() != components)
    throw Error(ErrorCode::InputError, std::to_string(cfg.degrees.size()) + " degrees given for " +
                                           std::to_string(components) + " components");
  return cfg.degrees;
}

int run_cover(const RunConfig& cfg) {
  auto b = csv::read_curve_file(cfg.inputs.at(0));
  auto sel = radical_selections(b, degrees_for(cfg, b.components()), nullptr, lift_options(cfg));
  auto r = evaluate_cover(sel, cfg.L, cfg.D);
  json cover = json::array();
  for (const auto& J : r.selected)
    cover.push_back(
        {{"t1", J.t1}, {"ell", J.ell}, {"s_minus", J.s_minus}, {"s_plus", J.s_plus}, {"kind", to_string(J.kind)}});
  json report = report_header(cfg);
  report["cover"] = cover;
  report["properties"] = {{"coverage", r.coverage()},
                          {"max_overlap", r.max_overlap},
                          {"overlap_ok", r.overlap_ok()},
                          {"total_length", r.total_length},
                          {"measure", r.measure},
                          {"length_ok", r.length_ok()},
                          {"inside_ok", r.inside_ok()},
                          {"built", r.built.size()}};
  write_artifact(cfg, "cover.json", cover.dump(2) + "\n");
  emit(cfg, report);
  if (!r.ok()) {
    json where = json::object();
    if (!r.uncovered.empty()) where["t"] = r.uncovered.front();
    diagnostic("error", "CoverPropertyViolation", r.violation(), where);
    return exit_property;
  }
  return exit_ok;
}

int run_verify(const RunConfig& cfg) {
  auto a = csv::read_curve_file(cfg.inputs.at(0));
  auto sel = radical_selections(a, degrees_for(cfg, a.components()), nullptr, lift_options(cfg));
  std::vector<std::size_t> nodes;
  if (!std::isnan(cfg.t0)) {
    const auto& t = sel.grid().nodes();
    auto it = std::min_element(t.begin(), t.end(),
                               [&](double x, double y) { return std::abs(x - cfg.t0) < std::abs(y - cfg.t0); });
    nodes.push_back(static_cast<std::size_t>(it - t.begin()));
  } else {
    for (std::size_t i = 0; i < sel.size(); ++i)
      if (norm2(sel.base[i]) != 0.0) nodes.push_back(i);
  }
  json rows = json::array();
  bool all_pass = true;
  for (std::size_t node : nodes) {
    std::size_t k = dominant_index(sel, node);
    auto data = maximal_admissible_interval(sel, node, k, cfg.B);
    auto rep = check_admissible(data);
    json row = {{"t0", sel.grid()[node]},
                {"k", k},
                {"interval", {sel.grid()[data.lo], sel.grid()[data.hi]}},
                {"M", data.M},
                {"B", data.B},
                {"stop", to_string(data.stop)},
                {"slack", data.slack},
                {"lemma",
                 {{"deviation_bound", rep.deviation_bound},
                  {"ratio_bound", rep.ratio_bound},
                  {"modulus_bound", rep.modulus_bound},
                  {"length", rep.length_bound},
                  {"length_value", rep.length},
                  {"length_limit", rep.length_limit},
                  {"preconditions", rep.preconditions()},
                  {"first_failure", rep.first_failure}}}};
    try {
      auto est = check_derivative_bounds(data);
      row["derivative_bounds"] = {{"sup_constant", est.sup_constant}, {"lip_constant", est.lip_constant}};
    } catch (const Error& e) {
      row["derivative_bounds"] = nullptr;
    }
    if (!rep.conclusions()) {
      all_pass = false;
      diagnostic("error", "AdmissibleCheckFailed", rep.first_failure, {{"t0", sel.grid()[node]}});
    }
    rows.push_back(row);
  }
  json report = report_header(cfg);
  report["admissible"] = rows;
  report["all_pass"] = all_pass;
  emit(cfg, report);
  return all_pass ? exit_ok : exit_property;
}

int run_qdist(const RunConfig& cfg) {
  if (cfg.inputs.size() != 2) throw Error(ErrorCode::InputError, "qdist needs two tuple files");
  auto a = csv::read_tuples_file(cfg.inputs[0]);
  auto b = csv::read_tuples_file(cfg.inputs[1]);
  if (a.t.size() != b.t.size()) throw Error(ErrorCode::InputError, "tuple files have different sample counts");
  json rows = json::array();
  bool agree = true;
  for (std::size_t i = 0; i < a.t.size(); ++i) {
    const auto &x = a.tuples[i], &y = b.tuples[i];
    if (x.size() != y.size() || x.dim() != y.dim())
      throw Error(ErrorCode::InputError, "tuple shapes differ at sample " + std::to_string(i));
    auto m = match_points(x.points(), y.points());
    json row = {{"t", a.t[i]}, {"distance", std::sqrt(std::max(0.0, m.cost))}, {"permutation", m.perm}};
    if (x.size() <= 6) {
      auto brute = brute_force_assignment(squared_cost_matrix(x.points(), y.points()), x.size());
      double diff = std::abs(brute.cost - m.cost);
      row["brute_force_distance"] = std::sqrt(std::max(0.0, brute.cost));
      if (diff > 1e-9) {
        agree = false;
        diagnostic("error", "MatchingMismatch", "assignment differs from brute force", {{"t", a.t[i]}, {"diff", diff}});
      }
    }
    rows.push_back(row);
  }
  json report = report_header(cfg);
  report["distances"] = rows;
  report["brute_force_agrees"] = agree;
  emit(cfg, report);
  return agree ? exit_ok : exit_property;
}

RepresentationSpec parse_spec(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InputError, "spec must look like cyclic:D or symmetric:Q");
  std::string kind = s.substr(0, colon);
  int v = 0;
  try {
    v = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InputError, "bad spec parameter in '" + s + "'");
  }
  if (kind == "cyclic") return RepresentationSpec::cyclic(v);
  if (kind == "symmetric") return RepresentationSpec::symmetric(v);
  throw Error(ErrorCode::InputError, "grid2d supports cyclic:D and symmetric:Q, got '" + s + "'");
}

int run_grid2d(const RunConfig& cfg) {
  auto f = csv::read_grid2d_file(cfg.inputs.at(0));
  auto spec = parse_spec(cfg.spec);
  auto r = lift_grid_2d(f, spec, lift_options(cfg));
  json witness = json::array();
  for (const auto& n : r.report.witness)
    witness.push_back({{"ix", n.ix}, {"iy", n.iy}, {"x", f.x_grid()[n.ix]}, {"y", f.y_grid()[n.iy]}});
  json mono = {{"status", r.report.status == MonodromyReport::Status::consistent ? "consistent" : "obstructed"},
               {"witness", witness}};
  json report = report_header(cfg);
  report["monodromy"] = mono;
  write_artifact(cfg, "monodromy.json", mono.dump(2) + "\n");
  if (r.report.status == MonodromyReport::Status::consistent) {
    std::ostringstream out;
    out << "x,y,branch,re,im\n";
    for (std::size_t iy = 0; iy < r.ny; ++iy)
      for (std::size_t ix = 0; ix < r.nx; ++ix)
        for (std::size_t b = 0; b < r.at(ix, iy).size(); ++b)
          out << csv::format_number(f.x_grid()[ix]) << ',' << csv::format_number(f.y_grid()[iy]) << ',' << b << ','
              << csv::format_number(r.at(ix, iy)[b].real()) << ',' << csv::format_number(r.at(ix, iy)[b].imag())
              << '\n';
    write_artifact(cfg, "lift2d.csv", out.str());
  }
  emit(cfg, report);
  return exit_ok;
}

/// `key = value` lines (with `#` comments) of a config file, as command-line
/// tokens for keys the user did not pass explicitly.
std::vector<std::string> config_tokens(const std::string& path, const std::vector<std::string>& user_args) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot open config '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::InputError, "config line " + std::to_string(row) + " is not 'key = value'");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string flag = "--" + key;
    bool given = std::any_of(user_args.begin(), user_args.end(),
                             [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
    if (given) continue;
    out.push_back(flag);
    std::replace(value.begin(), value.end(), ',', ' ');
    std::istringstream vs(value);
    for (std::string tok; vs >> tok;) out.push_back(tok);
  }
  return out;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--config", cfg.config_file, "key = value file; command-line flags take precedence");
  sub->add_option("--output-dir", cfg.output_dir, "directory for CSV/JSON/table artifacts");
  sub->add_option("--seed", cfg.seed, "seed for sampled pair sets");
  sub->add_option("--tol", cfg.tol, "residual tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-depth", cfg.max_depth, "maximal bisection depth")->check(CLI::Range(0, 60));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Continuous lifts over invariants and their derivative norms", "orbitlift"};
  app.require_subcommand(1);

  auto* radical = app.add_subcommand("radical", "continuous d-th root of a scalar curve, with norms");
  radical->add_option("--d", cfg.d, "root order")->required()->check(CLI::Range(1, 64));
  radical->add_option("--input", cfg.inputs, "curve CSV t,re_1,im_1")->required()->expected(1);
  radical->add_option("--p", cfg.p, "exponents")->check(CLI::Range(1.0, 1e6));
  radical->add_option("--levels", cfg.levels, "uniform bisection levels")->check(CLI::Range(1, 20));

  auto* roots = app.add_subcommand("roots", "continuous roots of the monic polynomial with e-values from the CSV");
  roots->add_option("--input", cfg.inputs, "coefficient CSV t,re_1,im_1,...,re_Q,im_Q")->required()->expected(1);
  roots->add_option("--p", cfg.p, "exponents")->check(CLI::Range(1.0, 1e6));
  roots->add_option("--levels", cfg.levels, "uniform bisection levels")->check(CLI::Range(1, 20));

  auto* scan = app.add_subcommand("scan", "critical exponent scan for g(t) = t on [-1, 1]");
  scan->add_option("--family", cfg.family, "radical or roots")->check(CLI::IsMember({"radical", "roots"}));
  scan->add_option("--d", cfg.d, "degree")->required()->check(CLI::Range(2, 32));
  scan->add_option("--p-min", cfg.p_min, "smallest exponent")->check(CLI::Range(1.0, 1e6));
  scan->add_option("--p-max", cfg.p_max, "largest exponent (default 2d')")->check(CLI::Range(1.0, 1e6));
  scan->add_option("--p-steps", cfg.p_steps, "number of exponents")->check(CLI::Range(2, 10000));
  scan->add_option("--levels", cfg.levels, "refinement levels")->check(CLI::Range(1, 7));

  auto* cover = app.add_subcommand("cover", "prepared intervals and the two-overlap subcollection");
  cover->add_option("--input", cfg.inputs, "curve CSV")->required()->expected(1);
  cover->add_option("--L", cfg.L, "slope L")->check(CLI::PositiveNumber);
  cover->add_option("--D", cfg.D, "budget D < 1/3")->check(CLI::Range(1e-300, 1.0 / 3.0 - 1e-15));
  cover->add_option("--degrees", cfg.degrees, "degree per component (default 1)");

  auto* verify = app.add_subcommand("verify", "maximal admissible intervals and their checks");
  verify->add_option("--input", cfg.inputs, "curve CSV")->required()->expected(1);
  verify->add_option("--degrees", cfg.degrees, "degree per component (default 1)");
  verify->add_option("--B", cfg.B, "constant B < 1/3")->check(CLI::Range(1e-300, 1.0 / 3.0 - 1e-15));
  verify->add_option("--t0", cfg.t0, "only the node nearest to t0");

  auto* qdist = app.add_subcommand("qdist", "matching distance between two unordered tuple sequences");
  qdist->add_option("--input", cfg.inputs, "two tuple CSVs t,point,re_1,im_1,...")->required()->expected(2);

  auto* grid2d = app.add_subcommand("grid2d", "lift on a 2-D grid or report a monodromy witness");
  grid2d->add_option("--input", cfg.inputs, "grid CSV x,y,re_1,im_1,...")->required()->expected(1);
  grid2d->add_option("--spec", cfg.spec, "cyclic:D or symmetric:Q")->required();

  for (auto* sub : {radical, roots, scan, cover, verify, qdist, grid2d}) add_common(sub, cfg);

  // Expand a config file into tokens placed before the user's own flags.
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
      if (path.empty()) continue;
      auto extra = config_tokens(path, args);
      args.insert(args.begin() + 1, extra.begin(), extra.end());
      break;
    }
  } catch (const Error& e) {
    diagnostic("error", to_string(e.code()), e.what());
    return exit_input;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    diagnostic("error", "InputError", e.what());
    return exit_input;
  }

  try {
    if (*radical) return cfg.command = "radical", run_lift_command(cfg, true);
    if (*roots) return cfg.command = "roots", run_lift_command(cfg, false);
    if (*scan) return cfg.command = "scan", run_scan(cfg);
    if (*cover) return cfg.command = "cover", run_cover(cfg);
    if (*verify) return cfg.command = "verify", run_verify(cfg);
    if (*qdist) return cfg.command = "qdist", run_qdist(cfg);
    if (*grid2d) return cfg.command = "grid2d", run_grid2d(cfg);
  } catch (const Error& e) {
    diagnostic("error", to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    diagnostic("error", "InputError", e.what());
    return exit_input;
  }
  return exit_input;
}

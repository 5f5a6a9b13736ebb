// Command-line front end: parse a problem configuration, run the
// solve / verify / compare / probe workflows, and emit machine-readable
// CSV and JSON artifacts with deterministic formatting.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abel/abelcore.hpp"
#include "abel/fracops.hpp"
#include "abel/oracle.hpp"
#include "abel/regprobe.hpp"
#include "abel/singular.hpp"
#include "abel/special.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace abel;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInputError = 1;
constexpr int kExitRegularityViolation = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// line number (1-based) of the first occurrence of "key" in the raw
// config text; falls back to 1 so messages stay line-anchored
int anchor_line(const std::string& raw, const std::string& key) {
  const std::string needle = "\"" + key + "\"";
  const auto pos = raw.find(needle);
  if (pos == std::string::npos) return 1;
  return 1 + static_cast<int>(std::count(raw.begin(), raw.begin() + pos, '\n'));
}

int byte_to_line(const std::string& raw, std::size_t byte) {
  if (byte > raw.size()) byte = raw.size();
  return 1 + static_cast<int>(std::count(raw.begin(), raw.begin() + byte, '\n'));
}

const json& require_key(const json& obj, const std::string& key,
                        const std::string& path, const std::string& raw,
                        const std::string& parent) {
  if (!obj.contains(key))
    throw ConfigError(path + ":" +
                      std::to_string(anchor_line(raw, parent.empty()
                                                          ? key
                                                          : parent)) +
                      ": missing required key \"" + key + "\"");
  return obj.at(key);
}

struct RunConfig {
  Interval iv{0.0, 1.0};
  double alpha = 0.5;
  double beta = 0.5;
  double mu = 0.5;
  double sigma = 0.25;
  double c = 0.0;
  PowerFunction f;
  PowerFunction psi_star;     // nonzero only for the manufactured family
  bool manufactured = false;
  int grid = 201;
  double tol_scale = 1.0;
  std::vector<int> ladder{64, 128, 256};
  double error_bound = 1e-2;
};

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ":1: cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string raw = ss.str();

  json j;
  try {
    j = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ":" + std::to_string(byte_to_line(raw, e.byte)) +
                      ": malformed JSON: " + e.what());
  }
  if (!j.is_object())
    throw ConfigError(path + ":1: top-level value must be an object");

  RunConfig cfg;
  const json& jiv = require_key(j, "interval", path, raw, "");
  if (!jiv.is_array() || jiv.size() != 2)
    throw ConfigError(path + ":" + std::to_string(anchor_line(raw, "interval")) +
                      ": \"interval\" must be [a, b]");
  cfg.iv = Interval(jiv[0].get<double>(), jiv[1].get<double>());
  cfg.alpha = require_key(j, "alpha", path, raw, "").get<double>();
  cfg.beta = require_key(j, "beta", path, raw, "").get<double>();
  cfg.mu = require_key(j, "mu", path, raw, "").get<double>();
  cfg.sigma = j.value("sigma", 0.25);
  cfg.c = j.value("c", 0.0);
  cfg.grid = j.value("grid", 201);
  if (cfg.grid < 2 || cfg.grid > 100000)
    throw ConfigError(path + ":" + std::to_string(anchor_line(raw, "grid")) +
                      ": \"grid\" outside [2, 100000]");
  cfg.tol_scale = j.value("tolerance_scale", 1.0);
  if (!(cfg.tol_scale > 0.0))
    throw ConfigError(path + ":" +
                      std::to_string(anchor_line(raw, "tolerance_scale")) +
                      ": \"tolerance_scale\" must be positive");
  if (j.contains("grid_ladder")) {
    cfg.ladder.clear();
    for (const auto& n : j.at("grid_ladder")) cfg.ladder.push_back(n.get<int>());
    if (cfg.ladder.empty())
      throw ConfigError(path + ":" +
                        std::to_string(anchor_line(raw, "grid_ladder")) +
                        ": \"grid_ladder\" must be non-empty");
  }
  cfg.error_bound = j.value("error_bound", 1e-2);

  const json& jf = require_key(j, "f", path, raw, "");
  const std::string family =
      require_key(jf, "family", path, raw, "f").get<std::string>();
  if (family == "zero") {
    cfg.f = PowerFunction::zero(cfg.iv);
    cfg.psi_star = PowerFunction::zero(cfg.iv);
  } else if (family == "power-poly" || family == "manufactured") {
    const double ea =
        require_key(jf, "exponent_a", path, raw, "f").get<double>();
    const double eb =
        require_key(jf, "exponent_b", path, raw, "f").get<double>();
    std::vector<double> coeffs;
    for (const auto& cjson :
         require_key(jf, "coefficients", path, raw, "f"))
      coeffs.push_back(cjson.get<double>());
    if (coeffs.empty())
      throw ConfigError(path + ":" +
                        std::to_string(anchor_line(raw, "coefficients")) +
                        ": \"coefficients\" must be non-empty");
    if (family == "manufactured") {
      cfg.manufactured = true;
      auto [psi, f] = oracle::manufacture_solution(cfg.iv, cfg.alpha, cfg.beta,
                                                   cfg.mu, ea, eb, coeffs);
      cfg.psi_star = psi;
      cfg.f = f;
    } else {
      auto poly = [coeffs](double x) {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
          acc = acc * x + *it;
        return acc;
      };
      bool all_zero = true;
      for (double cc : coeffs) all_zero = all_zero && cc == 0.0;
      cfg.f = all_zero ? PowerFunction::zero(cfg.iv)
                       : PowerFunction::from_smooth(cfg.iv, ea, eb, poly);
      cfg.psi_star = PowerFunction::zero(cfg.iv);
    }
  } else {
    throw ConfigError(path + ":" + std::to_string(anchor_line(raw, "family")) +
                      ": unknown f family \"" + family + "\"");
  }
  return cfg;
}

void write_atomic(const fs::path& target, const std::string& content) {
  fs::create_directories(target.parent_path().empty() ? "."
                                                      : target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

json report_json(const RegularityReport& r) {
  return json{{"endpoint", r.endpoint == Endpoint::left ? "left" : "right"},
              {"fitted_exponent", r.fitted_exponent},
              {"predicted_exponent", r.predicted_exponent},
              {"fit_r2", r.fit_r2},
              {"window", {r.window.first, r.window.second}},
              {"verdict", verdict_name(r.verdict)}};
}

std::vector<double> solution_grid(const Interval& iv, int n) {
  std::vector<double> xs;
  xs.reserve(n);
  for (int i = 1; i <= n; ++i)
    xs.push_back(iv.a + (iv.b - iv.a) * i / (n + 1.0));
  return xs;
}

int cmd_solve(const RunConfig& cfg, const fs::path& outdir, bool emit_json) {
  ProblemSpec spec(cfg.iv, cfg.alpha, cfg.beta, cfg.mu, cfg.f, cfg.c);
  SolutionBundle bundle = solve(spec, cfg.sigma);
  auto [k_left, k_right] = verify_H_star(bundle.K_sigma);
  auto [c_hat, deviation] = residual_report(bundle);

  std::string csv = "x,J,K_sigma,psi\n";
  for (double x : solution_grid(cfg.iv, cfg.grid)) {
    csv += fmt17(x) + "," + fmt17(bundle.J(x)) + "," +
           fmt17(bundle.K_sigma(x)) + "," + fmt17(bundle.psi(x)) + "\n";
  }
  write_atomic(outdir / "solution.csv", csv);

  const bool violated = k_left.verdict == Verdict::fail ||
                        k_right.verdict == Verdict::fail;
  json summary{
      {"subcommand", "solve"},
      {"theta", bundle.angle.theta},
      {"theta_norm", bundle.angle.theta_norm},
      {"A", bundle.angle.A},
      {"B", bundle.angle.B},
      {"representation_index", bundle.choice.index},
      {"sigma", cfg.sigma},
      {"exponents", {{"J_a", bundle.J.exponent_a()},
                     {"J_b", bundle.J.exponent_b()},
                     {"K_a", bundle.K_sigma.exponent_a()},
                     {"K_b", bundle.K_sigma.exponent_b()},
                     {"psi_a", bundle.psi.exponent_a()},
                     {"psi_b", bundle.psi.exponent_b()}}},
      {"residual", {{"c_hat", c_hat}, {"deviation", deviation}}},
      {"regularity",
       {{"K_left", report_json(k_left)}, {"K_right", report_json(k_right)}}},
      {"status", violated ? "regularity-violation" : "pass"}};
  write_atomic(outdir / "summary.json", summary.dump(2) + "\n");
  if (emit_json) std::printf("%s\n", summary.dump(2).c_str());
  return violated ? kExitRegularityViolation : kExitPass;
}

int cmd_probe(const RunConfig& cfg, const fs::path& outdir, bool emit_json) {
  ProblemSpec spec(cfg.iv, cfg.alpha, cfg.beta, cfg.mu, cfg.f, cfg.c);
  SolutionBundle bundle = solve(spec, cfg.sigma);
  auto [k_left, k_right] = verify_H_star(bundle.K_sigma);
  RegularityReport j_left = fit_endpoint_exponent(
      bundle.J, Endpoint::left, bundle.J.exponent_a());
  RegularityReport j_right = fit_endpoint_exponent(
      bundle.J, Endpoint::right, bundle.J.exponent_b());
  RegularityReport psi_left = fit_endpoint_exponent(
      bundle.psi, Endpoint::left, cfg.mu + cfg.sigma, 0.1);
  const bool violated = k_left.verdict == Verdict::fail ||
                        k_right.verdict == Verdict::fail;
  json report{{"subcommand", "probe"},
              {"theta_norm", bundle.angle.theta_norm},
              {"representation_index", bundle.choice.index},
              {"J_left", report_json(j_left)},
              {"J_right", report_json(j_right)},
              {"K_left", report_json(k_left)},
              {"K_right", report_json(k_right)},
              {"psi_left", report_json(psi_left)},
              {"status", violated ? "regularity-violation" : "pass"}};
  write_atomic(outdir / "probe.json", report.dump(2) + "\n");
  if (emit_json) std::printf("%s\n", report.dump(2).c_str());
  return violated ? kExitRegularityViolation : kExitPass;
}

json run_check(const std::string& name, double measured, double tol) {
  return json{{"check", name},
              {"measured", measured},
              {"tolerance", tol},
              {"pass", measured <= tol}};
}

int cmd_verify(const RunConfig& cfg, const fs::path& outdir, bool emit_json) {
  // validates the configured coefficients up front
  ProblemSpec spec(cfg.iv, cfg.alpha, cfg.beta, cfg.mu, cfg.f, cfg.c);
  (void)spec;
  const double s = cfg.tol_scale;
  std::vector<json> checks;

  {  // angle window + reflection-coefficient identity over random draws
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> ua(0.01, 0.99);
    std::uniform_real_distribution<double> um(1e-3, 1.0 - 1e-3);
    double worst = 0.0;
    bool window_ok = true;
    for (int i = 0; i < 200; ++i) {
      const double al = ua(rng), m = um(rng);
      AngleData ad = compute_angle(al, 1.0 - al, m);
      window_ok = window_ok && ad.theta_norm > m && ad.theta_norm < 1.0;
      const std::complex<double> lhs = std::polar(1.0, ad.theta);
      const std::complex<double> rhs =
          std::complex<double>(ad.A, -ad.B) / std::complex<double>(ad.A, ad.B);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    json c = run_check("angle-window", worst, 1e-12 * s);
    c["pass"] = c["pass"].get<bool>() && window_ok;
    checks.push_back(c);
  }

  {  // symmetric closed form theta = (1 + mu) pi
    double worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
      const double m = 0.1 * i;
      AngleData ad = compute_angle(0.5, 0.5, m);
      worst = std::max(worst, std::abs(ad.theta - (1.0 + m) * M_PI));
    }
    checks.push_back(run_check("symmetric-angle", worst, 1e-12 * s));
  }

  AngleData ad = compute_angle(cfg.alpha, cfg.beta, cfg.mu);

  {  // four representations of J agree for an in-range right-hand side
    auto [psi_star, f] = oracle::manufacture_solution(
        cfg.iv, cfg.alpha, cfg.beta, cfg.mu, 0.8, 0.8);
    (void)psi_star;
    ProblemSpec mspec(cfg.iv, cfg.alpha, cfg.beta, cfg.mu, f);
    std::vector<PowerFunction> js;
    for (int i = 1; i <= 4; ++i)
      js.push_back(solve_J(mspec, make_representation(i, ad, cfg.mu)));
    double worst = 0.0;
    for (double x : probe_points(cfg.iv))
      for (std::size_t i = 1; i < js.size(); ++i)
        worst = std::max(worst, std::abs(js[i](x) - js[0](x)));
    checks.push_back(run_check("representation-equivalence", worst, 1e-6 * s));
  }

  {  // left-to-right reduction identity for the RL integral
    PowerFunction g = PowerFunction::from_smooth(
        cfg.iv, 0.0, 0.0,
        [](double x) { return 1.0 + x + 0.25 * x * x; });
    const double m = cfg.mu;
    PowerFunction lhs = left_frac_integral(g, FracOrder(m));
    PowerFunction sg =
        singular_transform(g.shifted(0.0, m), 128, /*lazy=*/false);
    PowerFunction rhs1 = right_frac_integral(g, FracOrder(m));
    PowerFunction rhs2 =
        right_frac_integral(sg.shifted(0.0, -m), FracOrder(m));
    double worst = 0.0;
    for (double x : probe_points(cfg.iv, 9)) {
      const double v = std::cos(m * M_PI) * rhs1(x) -
                       std::sin(m * M_PI) * rhs2(x);
      worst = std::max(worst, std::abs(lhs(x) - v));
    }
    checks.push_back(run_check("left-right-identity", worst, 1e-6 * s));
  }

  {  // eigenfunction constant: xDb^mu g = C-tilde aDx^mu g for the
     // distinguished power g, with C-tilde from the angle
    const double ct = std::cos(cfg.mu * M_PI) +
                      std::sin(cfg.mu * M_PI) / std::tan(M_PI - 0.5 * ad.theta);
    PowerFunction g = PowerFunction::power(cfg.iv, cfg.mu - ad.theta_norm,
                                           ad.theta_norm - 1.0);
    PowerFunction rd = right_frac_derivative(g, FracOrder(cfg.mu));
    PowerFunction ld = left_frac_derivative(g, FracOrder(cfg.mu));
    double worst = 0.0;
    for (double x : probe_points(cfg.iv, 9))
      worst = std::max(worst, std::abs(rd(x) - ct * ld(x)) /
                                  std::max(1.0, std::abs(ld(x))));
    checks.push_back(run_check("eigenfunction-constant", worst, 1e-4 * s));
  }

  {  // closed form vs first-order collocation oracle
    auto [psi_star, f] = oracle::manufacture_solution(
        cfg.iv, cfg.alpha, cfg.beta, cfg.mu, 0.8, 0.8);
    const double cc =
        residual_report(
            solve(ProblemSpec(cfg.iv, cfg.alpha, cfg.beta, cfg.mu, f), 0.25))
            .first;
    ProblemSpec mspec(cfg.iv, cfg.alpha, cfg.beta, cfg.mu, f, cc);
    oracle::CollocationResult cr = oracle::collocation_solve(mspec, 128);
    double num = 0.0, den = 0.0;
    const double margin = 0.05 * cfg.iv.length();
    for (std::size_t i = 0; i < cr.nodes.size(); ++i) {
      const double x = cr.nodes[i];
      if (x < cfg.iv.a + margin || x > cfg.iv.b - margin) continue;
      const double ref = psi_star(x);
      num += (cr.values[i] - ref) * (cr.values[i] - ref);
      den += ref * ref;
    }
    const double rel = den > 0.0 ? std::sqrt(num / den) : 0.0;
    checks.push_back(run_check("oracle-comparison", rel, 1e-2 * s));
  }

  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  json report{{"subcommand", "verify"},
              {"tolerance_scale", s},
              {"checks", checks},
              {"status", all ? "pass" : "fail"}};
  write_atomic(outdir / "verification.json", report.dump(2) + "\n");
  if (emit_json) std::printf("%s\n", report.dump(2).c_str());
  return all ? kExitPass : kExitRegularityViolation;
}

int cmd_compare(const RunConfig& cfg, const fs::path& outdir, bool emit_json) {
  if (!cfg.manufactured)
    throw ConfigError(
        "compare requires the manufactured f family (the reference "
        "solution must be known)");
  ProblemSpec spec0(cfg.iv, cfg.alpha, cfg.beta, cfg.mu, cfg.f);
  const double cc = residual_report(solve(spec0, cfg.sigma)).first;
  ProblemSpec spec(cfg.iv, cfg.alpha, cfg.beta, cfg.mu, cfg.f, cc);

  std::string csv = "n,relative_l2_error,condition_estimate\n";
  double final_err = 0.0;
  std::vector<double> errs;
  const double margin = 0.05 * cfg.iv.length();
  for (int n : cfg.ladder) {
    oracle::CollocationResult cr = oracle::collocation_solve(spec, n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < cr.nodes.size(); ++i) {
      const double x = cr.nodes[i];
      if (x < cfg.iv.a + margin || x > cfg.iv.b - margin) continue;
      const double ref = cfg.psi_star(x);
      num += (cr.values[i] - ref) * (cr.values[i] - ref);
      den += ref * ref;
    }
    final_err = den > 0.0 ? std::sqrt(num / den) : 0.0;
    errs.push_back(final_err);
    csv += std::to_string(n) + "," + fmt17(final_err) + "," +
           fmt17(cr.condition) + "\n";
  }
  write_atomic(outdir / "convergence.csv", csv);
  const bool ok = final_err <= cfg.error_bound;
  if (emit_json) {
    json summary{{"subcommand", "compare"},
                 {"final_error", final_err},
                 {"error_bound", cfg.error_bound},
                 {"status", ok ? "pass" : "fail"}};
    std::printf("%s\n", summary.dump(2).c_str());
  }
  return ok ? kExitPass : kExitRegularityViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "closed-form solver and verifier for the two-sided generalized "
      "Abel integral equation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  int grid_override = 0;
  double tol_override = 0.0;
  bool emit_json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "problem configuration (JSON)")
        ->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--grid", grid_override, "override the CSV grid size");
    sub->add_option("--tol", tol_override,
                    "override the tolerance scale (verify) or error bound "
                    "(compare)");
    sub->add_flag("--json", emit_json, "print the JSON summary to stdout");
  };
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve and write tables");
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the invariant suite");
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "closed form vs collocation ladder");
  CLI::App* probe_cmd =
      app.add_subcommand("probe", "endpoint-exponent reports");
  for (CLI::App* sub : {solve_cmd, verify_cmd, compare_cmd, probe_cmd})
    add_common(sub);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = load_config(config_path);
    if (grid_override > 0) cfg.grid = grid_override;
    if (tol_override > 0.0) {
      cfg.tol_scale = tol_override;
      cfg.error_bound = tol_override;
    }
    const fs::path outdir(out_dir);
    if (solve_cmd->parsed()) return cmd_solve(cfg, outdir, emit_json);
    if (verify_cmd->parsed()) return cmd_verify(cfg, outdir, emit_json);
    if (compare_cmd->parsed()) return cmd_compare(cfg, outdir, emit_json);
    return cmd_probe(cfg, outdir, emit_json);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
}

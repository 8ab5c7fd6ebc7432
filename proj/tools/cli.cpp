#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "osc/basis.hpp"
#include "osc/io.hpp"
#include "osc/limits.hpp"
#include "osc/markov.hpp"
#include "osc/shuffles.hpp"
#include "osc/spectrum.hpp"
#include "osc/verify.hpp"

namespace osc::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<Rational> parse_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const std::string& item : items) out.push_back(parse_rational(item));
  return out;
}

int resolve_n(const RunConfig& cfg, std::size_t inferred) {
  if (inferred == 0) {
    if (cfg.n < 1) throw UsageError("--n is required");
    return cfg.n;
  }
  if (cfg.n != 0 && static_cast<std::size_t>(cfg.n) != inferred) {
    throw UsageError("--n " + std::to_string(cfg.n) + " does not match the " +
                     std::to_string(inferred) + " values given");
  }
  return static_cast<int>(inferred);
}

WeightVector preset_weights(const std::string& preset, int n) {
  if (preset == "t2r") return WeightVector::top_to_random(n);
  if (preset == "r2b") return WeightVector::random_to_below(n);
  if (preset == "unweighted") return WeightVector::unweighted(n);
  throw UsageError("unknown preset " + preset);
}

// Weight vector from --weights or a preset flag; nullopt when neither given.
std::optional<WeightVector> chosen_weights(const RunConfig& cfg) {
  if (!cfg.weights.empty() && !cfg.preset.empty()) {
    throw UsageError("--weights and --" + cfg.preset + " are mutually exclusive");
  }
  if (!cfg.weights.empty()) {
    std::vector<Rational> values = parse_list(cfg.weights);
    resolve_n(cfg, values.size());
    return WeightVector{std::move(values)};
  }
  if (!cfg.preset.empty()) return preset_weights(cfg.preset, resolve_n(cfg, 0));
  return std::nullopt;
}

std::string verify_output(const std::vector<SuiteCheck>& checks, int n, Format format) {
  std::size_t failed = 0;
  for (const SuiteCheck& c : checks) failed += c.passed ? 0 : 1;
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const SuiteCheck& c : checks) {
        rows.push_back(
            {{"suite", c.suite}, {"name", c.name}, {"detail", c.detail}, {"passed", c.passed}});
      }
      return nlohmann::ordered_json{{"n", n}, {"passed", failed == 0}, {"failures", failed},
                                    {"checks", rows}}
                 .dump(2) +
             "\n";
    }
    case Format::csv: {
      std::string out = "suite,name,detail,passed\n";
      for (const SuiteCheck& c : checks) {
        out += c.suite + ",\"" + c.name + "\",\"" + c.detail + "\"," + (c.passed ? "1" : "0") + "\n";
      }
      return out;
    }
    case Format::text:
      break;
  }
  std::string out;
  for (const SuiteCheck& c : checks) {
    out += std::string(c.passed ? "PASS" : "FAIL") + " [" + c.suite + "] " + c.name;
    if (!c.detail.empty()) out += " -- " + c.detail;
    out += "\n";
  }
  out += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
         " checks passed at n = " + std::to_string(n) + "\n";
  return out;
}

struct Outcome {
  std::string text;
  int code = kExitOk;
};

Outcome do_spectrum(const RunConfig& cfg, const Limits& limits) {
  const std::optional<WeightVector> weights = chosen_weights(cfg);
  if (!weights) throw UsageError("spectrum needs --weights or one of --t2r, --r2b, --unweighted");
  const SpectrumReport report = full_spectrum(*weights);
  std::optional<Polynomial> minpoly;
  if (cfg.minpoly) minpoly = minimal_polynomial(one_sided_cycle_shuffle(*weights), limits);
  switch (cfg.format) {
    case Format::json: {
      if (!minpoly) return {spectrum_json(report)};
      const nlohmann::ordered_json j{
          {"spectrum", nlohmann::ordered_json::parse(spectrum_json(report))},
          {"minimal_polynomial", nlohmann::ordered_json::parse(polynomial_json(*minpoly))}};
      return {j.dump(2) + "\n"};
    }
    case Format::csv:
      return {spectrum_csv(report)};
    case Format::text:
      break;
  }
  std::string out = spectrum_text(report);
  out += "\ndiagonalizability: " + std::string(to_string(diagonalizable_certificate(*weights))) + "\n";
  if (minpoly) {
    std::vector<Rational> roots;
    for (const auto& entry : report.aggregate) roots.push_back(entry.first);
    out += "minimal polynomial: " + factored_string(*minpoly, roots) + "\n";
  }
  return {out};
}

Outcome do_filtration(const RunConfig& cfg) {
  const int n = resolve_n(cfg, 0);
  const std::vector<FiltrationRow> rows = filtration_table(LacunarCatalog(n));
  switch (cfg.format) {
    case Format::json: return {filtration_json(n, rows)};
    case Format::csv: return {filtration_csv(rows)};
    case Format::text: break;
  }
  return {filtration_text(n, rows)};
}

Outcome do_matrix(const RunConfig& cfg, const Limits& limits) {
  int sources = (cfg.t_index ? 1 : 0) + (cfg.t_prime_index ? 1 : 0) +
                (cfg.distribution.empty() ? 0 : 1) + (cfg.weights.empty() && cfg.preset.empty() ? 0 : 1);
  if (sources != 1) {
    throw UsageError("matrix needs exactly one of --t, --t-prime, --osc, --weights or a preset");
  }
  std::optional<AlgebraElement> x;
  int n = 0;
  if (cfg.t_index) {
    n = resolve_n(cfg, 0);
    limits.require_algebra(n, "matrix");
    x = somewhere_to_below(n, *cfg.t_index);
    if (cfg.transition) *x *= Rational(1, n + 1 - *cfg.t_index);
  } else if (cfg.t_prime_index) {
    n = resolve_n(cfg, 0);
    limits.require_algebra(n, "matrix");
    x = below_to_somewhere(n, *cfg.t_prime_index);
    if (cfg.transition) *x *= Rational(1, n + 1 - *cfg.t_prime_index);
  } else if (!cfg.distribution.empty()) {
    const PositionDistribution p(parse_list(cfg.distribution));
    n = resolve_n(cfg, static_cast<std::size_t>(p.n()));
    limits.require_algebra(n, "matrix");
    x = build_osc(p);
  } else {
    const WeightVector w = *chosen_weights(cfg);
    n = w.n();
    limits.require_algebra(n, "matrix");
    x = one_sided_cycle_shuffle(w);
  }

  RationalMatrix m;
  std::vector<std::size_t> order;
  if (cfg.transition) {
    if (cfg.basis != "std" || cfg.order != "lex") {
      throw UsageError("--transition is only defined in the standard basis, lex order");
    }
    m = transition_matrix(*x, limits);
    order = basis_order(n, Ordering::lex, limits);
  } else {
    const Ordering ordering = cfg.order == "lex"      ? Ordering::lex
                              : cfg.order == "qindex" ? Ordering::qindex
                                                      : Ordering::qindex_desc;
    BasisFamily family = cfg.basis == "std" ? BasisFamily::standard(n, limits)
                                            : BasisFamily::descent_destroying(n, limits);
    if (cfg.basis == "b") family = dual_basis(family);
    m = rmul_matrix(*x, family, ordering, limits);
    order = basis_order(n, ordering, limits);
  }
  std::vector<std::string> labels;
  for (std::size_t r : order) labels.push_back(lex_unrank(n, r).to_string());
  switch (cfg.format) {
    case Format::json: return {matrix_json(m, labels)};
    case Format::csv: return {matrix_csv(m, labels)};
    case Format::text: break;
  }
  return {matrix_text(m, labels)};
}

Outcome do_verify(const RunConfig& cfg, const Limits& limits) {
  const int n = resolve_n(cfg, 0);
  const std::vector<SuiteCheck> checks = run_suite(cfg.suite, n, limits);
  bool ok = true;
  for (const SuiteCheck& c : checks) ok = ok && c.passed;
  return {verify_output(checks, n, cfg.format), ok ? kExitOk : kExitFailed};
}

Outcome do_simulate(const RunConfig& cfg) {
  const bool uniform = cfg.distribution.empty();
  SimulationResult result;
  if (cfg.fast) {
    if (!uniform) throw UsageError("--fast only models the uniform distribution");
    result = fast_bookmark_sim(resolve_n(cfg, 0), cfg.trials, cfg.seed);
  } else if (uniform) {
    result = simulate_sst(PositionDistribution::uniform(resolve_n(cfg, 0)), cfg.trials, cfg.seed);
  } else {
    const PositionDistribution p(parse_list(cfg.distribution));
    resolve_n(cfg, static_cast<std::size_t>(p.n()));
    result = simulate_sst(p, cfg.trials, cfg.seed);
  }
  switch (cfg.format) {
    case Format::json: return {simulation_json(result, uniform)};
    case Format::csv: {
      std::string out = "tau,count\n";
      for (std::size_t k = 0; k < result.histogram.size(); ++k) {
        if (result.histogram[k]) out += std::to_string(k) + "," + std::to_string(result.histogram[k]) + "\n";
      }
      return {out};
    }
    case Format::text: break;
  }
  return {simulation_text(result, uniform)};
}

void add_weight_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--weights", cfg.weights, "lambda_1,...,lambda_n as rationals")->delimiter(',');
  sub->add_flag_callback("--t2r", [&cfg] { cfg.preset = "t2r"; }, "top-to-random: lambda = e_1");
  sub->add_flag_callback("--r2b", [&cfg] { cfg.preset = "r2b"; },
                         "random-to-below: lambda_l = 1/(n(n+1-l))");
  sub->add_flag_callback("--unweighted", [&cfg] { cfg.preset = "unweighted"; },
                         "lambda_l = 2/(n(n+1)): all moves equally likely");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectra, bases and simulations for somewhere-to-below shuffles", "osc"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", cfg.output, "write output to this file");
  app.add_option("--cap", cfg.cap, "largest n for full-algebra work (default 8)")
      ->check(CLI::Range(1, 12));

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
  spectrum->add_option("--n", cfg.n);
  add_weight_options(spectrum, cfg);
  spectrum->add_flag("--minpoly", cfg.minpoly, "also compute the minimal polynomial of R(t)");

  CLI::App* filtration = app.add_subcommand("filtration", "Q_i, Q_i', dim F_i and delta_i");
  filtration->add_option("--n", cfg.n)->required();

  CLI::App* matrix = app.add_subcommand("matrix", "matrix export");
  matrix->add_option("--n", cfg.n);
  matrix->add_option("--t", cfg.t_index, "use t_l");
  matrix->add_option("--t-prime", cfg.t_prime_index, "use t'_l");
  matrix->add_option("--osc", cfg.distribution, "use osc(P) for P(1),...,P(n)")->delimiter(',');
  add_weight_options(matrix, cfg);
  matrix->add_option("--basis", cfg.basis)->check(CLI::IsMember({"std", "a", "b"}));
  matrix->add_option("--order", cfg.order)->check(CLI::IsMember({"lex", "qindex", "qindex-desc"}));
  matrix->add_flag("--transition", cfg.transition, "Markov kernel M[tau][sigma] instead of R(x)");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--n", cfg.n)->required();
  verify->add_option("--suite", cfg.suite)
      ->check(CLI::IsMember({"triangularity", "annihilator", "duality", "identities",
                             "boolean-partition", "all"}));

  CLI::App* simulate = app.add_subcommand("simulate", "bookmark stopping time simulation");
  simulate->add_option("--n", cfg.n);
  simulate->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", cfg.seed);
  simulate->add_flag("--uniform", "uniform P (the default)");
  simulate->add_option("--dist", cfg.distribution, "P(1),...,P(n) as rationals")->delimiter(',');
  simulate->add_flag("--fast", cfg.fast, "sample the bookmark stages directly");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  cfg.subcommand = app.get_subcommands().front()->get_name();

  Outcome outcome;
  try {
    Limits limits = Limits::from_environment();
    if (cfg.cap) limits.algebra_cap = *cfg.cap;
    if (cfg.subcommand == "spectrum") {
      outcome = do_spectrum(cfg, limits);
    } else if (cfg.subcommand == "filtration") {
      outcome = do_filtration(cfg);
    } else if (cfg.subcommand == "matrix") {
      outcome = do_matrix(cfg, limits);
    } else if (cfg.subcommand == "verify") {
      outcome = do_verify(cfg, limits);
    } else {
      outcome = do_simulate(cfg);
    }
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitFailed;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.output.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.output << " for writing\n";
      return kExitUsage;
    }
    file << outcome.text;
  }
  return outcome.code;
}

}  // namespace osc::cli

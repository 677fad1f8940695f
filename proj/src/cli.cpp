#include "meanineq/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "meanineq/errors.hpp"
#include "meanineq/report.hpp"
#include "meanineq/verifier.hpp"

namespace meanineq::cli {
namespace {

struct Options {
  std::string function;
  std::string space;
  std::string rho;
  std::string a;
  std::string b;
  double x1 = 0.0;
  double x2 = 0.0;
  double p = 0.0;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string format = "json";
  std::optional<std::size_t> trials;
  std::optional<std::size_t> dim;
  std::optional<unsigned> threads;
};

int exit_for(Verdict v) { return v == Verdict::kViolated ? kViolated : kOk; }

double tol_or(const Options& o, double fallback) {
  const double t = o.tol.value_or(fallback);
  if (!(t > 0.0)) throw UsageError("--tol must be positive");
  return t;
}

int emit(std::ostream& out, const InequalityReport& r, Format format) {
  out << emit_report(r, format);
  return exit_for(r.verdict);
}

int cmd_axioms(const Options& o, Format format, std::ostream& out) {
  const auto f = RepresentingFunction::from_id(o.function);
  const auto grid = default_grid();
  const double tol = tol_or(o, kScalarTol);
  const AxiomReport axioms = check_axioms(f, grid, tol);
  const ConcavityVerdict concavity = concavity_probe(f, grid, tol);
  out << emit_report(axioms, concavity, format);
  return axioms.all_pass() ? kOk : kViolated;
}

int cmd_verify_num(const Options& o, Format format, std::ostream& out) {
  const auto f = RepresentingFunction::from_id(o.function);
  const FiniteJointSpace space = load_scalar_space(o.space);
  InequalityReport r = verify_numeric(space, f, tol_or(o, kScalarTol));
  r.seed = o.seed;
  return emit(out, r, format);
}

int cmd_verify_op(const Options& o, Format format, std::ostream& out) {
  const auto spec = OperatorMeanSpec::from_id(o.function);
  const DensityMatrix rho(load_matrix(o.rho));
  InequalityReport r = verify_operator(rho, load_matrix(o.a), load_matrix(o.b), spec, tol_or(o, kMatrixTol));
  r.seed = o.seed;
  return emit(out, r, format);
}

int cmd_verify_rm(const Options& o, Format format, std::ostream& out) {
  const auto spec = OperatorMeanSpec::from_id(o.function);
  const FiniteJointSpace space = load_matrix_space(o.space);
  InequalityReport r = verify_random_matrix(space, spec, tol_or(o, kMatrixTol));
  r.seed = o.seed;
  return emit(out, r, format);
}

int cmd_counterexample(const Options& o, Format format, std::ostream& out) {
  const auto f = RepresentingFunction::from_id(o.function);
  const FiniteJointSpace space = construct_counterexample(f, o.x1, o.x2, o.p);
  InequalityReport r = verify_numeric(space, f, tol_or(o, kScalarTol));
  r.seed = o.seed;
  return emit(out, r, format);
}

int cmd_campaign(const Options& o, Format format, std::ostream& out) {
  CampaignConfig config = load_campaign_config(o.config);
  if (o.seed) config.seed = *o.seed;
  if (o.trials) config.trials = *o.trials;
  if (o.dim) config.dims = SizeRange{*o.dim, *o.dim};
  if (o.tol) config.tol = tol_or(o, 0.0);
  if (o.threads) config.threads = *o.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : *o.threads;
  config.validate();
  const CampaignSummary summary = run_campaign(config, CounterRng(config.seed));
  out << emit_report(summary, format);
  return summary.violations > 0 ? kViolated : kOk;
}

int cmd_search(const Options& o, Format format, std::ostream& out) {
  const auto f = RepresentingFunction::from_id(o.function);
  const std::uint64_t seed = o.seed.value_or(0);
  CounterRng rng(seed);
  InequalityReport r = search_violation(f, rng, o.trials.value_or(1000), tol_or(o, kScalarTol));
  r.seed = seed;
  return emit(out, r, format);
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bivariate mean inequality verifier", "meanineq"};
  app.require_subcommand(1, 1);
  Options o;

  auto function = [&](CLI::App* sub) {
    sub->add_option("--function", o.function, "function id: arithmetic, wyd:<beta>, geometric, harmonic, "
                                              "logarithmic, counterexample-g")
        ->required();
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "verdict tolerance");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", o.seed, "seed echoed into reports");
  };

  CLI::App* axioms = app.add_subcommand("axioms", "check mean axioms and concavity on the default grid");
  function(axioms);
  axioms->add_option("--tol", o.tol, "axiom tolerance");
  axioms->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  CLI::App* vnum = app.add_subcommand("verify-num", "verify the scalar inequality on a finite space");
  function(vnum);
  vnum->add_option("--space", o.space, "space file, one `p x y` atom per line")->required();
  common(vnum);

  CLI::App* vop = app.add_subcommand("verify-op", "verify Tr(rho m(A,B)) <= m(Tr rho A, Tr rho B)");
  function(vop);
  vop->add_option("--rho", o.rho, "density matrix file")->required();
  vop->add_option("--a", o.a, "matrix file for A")->required();
  vop->add_option("--b", o.b, "matrix file for B")->required();
  common(vop);

  CLI::App* vrm = app.add_subcommand("verify-rm", "verify the random-matrix inequality on a finite space");
  function(vrm);
  vrm->add_option("--space", o.space, "space file, one `p x_path y_path [rho_path]` atom per line")->required();
  common(vrm);

  CLI::App* cex = app.add_subcommand("counterexample", "evaluate the two-point construction");
  function(cex);
  cex->add_option("--x1", o.x1, "first X value")->required();
  cex->add_option("--x2", o.x2, "second X value")->required();
  cex->add_option("--p", o.p, "probability of the first atom")->required();
  common(cex);

  CLI::App* camp = app.add_subcommand("campaign", "run a seeded campaign from a config file");
  camp->add_option("--config", o.config, "campaign config file")->required();
  camp->add_option("--trials", o.trials, "override trial count");
  camp->add_option("--dim", o.dim, "fix the matrix dimension");
  camp->add_option("--threads", o.threads, "worker threads (0 = hardware); results do not depend on it");
  common(camp);

  CLI::App* search = app.add_subcommand("search", "random search for a two-point violation");
  function(search);
  search->add_option("--trials", o.trials, "search budget (default 1000)");
  common(search);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    const CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << target->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "meanineq: " << one_line(e.what()) << '\n';
    return kUsage;
  }

  try {
    const Format format = parse_format(o.format);
    const CLI::App* sub = app.get_subcommands().front();
    const std::string& name = sub->get_name();
    if (name == "axioms") return cmd_axioms(o, format, out);
    if (name == "verify-num") return cmd_verify_num(o, format, out);
    if (name == "verify-op") return cmd_verify_op(o, format, out);
    if (name == "verify-rm") return cmd_verify_rm(o, format, out);
    if (name == "counterexample") return cmd_counterexample(o, format, out);
    if (name == "campaign") return cmd_campaign(o, format, out);
    return cmd_search(o, format, out);
  } catch (const std::exception& e) {
    err << "meanineq: " << one_line(e.what()) << '\n';
    return kUsage;
  }
}

}  // namespace meanineq::cli

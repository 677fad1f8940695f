#include "meanineq/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "meanineq/errors.hpp"
#include "meanineq/kernels.hpp"

namespace meanineq {
namespace {

constexpr double kProbabilityTol = 1e-12;
constexpr double kValueLo = 1.0 / 16.0;
constexpr double kValueHi = 16.0;
constexpr double kSpdFloor = 0.05;

void validate_probabilities(std::span<const double> p) {
  if (p.empty()) throw UsageError("finite space has no atoms");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("atom probability must be non-negative and finite", v);
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbabilityTol)
    throw DomainError("atom probabilities sum to " + std::to_string(sum) + ", not 1", sum);
}

double log_uniform(CounterRng& rng, double lo, double hi) {
  return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

std::vector<double> dirichlet_flat(CounterRng& rng, std::size_t count) {
  std::vector<double> w(count);
  double total = 0.0;
  for (auto& v : w) {
    v = rng.exponential();
    total += v;
  }
  for (auto& v : w) v /= total;
  return w;
}

std::size_t draw_size(CounterRng& rng, SizeRange r) { return static_cast<std::size_t>(rng.uniform_int(r.min, r.max)); }

InequalityReport finish(double lhs, double rhs, double tol, std::string function, Mode mode, std::size_t dims,
                        std::size_t atoms) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) throw DomainError("inequality sides are not finite");
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.tol = tol;
  r.verdict = classify(r.gap, tol);
  r.function = std::move(function);
  r.mode = mode;
  r.dims = dims;
  r.atoms = atoms;
  return r;
}

double checked_state_expectation(const DensityMatrix& rho, const SymMatrix& a, const char* name) {
  const double e = expectation_state(rho, a);
  if (!(e > kDefaultPdFloor))
    throw DomainError(std::string("state expectation of ") + name + " is not positive: " + std::to_string(e), e);
  return e;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& text, const std::string& key, const std::string& source) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw UsageError("bad config " + source + ": cannot parse " + key + " = '" + text + "'");
  return value;
}

SizeRange parse_range(const std::string& text, const std::string& key, const std::string& source) {
  const auto dash = text.find('-');
  if (dash == std::string::npos) {
    const auto v = parse_number<std::size_t>(text, key, source);
    return {v, v};
  }
  return {parse_number<std::size_t>(trim(text.substr(0, dash)), key, source),
          parse_number<std::size_t>(trim(text.substr(dash + 1)), key, source)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Modes and verdicts

std::string_view mode_name(Mode m) noexcept {
  switch (m) {
    case Mode::kScalar:
      return "num";
    case Mode::kOperator:
      return "op";
    case Mode::kRandomMatrix:
      return "rm";
  }
  return "num";
}

Mode parse_mode(std::string_view s) {
  if (s == "num") return Mode::kScalar;
  if (s == "op") return Mode::kOperator;
  if (s == "rm") return Mode::kRandomMatrix;
  throw UsageError("unknown mode '" + std::string(s) + "' (expected num, op or rm)");
}

Verdict classify(double gap, double tol) noexcept {
  if (gap < -tol) return Verdict::kViolated;
  if (std::abs(gap) <= tol) return Verdict::kEquality;
  return Verdict::kHolds;
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kEquality:
      return "equality";
  }
  return "holds";
}

Verdict parse_verdict(std::string_view s) {
  if (s == "holds") return Verdict::kHolds;
  if (s == "violated") return Verdict::kViolated;
  if (s == "equality") return Verdict::kEquality;
  throw UsageError("unknown verdict '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// FiniteJointSpace

FiniteJointSpace FiniteJointSpace::scalar(std::vector<ScalarAtom> atoms) {
  std::vector<double> p;
  p.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!(a.x > 0.0) || !std::isfinite(a.x)) throw DomainError("scalar atom x must be positive", a.x);
    if (!(a.y > 0.0) || !std::isfinite(a.y)) throw DomainError("scalar atom y must be positive", a.y);
    p.push_back(a.p);
  }
  validate_probabilities(p);
  return FiniteJointSpace(std::move(atoms));
}

FiniteJointSpace FiniteJointSpace::matrix(std::vector<MatrixAtom> atoms) {
  std::vector<double> p;
  p.reserve(atoms.size());
  const std::size_t n = atoms.empty() ? 0 : atoms.front().x.dim();
  for (const auto& a : atoms) {
    if (a.x.dim() != n || a.y.dim() != n || (a.rho && a.rho->dim() != n))
      throw UsageError("matrix atoms must share one dimension");
    for (const SymMatrix* m : {&a.x, &a.y}) {
      const double lo = min_eigenvalue(*m);
      if (!(lo > kDefaultPdFloor)) throw NotPositiveDefinite("matrix atom is not positive definite", lo);
    }
    p.push_back(a.p);
  }
  validate_probabilities(p);
  return FiniteJointSpace(std::move(atoms));
}

std::size_t FiniteJointSpace::size() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, atoms_);
}

std::size_t FiniteJointSpace::dim() const noexcept {
  if (is_scalar()) return 1;
  const auto& m = std::get<std::vector<MatrixAtom>>(atoms_);
  return m.empty() ? 0 : m.front().x.dim();
}

bool FiniteJointSpace::has_densities() const noexcept {
  if (is_scalar()) return false;
  const auto& m = std::get<std::vector<MatrixAtom>>(atoms_);
  return std::all_of(m.begin(), m.end(), [](const MatrixAtom& a) { return a.rho.has_value(); });
}

const std::vector<ScalarAtom>& FiniteJointSpace::scalar_atoms() const {
  if (!is_scalar()) throw UsageError("expected a scalar space, got a matrix space");
  return std::get<std::vector<ScalarAtom>>(atoms_);
}

const std::vector<MatrixAtom>& FiniteJointSpace::matrix_atoms() const {
  if (is_scalar()) throw UsageError("expected a matrix space, got a scalar space");
  return std::get<std::vector<MatrixAtom>>(atoms_);
}

// ---------------------------------------------------------------------------
// Expectations and verification

double expectation_scalar(const FiniteJointSpace& space, Component which) {
  const auto& atoms = space.scalar_atoms();
  std::vector<double> p(atoms.size());
  std::vector<double> v(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    p[i] = atoms[i].p;
    v[i] = which == Component::kX ? atoms[i].x : atoms[i].y;
  }
  return simd::dot(p, v);
}

double expectation_scalar(const FiniteJointSpace& space, const RepresentingFunction& mean_of) {
  const auto& atoms = space.scalar_atoms();
  std::vector<double> p(atoms.size());
  std::vector<double> v(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    p[i] = atoms[i].p;
    v[i] = mean_num(mean_of, atoms[i].x, atoms[i].y);
  }
  return simd::dot(p, v);
}

InequalityReport verify_numeric(const FiniteJointSpace& space, const RepresentingFunction& f, double tol) {
  const double lhs = expectation_scalar(space, f);
  const double rhs = mean_num(f, expectation_scalar(space, Component::kX), expectation_scalar(space, Component::kY));
  return finish(lhs, rhs, tol, f.id(), Mode::kScalar, 1, space.size());
}

FiniteJointSpace construct_counterexample(const RepresentingFunction& f, double x1, double x2, double p) {
  if (!(p > 0.0 && p < 1.0)) throw UsageError("counterexample probability p must lie in (0,1)");
  if (x1 == x2) throw UsageError("counterexample needs distinct x1 and x2");
  // Evaluating f here surfaces domain errors before any report is built.
  f(x1);
  f(x2);
  return FiniteJointSpace::scalar({{p, x1, 1.0}, {1.0 - p, x2, 1.0}});
}

InequalityReport verify_operator(const DensityMatrix& rho, const SymMatrix& a, const SymMatrix& b,
                                 const OperatorMeanSpec& spec, double tol) {
  if (rho.dim() != a.dim() || a.dim() != b.dim())
    throw UsageError("verify_operator: dimensions of rho, A, B differ");
  const double lhs = expectation_state(rho, operator_mean(spec, a, b));
  const double ea = checked_state_expectation(rho, a, "A");
  const double eb = checked_state_expectation(rho, b, "B");
  const double rhs = mean_num(spec.function(), ea, eb);
  return finish(lhs, rhs, tol, spec.id(), Mode::kOperator, a.dim(), 1);
}

InequalityReport verify_random_matrix(const FiniteJointSpace& space, const OperatorMeanSpec& spec, double tol) {
  const auto& atoms = space.matrix_atoms();
  if (!space.has_densities()) throw UsageError("random-matrix verification needs a density on every atom");
  double lhs = 0.0;
  double ex = 0.0;
  double ey = 0.0;
  for (const auto& atom : atoms) {
    const double m = expectation_state(*atom.rho, operator_mean(spec, atom.x, atom.y));
    lhs += atom.p * m;
    ex += atom.p * checked_state_expectation(*atom.rho, atom.x, "X");
    ey += atom.p * checked_state_expectation(*atom.rho, atom.y, "Y");
  }
  const double rhs = mean_num(spec.function(), ex, ey);
  return finish(lhs, rhs, tol, spec.id(), Mode::kRandomMatrix, space.dim(), atoms.size());
}

// ---------------------------------------------------------------------------
// Samplers

FiniteJointSpace sample_scalar_space(CounterRng& rng, SizeRange atoms) {
  const std::size_t count = draw_size(rng, atoms);
  const std::vector<double> p = dirichlet_flat(rng, count);
  std::vector<ScalarAtom> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i].p = p[i];
    out[i].x = log_uniform(rng, kValueLo, kValueHi);
    out[i].y = log_uniform(rng, kValueLo, kValueHi);
  }
  return FiniteJointSpace::scalar(std::move(out));
}

OperatorInstance sample_operator_instance(std::size_t n, CounterRng& rng) {
  DensityMatrix rho = sample_density(n, rng);
  const double sa = log_uniform(rng, 0.25, 4.0);
  SymMatrix a = sa * sample_spd(n, rng, 1.0, kSpdFloor);
  const double sb = log_uniform(rng, 0.25, 4.0);
  SymMatrix b = sb * sample_spd(n, rng, 1.0, kSpdFloor);
  return {std::move(rho), std::move(a), std::move(b)};
}

FiniteJointSpace sample_matrix_space(CounterRng& rng, SizeRange dims, SizeRange atoms) {
  const std::size_t n = draw_size(rng, dims);
  const std::size_t count = draw_size(rng, atoms);
  const std::vector<double> p = dirichlet_flat(rng, count);
  std::vector<MatrixAtom> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    OperatorInstance inst = sample_operator_instance(n, rng);
    out.push_back({p[i], std::move(inst.a), std::move(inst.b), std::move(inst.rho)});
  }
  return FiniteJointSpace::matrix(std::move(out));
}

// ---------------------------------------------------------------------------
// Campaigns

double CampaignConfig::effective_tol() const noexcept {
  if (tol) return *tol;
  return mode == Mode::kScalar ? kScalarTol : kMatrixTol;
}

SizeRange CampaignConfig::effective_dims() const noexcept {
  if (dims) return *dims;
  switch (mode) {
    case Mode::kScalar:
      return {1, 1};
    case Mode::kOperator:
      return {2, 6};
    case Mode::kRandomMatrix:
      return {2, 4};
  }
  return {1, 1};
}

SizeRange CampaignConfig::effective_atoms() const noexcept {
  if (atoms) return *atoms;
  switch (mode) {
    case Mode::kScalar:
      return {1, 12};
    case Mode::kOperator:
      return {1, 1};
    case Mode::kRandomMatrix:
      return {1, 8};
  }
  return {1, 1};
}

void CampaignConfig::validate() const {
  if (functions.empty()) throw UsageError("bad config: functions list is empty");
  for (const auto& id : functions) {
    const RepresentingFunction f = RepresentingFunction::from_id(id);
    if (mode != Mode::kScalar && !f.claims_operator_monotone())
      throw UsageError("bad config: function '" + id + "' cannot define an operator mean");
  }
  const SizeRange d = effective_dims();
  if (d.min < 1 || d.min > d.max || d.max > kMaxDimension)
    throw UsageError("bad config: dims range " + std::to_string(d.min) + "-" + std::to_string(d.max) + " invalid");
  if (mode == Mode::kScalar && d != SizeRange{1, 1}) throw UsageError("bad config: num mode has dims 1");
  const SizeRange a = effective_atoms();
  if (a.min < 1 || a.min > a.max) throw UsageError("bad config: atoms range invalid");
  if (mode == Mode::kOperator && a.max != 1) throw UsageError("bad config: op mode uses exactly one atom");
  if (!(effective_tol() > 0.0)) throw UsageError("bad config: tol must be positive");
  if (threads < 1) throw UsageError("bad config: threads must be at least 1");
}

CampaignConfig parse_campaign_config(std::istream& in, const std::string& source) {
  CampaignConfig cfg;
  bool have_mode = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    auto sep = body.find('=');
    if (sep == std::string::npos) sep = body.find(':');
    if (sep == std::string::npos)
      throw UsageError("bad config " + source + ": line " + std::to_string(lineno) + " is not key = value");
    const std::string key = trim(body.substr(0, sep));
    const std::string value = trim(body.substr(sep + 1));
    if (key == "mode") {
      cfg.mode = parse_mode(value);
      have_mode = true;
    } else if (key == "functions") {
      cfg.functions.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) cfg.functions.push_back(item);
      }
    } else if (key == "trials") {
      cfg.trials = parse_number<std::size_t>(value, key, source);
    } else if (key == "dims") {
      cfg.dims = parse_range(value, key, source);
    } else if (key == "atoms") {
      cfg.atoms = parse_range(value, key, source);
    } else if (key == "tol") {
      cfg.tol = parse_number<double>(value, key, source);
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, key, source);
    } else if (key == "threads") {
      cfg.threads = parse_number<unsigned>(value, key, source);
    } else {
      throw UsageError("bad config " + source + ": unknown key '" + key + "'");
    }
  }
  if (!have_mode) throw UsageError("bad config " + source + ": missing mode");
  return cfg;
}

CampaignConfig load_campaign_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  return parse_campaign_config(in, path);
}

namespace {

struct Instance {
  std::optional<FiniteJointSpace> space;  // num and rm modes
  std::optional<OperatorInstance> op;     // op mode
};

Instance make_instance(const CampaignConfig& cfg, CounterRng rng) {
  Instance inst;
  switch (cfg.mode) {
    case Mode::kScalar:
      inst.space = sample_scalar_space(rng, cfg.effective_atoms());
      break;
    case Mode::kOperator:
      inst.op = sample_operator_instance(draw_size(rng, cfg.effective_dims()), rng);
      break;
    case Mode::kRandomMatrix:
      inst.space = sample_matrix_space(rng, cfg.effective_dims(), cfg.effective_atoms());
      break;
  }
  return inst;
}

InequalityReport verify_instance(const CampaignConfig& cfg, const Instance& inst, const RepresentingFunction& f,
                                 double tol) {
  switch (cfg.mode) {
    case Mode::kScalar:
      return verify_numeric(*inst.space, f, tol);
    case Mode::kOperator:
      return verify_operator(inst.op->rho, inst.op->a, inst.op->b, OperatorMeanSpec(f), tol);
    case Mode::kRandomMatrix:
      return verify_random_matrix(*inst.space, OperatorMeanSpec(f), tol);
  }
  throw UsageError("unknown campaign mode");
}

FiniteJointSpace instance_as_space(Instance inst) {
  if (inst.space) return std::move(*inst.space);
  OperatorInstance& op = *inst.op;
  std::vector<MatrixAtom> atoms;
  atoms.push_back({1.0, std::move(op.a), std::move(op.b), std::move(op.rho)});
  return FiniteJointSpace::matrix(std::move(atoms));
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& config, const CounterRng& rng) {
  config.validate();
  std::vector<RepresentingFunction> functions;
  for (const auto& id : config.functions) functions.push_back(RepresentingFunction::from_id(id));
  const double tol = config.effective_tol();
  const std::size_t nf = functions.size();

  // reports[trial * nf + k] for function k.
  std::vector<InequalityReport> reports(config.trials * nf);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const Instance inst = make_instance(config, rng.split(t));
      for (std::size_t k = 0; k < nf; ++k) {
        InequalityReport r = verify_instance(config, inst, functions[k], tol);
        r.seed = config.seed;
        reports[t * nf + k] = std::move(r);
      }
    }
  };

  const std::size_t threads = std::min<std::size_t>(config.threads, std::max<std::size_t>(config.trials, 1));
  if (threads <= 1) {
    work(0, config.trials);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
      const std::size_t begin = config.trials * w / threads;
      const std::size_t end = config.trials * (w + 1) / threads;
      pool.emplace_back([&, w, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  CampaignSummary s;
  s.mode = config.mode;
  s.trials = config.trials;
  s.reports = reports.size();
  s.tol = tol;
  s.seed = config.seed;
  s.dims = config.effective_dims();
  s.atoms = config.effective_atoms();
  for (const auto& f : functions) s.per_function.push_back({f.id(), config.trials, 0, std::nullopt, 0.0});

  std::size_t worst_index = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const InequalityReport& r = reports[i];
    FunctionSummary& fs = s.per_function[i % nf];
    if (r.verdict == Verdict::kViolated) {
      ++fs.violations;
      ++s.violations;
    }
    if (!fs.worst_gap || r.gap < *fs.worst_gap) fs.worst_gap = r.gap;
    fs.max_abs_gap = std::max(fs.max_abs_gap, std::abs(r.gap));
    if (!s.worst_gap || r.gap < *s.worst_gap) {
      s.worst_gap = r.gap;
      worst_index = i;
    }
  }

  if (s.violations > 0) {
    const std::size_t trial = worst_index / nf;
    s.worst_case = WorstCase{reports[worst_index].function, trial, reports[worst_index],
                             instance_as_space(make_instance(config, rng.split(trial)))};
  }
  return s;
}

InequalityReport search_violation(const RepresentingFunction& f, CounterRng& rng, std::size_t budget, double tol) {
  if (budget < 1) throw UsageError("search_violation: budget must be at least 1");
  std::optional<InequalityReport> best;
  for (std::size_t i = 0; i < budget; ++i) {
    const double x1 = log_uniform(rng, kValueLo, kValueHi);
    const double x2 = log_uniform(rng, kValueLo, kValueHi);
    double p = rng.uniform01();
    if (x1 == x2 || p == 0.0) continue;
    const InequalityReport r = verify_numeric(construct_counterexample(f, x1, x2, p), f, tol);
    if (!best || r.gap < best->gap) best = r;
  }
  if (!best) best = verify_numeric(construct_counterexample(f, 0.5, 2.0, 0.5), f, tol);
  return *best;
}

// ---------------------------------------------------------------------------
// Space files

FiniteJointSpace read_scalar_space(std::istream& in, const std::string& source) {
  std::vector<ScalarAtom> atoms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::istringstream ls(line);
    ScalarAtom a{};
    std::string extra;
    if (!(ls >> a.p >> a.x >> a.y) || (ls >> extra))
      throw UsageError("malformed space file " + source + ": line " + std::to_string(lineno) + " is not 'p x y'");
    atoms.push_back(a);
  }
  try {
    return FiniteJointSpace::scalar(std::move(atoms));
  } catch (const DomainError& e) {
    throw UsageError("invalid space file " + source + ": " + e.what());
  } catch (const UsageError& e) {
    throw UsageError("invalid space file " + source + ": " + e.what());
  }
}

FiniteJointSpace load_scalar_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open space file " + path);
  return read_scalar_space(in, path);
}

void write_scalar_space(std::ostream& out, const FiniteJointSpace& space) {
  char buf[96];
  for (const auto& a : space.scalar_atoms()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", a.p, a.x, a.y);
    out << buf;
  }
}

FiniteJointSpace load_matrix_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open space file " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  auto resolve = [&base](const std::string& p) {
    const std::filesystem::path fp(p);
    return (fp.is_absolute() ? fp : base / fp).string();
  };
  std::vector<MatrixAtom> atoms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::istringstream ls(line);
    double p = 0.0;
    std::string xp, yp, rp, extra;
    if (!(ls >> p >> xp >> yp))
      throw UsageError("malformed space file " + path + ": line " + std::to_string(lineno) +
                       " is not 'p x_path y_path [rho_path]'");
    ls >> rp;
    if (ls >> extra) throw UsageError("malformed space file " + path + ": trailing content on line " + std::to_string(lineno));
    MatrixAtom atom{p, load_matrix(resolve(xp)), load_matrix(resolve(yp)), std::nullopt};
    if (!rp.empty()) {
      try {
        atom.rho = DensityMatrix(load_matrix(resolve(rp)));
      } catch (const DomainError& e) {
        throw UsageError("invalid density file " + resolve(rp) + ": " + e.what());
      }
    }
    atoms.push_back(std::move(atom));
  }
  try {
    return FiniteJointSpace::matrix(std::move(atoms));
  } catch (const DomainError& e) {
    throw UsageError("invalid space file " + path + ": " + e.what());
  } catch (const UsageError& e) {
    throw UsageError("invalid space file " + path + ": " + e.what());
  }
}

}  // namespace meanineq

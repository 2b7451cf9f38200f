#include "fdrforge/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fdrforge {

namespace {

void check_common(const std::vector<double>& p, const std::vector<std::uint8_t>& mask) {
  if (p.empty()) throw std::invalid_argument("TestingProblem: m must be >= 1");
  if (mask.size() != p.size())
    throw std::invalid_argument("TestingProblem: null_mask length mismatch");
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0)
      throw std::invalid_argument("TestingProblem: p-values must be finite and >= 0");
  }
}

int count_mask(const std::vector<std::uint8_t>& mask) {
  int n = 0;
  for (auto b : mask) n += (b != 0);
  return n;
}

}  // namespace

TestingProblem::TestingProblem(std::vector<double> pvalues,
                               std::vector<std::uint8_t> null_mask) {
  check_common(pvalues, null_mask);
  for (double x : pvalues) {
    if (x > 1.0) throw std::invalid_argument("TestingProblem: p-value above 1");
  }
  pvalues_ = std::move(pvalues);
  null_mask_ = std::move(null_mask);
  m0_ = count_mask(null_mask_);
}

TestingProblem TestingProblem::with_unbounded_pvalues(
    std::vector<double> pvalues, std::vector<std::uint8_t> null_mask) {
  check_common(pvalues, null_mask);
  TestingProblem out;
  out.pvalues_ = std::move(pvalues);
  out.null_mask_ = std::move(null_mask);
  out.m0_ = count_mask(out.null_mask_);
  return out;
}

bool RejectionSet::contains(int i) const {
  return std::binary_search(rejected.begin(), rejected.end(), i);
}

NuMeasure NuMeasure::discrete(std::vector<double> atoms, std::vector<double> weights) {
  if (atoms.empty() || atoms.size() != weights.size())
    throw std::invalid_argument("NuMeasure: atoms/weights size mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!(atoms[i] > 0.0)) throw std::invalid_argument("NuMeasure: atoms must be > 0");
    if (weights[i] < 0.0) throw std::invalid_argument("NuMeasure: weights must be >= 0");
    total += weights[i];
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("NuMeasure: weights must sum to 1");
  NuMeasure nu;
  nu.discrete_ = true;
  nu.atoms_ = std::move(atoms);
  nu.weights_ = std::move(weights);
  return nu;
}

NuMeasure NuMeasure::uniform(double lo, double hi) {
  if (!(lo >= 0.0 && hi > lo))
    throw std::invalid_argument("NuMeasure: require 0 <= lo < hi");
  NuMeasure nu;
  nu.discrete_ = false;
  nu.lo_ = lo;
  nu.hi_ = hi;
  return nu;
}

double NuMeasure::partial_first_moment(double r) const {
  if (r <= 0.0) return 0.0;
  if (discrete_) {
    double acc = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i] <= r) acc += atoms_[i] * weights_[i];
    return acc;
  }
  // Composite midpoint quadrature of x * density over (lo, min(r, hi)).
  const double upper = std::min(r, hi_);
  if (upper <= lo_) return 0.0;
  constexpr int kCells = 1024;
  const double width = (upper - lo_) / kCells;
  const double density = 1.0 / (hi_ - lo_);
  double acc = 0.0;
  for (int i = 0; i < kCells; ++i) {
    const double x = lo_ + (i + 0.5) * width;
    acc += x * density * width;
  }
  return acc;
}

ShapeFunction ShapeFunction::identity() { return ShapeFunction(ShapeKind::Identity); }

ShapeFunction ShapeFunction::harmonic() { return ShapeFunction(ShapeKind::Harmonic); }

ShapeFunction ShapeFunction::from_nu(NuMeasure nu) {
  ShapeFunction s(ShapeKind::NuInduced);
  s.nu_discrete_ = nu.is_discrete();
  s.nu_atoms_ = nu.atoms();
  s.nu_weights_ = nu.weights();
  s.nu_lo_ = nu.lo();
  s.nu_hi_ = nu.hi();
  return s;
}

ShapeFunction ShapeFunction::from_table(std::vector<double> beta) {
  if (beta.size() < 2)
    throw std::invalid_argument("ShapeFunction: table needs beta(0..m), m >= 1");
  if (beta.front() < 0.0)
    throw std::invalid_argument("ShapeFunction: beta(0) must be >= 0");
  for (std::size_t k = 1; k < beta.size(); ++k)
    if (beta[k] < beta[k - 1])
      throw std::invalid_argument("ShapeFunction: table must be nondecreasing");
  ShapeFunction s(ShapeKind::CustomTable);
  s.table_ = std::move(beta);
  return s;
}

const NuMeasure& ShapeFunction::nu() const {
  if (kind_ != ShapeKind::NuInduced)
    throw std::logic_error("ShapeFunction: not nu-induced");
  static thread_local NuMeasure cache = NuMeasure::uniform(0.0, 1.0);
  cache = nu_discrete_ ? NuMeasure::discrete(nu_atoms_, nu_weights_)
                       : NuMeasure::uniform(nu_lo_, nu_hi_);
  return cache;
}

std::vector<double> ShapeFunction::tabulate(int m) const {
  if (m < 1) throw std::invalid_argument("ShapeFunction: m must be >= 1");
  std::vector<double> beta(static_cast<std::size_t>(m) + 1, 0.0);
  switch (kind_) {
    case ShapeKind::Identity:
      for (int k = 0; k <= m; ++k) beta[k] = k;
      break;
    case ShapeKind::Harmonic: {
      double hm = 0.0;
      for (int i = 1; i <= m; ++i) hm += 1.0 / i;
      for (int k = 0; k <= m; ++k) beta[k] = k / hm;
      break;
    }
    case ShapeKind::NuInduced: {
      const NuMeasure measure = nu_discrete_
                                    ? NuMeasure::discrete(nu_atoms_, nu_weights_)
                                    : NuMeasure::uniform(nu_lo_, nu_hi_);
      for (int k = 0; k <= m; ++k) beta[k] = measure.partial_first_moment(k);
      break;
    }
    case ShapeKind::CustomTable:
      if (static_cast<int>(table_.size()) != m + 1)
        throw std::invalid_argument("ShapeFunction: table sized for a different m");
      beta = table_;
      break;
  }
  for (int k = 1; k <= m; ++k)
    if (beta[k] < beta[k - 1])
      throw std::logic_error("ShapeFunction: tabulation not nondecreasing");
  return beta;
}

std::string ShapeFunction::label() const {
  switch (kind_) {
    case ShapeKind::Identity: return "identity";
    case ShapeKind::Harmonic: return "harmonic";
    case ShapeKind::NuInduced: return nu_discrete_ ? "nu-discrete" : "nu-uniform";
    case ShapeKind::CustomTable: return "table";
  }
  return "?";
}

PiRule PiRule::fixed(double pi) {
  if (!(pi > 0.0 && pi <= 1.0))
    throw std::invalid_argument("PiRule: constant pi must lie in (0,1]");
  PiRule r;
  r.kind = Kind::Constant;
  r.constant = pi;
  return r;
}

PiRule PiRule::storey(double lambda, bool normalized) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("PiRule: lambda must lie in (0,1)");
  PiRule r;
  r.kind = Kind::Storey;
  r.lambda = lambda;
  r.normalized = normalized;
  return r;
}

ProcedureSpec ProcedureSpec::bh(double q) {
  return step_up(PiRule::fixed(1.0), ShapeFunction::identity(), q);
}

ProcedureSpec ProcedureSpec::by(double q) {
  return step_up(PiRule::fixed(1.0), ShapeFunction::harmonic(), q);
}

ProcedureSpec ProcedureSpec::storey(double q, double lambda, bool normalized) {
  return step_up(PiRule::storey(lambda, normalized), ShapeFunction::identity(), q);
}

ProcedureSpec ProcedureSpec::step_up(PiRule pi, ShapeFunction shape, double q) {
  ProcedureSpec spec{pi, std::move(shape), q};
  spec.validate();
  return spec;
}

void ProcedureSpec::validate() const {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("ProcedureSpec: q must lie in (0,1)");
  if (pi.kind == PiRule::Kind::Constant && !(pi.constant > 0.0 && pi.constant <= 1.0))
    throw std::invalid_argument("ProcedureSpec: constant pi must lie in (0,1]");
  if (pi.kind == PiRule::Kind::Storey && !(pi.lambda > 0.0 && pi.lambda < 1.0))
    throw std::invalid_argument("ProcedureSpec: lambda must lie in (0,1)");
}

std::string ProcedureSpec::label() const {
  std::string out;
  if (pi.kind == PiRule::Kind::Storey) {
    out = "storey";
  } else if (shape.kind() == ShapeKind::Identity && pi.constant == 1.0) {
    out = "bh";
  } else if (shape.kind() == ShapeKind::Harmonic && pi.constant == 1.0) {
    out = "by";
  } else {
    out = "step-up:" + shape.label();
  }
  return out;
}

Counts counts(const TestingProblem& problem, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("counts: t must lie in [0,1]");
  Counts c;
  const auto& p = problem.pvalues();
  for (int i = 0; i < problem.m(); ++i) {
    if (p[i] <= t) {
      if (problem.is_null(i)) ++c.v; else ++c.s;
    }
  }
  c.r = c.v + c.s;
  return c;
}

}  // namespace fdrforge

#ifndef FDRFORGE_CORE_HPP
#define FDRFORGE_CORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fdrforge {

// A simulated (or user-supplied) multiple testing instance: m p-values
// and, when the truth is known, the mask of true null hypotheses.
// Indices are 0-based everywhere in code; reports print them 1-based.
class TestingProblem {
 public:
  // Validates p in [0,1]. Use with_unbounded_pvalues for rescaled vectors
  // whose entries may exceed 1 (they are never rejected by any cutoff <= 1).
  TestingProblem(std::vector<double> pvalues, std::vector<std::uint8_t> null_mask);

  static TestingProblem with_unbounded_pvalues(std::vector<double> pvalues,
                                               std::vector<std::uint8_t> null_mask);

  int m() const { return static_cast<int>(pvalues_.size()); }
  int m0() const { return m0_; }
  const std::vector<double>& pvalues() const { return pvalues_; }
  const std::vector<std::uint8_t>& null_mask() const { return null_mask_; }
  bool is_null(int i) const { return null_mask_[static_cast<std::size_t>(i)] != 0; }

 private:
  TestingProblem() = default;

  std::vector<double> pvalues_;
  std::vector<std::uint8_t> null_mask_;
  int m0_ = 0;
};

// Indices rejected by a procedure plus the realized cutoff (0 when nothing
// is rejected). Every rejected index has p <= threshold and every other
// index has p > threshold.
struct RejectionSet {
  std::vector<int> rejected;  // sorted, 0-based
  double threshold = 0.0;

  int count() const { return static_cast<int>(rejected.size()); }
  bool contains(int i) const;
};

// Probability measure nu on (0, inf) inducing a shape function through its
// partial first moment r -> integral_0^r x dnu(x).
class NuMeasure {
 public:
  static NuMeasure discrete(std::vector<double> atoms, std::vector<double> weights);
  // Continuous uniform density on (lo, hi], 0 <= lo < hi.
  static NuMeasure uniform(double lo, double hi);

  bool is_discrete() const { return discrete_; }
  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  // integral_0^r x dnu(x); exact for discrete nu, composite-quadrature for
  // the continuous family.
  double partial_first_moment(double r) const;

 private:
  NuMeasure() = default;

  bool discrete_ = true;
  std::vector<double> atoms_;
  std::vector<double> weights_;
  double lo_ = 0.0, hi_ = 0.0;
};

enum class ShapeKind { Identity, Harmonic, NuInduced, CustomTable };

// Nondecreasing denominator modifier beta for step-up procedures.
// Identity gives the Benjamini-Hochberg rule, k/H_m the
// Benjamini-Yekutieli rule, and partial moments of a measure nu the
// Blanchard-Roquain dependence-controlling family.
class ShapeFunction {
 public:
  static ShapeFunction identity();
  static ShapeFunction harmonic();
  static ShapeFunction from_nu(NuMeasure nu);
  static ShapeFunction from_table(std::vector<double> beta);  // beta(0..m)

  ShapeKind kind() const { return kind_; }
  const NuMeasure& nu() const;

  // beta(k) for k = 0..m; validated nondecreasing with beta(0) >= 0.
  std::vector<double> tabulate(int m) const;

  std::string label() const;

 private:
  explicit ShapeFunction(ShapeKind kind) : kind_(kind) {}

  ShapeKind kind_;
  std::vector<double> nu_atoms_;  // NuInduced
  std::vector<double> nu_weights_;
  bool nu_discrete_ = true;
  double nu_lo_ = 0.0, nu_hi_ = 0.0;
  std::vector<double> table_;  // CustomTable
};

// Null-proportion multiplier: a fixed constant or the threshold-count
// estimator #{p_i > lambda}, optionally normalized by m(1-lambda).
struct PiRule {
  enum class Kind { Constant, Storey };

  Kind kind = Kind::Constant;
  double constant = 1.0;
  double lambda = 0.5;
  bool normalized = true;

  static PiRule fixed(double pi);
  static PiRule storey(double lambda = 0.5, bool normalized = true);
};

// Full description of a step-up procedure: multiplier rule, shape, level.
struct ProcedureSpec {
  PiRule pi;
  ShapeFunction shape = ShapeFunction::identity();
  double q = 0.1;

  static ProcedureSpec bh(double q);
  static ProcedureSpec by(double q);
  static ProcedureSpec storey(double q, double lambda = 0.5, bool normalized = true);
  static ProcedureSpec step_up(PiRule pi, ShapeFunction shape, double q);

  void validate() const;
  std::string label() const;
};

struct Counts {
  int v = 0;  // rejected true nulls
  int s = 0;  // rejected non-nulls
  int r = 0;  // v + s
};

// V(t), S(t), R(t) for the fixed cutoff t; ties p_i == t count as rejected.
Counts counts(const TestingProblem& problem, double t);

}  // namespace fdrforge

#endif  // FDRFORGE_CORE_HPP

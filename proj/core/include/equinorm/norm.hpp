#pragma once

// Norm specifications for finite-dimensional normed spaces.  A NormPtr is an
// immutable, shareable description that can evaluate itself, evaluate its
// dual norm, and produce norming functionals.  Composite variants (scaled,
// max-of, hull gauges, subspace extensions, spreading composites) reference
// other specifications, so whole renormings round-trip through JSON.
//
// Exactness contract: eval() is exact up to rounding for lp, polyhedral,
// scaled, max_of and spreading variants.  hull_gauge eval is exact (simplex /
// closed form) for polyhedral and Euclidean ambients and an upper bound with
// reported tolerance otherwise.  dual_eval is exact except for max_of with
// non-trivial splits and generic hull ambients, where it is a certified upper
// bound refined by convex descent.

#include "equinorm/common.hpp"

#include <memory>
#include <string>
#include <vector>

namespace equinorm {

/// Linear functional in coordinates: f(x) = coeffs . x.  dual_bound is the
/// certified bound on the dual norm of the functional (1 for norming
/// functionals of nonzero vectors).
struct DualFunctional {
  Vector coeffs;
  double dual_bound = 1.0;

  double operator()(const Vector& x) const { return coeffs.dot(x); }
};

class Norm;
using NormPtr = std::shared_ptr<const Norm>;

class Norm {
 public:
  virtual ~Norm() = default;
  virtual int dim() const = 0;
  virtual std::string kind() const = 0;
  virtual double eval(const Vector& v) const = 0;
  virtual double dual_eval(const Vector& f) const = 0;
  /// Norming functional of v != 0: f with f(v) = ||v|| and dual norm <= 1.
  virtual DualFunctional norming(const Vector& v) const = 0;
  /// Whether dual_argmax has an exact implementation for this variant.
  virtual bool supports_dual_argmax() const { return false; }
  /// A maximizer of f . x over the unit ball (exact subgradient of the dual
  /// norm).  Only valid when supports_dual_argmax().
  virtual Vector dual_argmax(const Vector& f) const;
};

// ---------------------------------------------------------------------------
// Concrete variants.  Constructors validate their parameters and throw
// invalid_input_error on malformed data.

class LpNorm final : public Norm {
 public:
  LpNorm(int dim, double p);
  int dim() const override { return dim_; }
  std::string kind() const override { return "lp"; }
  double eval(const Vector& v) const override;
  double dual_eval(const Vector& f) const override;
  DualFunctional norming(const Vector& v) const override;
  bool supports_dual_argmax() const override { return true; }
  Vector dual_argmax(const Vector& f) const override;

  double p() const { return p_; }
  double conjugate() const { return q_; }
  bool is_inf() const { return std::isinf(p_); }

 private:
  int dim_;
  double p_;
  double q_;
};

class PolyhedralNorm final : public Norm {
 public:
  /// ||x|| = max_j |facets.row(j) . x|.  Rows must span R^dim.
  explicit PolyhedralNorm(Matrix facets);
  int dim() const override { return static_cast<int>(facets_.cols()); }
  std::string kind() const override { return "polyhedral"; }
  double eval(const Vector& v) const override;
  double dual_eval(const Vector& f) const override;
  DualFunctional norming(const Vector& v) const override;

  bool supports_dual_argmax() const override { return true; }
  /// Maximizer of f . x over the unit ball (solves the dual LP).
  Vector dual_argmax(const Vector& f) const override;

  const Matrix& facets() const { return facets_; }

 private:
  Matrix facets_;
};

class ScaledNorm final : public Norm {
 public:
  ScaledNorm(double alpha, NormPtr base);
  int dim() const override { return base_->dim(); }
  std::string kind() const override { return "scaled"; }
  double eval(const Vector& v) const override { return alpha_ * base_->eval(v); }
  double dual_eval(const Vector& f) const override {
    return base_->dual_eval(f) / alpha_;
  }
  DualFunctional norming(const Vector& v) const override;
  bool supports_dual_argmax() const override {
    return base_->supports_dual_argmax();
  }
  Vector dual_argmax(const Vector& f) const override {
    return base_->dual_argmax(f) / alpha_;
  }

  double alpha() const { return alpha_; }
  const NormPtr& base() const { return base_; }

 private:
  double alpha_;
  NormPtr base_;
};

class MaxOfNorm final : public Norm {
 public:
  explicit MaxOfNorm(std::vector<NormPtr> branches);
  int dim() const override { return branches_.front()->dim(); }
  std::string kind() const override { return "max_of"; }
  double eval(const Vector& v) const override;
  /// Dual norm is the infimal convolution of branch duals; computed as the
  /// best of single-branch candidates and a convex-descent split refinement.
  double dual_eval(const Vector& f) const override;
  DualFunctional norming(const Vector& v) const override;

  const std::vector<NormPtr>& branches() const { return branches_; }
  /// Index of the first branch attaining the max at v.
  int active_branch(const Vector& v) const;

 private:
  std::vector<NormPtr> branches_;
};

class HullGaugeNorm final : public Norm {
 public:
  /// Gauge of K = conv(rho * B_ambient union {+-g : g in generators}).
  /// Scaled ambients are folded into rho.  Zero and duplicate generators are
  /// dropped.
  HullGaugeNorm(NormPtr ambient, std::vector<Vector> generators, double rho);
  int dim() const override { return ambient_->dim(); }
  std::string kind() const override { return "hull_gauge"; }
  double eval(const Vector& v) const override;
  double dual_eval(const Vector& f) const override;
  DualFunctional norming(const Vector& v) const override;
  bool supports_dual_argmax() const override {
    return ambient_->supports_dual_argmax();
  }
  /// The unit ball is K itself: the argmax over K is the better of the
  /// rho-scaled ambient argmax and the best +-generator.
  Vector dual_argmax(const Vector& f) const override;

  const NormPtr& ambient() const { return ambient_; }
  double rho() const { return rho_; }
  const Matrix& generator_matrix() const { return gens_; }

 private:
  enum class EvalPath { Euclidean, Linear, Generic };

  double eval_linear(const Vector& v) const;
  double eval_generic(const Vector& v) const;
  DualFunctional norming_linear(const Vector& v, double value) const;
  DualFunctional norming_euclidean(const Vector& v, double value) const;

  NormPtr ambient_;       // never a scaled norm after folding
  double rho_;
  Matrix gens_;           // dim x k, deduplicated up to sign
  EvalPath path_;
  Matrix ambient_facets_; // valid on the Linear path
};

class SubspaceExtensionNorm final : public Norm {
 public:
  /// Norm on the ambient space that restricts to coeff_norm on the span of
  /// the basis columns and is dominated by ambient/c2 everywhere:
  ///   |||x||| = max( max_j ext_j(x), ambient(x) / c2 ).
  /// The ext_j are minimal-dual-norm extensions of extreme functionals of the
  /// coefficient norm's dual ball (sampled when the ball is not polytopal).
  SubspaceExtensionNorm(NormPtr ambient, Matrix basis, NormPtr coeff_norm,
                        double c2, Matrix extended_functionals,
                        Vector extension_norms);
  int dim() const override { return ambient_->dim(); }
  std::string kind() const override { return "subspace_extension"; }
  double eval(const Vector& v) const override;
  double dual_eval(const Vector& f) const override;
  DualFunctional norming(const Vector& v) const override;

  const NormPtr& ambient() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  const NormPtr& coeff_norm() const { return coeff_norm_; }
  double c2() const { return c2_; }
  const Matrix& extended_functionals() const { return ext_; }
  const Vector& extension_norms() const { return extension_norms_; }

 private:
  NormPtr ambient_;
  Matrix basis_;          // dim x k
  NormPtr coeff_norm_;    // on R^k
  double c2_;
  Matrix ext_;            // rows are functionals on R^dim
  Vector extension_norms_;  // achieved ambient-dual norms, diagnostics
};

class SpreadingCompositeNorm final : public Norm {
 public:
  /// |||x||| = max( base(x)/(1+eps), max_{|F|=m} model(x restricted to F) ).
  /// For lp models the inner sup is the model norm of the m largest entries;
  /// other models require allow_exhaustive (subset enumeration).
  SpreadingCompositeNorm(NormPtr base, double eps, int m, NormPtr model,
                         bool allow_exhaustive);
  int dim() const override { return base_->dim(); }
  std::string kind() const override { return "spreading_composite"; }
  double eval(const Vector& v) const override;
  double dual_eval(const Vector& f) const override;
  DualFunctional norming(const Vector& v) const override;

  const NormPtr& base() const { return base_; }
  double eps() const { return eps_; }
  int m() const { return m_; }
  const NormPtr& model() const { return model_; }
  bool allow_exhaustive() const { return allow_exhaustive_; }

  /// Value of the restricted-support branch alone.
  double spreading_branch(const Vector& v) const;

 private:
  NormPtr base_;
  double eps_;
  int m_;
  NormPtr model_;
  bool allow_exhaustive_;
};

// ---------------------------------------------------------------------------
// Factories and free-function API.

NormPtr make_lp_norm(int dim, double p);
NormPtr make_polyhedral_norm(Matrix facets);
NormPtr make_scaled_norm(double alpha, NormPtr base);
NormPtr make_max_norm(std::vector<NormPtr> branches);

/// Gauge norm of K = conv(rho * unit ball of ambient union {+-g}).
NormPtr make_hull_gauge(NormPtr ambient, const std::vector<Vector>& generators,
                        double rho);

/// Minkowski functional ||v||_K for the hull above, as a one-shot evaluation.
double gauge_of_hull(double rho, const NormPtr& ambient,
                     const std::vector<Vector>& generators, const Vector& v);

struct ExtendOptions {
  int n_dual_dirs = 512;   // sampled dual directions for smooth coeff norms
  double tol = 1e-9;       // domination validation tolerance
  std::uint64_t seed = 0x5eed;
};

/// Remark-style extension: build the smallest norm that restricts to
/// coeff_norm on span(basis columns) and satisfies ambient/c2 <= result.
/// Throws invalid_input_error when coeff_norm fails to dominate ambient/c2 on
/// the subspace.
NormPtr extend_norm(NormPtr ambient, const Matrix& basis, NormPtr coeff_norm,
                    double c2, const ExtendOptions& options = {});

NormPtr make_spreading_composite(NormPtr base, double eps, int m,
                                 NormPtr model, bool allow_exhaustive = false);

/// Evaluates a spreading-composite specification on a coefficient vector.
double spreading_composite_norm(const NormPtr& spec, const Vector& alpha);

inline double norm_eval(const NormPtr& spec, const Vector& v) {
  require(spec != nullptr, "norm_eval: null spec");
  require(v.size() == spec->dim(), "norm_eval: dimension mismatch");
  require(is_finite(v), "norm_eval: non-finite input");
  return spec->eval(v);
}

inline double dual_norm_eval(const NormPtr& spec, const Vector& f) {
  require(spec != nullptr, "dual_norm_eval: null spec");
  require(f.size() == spec->dim(), "dual_norm_eval: dimension mismatch");
  require(is_finite(f), "dual_norm_eval: non-finite input");
  return spec->dual_eval(f);
}

inline DualFunctional norming_functional(const NormPtr& spec, const Vector& v) {
  require(spec != nullptr, "norming_functional: null spec");
  require(v.size() == spec->dim(), "norming_functional: dimension mismatch");
  require(is_finite(v), "norming_functional: non-finite input");
  require(v.lpNorm<Eigen::Infinity>() > 0.0,
          "norming_functional: zero vector has no norming functional");
  return spec->norming(v);
}

}  // namespace equinorm

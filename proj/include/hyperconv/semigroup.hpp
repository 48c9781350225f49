#ifndef HYPERCONV_SEMIGROUP_HPP
#define HYPERCONV_SEMIGROUP_HPP

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "hyperconv/deformation.hpp"
#include "hyperconv/hypergroup.hpp"
#include "hyperconv/semicharacter.hpp"

namespace hyperconv {

/// Poisson convolution semigroup mu_t = e^{-t ||rho||} exp(t rho) built from
/// a nonnegative jump measure. Any jump mass at the identity is stripped at
/// construction (it only shifts the normalization), so the stored jump is
/// the Levy measure itself.
class PoissonSemigroup {
 public:
  PoissonSemigroup(HypergroupPtr H, const Measure& jump);

  const HypergroupPtr& model() const { return H_; }
  const Measure& jump() const { return jump_; }
  double rate() const { return rate_; }

  /// mu_t as a probability measure, truncated so the dropped tail has
  /// tv_norm <= eps.
  Measure eval(double t, double eps = 1e-12) const;

  /// The Levy measure (jump with identity mass removed; weight at e is 0).
  Measure levy_measure() const { return jump_; }

  /// Gaussian iff the Levy measure vanishes.
  bool gaussian() const { return jump_.empty(); }

 private:
  HypergroupPtr H_;
  Measure jump_;
  double rate_;
};

/// (1/t) int f dmu_t for each t, for convergence inspection against
/// int f d(eta). Requires f(e) = 0 (and f vanishing near e, which is the
/// caller's responsibility to arrange).
std::vector<double> levy_limit_estimate(const PoissonSemigroup& S,
                                        const std::function<double(const Point&)>& f,
                                        const std::vector<double>& t_sequence,
                                        double eps = 1e-12);

/// Theorem 3.5(2)/3.8: the deformed semigroup on deform(H, alpha0) with jump
/// alpha0·jump, plus c = int alpha0 d(jump) - rate, so that
/// R_{alpha0}(mu_t) = deformed mu_t and phi(t) = int alpha0 dmu_t = e^{ct}.
std::pair<PoissonSemigroup, double> deform_semigroup(
    const PoissonSemigroup& S, const Semicharacter& alpha0,
    std::optional<double> max_defect = std::nullopt);

/// Generator A = C_jump - rate·I represented on functions supported in
/// `basis`: row i gives A f(basis_i) as coefficients over basis columns.
/// `row_leak[i]` is the jump-convolution mass that falls outside the basis
/// at basis_i (such rows misrepresent e^{tA} but the matrix entries are
/// still exact for basis-supported f).
struct GeneratorMatrix {
  std::vector<Point> basis;
  std::vector<std::vector<double>> matrix;
  std::vector<double> row_leak;
  double c = 0.0;  // deformation exponent, when the semigroup is a deformation

  std::vector<std::size_t> interior_rows(double leak_tol = 1e-14) const;
};

GeneratorMatrix generator_matrix(
    const PoissonSemigroup& S, const std::vector<Point>& basis,
    double max_row_leak = std::numeric_limits<double>::infinity());

/// Max-abs entry of A^{alpha0} - (D_{1/alpha0} A D_{alpha0} - c I) over
/// interior rows (Remark 3.10 conjugation identity).
double generator_deformed_check(const PoissonSemigroup& S,
                                const Semicharacter& alpha0,
                                const std::vector<Point>& basis,
                                std::optional<double> max_defect = std::nullopt);

}  // namespace hyperconv

#endif

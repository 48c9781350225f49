#ifndef HYPERCONV_STURM_LIOUVILLE_HPP
#define HYPERCONV_STURM_LIOUVILLE_HPP

#include <memory>
#include <vector>

#include "hyperconv/hypergroup.hpp"
#include "hyperconv/semicharacter.hpp"

namespace hyperconv {

/// Sturm-Liouville coefficient A for L_A f = -f'' - (A'/A) f', with
/// A(x) ~ c x^{k0} near 0 and A'/A = k0/x + g1 x + O(x^3).
class SlProfile {
 public:
  virtual ~SlProfile() = default;
  virtual double A(double x) const = 0;
  /// A'(x)/A(x) for x > 0.
  virtual double log_deriv(double x) const = 0;
  /// Singularity exponent k0 at the origin.
  virtual double origin_exponent() const = 0;
  /// Subleading origin coefficient g1 (0 when unknown; only affects the
  /// O(x^4) term of the series start).
  virtual double origin_g1() const { return 0.0; }
};

using SlProfilePtr = std::shared_ptr<const SlProfile>;

/// A(x) = x^k.
SlProfilePtr sl_power_profile(double k);
/// A(x) = sinh^2 x  (rho = 1).
SlProfilePtr sl_sinh2_profile();
/// Tabulated A on a uniform grid {0, step, ...}; log-derivative via a
/// 4th-order central stencil. Values must be positive for x > 0.
SlProfilePtr sl_table_profile(double step, std::vector<double> values,
                              double origin_exponent);

struct SlGrid {
  double h = 1.0 / 64;   // output step
  double x_max = 8.0;    // right end
  int substeps = 128;    // RK4 substeps per output cell
};

/// Eigenfunction phi_{i lambda} of L_A phi = (rho^2 - lambda^2) phi with
/// phi(0)=1, phi'(0)=0, on the output grid. Integrates the system in long
/// double (classical RK4) from x0 = 2h with a 4th-order series start.
struct SlSolution {
  double h = 0.0;
  std::vector<double> phi;   // phi at k*h, k = 0..n
  std::vector<double> dphi;  // phi' at the same nodes

  double value_at(double x) const;  // nearest-node lookup
};

SlSolution sl_solve(const SlProfile& profile, double lambda, double rho,
                    const SlGrid& grid);

/// rho = (1/2) lim A'/A via Richardson extrapolation in 1/x over increasing
/// probe points. Throws NoLimit when the probe estimates oscillate by more
/// than 10x the final increment.
struct RhoEstimate {
  double value = 0.0;
  double error = 0.0;  // magnitude of the final Richardson increment
};

RhoEstimate rho_of(const SlProfile& profile, const std::vector<double>& probes);

/// Renormalized profile A_lambda = phi_{i lambda}^2 A. Keeps the solved
/// (phi, phi') tables so the log-derivative 2 phi'/phi + A'/A is exact to
/// solver accuracy (no re-differencing).
SlProfilePtr renormalized_profile(const SlProfilePtr& base, double lambda,
                                  double rho, const SlGrid& grid);

/// Semicharacter backed by an SL eigenfunction solved on the model grid
/// (grid models only; evaluation is exact node lookup).
Semicharacter sc_sl_numeric(const Hypergroup& H, const SlProfilePtr& profile,
                            double lambda, double rho, int substeps = 128);

}  // namespace hyperconv

#endif

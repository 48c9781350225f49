#ifndef HYPERCONV_SEMICHARACTER_HPP
#define HYPERCONV_SEMICHARACTER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "hyperconv/hypergroup.hpp"

namespace hyperconv {

/// An evaluatable function alpha: X -> R with alpha(e) = 1, a positivity
/// flag, and (after certify) a numerically verified multiplicativity bound.
struct Semicharacter {
  std::string space;
  std::string name;
  std::function<double(const Point&)> eval;
  bool positive = false;
  std::optional<double> mult_defect;  // set by certify()

  double operator()(const Point& p) const { return eval(p); }
  bool certified(double eps) const {
    return mult_defect.has_value() && *mult_defect <= eps;
  }
};

/// Max over sampled pairs of |int alpha d(delta_x*delta_y) - alpha(x)alpha(y)|
/// normalized by 1 + |alpha(x)alpha(y)|.
double is_multiplicative(const Hypergroup& H,
                         const std::function<double(const Point&)>& alpha,
                         std::size_t n_samples, std::uint64_t seed);

/// Runs is_multiplicative and stores the certificate on the semicharacter.
Semicharacter certify(const Hypergroup& H, Semicharacter alpha,
                      std::size_t n_samples, std::uint64_t seed);

/// Dual deformation map M_{alpha0}: alpha -> alpha/alpha0. Throws NotPositive
/// unless alpha0 is positive. The quotient is a (semi)character of the
/// deformed hypergroup; certify it there.
Semicharacter dual_map(const Semicharacter& alpha, const Semicharacter& alpha0);

Semicharacter sc_product(const Semicharacter& a, const Semicharacter& b);
Semicharacter sc_reciprocal(const Semicharacter& a);

/// Named families (space ids must match the model they are used with).
Semicharacter sc_one(const Hypergroup& H);
/// Chebyshev: n -> cosh(s n).
Semicharacter sc_cosh(const Hypergroup& H, double s);
/// Bessel-Kingman character sin(lambda x)/(lambda x).
Semicharacter sc_bessel_sin(const Hypergroup& H, double lambda);
/// Bessel-Kingman positive semicharacter sinh(rho x)/(rho x).
Semicharacter sc_bessel_sinh(const Hypergroup& H, double rho);
/// Hyperbolic character sin(lambda x)/(lambda sinh x).
Semicharacter sc_hyperbolic_sin(const Hypergroup& H, double lambda);
/// Hyperbolic positive semicharacter sinh(lambda x)/(lambda sinh x).
Semicharacter sc_hyperbolic_sinh(const Hypergroup& H, double lambda);

/// Empirical exponentiality constant: max over sampled x and u in the
/// U_radius-ball around e of max_{y in supp(delta_x * delta_u)}
/// alpha0(y)/alpha0(x). A lower bound for the best constant C of Def. 3.4.
double exponentiality_estimate(const Hypergroup& H, const Semicharacter& alpha0,
                               double u_radius, std::size_t n_samples,
                               std::uint64_t seed);

}  // namespace hyperconv

#endif

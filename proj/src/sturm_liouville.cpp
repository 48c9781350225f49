#include "hyperconv/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>

#include "hyperconv/errors.hpp"

namespace hyperconv {

namespace {

class PowerProfile final : public SlProfile {
 public:
  explicit PowerProfile(double k) : k_(k) {
    if (k < 0) throw BadProfile("power profile: exponent must be >= 0");
  }
  double A(double x) const override { return std::pow(x, k_); }
  double log_deriv(double x) const override { return k_ / x; }
  double origin_exponent() const override { return k_; }

 private:
  double k_;
};

class Sinh2Profile final : public SlProfile {
 public:
  double A(double x) const override {
    const double s = std::sinh(x);
    return s * s;
  }
  double log_deriv(double x) const override { return 2.0 / std::tanh(x); }
  double origin_exponent() const override { return 2.0; }
  // 2 coth x = 2/x + (2/3) x + O(x^3)
  double origin_g1() const override { return 2.0 / 3.0; }
};

class TableProfile final : public SlProfile {
 public:
  TableProfile(double step, std::vector<double> values, double k0)
      : step_(step), values_(std::move(values)), k0_(k0) {
    if (step_ <= 0 || values_.size() < 7)
      throw BadProfile("table profile: need step > 0 and >= 7 values");
    for (std::size_t i = 1; i < values_.size(); ++i)
      if (values_[i] <= 0.0)
        throw BadProfile("table profile: A must be positive for x > 0");
  }

  double A(double x) const override { return values_[clamp_node(x)]; }

  double log_deriv(double x) const override {
    // 4th-order central stencil at the nearest node, linearly interpolated
    // to x between the two surrounding nodes
    const double u = x / step_;
    const auto k = static_cast<std::size_t>(std::max(0.0, std::floor(u)));
    const double frac = u - static_cast<double>(k);
    const double g0 = node_log_deriv(k);
    const double g1 = node_log_deriv(k + 1);
    return g0 * (1.0 - frac) + g1 * frac;
  }

  double origin_exponent() const override { return k0_; }

 private:
  std::size_t clamp_node(double x) const {
    auto k = static_cast<std::int64_t>(std::llround(x / step_));
    k = std::clamp<std::int64_t>(k, 0,
                                 static_cast<std::int64_t>(values_.size()) - 1);
    return static_cast<std::size_t>(k);
  }

  double node_log_deriv(std::size_t k) const {
    const auto n = values_.size();
    k = std::min(k, n - 1);
    if (k < 2 || k + 2 >= n) {
      // one-sided 2nd order at the edges
      if (k == 0) k = 1;
      const std::size_t km = k == 0 ? 0 : k - 1;
      const std::size_t kp = std::min(k + 1, n - 1);
      return (values_[kp] - values_[km]) /
             (static_cast<double>(kp - km) * step_ * values_[k]);
    }
    const double d = (-values_[k + 2] + 8 * values_[k + 1] - 8 * values_[k - 1] +
                      values_[k - 2]) /
                     (12.0 * step_);
    return d / values_[k];
  }

  double step_;
  std::vector<double> values_;
  double k0_;
};

class RenormalizedProfile final : public SlProfile {
 public:
  RenormalizedProfile(SlProfilePtr base, SlSolution sol, double lambda,
                      double rho)
      : base_(std::move(base)), sol_(std::move(sol)) {
    const double k0 = base_->origin_exponent();
    c2_ = (lambda * lambda - rho * rho) / (2.0 * (1.0 + k0));
  }

  double A(double x) const override {
    const double p = sol_.value_at(x);
    return p * p * base_->A(x);
  }

  double log_deriv(double x) const override {
    const auto k = node(x);
    return 2.0 * sol_.dphi[k] / sol_.phi[k] + base_->log_deriv(x);
  }

  double origin_exponent() const override { return base_->origin_exponent(); }
  double origin_g1() const override { return base_->origin_g1() + 4.0 * c2_; }

 private:
  std::size_t node(double x) const {
    auto k = static_cast<std::int64_t>(std::llround(x / sol_.h));
    k = std::clamp<std::int64_t>(k, 0,
                                 static_cast<std::int64_t>(sol_.phi.size()) - 1);
    return static_cast<std::size_t>(k);
  }

  SlProfilePtr base_;
  SlSolution sol_;
  double c2_;
};

}  // namespace

SlProfilePtr sl_power_profile(double k) {
  return std::make_shared<PowerProfile>(k);
}

SlProfilePtr sl_sinh2_profile() { return std::make_shared<Sinh2Profile>(); }

SlProfilePtr sl_table_profile(double step, std::vector<double> values,
                              double origin_exponent) {
  return std::make_shared<TableProfile>(step, std::move(values), origin_exponent);
}

double SlSolution::value_at(double x) const {
  auto k = static_cast<std::int64_t>(std::llround(x / h));
  k = std::clamp<std::int64_t>(k, 0, static_cast<std::int64_t>(phi.size()) - 1);
  return phi[static_cast<std::size_t>(k)];
}

SlSolution sl_solve(const SlProfile& profile, double lambda, double rho,
                    const SlGrid& grid) {
  if (lambda < 0) throw ValidationError("sl_solve: lambda >= 0");
  if (grid.h <= 0 || grid.x_max <= grid.h || grid.substeps < 1)
    throw ValidationError("sl_solve: bad grid");
  const auto n = static_cast<std::size_t>(std::llround(grid.x_max / grid.h));
  for (std::size_t k = 1; k <= n; ++k)
    if (!(profile.A(static_cast<double>(k) * grid.h) > 0.0))
      throw BadProfile("sl_solve: A <= 0 on the grid");

  const double k0 = profile.origin_exponent();
  const double g1 = profile.origin_g1();
  const double mu = lambda * lambda - rho * rho;  // phi'' + (A'/A) phi' = mu phi
  const double c2 = mu / (2.0 * (1.0 + k0));
  const double c4 = c2 * (mu - 2.0 * g1) / (4.0 * (3.0 + k0));

  SlSolution sol;
  sol.h = grid.h;
  sol.phi.resize(n + 1);
  sol.dphi.resize(n + 1);
  auto taylor = [&](double x, double& p, double& dp) {
    const double x2 = x * x;
    p = 1.0 + c2 * x2 + c4 * x2 * x2;
    dp = 2.0 * c2 * x + 4.0 * c4 * x2 * x;
  };
  taylor(0.0, sol.phi[0], sol.dphi[0]);
  if (n >= 1) taylor(grid.h, sol.phi[1], sol.dphi[1]);
  if (n >= 2) taylor(2.0 * grid.h, sol.phi[2], sol.dphi[2]);

  // classical RK4 on (phi, psi), long double state
  long double p = sol.phi[std::min<std::size_t>(2, n)];
  long double q = sol.dphi[std::min<std::size_t>(2, n)];
  const long double hs =
      static_cast<long double>(grid.h) / grid.substeps;
  auto rhs = [&](long double x, long double pp, long double qq,
                 long double& dp, long double& dq) {
    dp = qq;
    dq = static_cast<long double>(mu) * pp -
         static_cast<long double>(profile.log_deriv(static_cast<double>(x))) * qq;
  };
  for (std::size_t k = 2; k < n; ++k) {
    long double x = static_cast<long double>(k) * grid.h;
    for (int s = 0; s < grid.substeps; ++s) {
      long double k1p, k1q, k2p, k2q, k3p, k3q, k4p, k4q;
      rhs(x, p, q, k1p, k1q);
      rhs(x + hs / 2, p + hs / 2 * k1p, q + hs / 2 * k1q, k2p, k2q);
      rhs(x + hs / 2, p + hs / 2 * k2p, q + hs / 2 * k2q, k3p, k3q);
      rhs(x + hs, p + hs * k3p, q + hs * k3q, k4p, k4q);
      p += hs / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
      q += hs / 6 * (k1q + 2 * k2q + 2 * k3q + k4q);
      x += hs;
    }
    sol.phi[k + 1] = static_cast<double>(p);
    sol.dphi[k + 1] = static_cast<double>(q);
    if (!(sol.phi[k + 1] > 0.0))
      throw SolverDefect("sl_solve: solution became non-positive at x = " +
                         std::to_string(static_cast<double>(k + 1) * grid.h));
  }
  return sol;
}

RhoEstimate rho_of(const SlProfile& profile, const std::vector<double>& probes) {
  if (probes.size() < 3)
    throw ValidationError("rho_of: need at least 3 increasing probes");
  for (std::size_t i = 1; i < probes.size(); ++i)
    if (probes[i] <= probes[i - 1] || probes[i - 1] <= 0)
      throw ValidationError("rho_of: probes must be positive and increasing");

  // g(x) = A'/(2A) ~ rho + a/x: one Richardson step in 1/x is the slope of
  // x*g(x) between consecutive probes
  std::vector<double> est;
  for (std::size_t i = 0; i + 1 < probes.size(); ++i) {
    const double x0 = probes[i], x1 = probes[i + 1];
    const double g0 = 0.5 * profile.log_deriv(x0);
    const double g1 = 0.5 * profile.log_deriv(x1);
    est.push_back((g1 * x1 - g0 * x0) / (x1 - x0));
  }
  double osc = 0.0, d_last = 0.0;
  for (std::size_t i = 0; i + 1 < est.size(); ++i) {
    d_last = est[i + 1] - est[i];
    osc = std::max(osc, std::abs(d_last));
  }
  RhoEstimate r{est.back(), std::abs(d_last)};
  const bool converged = std::abs(d_last) <= osc / 10.0 ||
                         std::abs(d_last) <= 1e-9 * (1.0 + std::abs(r.value));
  if (!converged)
    throw NoLimit("rho_of: probe estimates oscillate (last increment " +
                  std::to_string(d_last) + ", oscillation " +
                  std::to_string(osc) + ")");
  return r;
}

SlProfilePtr renormalized_profile(const SlProfilePtr& base, double lambda,
                                  double rho, const SlGrid& grid) {
  auto sol = sl_solve(*base, lambda, rho, grid);
  return std::make_shared<RenormalizedProfile>(base, std::move(sol), lambda, rho);
}

Semicharacter sc_sl_numeric(const Hypergroup& H, const SlProfilePtr& profile,
                            double lambda, double rho, int substeps) {
  if (H.ground() != Ground::Grid)
    throw ValidationError("sc_sl_numeric: needs a grid model");
  SlGrid grid{H.grid_step(), H.coord_limit(), substeps};
  auto sol = std::make_shared<SlSolution>(sl_solve(*profile, lambda, rho, grid));
  Semicharacter sc;
  sc.space = H.space();
  sc.name = "sl_numeric(lambda=" + std::to_string(lambda) + ")";
  sc.positive = true;
  sc.eval = [sol](const Point& p) {
    return sol->phi.at(static_cast<std::size_t>(p.index));
  };
  return sc;
}

}  // namespace hyperconv

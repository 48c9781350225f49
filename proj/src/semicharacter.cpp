#include "hyperconv/semicharacter.hpp"

#include <algorithm>
#include <cmath>

#include "hyperconv/errors.hpp"
#include "hyperconv/rng.hpp"

namespace hyperconv {

double is_multiplicative(const Hypergroup& H,
                         const std::function<double(const Point&)>& alpha,
                         std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw ValidationError("is_multiplicative: n_samples >= 1");
  Rng rng(seed);
  auto set = H.sample_set();
  const double limit = H.coord_limit() / 2.0;
  std::erase_if(set, [&](const Point& p) { return p.coord > limit; });
  if (set.empty()) throw ValidationError("is_multiplicative: empty sample set");

  double worst = 0.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const Point& x = set[rng.uniform_index(set.size())];
    const Point& y = set[rng.uniform_index(set.size())];
    const double prod = alpha(x) * alpha(y);
    const double integ = integrate(H.kernel(x, y), alpha);
    worst = std::max(worst, std::abs(integ - prod) / (1.0 + std::abs(prod)));
  }
  return worst;
}

Semicharacter certify(const Hypergroup& H, Semicharacter alpha,
                      std::size_t n_samples, std::uint64_t seed) {
  if (alpha.space != H.space())
    throw SpaceMismatch("certify: semicharacter on '" + alpha.space +
                        "' vs ground space '" + H.space() + "'");
  alpha.mult_defect = is_multiplicative(H, alpha.eval, n_samples, seed);
  return alpha;
}

Semicharacter dual_map(const Semicharacter& alpha, const Semicharacter& alpha0) {
  if (alpha.space != alpha0.space)
    throw SpaceMismatch("dual_map: spaces differ");
  if (!alpha0.positive)
    throw NotPositive("dual_map: alpha0 must be a positive semicharacter");
  Semicharacter q;
  q.space = alpha.space;
  q.name = alpha.name + "/" + alpha0.name;
  q.positive = alpha.positive;
  q.eval = [a = alpha.eval, b = alpha0.eval](const Point& p) {
    return a(p) / b(p);
  };
  return q;
}

Semicharacter sc_product(const Semicharacter& a, const Semicharacter& b) {
  if (a.space != b.space) throw SpaceMismatch("sc_product: spaces differ");
  Semicharacter r;
  r.space = a.space;
  r.name = a.name + "*" + b.name;
  r.positive = a.positive && b.positive;
  r.eval = [fa = a.eval, fb = b.eval](const Point& p) { return fa(p) * fb(p); };
  return r;
}

Semicharacter sc_reciprocal(const Semicharacter& a) {
  if (!a.positive) throw NotPositive("sc_reciprocal: needs positive input");
  Semicharacter r;
  r.space = a.space;
  r.name = "1/" + a.name;
  r.positive = true;
  r.eval = [f = a.eval](const Point& p) { return 1.0 / f(p); };
  return r;
}

Semicharacter sc_one(const Hypergroup& H) {
  return {H.space(), "1", [](const Point&) { return 1.0; }, true, {}};
}

Semicharacter sc_cosh(const Hypergroup& H, double s) {
  return {H.space(), "cosh(s n), s=" + std::to_string(s),
          [s](const Point& p) { return std::cosh(s * p.coord); }, true, {}};
}

namespace {
double sinc(double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }
double sinhc(double t) { return t == 0.0 ? 1.0 : std::sinh(t) / t; }
}  // namespace

Semicharacter sc_bessel_sin(const Hypergroup& H, double lambda) {
  return {H.space(), "sin(lx)/(lx), l=" + std::to_string(lambda),
          [lambda](const Point& p) { return sinc(lambda * p.coord); },
          false, {}};
}

Semicharacter sc_bessel_sinh(const Hypergroup& H, double rho) {
  return {H.space(), "sinh(rx)/(rx), r=" + std::to_string(rho),
          [rho](const Point& p) { return sinhc(rho * p.coord); }, true, {}};
}

Semicharacter sc_hyperbolic_sin(const Hypergroup& H, double lambda) {
  return {H.space(), "sin(lx)/(l sinh x), l=" + std::to_string(lambda),
          [lambda](const Point& p) {
            const double x = p.coord;
            return x == 0.0 ? 1.0 : std::sin(lambda * x) / (lambda * std::sinh(x));
          },
          false, {}};
}

Semicharacter sc_hyperbolic_sinh(const Hypergroup& H, double lambda) {
  return {H.space(), "sinh(lx)/(l sinh x), l=" + std::to_string(lambda),
          [lambda](const Point& p) {
            const double x = p.coord;
            return x == 0.0 ? 1.0 : std::sinh(lambda * x) / (lambda * std::sinh(x));
          },
          true, {}};
}

double exponentiality_estimate(const Hypergroup& H, const Semicharacter& alpha0,
                               double u_radius, std::size_t n_samples,
                               std::uint64_t seed) {
  if (!alpha0.positive)
    throw NotPositive("exponentiality_estimate: alpha0 must be positive");
  Rng rng(seed);
  const auto set = H.sample_set();
  std::vector<Point> u_set;
  for (const auto& p : set)
    if (p.coord <= u_radius) u_set.push_back(p);
  if (u_set.empty()) u_set.push_back(H.identity());

  // keep x*u representable on grid models
  std::vector<Point> x_set;
  const double limit = H.coord_limit();
  for (const auto& p : set)
    if (p.coord + u_radius <= limit) x_set.push_back(p);
  if (x_set.empty()) throw ValidationError("exponentiality_estimate: no x fits");

  double best = 1.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const Point& x = x_set[rng.uniform_index(x_set.size())];
    const Point& u = u_set[rng.uniform_index(u_set.size())];
    const double ax = alpha0(x);
    const Measure k = H.kernel(x, u);
    for (const auto& [y, w] : k.entries()) {
      if (w <= 0.0) continue;
      best = std::max(best, alpha0(y) / ax);
    }
  }
  return best;
}

}  // namespace hyperconv

#include "hyperconv/hypergroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hyperconv/errors.hpp"
#include "hyperconv/rng.hpp"

namespace hyperconv {

namespace {
constexpr double kPruneRel = 1e-15;
}

double Hypergroup::coord_limit() const {
  return std::numeric_limits<double>::infinity();
}

double Hypergroup::condition_factor(const Point&, const Point&) const {
  return 1.0;
}

void Hypergroup::validate_index(std::int64_t index) const {
  if (index < 0)
    throw ValidationError(name_ + ": negative ground-space index");
}

void Hypergroup::check_space(const Point& x, const Point& y) const {
  if (x.space != space_ || y.space != space_)
    throw SpaceMismatch(name_ + " kernel: point from a foreign ground space");
}

Point Hypergroup::point(std::int64_t index) const {
  validate_index(index);
  Point p;
  p.space = space_;
  p.index = index;
  p.coord = static_cast<double>(index) * grid_step();
  return p;
}

Point Hypergroup::point_at(double x) const {
  const double h = grid_step();
  const auto k = static_cast<std::int64_t>(std::llround(x / h));
  if (std::abs(x - static_cast<double>(k) * h) > h / 2 + 1e-12 * h || k < 0)
    throw GridOverflow(name_ + ": coordinate " + std::to_string(x) +
                       " is not within h/2 of a grid node");
  return point(k);
}

Measure convolve(const Hypergroup& H, const Measure& mu, const Measure& nu) {
  if (mu.space() != H.space() || nu.space() != H.space())
    throw SpaceMismatch("convolve: measures on '" + mu.space() + "'/'" +
                        nu.space() + "' vs ground space '" + H.space() + "'");
  std::map<std::int64_t, double> acc;
  for (const auto& [x, wx] : mu.entries()) {
    for (const auto& [y, wy] : nu.entries()) {
      const double w = wx * wy;
      if (w == 0.0) continue;
      const Measure k = H.kernel(x, y);
      for (const auto& [z, wz] : k.entries()) acc[z.index] += w * wz;
    }
  }
  std::vector<Measure::Entry> entries;
  entries.reserve(acc.size());
  for (const auto& [k, w] : acc) entries.emplace_back(H.point(k), w);
  return Measure::from_entries(H.space(), std::move(entries)).pruned(kPruneRel);
}

Measure exp_series(const Hypergroup& H, const Measure& rho, double t, double eps) {
  if (eps <= 0.0) throw BadTolerance("exp_series: eps must be > 0");
  if (t < 0.0) throw ValidationError("exp_series: t must be >= 0");
  if (!rho.nonnegative())
    throw NotPositiveMeasure("exp_series: rho has negative weights");

  Measure term = Measure::delta(H.identity());
  Measure sum = term;
  const double r = t * rho.tv_norm();
  double term_bound = 1.0;  // (t*||rho||)^n / n!
  for (std::size_t n = 1;; ++n) {
    // remaining tail <= term_bound * sum_{m>=1} (r/(n))^m once r < n
    if (static_cast<double>(n) > r) {
      const double q = r / static_cast<double>(n);
      if (term_bound * q / (1.0 - q) <= eps) break;
    }
    term = convolve(H, term, rho).scaled(t / static_cast<double>(n));
    term_bound *= r / static_cast<double>(n);
    sum = sum.plus(term);
    if (n > 10000)
      throw TruncationError("exp_series: series did not converge");
  }
  return sum;
}

std::function<double(const Point&)> translate_function(
    const HypergroupPtr& H, std::function<double(const Point&)> f, Point x) {
  return [H, f = std::move(f), x = std::move(x)](const Point& y) {
    return integrate(H->kernel(x, y), f);
  };
}

double AxiomReport::max_defect() const {
  return std::max({associativity_defect, identity_defect, commutativity_defect,
                   haar_invariance_defect});
}

bool AxiomReport::passed(double eps_mass) const {
  return max_defect() <= eps_mass * condition_factor;
}

namespace {

// points of `set` with coordinate <= limit (and not the identity for bumps)
std::vector<Point> filter_coord(const std::vector<Point>& set, double limit) {
  std::vector<Point> out;
  for (const auto& p : set)
    if (p.coord <= limit) out.push_back(p);
  return out;
}

}  // namespace

AxiomReport check_axioms(const Hypergroup& H, std::size_t n_samples,
                         std::uint64_t seed) {
  if (n_samples < 1) throw ValidationError("check_axioms: n_samples >= 1");
  AxiomReport rep;
  rep.sample_count = n_samples;
  Rng rng(seed);

  const auto set = H.sample_set();
  const double limit = H.coord_limit();
  const auto pts3 = filter_coord(set, limit / 3.0);
  const auto pts2 = filter_coord(set, limit / 2.0);
  if (pts3.empty() || pts2.empty())
    throw ValidationError("check_axioms: empty sample set");

  const Measure de = Measure::delta(H.identity());
  for (std::size_t s = 0; s < n_samples; ++s) {
    const Point& x = pts3[rng.uniform_index(pts3.size())];
    const Point& y = pts3[rng.uniform_index(pts3.size())];
    const Point& z = pts3[rng.uniform_index(pts3.size())];
    const Measure dx = Measure::delta(x), dy = Measure::delta(y),
                  dz = Measure::delta(z);
    const Measure left = convolve(H, convolve(H, dx, dy), dz);
    const Measure right = convolve(H, dx, convolve(H, dy, dz));
    rep.associativity_defect =
        std::max(rep.associativity_defect, left.minus(right).tv_norm());

    const Point& px = pts2[rng.uniform_index(pts2.size())];
    const Point& py = pts2[rng.uniform_index(pts2.size())];
    const Measure dpx = Measure::delta(px), dpy = Measure::delta(py);
    rep.identity_defect = std::max(
        rep.identity_defect, convolve(H, de, dpx).minus(dpx).tv_norm());
    rep.commutativity_defect =
        std::max(rep.commutativity_defect,
                 convolve(H, dpx, dpy).minus(convolve(H, dpy, dpx)).tv_norm());

    rep.condition_factor = std::max(
        {rep.condition_factor, H.condition_factor(x, y),
         H.condition_factor(y, z), H.condition_factor(px, py)});
  }

  // Haar invariance over a fixed bump family: indicators at a few low
  // coordinates plus a small triangular bump, translated by sampled x.
  std::vector<std::pair<std::function<double(const Point&)>, double>> bumps;
  std::vector<std::int64_t> bump_idx;
  for (double c : {0.5, 1.0, 2.0}) {
    const auto& sup = pts2;
    // nearest sample point to coordinate c
    const Point* best = &sup.front();
    for (const auto& p : sup)
      if (std::abs(p.coord - c) < std::abs(best->coord - c)) best = &p;
    const std::int64_t idx = best->index;
    if (std::find(bump_idx.begin(), bump_idx.end(), idx) != bump_idx.end())
      continue;
    bump_idx.push_back(idx);
    bumps.emplace_back(
        [idx](const Point& p) { return p.index == idx ? 1.0 : 0.0; },
        best->coord);
  }
  {
    const std::int64_t c = bump_idx.empty() ? 1 : bump_idx.back();
    bumps.emplace_back(
        [c](const Point& p) {
          const auto d = std::abs(p.index - c);
          return d <= 2 ? 1.0 - static_cast<double>(d) / 3.0 : 0.0;
        },
        static_cast<double>(c) * H.grid_step() + 2.0 * H.grid_step());
  }

  const std::size_t n_haar_x = std::min<std::size_t>(6, n_samples);
  for (const auto& [f, fmax_coord] : bumps) {
    double omega_f = 0.0;
    for (const auto& p : set)
      if (double v = f(p); v != 0.0) omega_f += H.haar(p) * v;
    for (std::size_t s = 0; s < n_haar_x; ++s) {
      const Point& x = pts3[rng.uniform_index(pts3.size())];
      double omega_fx = 0.0;
      for (const auto& p : set) {
        // supp K(x,p) only reaches the bump when |x-p| is small enough
        if (p.coord > limit - x.coord) break;
        if (p.coord < x.coord - fmax_coord - H.grid_step() ||
            p.coord > x.coord + fmax_coord + H.grid_step())
          continue;
        const double fx = integrate(H.kernel(x, p), f);
        if (fx != 0.0) omega_fx += H.haar(p) * fx;
      }
      rep.haar_invariance_defect =
          std::max(rep.haar_invariance_defect, std::abs(omega_fx - omega_f));
    }
  }
  return rep;
}

}  // namespace hyperconv

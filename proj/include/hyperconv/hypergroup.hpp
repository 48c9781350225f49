#ifndef HYPERCONV_HYPERGROUP_HPP
#define HYPERCONV_HYPERGROUP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hyperconv/measure.hpp"

namespace hyperconv {

enum class Ground { Discrete, Grid, Finite };

/// A commutative hypergroup: identity, involution, structure kernel
/// K(x,y) = delta_x * delta_y (a probability Measure with finite support),
/// and Haar weights.
///
/// `space()` tags the ground set (points and measures carry it); `name()`
/// identifies the convolution structure. Deformations share the base's
/// ground space, and the two shipped grid models share one grid, so measures
/// move freely between structures on the same ground. Values are immutable
/// and safe to share across threads; kernel evaluation is pure.
class Hypergroup {
 public:
  virtual ~Hypergroup() = default;

  const std::string& space() const { return space_; }
  const std::string& name() const { return name_; }
  Ground ground() const { return ground_; }
  /// Mass/defect tolerance of the model (1e-9 discrete, 1e-5 grid).
  double eps_mass() const { return eps_mass_; }

  Point identity() const { return point(identity_index_); }
  virtual Point involution(const Point& x) const { return x; }
  virtual Measure kernel(const Point& x, const Point& y) const = 0;
  virtual double haar(const Point& x) const = 0;

  /// Point set that sampling operations draw from (grid: all nodes,
  /// discrete: 0..sample_limit, finite: all cosets). Sorted by index.
  virtual std::vector<Point> sample_set() const = 0;

  /// Largest coordinate representable (kernel arguments must satisfy
  /// x + y <= coord_limit on grid models). +inf for discrete models.
  virtual double coord_limit() const;

  /// For deformed models: max/min of alpha0 over the kernel support of
  /// (x,y); 1 for base models. Axiom tolerances scale with this.
  virtual double condition_factor(const Point& x, const Point& y) const;

  /// Point from a ground-space index (validated).
  Point point(std::int64_t index) const;
  /// Point from a real coordinate; grid models snap to the nearest node and
  /// reject coordinates farther than h/2 from any node.
  Point point_at(double x) const;
  /// Grid step (1 for discrete/finite models).
  virtual double grid_step() const { return 1.0; }

 protected:
  Hypergroup(std::string space, std::string name, Ground ground,
             double eps_mass, std::int64_t identity_index)
      : space_(std::move(space)),
        name_(std::move(name)),
        ground_(ground),
        eps_mass_(eps_mass),
        identity_index_(identity_index) {}

  virtual void validate_index(std::int64_t index) const;
  void check_space(const Point& x, const Point& y) const;

  std::string space_;
  std::string name_;
  Ground ground_;
  double eps_mass_;
  std::int64_t identity_index_;
};

using HypergroupPtr = std::shared_ptr<const Hypergroup>;

/// Bilinear convolution: sum_x sum_y mu({x}) nu({y}) K_H(x,y). Entries below
/// 1e-15 * tv_norm are pruned afterwards.
Measure convolve(const Hypergroup& H, const Measure& mu, const Measure& nu);

/// Truncated exponential series exp(t*rho) = sum_n t^n rho^{*n} / n!, with N
/// chosen so the dropped tail has tv_norm <= eps. Returns the unnormalized
/// series (mass e^{t*mass(rho)} for rho >= 0).
Measure exp_series(const Hypergroup& H, const Measure& rho, double t, double eps);

/// Translate f_x(y) = integral of f against K(x,y).
std::function<double(const Point&)> translate_function(
    const HypergroupPtr& H, std::function<double(const Point&)> f, Point x);

/// Numerical certificate for the Def. 2.1 axioms: each defect is a maximum
/// of tv norms (or |omega(f)-omega(f_x)| for Haar invariance) over sampled
/// points. PASS means every defect <= eps_mass * condition_factor.
struct AxiomReport {
  double associativity_defect = 0.0;
  double identity_defect = 0.0;
  double commutativity_defect = 0.0;
  double haar_invariance_defect = 0.0;
  std::size_t sample_count = 0;
  double condition_factor = 1.0;

  double max_defect() const;
  bool passed(double eps_mass) const;
};

AxiomReport check_axioms(const Hypergroup& H, std::size_t n_samples,
                         std::uint64_t seed);

}  // namespace hyperconv

#endif

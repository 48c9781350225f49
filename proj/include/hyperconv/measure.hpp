#ifndef HYPERCONV_MEASURE_HPP
#define HYPERCONV_MEASURE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hyperconv {

/// A point of a hypergroup's ground space, tagged by the owning space id.
///
/// Kernel-bearing models are indexed: `index` is n for the discrete models,
/// the grid node number for grid models, a coset index for finite models.
/// `coord` caches the real coordinate (n, index*h, or index). Chamber points
/// carry a raw vector instead and have index = -1.
struct Point {
  std::string space;
  std::int64_t index = 0;
  double coord = 0.0;
  std::vector<double> vec;

  bool is_vector() const { return index < 0; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.space == b.space && a.index == b.index && a.vec == b.vec;
  }
  /// Orders by index, then lexicographically by vec (vector points only).
  friend bool operator<(const Point& a, const Point& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.vec < b.vec;
  }
};

/// Finitely supported signed measure: sorted (Point, weight) entries on one
/// space, duplicates merged at construction. Immutable value type.
class Measure {
 public:
  using Entry = std::pair<Point, double>;

  Measure() = default;
  explicit Measure(std::string space) : space_(std::move(space)) {}

  /// Unit point mass.
  static Measure delta(const Point& p);

  /// Builds from arbitrary entries; merges duplicate points, drops exact zeros.
  /// Throws SpaceMismatch if entries disagree about the space.
  static Measure from_entries(std::string space, std::vector<Entry> entries);

  const std::string& space() const { return space_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  double tv_norm() const;
  /// Signed total mass.
  double mass() const;
  /// Weight at p (0 if p is not in the support).
  double at(const Point& p) const;
  bool is_probability(double eps_mass) const;
  bool nonnegative() const;

  Measure scaled(double a) const;
  Measure plus(const Measure& other) const;
  Measure minus(const Measure& other) const;
  /// Pointwise reweighting g·mu (used for alpha0·mu throughout).
  Measure weighted(const std::function<double(const Point&)>& g) const;
  /// Drops entries with |weight| < rel_threshold * tv_norm().
  Measure pruned(double rel_threshold) const;

 private:
  std::string space_;
  std::vector<Entry> entries_;  // sorted by Point order
};

/// Total variation norm (sum of |weights|).
double tv_norm(const Measure& mu);

/// Integral of f against mu.
double integrate(const Measure& mu, const std::function<double(const Point&)>& f);

}  // namespace hyperconv

#endif

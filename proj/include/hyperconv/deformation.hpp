#ifndef HYPERCONV_DEFORMATION_HPP
#define HYPERCONV_DEFORMATION_HPP

#include <optional>
#include <utility>

#include "hyperconv/hypergroup.hpp"
#include "hyperconv/semicharacter.hpp"

namespace hyperconv {

/// Deformation (X,•) of (X,*) w.r.t. a positive semicharacter alpha0:
///   mu • nu = alpha0((alpha0^{-1} mu) * (alpha0^{-1} nu)),
/// so kernel_•(x,y) = (alpha0 · kernel(x,y)) / (alpha0(x) alpha0(y)).
/// Identity and involution are those of the base, the ground space is
/// shared, and the Haar measure is alpha0^2 · haar.
class DeformedHypergroup final : public Hypergroup {
 public:
  DeformedHypergroup(HypergroupPtr base, Semicharacter alpha0);

  const HypergroupPtr& base() const { return base_; }
  const Semicharacter& alpha0() const { return alpha0_; }

  Point involution(const Point& x) const override;
  Measure kernel(const Point& x, const Point& y) const override;
  double haar(const Point& x) const override;
  std::vector<Point> sample_set() const override;
  double coord_limit() const override;
  double grid_step() const override;
  /// max/min of alpha0 over supp kernel(x,y) and {x,y}.
  double condition_factor(const Point& x, const Point& y) const override;

 private:
  void validate_index(std::int64_t index) const override;

  HypergroupPtr base_;
  Semicharacter alpha0_;
};

/// Builds the deformation after checking alpha0 is positive and certified:
/// throws NotPositive / UncertifiedSemicharacter (the certification gate
/// defaults to the model's eps_mass; pass max_defect to widen it).
std::shared_ptr<const DeformedHypergroup> deform(
    HypergroupPtr H, const Semicharacter& alpha0,
    std::optional<double> max_defect = std::nullopt);

/// R_{alpha0}: mu -> alpha0 mu / (int alpha0 dmu), a probability measure of
/// the deformed structure. Throws NotPositiveMeasure / ZeroMeasure.
Measure r_transform(const Semicharacter& alpha0, const Measure& mu);

/// Remark 2.4 both ways: (deform(deform(H, a0), b0), deform(H, a0*b0)) for
/// equality testing. beta0 must be positive on the deformed structure; it
/// and the product alpha0*beta0 are certified here with the given sampling.
std::pair<HypergroupPtr, HypergroupPtr> transitivity_compose(
    HypergroupPtr H, const Semicharacter& alpha0, const Semicharacter& beta0,
    std::size_t n_samples, std::uint64_t seed,
    std::optional<double> max_defect = std::nullopt);

}  // namespace hyperconv

#endif

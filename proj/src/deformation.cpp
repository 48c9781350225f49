#include "hyperconv/deformation.hpp"

#include <algorithm>
#include <cmath>

#include "hyperconv/errors.hpp"

namespace hyperconv {

DeformedHypergroup::DeformedHypergroup(HypergroupPtr base, Semicharacter alpha0)
    : Hypergroup(base->space(), base->name() + "|deform[" + alpha0.name + "]",
                 base->ground(), base->eps_mass(),
                 base->identity().index),
      base_(std::move(base)),
      alpha0_(std::move(alpha0)) {}

Point DeformedHypergroup::involution(const Point& x) const {
  return base_->involution(x);
}

Measure DeformedHypergroup::kernel(const Point& x, const Point& y) const {
  const double denom = alpha0_(x) * alpha0_(y);
  return base_->kernel(x, y).weighted(
      [&](const Point& z) { return alpha0_(z) / denom; });
}

double DeformedHypergroup::haar(const Point& x) const {
  const double a = alpha0_(x);
  return a * a * base_->haar(x);
}

std::vector<Point> DeformedHypergroup::sample_set() const {
  return base_->sample_set();
}

double DeformedHypergroup::coord_limit() const { return base_->coord_limit(); }

double DeformedHypergroup::grid_step() const { return base_->grid_step(); }

double DeformedHypergroup::condition_factor(const Point& x,
                                            const Point& y) const {
  double lo = std::min(alpha0_(x), alpha0_(y));
  double hi = std::max(alpha0_(x), alpha0_(y));
  const Measure k = base_->kernel(x, y);
  for (const auto& [z, w] : k.entries()) {
    const double a = alpha0_(z);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return hi / lo;
}

void DeformedHypergroup::validate_index(std::int64_t index) const {
  (void)base_->point(index);  // ground-space rules live on the base
}

std::shared_ptr<const DeformedHypergroup> deform(
    HypergroupPtr H, const Semicharacter& alpha0,
    std::optional<double> max_defect) {
  if (alpha0.space != H->space())
    throw SpaceMismatch("deform: alpha0 on '" + alpha0.space +
                        "' vs ground space '" + H->space() + "'");
  if (!alpha0.positive)
    throw NotPositive("deform: alpha0 must be a positive semicharacter");
  const double gate = max_defect.value_or(H->eps_mass());
  if (!alpha0.mult_defect.has_value() || *alpha0.mult_defect > gate)
    throw UncertifiedSemicharacter(
        "deform: alpha0 '" + alpha0.name + "' is not certified at " +
        std::to_string(gate) +
        (alpha0.mult_defect
             ? " (defect " + std::to_string(*alpha0.mult_defect) + ")"
             : " (never certified)"));
  return std::make_shared<DeformedHypergroup>(std::move(H), alpha0);
}

Measure r_transform(const Semicharacter& alpha0, const Measure& mu) {
  if (alpha0.space != mu.space())
    throw SpaceMismatch("r_transform: alpha0 on '" + alpha0.space +
                        "' vs measure on '" + mu.space() + "'");
  if (!mu.nonnegative())
    throw NotPositiveMeasure("r_transform: mu has negative weights");
  if (mu.empty()) throw ZeroMeasure("r_transform: mu is the zero measure");
  const Measure weighted = mu.weighted(alpha0.eval);
  const double total = weighted.mass();
  if (!(total > 0.0))
    throw ZeroMeasure("r_transform: int alpha0 dmu vanishes");
  return weighted.scaled(1.0 / total);
}

std::pair<HypergroupPtr, HypergroupPtr> transitivity_compose(
    HypergroupPtr H, const Semicharacter& alpha0, const Semicharacter& beta0,
    std::size_t n_samples, std::uint64_t seed,
    std::optional<double> max_defect) {
  auto deformed = deform(H, alpha0, max_defect);
  auto beta0c = certify(*deformed, beta0, n_samples, seed);
  auto twice = deform(deformed, beta0c, max_defect);
  auto product = certify(*H, sc_product(alpha0, beta0), n_samples, seed);
  auto direct = deform(H, product, max_defect);
  return {twice, direct};
}

}  // namespace hyperconv

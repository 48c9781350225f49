#include "hyperconv/measure.hpp"

#include <algorithm>
#include <cmath>

#include "hyperconv/errors.hpp"

namespace hyperconv {

Measure Measure::delta(const Point& p) {
  Measure m(p.space);
  m.entries_.emplace_back(p, 1.0);
  return m;
}

Measure Measure::from_entries(std::string space, std::vector<Entry> entries) {
  for (const auto& [p, w] : entries) {
    if (p.space != space)
      throw SpaceMismatch("measure entry on space '" + p.space +
                          "', expected '" + space + "'");
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Measure m(std::move(space));
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == e.first)
      m.entries_.back().second += e.second;
    else
      m.entries_.push_back(std::move(e));
  }
  std::erase_if(m.entries_, [](const Entry& e) { return e.second == 0.0; });
  return m;
}

double Measure::tv_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::abs(e.second);
  return s;
}

double Measure::mass() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.second;
  return s;
}

double Measure::at(const Point& p) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), p,
      [](const Entry& e, const Point& q) { return e.first < q; });
  if (it != entries_.end() && it->first == p) return it->second;
  return 0.0;
}

bool Measure::is_probability(double eps_mass) const {
  if (!nonnegative()) return false;
  return std::abs(mass() - 1.0) <= eps_mass;
}

bool Measure::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second >= 0.0; });
}

Measure Measure::scaled(double a) const {
  Measure m(space_);
  m.entries_.reserve(entries_.size());
  for (const auto& [p, w] : entries_)
    if (a * w != 0.0) m.entries_.emplace_back(p, a * w);
  return m;
}

Measure Measure::plus(const Measure& other) const {
  if (!space_.empty() && !other.space_.empty() && space_ != other.space_)
    throw SpaceMismatch("adding measures on '" + space_ + "' and '" +
                        other.space_ + "'");
  Measure m(space_.empty() ? other.space_ : space_);
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      m.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      m.entries_.push_back(*b++);
    } else {
      const double w = a->second + b->second;
      if (w != 0.0) m.entries_.emplace_back(a->first, w);
      ++a;
      ++b;
    }
  }
  return m;
}

Measure Measure::minus(const Measure& other) const {
  return plus(other.scaled(-1.0));
}

Measure Measure::weighted(const std::function<double(const Point&)>& g) const {
  Measure m(space_);
  m.entries_.reserve(entries_.size());
  for (const auto& [p, w] : entries_) {
    const double gw = g(p) * w;
    if (gw != 0.0) m.entries_.emplace_back(p, gw);
  }
  return m;
}

Measure Measure::pruned(double rel_threshold) const {
  const double cut = rel_threshold * tv_norm();
  Measure m(space_);
  for (const auto& e : entries_)
    if (std::abs(e.second) >= cut) m.entries_.push_back(e);
  return m;
}

double tv_norm(const Measure& mu) { return mu.tv_norm(); }

double integrate(const Measure& mu, const std::function<double(const Point&)>& f) {
  double s = 0.0;
  for (const auto& [p, w] : mu.entries()) s += f(p) * w;
  return s;
}

}  // namespace hyperconv

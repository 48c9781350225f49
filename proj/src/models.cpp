#include "hyperconv/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <cstdio>
#include <set>

#include "hyperconv/errors.hpp"

namespace hyperconv {

namespace {

class ChebyshevHypergroup final : public Hypergroup {
 public:
  explicit ChebyshevHypergroup(std::int64_t sample_limit)
      : Hypergroup("N0", "chebyshev", Ground::Discrete, 1e-9, 0),
        sample_limit_(sample_limit) {}

  Measure kernel(const Point& x, const Point& y) const override {
    check_space(x, y);
    const std::int64_t m = x.index, n = y.index;
    if (m == 0) return Measure::delta(y);
    if (n == 0) return Measure::delta(x);
    // product formula cos(m t) cos(n t) = 1/2 cos((m-n)t) + 1/2 cos((m+n)t)
    return Measure::from_entries(
        space_, {{point(std::abs(m - n)), 0.5}, {point(m + n), 0.5}});
  }

  double haar(const Point& x) const override {
    return x.index == 0 ? 1.0 : 2.0;
  }

  std::vector<Point> sample_set() const override {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(sample_limit_) + 1);
    for (std::int64_t k = 0; k <= sample_limit_; ++k) out.push_back(point(k));
    return out;
  }

 private:
  std::int64_t sample_limit_;
};

// ---------------------------------------------------------------------------

class FiniteDoubleCoset final : public Hypergroup {
 public:
  FiniteDoubleCoset(std::string space, std::string name,
                    std::vector<std::vector<int>> table,
                    std::vector<int> subgroup);

  Point involution(const Point& x) const override {
    return point(coset_of_[inverse_[coset_repr_[static_cast<std::size_t>(
        x.index)]]]);
  }

  Measure kernel(const Point& x, const Point& y) const override {
    check_space(x, y);
    const auto& w =
        kernel_[static_cast<std::size_t>(x.index)][static_cast<std::size_t>(y.index)];
    std::vector<Measure::Entry> es;
    for (std::size_t c = 0; c < w.size(); ++c)
      if (w[c] != 0.0) es.emplace_back(point(static_cast<std::int64_t>(c)), w[c]);
    return Measure::from_entries(space_, std::move(es));
  }

  double haar(const Point& x) const override {
    return haar_[static_cast<std::size_t>(x.index)];
  }

  std::vector<Point> sample_set() const override {
    std::vector<Point> out;
    for (std::size_t c = 0; c < haar_.size(); ++c)
      out.push_back(point(static_cast<std::int64_t>(c)));
    return out;
  }

 private:
  void validate_index(std::int64_t index) const override {
    if (index < 0 || index >= static_cast<std::int64_t>(haar_.size()))
      throw ValidationError(name_ + ": coset index out of range");
  }

  std::vector<int> coset_of_;               // group element -> coset index
  std::vector<int> coset_repr_;             // coset index -> representative
  std::vector<int> inverse_;                // group inverses
  std::vector<double> haar_;                // |coset| / |K|
  std::vector<std::vector<std::vector<double>>> kernel_;  // [cx][cy][cz]
};

FiniteDoubleCoset::FiniteDoubleCoset(std::string space, std::string name,
                                     std::vector<std::vector<int>> table,
                                     std::vector<int> subgroup)
    : Hypergroup(std::move(space), std::move(name), Ground::Finite, 1e-9, 0) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw BadDescriptor("double coset: empty group table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw BadDescriptor("double coset: table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw BadDescriptor("double coset: bad table entry");
  }
  auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  // identity: the unique e with e*a = a*e = a
  int e = -1;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = mul(a, b) == b && mul(b, a) == b;
    if (ok) { e = a; break; }
  }
  if (e < 0) throw BadDescriptor("double coset: table has no identity");

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == e) inverse_[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw BadDescriptor("double coset: element without inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw BadDescriptor("double coset: table is not associative");

  if (subgroup.empty()) throw BadDescriptor("double coset: empty subgroup");
  std::set<int> K(subgroup.begin(), subgroup.end());
  for (int k : K)
    if (k < 0 || k >= n) throw BadDescriptor("double coset: subgroup index out of range");
  if (!K.count(e)) throw BadDescriptor("double coset: subgroup misses identity");
  for (int a : K)
    for (int b : K)
      if (!K.count(mul(a, b)))
        throw BadDescriptor("double coset: subgroup not closed");

  // double cosets KxK
  coset_of_.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> cosets;
  for (int g = 0; g < n; ++g) {
    if (coset_of_[static_cast<std::size_t>(g)] >= 0) continue;
    std::vector<int> coset;
    for (int k1 : K)
      for (int k2 : K) {
        const int x = mul(mul(k1, g), k2);
        if (coset_of_[static_cast<std::size_t>(x)] < 0) {
          coset_of_[static_cast<std::size_t>(x)] =
              static_cast<int>(cosets.size());
          coset.push_back(x);
        }
      }
    cosets.push_back(std::move(coset));
  }
  // identity coset first
  const int ec = coset_of_[static_cast<std::size_t>(e)];
  if (ec != 0) {
    std::swap(cosets[0], cosets[static_cast<std::size_t>(ec)]);
    for (auto& c : coset_of_) {
      if (c == 0) c = ec;
      else if (c == ec) c = 0;
    }
  }
  const std::size_t m = cosets.size();
  coset_repr_.resize(m);
  haar_.resize(m);
  for (std::size_t c = 0; c < m; ++c) {
    coset_repr_[c] = cosets[c].front();
    haar_[c] = static_cast<double>(cosets[c].size()) /
               static_cast<double>(K.size());
  }

  // kernel: pushforward of (uniform on KxK) * (uniform on KyK)
  kernel_.assign(m, std::vector<std::vector<double>>(
                        m, std::vector<double>(m, 0.0)));
  for (std::size_t cx = 0; cx < m; ++cx)
    for (std::size_t cy = 0; cy < m; ++cy) {
      const double w =
          1.0 / (static_cast<double>(cosets[cx].size()) *
                 static_cast<double>(cosets[cy].size()));
      for (int a : cosets[cx])
        for (int b : cosets[cy])
          kernel_[cx][cy][static_cast<std::size_t>(
              coset_of_[static_cast<std::size_t>(mul(a, b))])] += w;
    }

  for (std::size_t cx = 0; cx < m; ++cx)
    for (std::size_t cy = 0; cy < cx; ++cy)
      for (std::size_t cz = 0; cz < m; ++cz)
        if (std::abs(kernel_[cx][cy][cz] - kernel_[cy][cx][cz]) > 1e-12)
          throw NonCommutative(name_ + ": G//K is not commutative");
}

// ---------------------------------------------------------------------------

// Grid hypergroup on {0, h, ..., N h}. Kernel weights come from exact cell
// integrals of the density on [|x-y|, x+y]; the two endpoint partial cells
// are split across the adjacent nodes so their first moment is exact.
class GridHypergroup : public Hypergroup {
 public:
  GridHypergroup(std::string name, double h, double x_max)
      : Hypergroup(grid_space_tag(h, x_max), std::move(name), Ground::Grid,
                   1e-5, 0),
        h_(h) {
    if (h <= 0 || x_max <= 0 || x_max > 100.0)
      throw BadDescriptor(name_ + ": need 0 < h and 0 < x_max <= 100");
    n_ = static_cast<std::int64_t>(std::llround(x_max / h));
    if (n_ < 4) throw BadDescriptor(name_ + ": grid too coarse");
    x_max_ = static_cast<double>(n_) * h;
  }

  static std::string grid_space_tag(double h, double x_max) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "grid:h=%.17g:xmax=%.17g", h, x_max);
    return buf;
  }

  double grid_step() const override { return h_; }
  double coord_limit() const override { return x_max_; }

  Measure kernel(const Point& x, const Point& y) const override {
    check_space(x, y);
    const std::int64_t i = x.index, j = y.index;
    if (i == 0) return Measure::delta(y);
    if (j == 0) return Measure::delta(x);
    const std::int64_t ka = std::abs(i - j), kb = i + j;
    if (kb > n_)
      throw GridOverflow(name_ + ": kernel support exceeds X_max (x+y = " +
                         std::to_string(static_cast<double>(kb) * h_) + ")");
    const double xx = x.coord, yy = y.coord;
    const double a = static_cast<double>(ka) * h_;
    const double b = static_cast<double>(kb) * h_;
    std::vector<double> w(static_cast<std::size_t>(kb - ka + 1), 0.0);
    for (std::int64_t k = ka; k <= kb; ++k) {
      const double zk = static_cast<double>(k) * h_;
      const double lo = std::max(a, zk - h_ / 2);
      const double hi = std::min(b, zk + h_ / 2);
      if (hi <= lo) continue;
      const double m = cell_mass(lo, hi, xx, yy);
      if (m <= 0.0) continue;
      const std::size_t u = static_cast<std::size_t>(k - ka);
      if (k == ka || k == kb) {
        const double cen = cell_centroid(lo, hi, xx, yy, m);
        double off = (cen - zk) / h_;
        off = std::clamp(off, -1.0, 1.0);
        if (off >= 0.0 && k < kb) {
          w[u] += m * (1.0 - off);
          w[u + 1] += m * off;
        } else if (off < 0.0 && k > ka) {
          w[u] += m * (1.0 + off);
          w[u - 1] += m * (-off);
        } else {
          w[u] += m;
        }
      } else {
        w[u] += m;
      }
    }
    std::vector<Measure::Entry> es;
    es.reserve(w.size());
    for (std::size_t u = 0; u < w.size(); ++u)
      if (w[u] != 0.0)
        es.emplace_back(point(ka + static_cast<std::int64_t>(u)), w[u]);
    return Measure::from_entries(space_, std::move(es));
  }

  double haar(const Point& x) const override {
    const double zk = x.coord;
    const double lo = std::max(0.0, zk - h_ / 2);
    return haar_cell(lo, zk + h_ / 2);
  }

  std::vector<Point> sample_set() const override {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n_) + 1);
    for (std::int64_t k = 0; k <= n_; ++k) out.push_back(point(k));
    return out;
  }

 protected:
  // exact integral of the kernel density over [lo, hi]
  virtual double cell_mass(double lo, double hi, double x, double y) const = 0;
  // exact density-weighted centroid of [lo, hi]
  virtual double cell_centroid(double lo, double hi, double x, double y,
                               double mass) const = 0;
  // exact integral of the Haar density over [lo, hi]
  virtual double haar_cell(double lo, double hi) const = 0;

  void validate_index(std::int64_t index) const override {
    if (index < 0 || index > n_)
      throw GridOverflow(name_ + ": node index out of range");
  }

  double h_;
  double x_max_ = 0.0;
  std::int64_t n_ = 0;
};

class BesselKingmanHypergroup final : public GridHypergroup {
 public:
  BesselKingmanHypergroup(double h, double x_max)
      : GridHypergroup("bessel_kingman", h, x_max) {}

 protected:
  // density z/(2xy) dz
  double cell_mass(double lo, double hi, double x, double y) const override {
    return (hi - lo) * (hi + lo) / (4.0 * x * y);
  }
  double cell_centroid(double lo, double hi, double x, double y,
                       double mass) const override {
    const double zmom = (hi - lo) * (hi * hi + hi * lo + lo * lo) / (6.0 * x * y);
    return zmom / mass;
  }
  double haar_cell(double lo, double hi) const override {
    return (hi * hi * hi - lo * lo * lo) / 3.0;
  }
};

class HyperbolicHypergroup final : public GridHypergroup {
 public:
  HyperbolicHypergroup(double h, double x_max)
      : GridHypergroup("hyperbolic", h, x_max) {}

 protected:
  // density sinh z/(2 sinh x sinh y) dz
  double cell_mass(double lo, double hi, double x, double y) const override {
    // cosh(hi) - cosh(lo) = 2 sinh((hi-lo)/2) sinh((hi+lo)/2), cancellation-free
    return std::sinh((hi - lo) / 2) * std::sinh((hi + lo) / 2) /
           (std::sinh(x) * std::sinh(y));
  }
  double cell_centroid(double lo, double hi, double x, double y,
                       double mass) const override {
    const double zmom = (hi * std::cosh(hi) - std::sinh(hi) -
                         (lo * std::cosh(lo) - std::sinh(lo))) /
                        (2.0 * std::sinh(x) * std::sinh(y));
    const double c = zmom / mass;
    return std::clamp(c, lo, hi);
  }
  double haar_cell(double lo, double hi) const override {
    // int sinh^2 = sinh(2z)/4 - z/2
    return (std::sinh(2 * hi) - std::sinh(2 * lo)) / 4.0 - (hi - lo) / 2.0;
  }
};

}  // namespace

HypergroupPtr chebyshev_hypergroup(std::int64_t sample_limit) {
  if (sample_limit < 1)
    throw BadDescriptor("chebyshev: sample_limit must be >= 1");
  return std::make_shared<ChebyshevHypergroup>(sample_limit);
}

HypergroupPtr finite_double_coset(const std::vector<std::vector<int>>& table,
                                  const std::vector<int>& subgroup) {
  // content fingerprint keeps ground spaces of different groups distinct
  std::string blob;
  for (const auto& row : table)
    for (int v : row) blob += std::to_string(v) + ",";
  blob += "|";
  for (int k : subgroup) blob += std::to_string(k) + ",";
  char buf[64];
  std::snprintf(buf, sizeof buf, "coset:%zu:%016zx", table.size(),
                std::hash<std::string>{}(blob));
  return std::make_shared<FiniteDoubleCoset>(buf, "double_coset", table,
                                             subgroup);
}

HypergroupPtr bessel_kingman(double h, double x_max) {
  return std::make_shared<BesselKingmanHypergroup>(h, x_max);
}

HypergroupPtr hyperbolic(double h, double x_max) {
  return std::make_shared<HyperbolicHypergroup>(h, x_max);
}

}  // namespace hyperconv

#include "hyperconv/orbit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperconv/errors.hpp"
#include "hyperconv/rng.hpp"

namespace hyperconv {

bool WeylChamberData::chamber_contains(std::span<const double> x,
                                       double tol) const {
  if (static_cast<int>(x.size()) != d) return false;
  switch (family) {
    case 'A': {
      for (int i = 0; i + 1 < d; ++i)
        if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i + 1)] - tol) return false;
      const double s = std::accumulate(x.begin(), x.end(), 0.0);
      return std::abs(s) <= tol * static_cast<double>(d);
    }
    case 'B':
    case 'C': {
      for (int i = 0; i + 1 < d; ++i)
        if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i + 1)] - tol) return false;
      return x[static_cast<std::size_t>(d - 1)] >= -tol;
    }
    case 'D': {
      for (int i = 0; i + 2 < d; ++i)
        if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i + 1)] - tol) return false;
      return x[static_cast<std::size_t>(d - 2)] >= std::abs(x[static_cast<std::size_t>(d - 1)]) - tol;
    }
    default:
      return false;
  }
}

bool WeylChamberData::minus_rho_in_orbit(double tol) const {
  std::vector<double> m(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) m[i] = -rho[i];
  auto close = [&](const std::vector<double>& a) {
    for (std::size_t i = 0; i < rho.size(); ++i)
      if (std::abs(a[i] - rho[i]) > tol) return false;
    return true;
  };
  switch (family) {
    case 'A':
      // W = S_d: sort -rho descending
      std::sort(m.begin(), m.end(), std::greater<>());
      return close(m);
    case 'B':
    case 'C':
      // signed permutations: flip all signs, sort
      for (auto& v : m) v = std::abs(v);
      std::sort(m.begin(), m.end(), std::greater<>());
      return close(m);
    case 'D': {
      // even sign flips: track the flip parity; a zero coordinate absorbs
      // an odd flip
      int flips = 0;
      bool has_zero = false;
      for (auto& v : m) {
        if (v < 0) {
          v = -v;
          ++flips;
        }
        if (std::abs(v) <= tol) has_zero = true;
      }
      std::sort(m.begin(), m.end(), std::greater<>());
      return (flips % 2 == 0 || has_zero) && close(m);
    }
    default:
      return false;
  }
}

WeylChamberData weyl_data(char family, int d) {
  WeylChamberData w;
  w.family = family;
  w.d = d;
  switch (family) {
    case 'A':
      // rho = (d-1, d-3, ..., -d+1)
      if (d < 2) throw BadRank("weyl_data: A needs d >= 2");
      for (int i = 0; i < d; ++i)
        w.rho.push_back(static_cast<double>(d - 1 - 2 * i));
      break;
    case 'B':
      // rho = (2d-1, 2d-3, ..., 1)
      if (d < 2) throw BadRank("weyl_data: B needs d >= 2");
      for (int i = 0; i < d; ++i)
        w.rho.push_back(static_cast<double>(2 * d - 1 - 2 * i));
      break;
    case 'C':
      // sum of the positive roots {2e_i} u {e_i +- e_j}: (2d, 2d-2, ..., 2)
      if (d < 3) throw BadRank("weyl_data: C needs d >= 3");
      for (int i = 0; i < d; ++i)
        w.rho.push_back(static_cast<double>(2 * d - 2 * i));
      break;
    case 'D':
      // rho = (2d-2, 2d-4, ..., 2, 0)
      if (d < 4) throw BadRank("weyl_data: D needs d >= 4");
      for (int i = 0; i < d; ++i)
        w.rho.push_back(static_cast<double>(2 * d - 2 - 2 * i));
      break;
    default:
      throw BadRank("weyl_data: family must be one of A, B, C, D");
  }
  return w;
}

// ---------------------------------------------------------------------------

CompactGroupSampler::CompactGroupSampler(CompactGroup group, int d,
                                         std::uint64_t seed,
                                         std::uint64_t stream)
    : group_(group), d_(d), seed_(seed), stream_(stream) {
  if (d < 2) throw DimensionError("compact group sampler: d >= 2");
}

GroupElement CompactGroupSampler::sample() {
  // one fresh rng per draw keeps (seed, stream) reproducible regardless of
  // how many deviates a matrix consumes
  Rng rng(seed_, (stream_ << 32) ^ counter_++);
  const int d = d_;
  GroupElement out;
  out.d = d;
  out.a.resize(static_cast<std::size_t>(d * d));

  if (group_ == CompactGroup::SO) {
    Eigen::MatrixXd g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = rng.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j)
      if (r(j, j) < 0) q.col(j) = -q.col(j);
    if (q.determinant() < 0) q.col(d - 1) = -q.col(d - 1);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.at(i, j) = q(i, j);
  } else {
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        g(i, j) = std::complex<double>(rng.normal(), rng.normal());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
      const std::complex<double> rjj = r(j, j);
      const double m = std::abs(rjj);
      if (m > 0) q.col(j) *= rjj / m;  // make diag(R) positive: Haar on U(d)
    }
    const std::complex<double> det = q.determinant();
    q.col(d - 1) *= std::conj(det) / std::abs(det);  // push into SU(d)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.at(i, j) = q(i, j);
  }
  return out;
}

namespace {

void check_dims(CompactGroup, std::span<const double> a,
                std::span<const double> b) {
  if (a.size() != b.size() || a.empty())
    throw DimensionError("orbit MC: lambda/x dimension mismatch");
}

// <lambda, k.x>: SO(d) rotates the vector; SU(d) conjugates the diagonal
// traceless Hermitian matrix X, and the pairing is tr(Lambda k X k*) (real).
double pairing(const GroupElement& k, std::span<const double> lambda,
               std::span<const double> x, CompactGroup group) {
  const int d = k.d;
  if (group == CompactGroup::SO) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
      double kxi = 0.0;
      for (int j = 0; j < d; ++j)
        kxi += k.at(i, j).real() * x[static_cast<std::size_t>(j)];
      s += lambda[static_cast<std::size_t>(i)] * kxi;
    }
    return s;
  }
  // tr(Lambda k X k*) = sum_i lambda_i sum_j |k_ij|^2 x_j
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    double row = 0.0;
    for (int j = 0; j < d; ++j)
      row += std::norm(k.at(i, j)) * x[static_cast<std::size_t>(j)];
    s += lambda[static_cast<std::size_t>(i)] * row;
  }
  return s;
}

}  // namespace

McComplex orbit_character_mc(CompactGroup group, std::span<const double> lambda,
                             std::span<const double> x, std::size_t n_samples,
                             std::uint64_t seed) {
  check_dims(group, lambda, x);
  if (n_samples < 2) throw ValidationError("orbit MC: n_samples >= 2");
  CompactGroupSampler sampler(group, static_cast<int>(lambda.size()), seed);
  std::complex<double> sum = 0.0;
  double sum_re2 = 0.0, sum_im2 = 0.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const double t = pairing(sampler.sample(), lambda, x, group);
    const std::complex<double> v(std::cos(t), std::sin(t));
    sum += v;
    sum_re2 += v.real() * v.real();
    sum_im2 += v.imag() * v.imag();
  }
  const auto n = static_cast<double>(n_samples);
  const std::complex<double> mean = sum / n;
  const double var_re = std::max(0.0, sum_re2 / n - mean.real() * mean.real());
  const double var_im = std::max(0.0, sum_im2 / n - mean.imag() * mean.imag());
  return {mean, std::sqrt((var_re + var_im) / (n - 1)), n_samples};
}

McReal positive_orbit_semicharacter_mc(CompactGroup group,
                                       std::span<const double> rho,
                                       std::span<const double> x,
                                       std::size_t n_samples,
                                       std::uint64_t seed) {
  check_dims(group, rho, x);
  if (n_samples < 2) throw ValidationError("orbit MC: n_samples >= 2");
  CompactGroupSampler sampler(group, static_cast<int>(rho.size()), seed);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const double v = std::exp(-pairing(sampler.sample(), rho, x, group));
    sum += v;
    sum2 += v * v;
  }
  const auto n = static_cast<double>(n_samples);
  const double mean = sum / n;
  const double var = std::max(0.0, sum2 / n - mean * mean);
  return {mean, std::sqrt(var / (n - 1)), n_samples};
}

ExpoBoundReport exponentiality_bound_check(
    CompactGroup group, std::span<const double> rho,
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs,
    std::size_t n_samples, std::uint64_t seed) {
  double rho_norm = 0.0;
  for (double v : rho) rho_norm += v * v;
  rho_norm = std::sqrt(rho_norm);

  ExpoBoundReport rep;
  std::uint64_t stream = 0;
  for (const auto& [x, y] : pairs) {
    if (x.size() != rho.size() || y.size() != rho.size())
      throw DimensionError("exponentiality_bound_check: dimension mismatch");
    double dist = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      dist += (x[i] - y[i]) * (x[i] - y[i]);
    if (std::sqrt(dist) > 1.0 + 1e-12)
      throw BadPair("exponentiality_bound_check: ||x-y|| > 1");

    const McReal ex =
        positive_orbit_semicharacter_mc(group, rho, x, n_samples, seed + stream++);
    const McReal ey =
        positive_orbit_semicharacter_mc(group, rho, y, n_samples, seed + stream++);
    PairRatio pr;
    pr.x = x;
    pr.y = y;
    pr.ratio = ex.value / (ey.value * std::exp(rho_norm));
    pr.stderr_ =
        pr.ratio * std::sqrt(std::pow(ex.stderr_ / ex.value, 2) +
                             std::pow(ey.stderr_ / ey.value, 2));
    rep.pairs.push_back(std::move(pr));
    if (rep.pairs.back().ratio > rep.max_ratio) {
      rep.max_ratio = rep.pairs.back().ratio;
      rep.max_ratio_stderr = rep.pairs.back().stderr_;
    }
  }
  return rep;
}

}  // namespace hyperconv

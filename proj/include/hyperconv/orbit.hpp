#ifndef HYPERCONV_ORBIT_HPP
#define HYPERCONV_ORBIT_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperconv {

/// Closed Weyl chamber and rho vector for the A/B/C/D families of chamber
/// hypergroups. rho lies in the closed chamber and -rho is in the Weyl
/// orbit of rho.
struct WeylChamberData {
  char family = 'A';
  int d = 0;
  std::vector<double> rho;

  bool chamber_contains(std::span<const double> x, double tol = 1e-12) const;
  /// Verifies -rho lies in the Weyl orbit of rho (family-specific sorting /
  /// sign-flip normal form).
  bool minus_rho_in_orbit(double tol = 1e-12) const;
};

/// A: d>=2 (vectors with sum 0), B: d>=2, C: d>=3, D: d>=4; BadRank otherwise.
WeylChamberData weyl_data(char family, int d);

enum class CompactGroup { SO, SU };

/// Dense d x d matrix, row-major; real for SO(d) (imaginary parts 0).
struct GroupElement {
  int d = 0;
  std::vector<std::complex<double>> a;

  std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i * d + j)]; }
  const std::complex<double>& at(int i, int j) const { return a[static_cast<std::size_t>(i * d + j)]; }
};

/// Haar sampler: QR of a Gaussian matrix with the R-diagonal phase
/// correction, then a determinant fix-up on the last column.
class CompactGroupSampler {
 public:
  CompactGroupSampler(CompactGroup group, int d, std::uint64_t seed,
                      std::uint64_t stream = 0);
  GroupElement sample();
  CompactGroup group() const { return group_; }
  int dim() const { return d_; }

 private:
  CompactGroup group_;
  int d_;
  std::uint64_t seed_, stream_;
  std::uint64_t counter_ = 0;
};

struct McComplex {
  std::complex<double> value;
  double stderr_;
  std::size_t n = 0;
};

struct McReal {
  double value = 0.0;
  double stderr_ = 0.0;
  std::size_t n = 0;
};

/// Orbit character alpha_lambda(K.x) = int_K e^{i<lambda, k.x>} dk by Monte
/// Carlo. SO(d) acts on vectors; SU(d) acts by conjugation on traceless
/// Hermitian matrices represented by their diagonal (lambda, x are the
/// diagonals; <lambda, k.x> = tr(Lambda k X k*)).
McComplex orbit_character_mc(CompactGroup group, std::span<const double> lambda,
                             std::span<const double> x, std::size_t n_samples,
                             std::uint64_t seed);

/// Positive orbit semicharacter alpha_{i rho}(K.x) = int_K e^{-<rho, k.x>} dk.
McReal positive_orbit_semicharacter_mc(CompactGroup group,
                                       std::span<const double> rho,
                                       std::span<const double> x,
                                       std::size_t n_samples,
                                       std::uint64_t seed);

struct PairRatio {
  std::vector<double> x, y;
  double ratio = 0.0;    // est(x) / (est(y) e^{||rho||})
  double stderr_ = 0.0;  // first-order propagated
};

struct ExpoBoundReport {
  double max_ratio = 0.0;
  double max_ratio_stderr = 0.0;
  std::vector<PairRatio> pairs;
};

/// Exponentiality bound: max over pairs of est(x)/(est(y) e^{||rho||_2}).
/// Every pair must satisfy ||x-y||_2 <= 1 (BadPair otherwise).
ExpoBoundReport exponentiality_bound_check(
    CompactGroup group, std::span<const double> rho,
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs,
    std::size_t n_samples, std::uint64_t seed);

}  // namespace hyperconv

#endif

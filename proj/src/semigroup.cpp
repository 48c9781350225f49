#include "hyperconv/semigroup.hpp"

#include <algorithm>
#include <cmath>

#include "hyperconv/errors.hpp"

namespace hyperconv {

PoissonSemigroup::PoissonSemigroup(HypergroupPtr H, const Measure& jump)
    : H_(std::move(H)) {
  if (jump.space() != H_->space())
    throw SpaceMismatch("poisson: jump on '" + jump.space() +
                        "' vs ground space '" + H_->space() + "'");
  if (!jump.nonnegative())
    throw NotPositiveMeasure("poisson: jump has negative weights");
  const Point e = H_->identity();
  std::vector<Measure::Entry> stripped;
  for (const auto& en : jump.entries())
    if (!(en.first == e)) stripped.push_back(en);
  jump_ = Measure::from_entries(H_->space(), std::move(stripped));
  rate_ = jump_.tv_norm();
}

Measure PoissonSemigroup::eval(double t, double eps) const {
  if (eps <= 0.0) throw BadTolerance("poisson eval: eps must be > 0");
  if (t < 0.0) throw ValidationError("poisson eval: t must be >= 0");
  const double scale = std::exp(-t * rate_);
  return exp_series(*H_, jump_, t, eps / scale).scaled(scale);
}

std::vector<double> levy_limit_estimate(const PoissonSemigroup& S,
                                        const std::function<double(const Point&)>& f,
                                        const std::vector<double>& t_sequence,
                                        double eps) {
  if (f(S.model()->identity()) != 0.0)
    throw BadTestFunction("levy_limit_estimate: f(e) must be 0");
  std::vector<double> out;
  out.reserve(t_sequence.size());
  for (double t : t_sequence) {
    if (t <= 0.0)
      throw ValidationError("levy_limit_estimate: t must be > 0");
    out.push_back(integrate(S.eval(t, eps), f) / t);
  }
  return out;
}

std::pair<PoissonSemigroup, double> deform_semigroup(
    const PoissonSemigroup& S, const Semicharacter& alpha0,
    std::optional<double> max_defect) {
  auto deformed_model = deform(S.model(), alpha0, max_defect);
  // R = int alpha0 d(jump) is finite automatically (finite support); this is
  // condition (3) of the deformation theorem in the Poisson case
  const Measure deformed_jump = S.jump().weighted(alpha0.eval);
  const double c = deformed_jump.mass() - S.rate();
  return {PoissonSemigroup(deformed_model, deformed_jump), c};
}

GeneratorMatrix generator_matrix(const PoissonSemigroup& S,
                                 const std::vector<Point>& basis,
                                 double max_row_leak) {
  if (basis.empty()) throw ValidationError("generator_matrix: empty basis");
  const auto& H = *S.model();
  const std::size_t n = basis.size();
  std::vector<std::int64_t> index_of(n);
  for (std::size_t i = 0; i < n; ++i) index_of[i] = basis[i].index;

  auto col_of = [&](std::int64_t idx) -> std::ptrdiff_t {
    auto it = std::find(index_of.begin(), index_of.end(), idx);
    return it == index_of.end() ? -1 : it - index_of.begin();
  };

  GeneratorMatrix G;
  G.basis = basis;
  G.matrix.assign(n, std::vector<double>(n, 0.0));
  G.row_leak.assign(n, 0.0);

  // A f(x) = sum_y jump({y}) int f dK(y~, x) - rate f(x); involution leaves
  // all shipped models fixed but is applied for correctness
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [y, wy] : S.jump().entries()) {
      const Measure K = H.kernel(H.involution(y), basis[i]);
      for (const auto& [z, wz] : K.entries()) {
        const auto j = col_of(z.index);
        if (j < 0)
          G.row_leak[i] += wy * wz;
        else
          G.matrix[i][static_cast<std::size_t>(j)] += wy * wz;
      }
    }
    G.matrix[i][i] -= S.rate();
    if (G.row_leak[i] > max_row_leak)
      throw TruncationError("generator_matrix: row " + std::to_string(i) +
                            " leaks " + std::to_string(G.row_leak[i]) +
                            " outside the basis");
  }
  return G;
}

std::vector<std::size_t> GeneratorMatrix::interior_rows(double leak_tol) const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < row_leak.size(); ++i)
    if (row_leak[i] <= leak_tol) rows.push_back(i);
  return rows;
}

double generator_deformed_check(const PoissonSemigroup& S,
                                const Semicharacter& alpha0,
                                const std::vector<Point>& basis,
                                std::optional<double> max_defect) {
  auto [dS, c] = deform_semigroup(S, alpha0, max_defect);
  const GeneratorMatrix A = generator_matrix(S, basis);
  GeneratorMatrix Ad = generator_matrix(dS, basis);
  Ad.c = c;

  std::vector<double> a(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) a[i] = alpha0(basis[i]);

  double worst = 0.0;
  for (std::size_t i : Ad.interior_rows()) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      double conj = A.matrix[i][j] * a[j] / a[i];
      if (i == j) conj -= c;
      worst = std::max(worst, std::abs(Ad.matrix[i][j] - conj));
    }
  }
  return worst;
}

}  // namespace hyperconv

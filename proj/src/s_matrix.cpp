#include "liepic/s_matrix.hpp"

#include "liepic/error.hpp"
#include "liepic/verlinde.hpp"

namespace liepic {

BigFloat SMatrix::unitarity_residual() const {
  const std::size_t n = size();
  BigFloat worst(precision_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigComplex acc(precision_);
      for (std::size_t m = 0; m < n; ++m) acc += (*this)(i, m) * (*this)(j, m).conj();
      if (i == j) acc.re -= BigFloat(1L, precision_);
      BigFloat r = acc.max_abs_part();
      if (worst < r) worst = r;
    }
  return worst;
}

BigFloat SMatrix::symmetry_residual() const {
  const std::size_t n = size();
  BigFloat worst(precision_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      BigComplex diff = (*this)(i, j);
      diff -= (*this)(j, i);
      BigFloat r = diff.max_abs_part();
      if (worst < r) worst = r;
    }
  return worst;
}

SMatrix kac_peterson_S(const RootDatum& d, int level, mpfr_prec_t precision, kernels::Backend backend, int jobs,
                       std::int64_t max_weyl_order) {
  const auto weyl = weyl_group(d, max_weyl_order);
  auto labels = enumerate_P_ell(d, level);
  const std::size_t k = d.rank();

  mpz_class scale = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.weight_form()(i, j).get_den_mpz_t());
  Matrix<int> gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = static_cast<int>(mpq_class(d.weight_form()(i, j) * scale).get_num().get_si());

  kernels::AlternatingSumProblem p;
  p.precision = precision;
  p.denominator = scale.get_si() * (level + d.dual_coxeter());
  const WeightVec rho = d.rho();
  for (const auto& lam : labels) {
    std::vector<kernels::AlternatingSumProblem::OrbitPoint> orbit;
    orbit.reserve(weyl.size());
    for (const auto& w : weyl) orbit.push_back({w.apply(lam + rho), w.sign});
    p.orbits.push_back(std::move(orbit));
  }
  for (const auto& mu : labels) {
    const WeightVec shifted = mu + rho;
    WeightVec col(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) col[i] += gram(i, j) * shifted[j];
    p.columns.push_back(std::move(col));
  }

  auto entries = kernels::alternating_sums(p, backend, jobs);

  const BigFloat inv_sqrt_t = BigFloat(1L, precision) / sqrt(BigFloat(t_ell(d, level), precision));
  const std::size_t quarter_turns = d.positive_roots().size() % 4;
  for (auto& z : entries) {
    z.re *= inv_sqrt_t;
    z.im *= inv_sqrt_t;
    switch (quarter_turns) {
      case 0: break;
      case 1: z = BigComplex(-z.im, z.re); break;
      case 2: z = BigComplex(-z.re, -z.im); break;
      case 3: z = BigComplex(z.im, -z.re); break;
    }
  }
  return SMatrix(std::move(labels), std::move(entries), precision);
}

}  // namespace liepic

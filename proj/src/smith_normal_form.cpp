#include <utility>

#include "liepic/error.hpp"
#include "liepic/root_system.hpp"

namespace liepic {

namespace {

void swap_rows(Matrix<mpz_class>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(Matrix<mpz_class>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// Moves the entry of least nonzero absolute value in the trailing block to (t, t).
bool bring_min_pivot(Matrix<mpz_class>& m, std::size_t t) {
  std::size_t bi = 0, bj = 0;
  bool found = false;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j)
      if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(bi, bj)))) {
        bi = i;
        bj = j;
        found = true;
      }
  if (!found) return false;
  swap_rows(m, t, bi);
  swap_cols(m, t, bj);
  return true;
}

}  // namespace

std::vector<mpz_class> smith_invariant_factors(Matrix<mpz_class> m) {
  std::vector<mpz_class> factors;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!bring_min_pivot(m, t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t j = t; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
        dirty = dirty || m(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t i = t; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
        dirty = dirty || m(t, j) != 0;
      }
      if (dirty) {
        bring_min_pivot(m, t);
        continue;
      }
      // Pivot must divide the whole trailing block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            for (std::size_t c = t; c < m.cols(); ++c) m(t, c) += m(i, c);
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    factors.push_back(abs(m(t, t)));
  }
  return factors;
}

mpz_class sublattice_index(const std::vector<WeightVec>& rows, std::size_t rank) {
  Matrix<mpz_class> m(rows.size(), rank);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rank) raise(ErrorKind::Shape, "sublattice generator has wrong length");
    for (std::size_t j = 0; j < rank; ++j) m(i, j) = rows[i][j];
  }
  auto factors = smith_invariant_factors(std::move(m));
  ensure(factors.size() == rank, "generators do not span a full-rank sublattice");
  mpz_class index = 1;
  for (const auto& f : factors) index *= f;
  return index;
}

}  // namespace liepic

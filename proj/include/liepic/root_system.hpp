#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "liepic/lattice.hpp"
#include "liepic/lie_type.hpp"

namespace liepic {

/// Root-system data of a simple type in Bourbaki numbering.
///
/// The invariant form is normalized so that the highest root has square
/// length 2; all form arithmetic is exact. The Cartan matrix follows
/// A_ij = 2<alpha_i, alpha_j> / <alpha_j, alpha_j>, so that row i of A is
/// alpha_i written in the fundamental-weight basis.
///
/// Immutable after construction and safe to share across threads.
class RootDatum {
 public:
  /// Builds and validates every invariant; throws ErrorKind::Consistency if
  /// one fails (that would indicate a table error, not bad input).
  static RootDatum build(const LieType& lie);

  const LieType& lie() const noexcept { return lie_; }
  std::size_t rank() const noexcept { return cartan_.rows(); }
  const Matrix<int>& cartan() const noexcept { return cartan_; }

  /// Sorted by height, then lexicographically; theta is the last entry.
  const std::vector<RootVec>& positive_roots() const noexcept { return positive_roots_; }

  /// Gram matrix <alpha_i, alpha_j> of the simple roots.
  const Matrix<mpq_class>& form() const noexcept { return form_; }
  /// Gram matrix <omega_i, omega_j> of the fundamental weights.
  const Matrix<mpq_class>& weight_form() const noexcept { return weight_form_; }

  const RootVec& theta() const noexcept { return positive_roots_.back(); }
  const std::vector<int>& marks() const noexcept { return marks_; }
  const std::vector<int>& comarks() const noexcept { return comarks_; }
  WeightVec rho() const { return WeightVec(Coords(rank(), 1)); }
  int dual_coxeter() const noexcept { return dual_coxeter_; }
  /// dim g = rank + 2 |positive roots|.
  int dimension() const noexcept { return static_cast<int>(rank() + 2 * positive_roots_.size()); }
  /// #(P / Q_lg): weight lattice modulo the lattice spanned by long roots.
  std::int64_t index_P_over_Qlg() const noexcept { return index_P_over_Qlg_; }

  /// <alpha_i, alpha_i> (2 for long simple roots).
  const mpq_class& simple_root_length(std::size_t i) const { return form_(i, i); }
  bool is_long(const RootVec& root) const;
  WeightVec to_weight_basis(const RootVec& root) const;

  /// Long positive roots in the fundamental-weight basis, one row per root.
  std::vector<WeightVec> long_roots_in_weight_basis() const;

 private:
  RootDatum(LieType lie) : lie_(lie) {}

  LieType lie_;
  Matrix<int> cartan_;
  Matrix<mpq_class> form_;
  Matrix<mpq_class> weight_form_;
  std::vector<RootVec> positive_roots_;
  std::vector<int> marks_;
  std::vector<int> comarks_;
  int dual_coxeter_ = 0;
  std::int64_t index_P_over_Qlg_ = 0;
};

/// Expected |positive roots| for the type, from the classical table.
std::size_t expected_positive_root_count(const LieType& lie);

/// Invariant form. Throws ErrorKind::Shape when a length differs from the rank.
mpq_class pairing(const RootDatum& d, const WeightVec& x, const WeightVec& y);
mpq_class pairing(const RootDatum& d, const WeightVec& x, const RootVec& y);
mpq_class pairing(const RootDatum& d, const RootVec& x, const WeightVec& y);
mpq_class pairing(const RootDatum& d, const RootVec& x, const RootVec& y);

/// Invariant factors (nonzero diagonal entries) of the Smith normal form.
std::vector<mpz_class> smith_invariant_factors(Matrix<mpz_class> m);

/// Index of the sublattice of Z^k spanned by `rows`; throws Consistency if
/// the rows do not span a full-rank sublattice.
mpz_class sublattice_index(const std::vector<WeightVec>& rows, std::size_t rank);

}  // namespace liepic

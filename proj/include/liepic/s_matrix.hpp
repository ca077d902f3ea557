#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "liepic/bigfloat.hpp"
#include "liepic/kernels.hpp"
#include "liepic/lattice.hpp"
#include "liepic/root_system.hpp"

namespace liepic {

struct WeylElement {
  Matrix<int> action;  // acts on fundamental-weight coordinates (column vectors)
  int sign;            // det(w) = (-1)^length

  WeightVec apply(const WeightVec& x) const;
};

inline constexpr std::int64_t kWeylOrderLimit = 10000;

/// Classical order of the Weyl group, or nullopt if it does not fit in 64 bits.
std::optional<std::int64_t> classical_weyl_order(const LieType& lie);

/// Closure of the simple reflections, in breadth-first (length) order starting
/// from the identity. Refuses (ErrorKind::Resource) above `max_order`.
std::vector<WeylElement> weyl_group(const RootDatum& d, std::int64_t max_order = kWeylOrderLimit);

/// Kac-Peterson modular S-matrix at the given level, indexed by P_level.
class SMatrix {
 public:
  SMatrix(std::vector<WeightVec> labels, std::vector<BigComplex> entries, mpfr_prec_t precision)
      : labels_(std::move(labels)), entries_(std::move(entries)), precision_(precision) {}

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<WeightVec>& labels() const noexcept { return labels_; }
  const BigComplex& operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  mpfr_prec_t precision() const noexcept { return precision_; }

  /// max over entries of |(S conj(S)^T - I)_{ij}| (componentwise).
  BigFloat unitarity_residual() const;
  /// max over entries of |S_ij - S_ji| (componentwise).
  BigFloat symmetry_residual() const;

 private:
  std::vector<WeightVec> labels_;
  std::vector<BigComplex> entries_;
  mpfr_prec_t precision_;
};

/// S_{lambda mu} = i^{|Delta+|} t_level^{-1/2} sum_w det(w) exp(-2 pi i <w(lambda+rho), mu+rho> / (level + h)).
SMatrix kac_peterson_S(const RootDatum& d, int level, mpfr_prec_t precision = 256,
                       kernels::Backend backend = kernels::Backend::OpenMP, int jobs = 0,
                       std::int64_t max_weyl_order = kWeylOrderLimit);

}  // namespace liepic

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "liepic/lattice.hpp"
#include "liepic/root_system.hpp"

namespace liepic {

/// Highest weight of an irreducible representation. Throws ErrorKind::Domain
/// if any coordinate is negative.
class IrrepLabel {
 public:
  explicit IrrepLabel(WeightVec highest_weight);
  const WeightVec& highest_weight() const noexcept { return hw_; }

 private:
  WeightVec hw_;
};

/// Weight multiset of a (possibly reducible) representation.
class WeightSystem {
 public:
  using Map = std::map<WeightVec, std::int64_t>;

  WeightSystem() = default;
  explicit WeightSystem(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }
  const Map& entries() const noexcept { return entries_; }
  std::int64_t multiplicity(const WeightVec& w) const;
  /// Adds `mult` copies of `w`; zero multiplicities are not stored.
  void add(const WeightVec& w, std::int64_t mult);
  mpz_class total_multiplicity() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::size_t rank_ = 0;
  Map entries_;
};

/// Weyl dimension formula, exact.
mpz_class weyl_dim(const RootDatum& d, const IrrepLabel& lambda);

/// dim V * <lambda, lambda + 2 rho> / dim g, asserted integral.
mpz_class dynkin_index(const RootDatum& d, const IrrepLabel& lambda);

inline constexpr std::int64_t kFreudenthalDimLimit = 100000;

/// All weights of V(lambda) with multiplicities, by Freudenthal's recursion.
/// Refuses (ErrorKind::Resource) when dim V(lambda) exceeds `dim_limit`.
WeightSystem freudenthal_weights(const RootDatum& d, const IrrepLabel& lambda,
                                 std::int64_t dim_limit = kFreudenthalDimLimit);

/// Index through the trace form: (1/2) sum_mu mult(mu) <mu, theta>^2.
mpz_class index_via_weights(const WeightSystem& ws, const RootDatum& d);

/// Weight system of V (x) W: multiplicities of all pairwise sums.
WeightSystem tensor_weight_system(const WeightSystem& v, const WeightSystem& w);

struct OmegaD {
  std::vector<int> indices;  // 1-based fundamental-weight labels, ascending
  mpz_class m_G;
};

/// Every fundamental weight whose index divides all fundamental indices,
/// together with m_G = lcm(1, comarks). Asserts the two agree.
OmegaD omega_d(const RootDatum& d);

/// lcm(1, a_1^vee, ..., a_k^vee).
mpz_class lcm_of_comarks(const RootDatum& d);

/// Dominant weights with weyl_dim <= max_dim, in lexicographic order.
std::vector<WeightVec> dominant_weights_up_to_dim(const RootDatum& d, const mpz_class& max_dim);

}  // namespace liepic

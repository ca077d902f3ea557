#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "liepic/root_system.hpp"

namespace liepic {

/// Weights (n_0, ..., n_k) of a weighted projective space P(N): positive
/// integers with gcd 1. Construction throws ErrorKind::Domain otherwise.
class WpsWeights {
 public:
  explicit WpsWeights(std::vector<long> weights);

  const std::vector<long>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::string to_string() const;

  friend bool operator==(const WpsWeights&, const WpsWeights&) = default;

 private:
  std::vector<long> weights_;
};

/// s = lcm(n_0, ..., n_k): degree of the ample generator O(s).
mpz_class generator_degree(const WpsWeights& n);

/// Number of monomials z^m with sum m_i n_i = degree (0 for unrepresentable degrees).
mpz_class hilbert_dim(const WpsWeights& n, long degree);

/// Graded dimensions for every degree 0..max_degree.
struct HilbertTable {
  WpsWeights weights;
  std::map<long, mpz_class> values;
};
HilbertTable hilbert_table(const WpsWeights& n, long max_degree);

/// (1, a_1^vee, ..., a_k^vee) in Bourbaki order.
WpsWeights wps_from_group(const RootDatum& d);

}  // namespace liepic

#include "liepic/wps.hpp"

#include <numeric>

#include "liepic/error.hpp"

namespace liepic {

WpsWeights::WpsWeights(std::vector<long> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) raise(ErrorKind::Domain, "weighted projective space needs at least one weight");
  long g = 0;
  for (long w : weights_) {
    if (w <= 0) raise(ErrorKind::Domain, "weights must be positive integers, got " + std::to_string(w));
    g = std::gcd(g, w);
  }
  if (g != 1) raise(ErrorKind::Domain, "weights " + to_string() + " have gcd " + std::to_string(g) + " != 1");
}

std::string WpsWeights::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(weights_[i]);
  }
  return s + ")";
}

mpz_class generator_degree(const WpsWeights& n) {
  mpz_class s = 1;
  for (long w : n.weights()) mpz_lcm_ui(s.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(w));
  return s;
}

namespace {

// Coin-change count of degree-d monomials for every d <= max_degree.
std::vector<mpz_class> graded_dims(const WpsWeights& n, long max_degree) {
  if (max_degree < 0) raise(ErrorKind::Domain, "degree must be >= 0");
  const auto top = static_cast<std::size_t>(max_degree);
  std::vector<mpz_class> ways(top + 1, 0);
  ways[0] = 1;
  for (long w : n.weights()) {
    const auto step = static_cast<std::size_t>(w);
    for (std::size_t d = step; d <= top; ++d) ways[d] += ways[d - step];
  }
  return ways;
}

}  // namespace

mpz_class hilbert_dim(const WpsWeights& n, long degree) { return graded_dims(n, degree).back(); }

HilbertTable hilbert_table(const WpsWeights& n, long max_degree) {
  auto dims = graded_dims(n, max_degree);
  HilbertTable t{n, {}};
  for (std::size_t d = 0; d < dims.size(); ++d) t.values.emplace(static_cast<long>(d), std::move(dims[d]));
  return t;
}

WpsWeights wps_from_group(const RootDatum& d) {
  std::vector<long> w{1};
  for (int c : d.comarks()) w.push_back(c);
  return WpsWeights(std::move(w));
}

}  // namespace liepic

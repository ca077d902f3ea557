#include <set>

#include "liepic/error.hpp"
#include "liepic/s_matrix.hpp"

namespace liepic {

WeightVec WeylElement::apply(const WeightVec& x) const {
  if (x.size() != action.cols()) raise(ErrorKind::Shape, "Weyl element applied to a vector of wrong length");
  WeightVec y(action.rows());
  for (std::size_t i = 0; i < action.rows(); ++i)
    for (std::size_t j = 0; j < action.cols(); ++j) y[i] += action(i, j) * x[j];
  return y;
}

std::optional<std::int64_t> classical_weyl_order(const LieType& lie) {
  const int k = lie.rank();
  auto factorial = [](int n) -> std::optional<std::int64_t> {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i)
      if (__builtin_mul_overflow(f, i, &f)) return std::nullopt;
    return f;
  };
  auto times_pow2 = [](std::optional<std::int64_t> f, int e) -> std::optional<std::int64_t> {
    if (!f || e >= 62) return std::nullopt;
    std::int64_t r;
    if (__builtin_mul_overflow(*f, std::int64_t{1} << e, &r)) return std::nullopt;
    return r;
  };
  switch (lie.series()) {
    case Series::A: return factorial(k + 1);
    case Series::B:
    case Series::C: return times_pow2(factorial(k), k);
    case Series::D: return times_pow2(factorial(k), k - 1);
    case Series::E: return k == 6 ? 51840 : k == 7 ? 2903040 : 696729600;
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return std::nullopt;
}

std::vector<WeylElement> weyl_group(const RootDatum& d, std::int64_t max_order) {
  const auto order = classical_weyl_order(d.lie());
  if (!order || *order > max_order)
    raise(ErrorKind::Resource, "Weyl group of " + d.lie().name() + " has order " +
                                   (order ? std::to_string(*order) : std::string("> 2^63")) +
                                   ", above the limit " + std::to_string(max_order));
  const std::size_t k = d.rank();
  const auto& a = d.cartan();

  // s_i(lambda)_j = lambda_j - lambda_i A_ij
  std::vector<Matrix<int>> reflections;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix<int> s(k, k);
    for (std::size_t j = 0; j < k; ++j) s(j, j) = 1;
    for (std::size_t j = 0; j < k; ++j) s(j, i) -= a(i, j);
    reflections.push_back(std::move(s));
  }

  Matrix<int> identity(k, k);
  for (std::size_t j = 0; j < k; ++j) identity(j, j) = 1;

  // rho has trivial stabilizer, so w -> w(rho) is injective.
  const WeightVec rho = d.rho();
  std::vector<WeylElement> elems{{identity, 1}};
  std::set<WeightVec> seen{rho};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : reflections) {
      Matrix<int> prod(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t m = 0; m < k; ++m) {
          if (s(i, m) == 0) continue;
          for (std::size_t j = 0; j < k; ++j) prod(i, j) += s(i, m) * elems[head].action(m, j);
        }
      WeylElement w{std::move(prod), -elems[head].sign};
      if (seen.insert(w.apply(rho)).second) {
        elems.push_back(std::move(w));
        if (static_cast<std::int64_t>(elems.size()) > max_order)
          raise(ErrorKind::Resource, "Weyl group enumeration exceeded the limit");
      }
    }
  }
  return elems;
}

}  // namespace liepic

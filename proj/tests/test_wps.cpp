#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "liepic/error.hpp"
#include "liepic/rep_theory.hpp"
#include "liepic/verlinde.hpp"
#include "liepic/wps.hpp"

using namespace liepic;

namespace {

long brute_force_count(const std::vector<long>& n, long degree) {
  long count = 0;
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long remaining) {
    if (i == n.size()) {
      count += remaining == 0;
      return;
    }
    for (long m = 0; m * n[i] <= remaining; ++m) walk(i + 1, remaining - m * n[i]);
  };
  walk(0, degree);
  return count;
}

}  // namespace

TEST_SUITE("wps") {
  TEST_CASE("weights are validated") {
    CHECK_THROWS_AS(WpsWeights({2, 4}), Error);
    CHECK_THROWS_AS(WpsWeights({0, 1}), Error);
    CHECK_THROWS_AS(WpsWeights({}), Error);
    CHECK(WpsWeights({1, 2, 3}).to_string() == "(1,2,3)");
  }

  TEST_CASE("generator degree") {
    CHECK(generator_degree(WpsWeights({1, 1})) == 1);
    CHECK(generator_degree(WpsWeights({1, 2, 3})) == 6);
    CHECK(generator_degree(wps_from_group(RootDatum::build(LieType(Series::E, 8)))) == 60);
  }

  TEST_CASE("Hilbert function examples") {
    CHECK(hilbert_dim(WpsWeights({1, 1}), 3) == 4);
    CHECK(hilbert_dim(WpsWeights({1, 1, 2}), 2) == 4);
    CHECK(hilbert_dim(WpsWeights({2, 3}), 1) == 0);
    CHECK_THROWS_AS(hilbert_dim(WpsWeights({2, 3}), -1), Error);
    // P^k: binomial(d + k, k).
    for (long d = 0; d <= 10; ++d) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), d + 4, 4);
      CHECK(hilbert_dim(WpsWeights({1, 1, 1, 1, 1}), d) == b);
    }
    const auto t = hilbert_table(WpsWeights({1, 2}), 5);
    CHECK(t.values.size() == 6);
    CHECK(t.values.at(4) == 3);
  }

  TEST_CASE("Hilbert function against brute-force enumeration") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> len(1, 4), weight(1, 6), deg(0, 30);
    int tried = 0;
    while (tried < 50) {
      std::vector<long> n(len(rng));
      for (auto& x : n) x = weight(rng);
      if (std::accumulate(n.begin(), n.end(), 0L, [](long a, long b) { return std::gcd(a, b); }) != 1) continue;
      ++tried;
      const long d = deg(rng);
      CHECK(hilbert_dim(WpsWeights(n), d) == brute_force_count(n, d));
    }
  }

  TEST_CASE("degree-l part of the genus-1 model counts the alcove") {
    for (const auto& lie : admissible_types(8)) {
      const auto d = RootDatum::build(lie);
      const auto n = wps_from_group(d);
      for (long level = 0; level <= 20; ++level) CHECK(hilbert_dim(n, level) == count_P_ell(d, level));
    }
  }

  TEST_CASE("group models") {
    CHECK(wps_from_group(RootDatum::build(LieType(Series::E, 7))).weights() == std::vector<long>{1, 2, 2, 3, 4, 3, 2, 1});
    CHECK(wps_from_group(RootDatum::build(LieType(Series::G, 2))).weights() == std::vector<long>{1, 1, 2});
    for (const auto& lie : admissible_types(8)) {
      const auto d = RootDatum::build(lie);
      CHECK(generator_degree(wps_from_group(d)) == omega_d(d).m_G);
    }
  }
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "liepic/error.hpp"
#include "liepic/root_system.hpp"

using namespace liepic;

namespace {

// gcd of all maximal minors: the determinantal-divisor route to the lattice index.
mpz_class det(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d.get_num();
}

mpz_class index_by_minors(const std::vector<WeightVec>& rows, std::size_t k) {
  mpz_class g = 0;
  std::vector<bool> pick(rows.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::vector<mpq_class>> m;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (pick[i]) {
        std::vector<mpq_class> r;
        for (std::size_t j = 0; j < k; ++j) r.emplace_back(rows[i][j]);
        m.push_back(r);
      }
    mpz_class minor = det(m);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

}  // namespace

TEST_SUITE("root_system") {
  TEST_CASE("type tokens and admissible ranges") {
    CHECK(LieType::parse("E8") == LieType(Series::E, 8));
    CHECK(LieType::parse("a3").name() == "A3");
    CHECK_THROWS_AS(LieType::parse("B2"), Error);
    try {
      LieType::parse("B2");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidType);
      CHECK(std::string(e.what()).find("C2") != std::string::npos);
    }
    CHECK_THROWS_AS(LieType(Series::E, 9), Error);
    CHECK_THROWS_AS(LieType(Series::F, 3), Error);
    CHECK_THROWS_AS(LieType(Series::A, 0), Error);
    CHECK_THROWS_AS(LieType::parse("H3"), Error);
    CHECK_THROWS_AS(LieType::parse("E8x"), Error);
    CHECK_THROWS_AS(LieType::parse("E"), Error);
  }

  TEST_CASE("small examples") {
    const auto a1 = RootDatum::build(LieType(Series::A, 1));
    CHECK(a1.comarks() == std::vector<int>{1});
    CHECK(a1.dual_coxeter() == 2);
    CHECK(a1.positive_roots().size() == 1);
    CHECK(a1.index_P_over_Qlg() == 2);

    const auto e8 = RootDatum::build(LieType(Series::E, 8));
    CHECK(e8.comarks() == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(e8.index_P_over_Qlg() == 1);
    CHECK(e8.dual_coxeter() == 30);

    const auto g2 = RootDatum::build(LieType(Series::G, 2));
    CHECK(g2.comarks() == std::vector<int>{1, 2});
    CHECK(g2.index_P_over_Qlg() == 3);

    const auto f4 = RootDatum::build(LieType(Series::F, 4));
    CHECK(f4.dual_coxeter() == 9);
    CHECK(pairing(f4, f4.rho(), f4.theta()) + 1 == 9);

    CHECK(RootDatum::build(LieType(Series::B, 3)).index_P_over_Qlg() == 4);
  }

  TEST_CASE("invariants for every admissible type up to rank 8") {
    for (const auto& lie : admissible_types(8)) {
      CAPTURE(lie.name());
      const auto d = RootDatum::build(lie);
      const std::size_t k = d.rank();
      CHECK(d.positive_roots().size() == expected_positive_root_count(lie));
      CHECK(pairing(d, d.theta(), d.theta()) == 2);
      int sum = 0;
      for (std::size_t i = 0; i < k; ++i) {
        CHECK(d.comarks()[i] * 2 == d.marks()[i] * d.simple_root_length(i));
        CHECK(d.comarks()[i] > 0);
        sum += d.comarks()[i];
      }
      CHECK(d.dual_coxeter() == 1 + sum);
      CHECK(pairing(d, d.rho(), d.theta()) + 1 == d.dual_coxeter());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          CHECK(d.form()(i, j) == d.form()(j, i));
          CHECK(d.cartan()(i, j) * d.form()(j, j) == 2 * d.form()(i, j));
        }
      // Every non-simple positive root is a positive root plus a simple root.
      std::set<RootVec> roots(d.positive_roots().begin(), d.positive_roots().end());
      for (const auto& r : d.positive_roots()) {
        if (r.height() == 1) continue;
        bool found = false;
        for (std::size_t i = 0; i < k && !found; ++i) {
          RootVec s = r;
          s[i] -= 1;
          found = roots.contains(s);
        }
        CHECK(found);
      }
      if (lie.simply_laced()) {
        std::vector<std::vector<mpq_class>> c(k, std::vector<mpq_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) c[i][j] = d.cartan()(i, j);
        CHECK(d.index_P_over_Qlg() == det(c));
      }
    }
  }

  TEST_CASE("pairing agrees with the orthonormal model of B3") {
    // B3 in R^3: omega_1 = e1, omega_2 = e1 + e2, omega_3 = (e1 + e2 + e3) / 2.
    const auto d = RootDatum::build(LieType(Series::B, 3));
    const std::vector<std::vector<mpq_class>> e = {
        {1, 0, 0}, {1, 1, 0}, {mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)}};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        mpq_class dot = 0;
        for (std::size_t m = 0; m < 3; ++m) dot += e[i][m] * e[j][m];
        CHECK(pairing(d, WeightVec::fundamental(3, i), WeightVec::fundamental(3, j)) == dot);
      }
    const WeightVec w1 = WeightVec::fundamental(3, 0);
    CHECK(pairing(d, w1, w1 + 2 * d.rho()) == 6);
  }

  TEST_CASE("pairing basics") {
    const auto a1 = RootDatum::build(LieType(Series::A, 1));
    CHECK(pairing(a1, WeightVec{1}, WeightVec{1}) == mpq_class(1, 2));
    const auto a2 = RootDatum::build(LieType(Series::A, 2));
    CHECK_THROWS_AS(pairing(a2, WeightVec{1}, WeightVec{1, 0}), Error);
    // Mixed bases agree after converting the root to weight coordinates.
    for (const auto& lie : admissible_types(5)) {
      const auto d = RootDatum::build(lie);
      for (const auto& a : d.positive_roots())
        for (const auto& b : d.positive_roots()) {
          CHECK(pairing(d, a, b) == pairing(d, d.to_weight_basis(a), d.to_weight_basis(b)));
          CHECK(pairing(d, a, d.to_weight_basis(b)) == pairing(d, a, b));
        }
    }
  }

  TEST_CASE("lattice index agrees with the determinantal-divisor oracle") {
    for (const auto& lie : {LieType(Series::G, 2), LieType(Series::B, 3), LieType(Series::C, 3),
                            LieType(Series::A, 3), LieType(Series::F, 4)}) {
      CAPTURE(lie.name());
      const auto d = RootDatum::build(lie);
      const auto rows = d.long_roots_in_weight_basis();
      CHECK(index_by_minors(rows, d.rank()) == d.index_P_over_Qlg());
    }
  }

  TEST_CASE("lattice index is invariant under reordering generators") {
    std::mt19937 rng(7);
    for (const auto& lie : admissible_types(6)) {
      const auto d = RootDatum::build(lie);
      auto rows = d.long_roots_in_weight_basis();
      for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(rows.begin(), rows.end(), rng);
        CHECK(sublattice_index(rows, d.rank()) == d.index_P_over_Qlg());
      }
    }
  }

  TEST_CASE("smith normal form") {
    Matrix<mpz_class> m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 4;
    m(1, 0) = 6;
    m(1, 1) = 8;
    const auto f = smith_invariant_factors(m);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 2);
    CHECK(f[1] == 4);
    CHECK_THROWS_AS(sublattice_index({WeightVec{1, 1}, WeightVec{2, 2}}, 2), Error);
  }

  TEST_CASE("weight Gram matrix is positive definite") {
    for (const auto& lie : admissible_types(8)) {
      const auto d = RootDatum::build(lie);
      // Random integer vectors have positive norm.
      std::mt19937 rng(11);
      std::uniform_int_distribution<int> coord(-3, 3);
      for (int t = 0; t < 20; ++t) {
        WeightVec v(d.rank());
        for (std::size_t i = 0; i < d.rank(); ++i) v[i] = coord(rng);
        if (std::all_of(v.coords.begin(), v.coords.end(), [](int x) { return x == 0; })) continue;
        CHECK(pairing(d, v, v) > 0);
      }
    }
  }
}

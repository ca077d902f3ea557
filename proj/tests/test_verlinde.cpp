#include <doctest.h>

#include <cmath>

#include "liepic/error.hpp"
#include "liepic/verlinde.hpp"

using namespace liepic;

namespace {

// (2(l+2))^{g-1} sum_j (2 sin((j+1) pi / (l+2)))^{2-2g} in long double.
long double su2_closed_form(int genus, int level) {
  long double sum = 0;
  for (int j = 0; j <= level; ++j)
    sum += std::pow(2.0L * std::sin((j + 1) * 3.14159265358979323846264338327950288L / (level + 2)), 2 - 2 * genus);
  return std::pow(2.0L * (level + 2), genus - 1) * sum;
}

}  // namespace

TEST_SUITE("verlinde") {
  TEST_CASE("alcove enumeration") {
    const auto a1 = RootDatum::build(LieType(Series::A, 1));
    const auto p = enumerate_P_ell(a1, 3);
    REQUIRE(p.size() == 4);
    CHECK(p[0] == WeightVec{0});
    CHECK(p[3] == WeightVec{3});
    const auto e8 = RootDatum::build(LieType(Series::E, 8));
    REQUIRE(enumerate_P_ell(e8, 1).size() == 1);
    CHECK(enumerate_P_ell(e8, 1)[0] == WeightVec(8));
    CHECK(enumerate_P_ell(RootDatum::build(LieType(Series::A, 2)), 2).size() == 6);
    CHECK_THROWS_AS(enumerate_P_ell(a1, -1), Error);
  }

  TEST_CASE("alcove counts") {
    for (const auto& lie : admissible_types(6)) {
      const auto d = RootDatum::build(lie);
      CHECK(count_P_ell(d, 0) == 1);
      for (int level = 0; level <= 6; ++level) {
        const auto pts = enumerate_P_ell(d, level);
        CHECK(count_P_ell(d, level) == static_cast<unsigned long>(pts.size()));
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        CHECK(count_P_ell(d, level) <= count_P_ell(d, level + 1));
      }
    }
    const auto e8 = RootDatum::build(LieType(Series::E, 8));
    CHECK_THROWS_AS(enumerate_P_ell(e8, 300, 1000), Error);
  }

  TEST_CASE("t_l") {
    CHECK(t_ell(RootDatum::build(LieType(Series::A, 1)), 1) == 6);
    CHECK(t_ell(RootDatum::build(LieType(Series::A, 2)), 1) == 48);
    mpz_class e8;
    mpz_ui_pow_ui(e8.get_mpz_t(), 30, 8);
    CHECK(t_ell(RootDatum::build(LieType(Series::E, 8)), 0) == e8);
  }

  TEST_CASE("genus one returns |P_l| exactly") {
    const auto a2 = RootDatum::build(LieType(Series::A, 2));
    const auto r = verlinde_dim(a2, 1, 2);
    CHECK(r.rounded == 6);
    CHECK(r.abs_gap.is_zero());
    CHECK(r.count_P_ell == 6);
  }

  TEST_CASE("SU(2) values against the closed form") {
    const auto a1 = RootDatum::build(LieType(Series::A, 1));
    CHECK(verlinde_dim(a1, 2, 1).rounded == 4);
    CHECK(verlinde_dim(a1, 2, 2).rounded == 10);
    CHECK(verlinde_dim(a1, 3, 1).rounded == 8);
    for (int g = 2; g <= 4; ++g)
      for (int level = 1; level <= 6; ++level) {
        const auto r = verlinde_dim(a1, g, level);
        CHECK(r.abs_gap.to_double() < 1e-9);
        CHECK(r.rounded.get_d() == doctest::Approx(static_cast<double>(su2_closed_form(g, level))).epsilon(1e-12));
      }
  }

  TEST_CASE("E8 at level 1 has a single conformal block") {
    const auto e8 = RootDatum::build(LieType(Series::E, 8));
    for (int g = 2; g <= 5; ++g) {
      const auto r = verlinde_dim(e8, g, 1);
      CHECK(r.rounded == 1);
      CHECK(r.abs_gap.to_double() < 1e-9);
    }
  }

  TEST_CASE("level zero certifies to 1") {
    for (const auto& lie : admissible_types(5))
      for (int g = 2; g <= 3; ++g) CHECK(verlinde_dim(RootDatum::build(lie), g, 0).rounded == 1);
  }

  TEST_CASE("integrality at higher genus") {
    for (const auto& lie : {LieType(Series::A, 2), LieType(Series::C, 2), LieType(Series::G, 2), LieType(Series::B, 3)}) {
      const auto d = RootDatum::build(lie);
      for (int g = 2; g <= 3; ++g)
        for (int level = 1; level <= 4; ++level) {
          const auto r = verlinde_dim(d, g, level);
          CHECK(r.abs_gap.to_double() < 1e-9);
          CHECK(r.rounded >= 1);
        }
    }
  }

  TEST_CASE("precision escalates until the certificate holds") {
    // At 8 bits the sum cannot certify; the driver doubles until it does.
    const auto g2 = RootDatum::build(LieType(Series::G, 2));
    VerlindeOptions opt;
    opt.precision_bits = 8;
    const auto r = verlinde_dim(g2, 3, 4, opt);
    CHECK(r.precision_bits > 8);
    CHECK(r.abs_gap.to_double() < 1e-9);
    opt.max_precision_bits = 8;
    try {
      verlinde_dim(g2, 3, 4, opt);
      FAIL("expected a precision error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precision);
    }
  }

  TEST_CASE("unsupported genus") {
    const auto a1 = RootDatum::build(LieType(Series::A, 1));
    try {
      verlinde_dim(a1, 0, 1);
      FAIL("expected an unsupported error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Unsupported);
    }
    CHECK(verlinde_dim(VerlindeQuery{LieType(Series::A, 1), 2, 2}).rounded == 10);
  }
}

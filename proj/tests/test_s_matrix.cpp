#include <doctest.h>

#include <cmath>
#include <set>

#include "liepic/error.hpp"
#include "liepic/s_matrix.hpp"

using namespace liepic;

TEST_SUITE("s_matrix") {
  TEST_CASE("Weyl group orders") {
    for (const auto& [lie, order] : {std::pair{LieType(Series::A, 1), 2}, std::pair{LieType(Series::A, 3), 24},
                                     std::pair{LieType(Series::G, 2), 12}, std::pair{LieType(Series::B, 3), 48},
                                     std::pair{LieType(Series::C, 3), 48}, std::pair{LieType(Series::F, 4), 1152}}) {
      CAPTURE(lie.name());
      const auto d = RootDatum::build(lie);
      const auto w = weyl_group(d);
      CHECK(static_cast<long>(w.size()) == order);
      CHECK(classical_weyl_order(lie).value() == order);
      int total_sign = 0;
      std::set<WeightVec> images;
      for (const auto& e : w) {
        total_sign += e.sign;
        images.insert(e.apply(d.rho()));
      }
      CHECK(total_sign == 0);
      CHECK(images.size() == w.size());
      CHECK(w.front().sign == 1);
      CHECK(w.front().apply(d.rho()) == d.rho());
    }
  }

  TEST_CASE("Weyl group guard") {
    const auto e8 = RootDatum::build(LieType(Series::E, 8));
    CHECK(classical_weyl_order(LieType(Series::E, 8)).value() == 696729600);
    try {
      weyl_group(e8);
      FAIL("expected a resource error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Resource);
    }
  }

  TEST_CASE("SU(2) closed form") {
    // S_{ab} = sqrt(2/(l+2)) sin(pi (a+1)(b+1)/(l+2))
    const auto a1 = RootDatum::build(LieType(Series::A, 1));
    for (int level = 1; level <= 4; ++level) {
      const auto s = kac_peterson_S(a1, level, 128);
      REQUIRE(s.size() == static_cast<std::size_t>(level + 1));
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
          const double expected = std::sqrt(2.0 / (level + 2)) * std::sin(M_PI * (a + 1) * (b + 1) / (level + 2));
          CHECK(s(a, b).re.to_double() == doctest::Approx(expected).epsilon(1e-12));
          CHECK(std::abs(s(a, b).im.to_double()) < 1e-30);
        }
    }
    CHECK(kac_peterson_S(a1, 2)(0, 0).re.to_double() == doctest::Approx(0.5));
  }

  TEST_CASE("unitarity and symmetry") {
    for (const auto& lie : {LieType(Series::A, 2), LieType(Series::C, 2), LieType(Series::G, 2), LieType(Series::A, 3)}) {
      const auto d = RootDatum::build(lie);
      for (int level = 1; level <= 3; ++level) {
        CAPTURE(lie.name());
        CAPTURE(level);
        const auto s = kac_peterson_S(d, level, 256);
        CHECK(s.unitarity_residual().to_double() < 1e-20);
        CHECK(s.symmetry_residual().to_double() < 1e-20);
      }
    }
  }

  TEST_CASE("the vacuum row is real and positive") {
    const auto g2 = RootDatum::build(LieType(Series::G, 2));
    const auto s = kac_peterson_S(g2, 3);
    for (std::size_t b = 0; b < s.size(); ++b) {
      CHECK(s(0, b).re.to_double() > 0);
      CHECK(std::abs(s(0, b).im.to_double()) < 1e-40);
    }
  }
}

#include <doctest.h>

#include "liepic/error.hpp"
#include "liepic/picard_report.hpp"

using namespace liepic;

TEST_SUITE("picard_report") {
  TEST_CASE("E8 genus 3") {
    const auto r = report(LieType(Series::E, 8), 3);
    CHECK(r.pic == "free of rank 1");
    CHECK(r.m_G == 60);
    CHECK(r.beta_image_exponent == 60);
    CHECK(r.generator_weights == std::vector<int>{8});
    CHECK(r.canonical_generator == 8);
    CHECK_FALSE(r.genus1_model.has_value());
    CHECK_FALSE(r.locally_factorial);
  }

  TEST_CASE("symplectic and special linear groups are locally factorial") {
    const auto c5 = report(LieType(Series::C, 5), 2);
    CHECK(c5.m_G == 1);
    CHECK(c5.generator_weights == std::vector<int>{1});
    CHECK(c5.locally_factorial);
    const auto a4 = report(LieType(Series::A, 4), 2);
    CHECK(a4.m_G == 1);
    CHECK(a4.generator_weights == std::vector<int>{1, 4});
    CHECK(a4.locally_factorial);
  }

  TEST_CASE("genus one model") {
    const auto r = report(LieType(Series::D, 4), 1);
    REQUIRE(r.genus1_model.has_value());
    CHECK(r.genus1_model->weights() == std::vector<long>{1, 1, 2, 1, 1});
    CHECK(r.m_G == 2);
    CHECK(r.generator_weights == std::vector<int>{1, 3, 4});
  }

  TEST_CASE("genus zero is unsupported") {
    try {
      report(LieType(Series::A, 1), 0);
      FAIL("expected an unsupported error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Unsupported);
    }
  }

  TEST_CASE("reports are pure") {
    const auto a = report(LieType(Series::F, 4), 2);
    const auto b = report(LieType(Series::F, 4), 2);
    CHECK(a.m_G == b.m_G);
    CHECK(a.generator_weights == b.generator_weights);
    CHECK(a.m_G == 6);
  }

  TEST_CASE("theta exponents") {
    const auto a1 = RootDatum::build(LieType(Series::A, 1));
    const auto t1 = theta_exponent(a1, IrrepLabel(WeightVec{1}));
    CHECK(t1.m_V == 1);
    CHECK(t1.power_of_generator == 1);
    const auto e8 = RootDatum::build(LieType(Series::E, 8));
    const auto t8 = theta_exponent(e8, IrrepLabel(WeightVec::fundamental(8, 7)));
    CHECK(t8.m_V == 60);
    CHECK(t8.power_of_generator == 1);
    for (const auto& lie : admissible_types(5)) {
      const auto d = RootDatum::build(lie);
      const auto adj = theta_exponent(d, IrrepLabel(d.to_weight_basis(d.theta())));
      CHECK(adj.m_V == 2 * d.dual_coxeter());
      CHECK(adj.power_of_generator * omega_d(d).m_G == adj.m_V);
    }
  }
}

#include <doctest.h>

#include "liepic/kernels.hpp"
#include "liepic/s_matrix.hpp"
#include "liepic/verlinde.hpp"

using namespace liepic;
using kernels::Backend;

TEST_SUITE("kernels") {
  TEST_CASE("OpenMP Verlinde terms are bit-identical to the serial reference") {
    for (const auto& [lie, genus, level] : {std::tuple{LieType(Series::A, 2), 2, 4}, std::tuple{LieType(Series::G, 2), 3, 3},
                                            std::tuple{LieType(Series::B, 3), 2, 3}, std::tuple{LieType(Series::C, 3), 4, 2}}) {
      CAPTURE(lie.name());
      const auto d = RootDatum::build(lie);
      const auto p = make_verlinde_problem(d, genus, level, 160);
      const auto ref = kernels::verlinde_terms_serial(p);
      for (int jobs : {1, 2, 3, 4}) {
        const auto par = kernels::verlinde_terms_openmp(p, jobs);
        REQUIRE(par.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(par[i].identical(ref[i]));
      }
      const auto v1 = verlinde_value(d, genus, level, 160, Backend::Serial, 1);
      const auto v4 = verlinde_value(d, genus, level, 160, Backend::OpenMP, 4);
      CHECK(v1.identical(v4));
    }
  }

  TEST_CASE("Verlinde result is deterministic across runs and worker counts") {
    const auto d = RootDatum::build(LieType(Series::A, 3));
    VerlindeOptions a, b;
    a.jobs = 1;
    b.jobs = 3;
    const auto r1 = verlinde_dim(d, 2, 4, a);
    const auto r2 = verlinde_dim(d, 2, 4, b);
    const auto r3 = verlinde_dim(d, 2, 4, b);
    CHECK(r1.value.identical(r2.value));
    CHECK(r2.value.identical(r3.value));
    CHECK(r1.precision_bits == r2.precision_bits);
  }

  TEST_CASE("OpenMP alternating sums match the serial reference") {
    const auto d = RootDatum::build(LieType(Series::A, 2));
    const auto s1 = kac_peterson_S(d, 3, 192, Backend::Serial, 1);
    const auto s4 = kac_peterson_S(d, 3, 192, Backend::OpenMP, 4);
    REQUIRE(s1.size() == s4.size());
    for (std::size_t i = 0; i < s1.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) {
        CHECK(s1(i, j).re.identical(s4(i, j).re));
        CHECK(s1(i, j).im.identical(s4(i, j).im));
      }
  }

  TEST_CASE("tree sum") {
    std::vector<BigFloat> v;
    for (long i = 1; i <= 7; ++i) v.emplace_back(i, 64);
    CHECK(kernels::tree_sum(v, 64).to_double() == 28.0);
    CHECK(kernels::tree_sum({}, 64).is_zero());
  }

  TEST_CASE("sine table") {
    const auto t = kernels::sine_table(6, 128, Backend::Serial, 1);
    CHECK(t[0].is_zero());
    CHECK(t[3].to_double() == doctest::Approx(2.0));
    CHECK(t[1].to_double() == doctest::Approx(1.0));  // 2 sin(pi / 6)
    const auto u = kernels::sine_table(6, 128, Backend::OpenMP, 2);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i].identical(u[i]));
  }
}

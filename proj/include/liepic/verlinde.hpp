#pragma once

#include <vector>

#include <gmpxx.h>

#include "liepic/bigfloat.hpp"
#include "liepic/kernels.hpp"
#include "liepic/lattice.hpp"
#include "liepic/root_system.hpp"

namespace liepic {

/// Dominant weights mu with <mu, theta> = sum_i n_i a_i^vee <= level, in
/// lexicographic order. Refuses (ErrorKind::Resource) beyond `max_points`.
std::vector<WeightVec> enumerate_P_ell(const RootDatum& d, int level, std::size_t max_points = 50'000'000);

/// |P_level| without materializing the set.
mpz_class count_P_ell(const RootDatum& d, int level);

/// (level + h)^rank * #(P / Q_lg).
mpz_class t_ell(const RootDatum& d, int level);

struct VerlindeQuery {
  LieType lie;
  int genus;
  int level;
};

struct VerlindeOptions {
  mpfr_prec_t precision_bits = 128;
  mpfr_prec_t max_precision_bits = 4096;
  kernels::Backend backend = kernels::Backend::OpenMP;
  int jobs = 0;  // 0: OpenMP default
};

struct VerlindeResult {
  BigFloat value;
  mpz_class rounded;
  BigFloat abs_gap;
  mpfr_prec_t precision_bits;
  mpz_class count_P_ell;
};

/// Stop raising precision once the rounding gap is below this.
inline constexpr const char* kVerlindeTargetGap = "1e-9";
/// A result is returned only if its rounding gap is below this.
inline constexpr const char* kVerlindeMaxGap = "1e-6";

/// The integer-form problem handed to the kernels at the given precision.
kernels::VerlindeProblem make_verlinde_problem(const RootDatum& d, int genus, int level, mpfr_prec_t precision);

/// One uncertified evaluation of the Verlinde sum at fixed precision.
BigFloat verlinde_value(const RootDatum& d, int genus, int level, mpfr_prec_t precision,
                        kernels::Backend backend = kernels::Backend::OpenMP, int jobs = 0);

/// Certified Verlinde number F_g(level). Genus 1 returns |P_level| exactly.
/// The gap is the distance to the nearest integer plus a worst-case bound on
/// the floating-point error of the sum. Otherwise precision starts at options.precision_bits and doubles until the
/// rounding gap drops below 1e-9 or the cap is reached; a gap >= 1e-6 at the
/// cap raises ErrorKind::Precision. Genus < 1 raises ErrorKind::Unsupported.
VerlindeResult verlinde_dim(const RootDatum& d, int genus, int level, const VerlindeOptions& options = {});
VerlindeResult verlinde_dim(const VerlindeQuery& q, const VerlindeOptions& options = {});

}  // namespace liepic

#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP variant; both perform the same per-item arithmetic and reduce in the
// same fixed order, so their results are bit-identical for any thread count.

#include <vector>

#include "liepic/bigfloat.hpp"
#include "liepic/lattice.hpp"

namespace liepic::kernels {

enum class Backend { Serial, OpenMP };

/// Verlinde sum in integer form. For a positive root alpha and mu in the
/// alcove, denominator * <alpha, mu + rho> / (level + h) equals
/// sum_j (mu_j + 1) * root_weights[alpha][j], an integer in (0, denominator).
struct VerlindeProblem {
  int genus = 1;
  long denominator = 1;
  std::vector<std::vector<long>> root_weights;
  std::vector<WeightVec> alcove;
  mpfr_prec_t precision = 128;
};

/// 2 sin(pi m / denominator) for m = 0 .. denominator - 1.
std::vector<BigFloat> sine_table(long denominator, mpfr_prec_t precision, Backend backend, int jobs);

/// term(mu) = prod_alpha (2 sin(pi <alpha, mu + rho> / (level + h)))^(2 - 2 genus), per alcove point.
std::vector<BigFloat> verlinde_terms_serial(const VerlindeProblem& p);
std::vector<BigFloat> verlinde_terms_openmp(const VerlindeProblem& p, int jobs);
std::vector<BigFloat> verlinde_terms(const VerlindeProblem& p, Backend backend, int jobs);

/// Pairwise reduction with a fixed tree shape.
BigFloat tree_sum(std::vector<BigFloat> values, mpfr_prec_t precision);

/// Weyl-alternating exponential sums
///   entry(a, b) = sum_w sign_w exp(-2 pi i phase(a, w, b) / denominator)
/// where phase(a, w, b) = sum_j orbit[a][w].weight_j * gram_row(b)_j.
struct AlternatingSumProblem {
  struct OrbitPoint {
    WeightVec weight;  // w(lambda + rho)
    int sign;
  };
  std::vector<std::vector<OrbitPoint>> orbits;  // one per row label
  std::vector<WeightVec> columns;              // mu + rho, multiplied through the scaled Gram matrix
  long denominator = 1;
  mpfr_prec_t precision = 256;
};

/// Row-major |orbits| x |columns| matrix.
std::vector<BigComplex> alternating_sums_serial(const AlternatingSumProblem& p);
std::vector<BigComplex> alternating_sums_openmp(const AlternatingSumProblem& p, int jobs);
std::vector<BigComplex> alternating_sums(const AlternatingSumProblem& p, Backend backend, int jobs);

}  // namespace liepic::kernels

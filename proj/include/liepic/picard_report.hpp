#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liepic/lie_type.hpp"
#include "liepic/rep_theory.hpp"
#include "liepic/wps.hpp"

namespace liepic {

/// Picard group of the moduli space of semistable G-bundles on a genus-g curve.
struct PicardReport {
  LieType lie;
  int genus;
  std::string pic;                          // "free of rank 1"
  std::vector<int> generator_weights;       // every admissible omega_d, 1-based
  int canonical_generator;                  // smallest entry of generator_weights
  mpz_class m_G;
  mpz_class beta_image_exponent;            // Im(beta) = <L^{m_G}>
  std::optional<WpsWeights> genus1_model;   // (1, comarks) when genus == 1
  bool locally_factorial;
};

/// Throws ErrorKind::Unsupported for genus < 1.
PicardReport report(const LieType& lie, int genus);

struct ThetaExponent {
  mpz_class m_V;                 // Dynkin index of V(lambda)
  mpz_class power_of_generator;  // m_V / m_G
};

/// Theta_V(lambda) as a power of the generator; asserts m_G | m_V.
ThetaExponent theta_exponent(const RootDatum& d, const IrrepLabel& lambda);

}  // namespace liepic

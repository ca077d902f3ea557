#include "liepic/picard_report.hpp"

#include "liepic/error.hpp"

namespace liepic {

PicardReport report(const LieType& lie, int genus) {
  if (genus < 1)
    raise(ErrorKind::Unsupported, "genus " + std::to_string(genus) + " is unsupported; genus must be >= 1");
  const RootDatum d = RootDatum::build(lie);
  const OmegaD od = omega_d(d);

  PicardReport r{lie, genus, "free of rank 1", od.indices, od.indices.front(), od.m_G, od.m_G, std::nullopt,
                 od.m_G == 1};
  if (genus == 1) {
    r.genus1_model = wps_from_group(d);
    ensure(generator_degree(*r.genus1_model) == r.m_G, "generator degree of the genus-1 model differs from m_G");
  }
  const bool series_ac = lie.series() == Series::A || lie.series() == Series::C;
  ensure(r.locally_factorial == series_ac, "local factoriality criterion disagrees with m_G for " + lie.name());
  return r;
}

ThetaExponent theta_exponent(const RootDatum& d, const IrrepLabel& lambda) {
  ThetaExponent t;
  t.m_V = dynkin_index(d, lambda);
  const mpz_class m_G = lcm_of_comarks(d);
  ensure(mpz_divisible_p(t.m_V.get_mpz_t(), m_G.get_mpz_t()) != 0,
         "m_G = " + m_G.get_str() + " does not divide m_V = " + t.m_V.get_str());
  t.power_of_generator = t.m_V / m_G;
  return t;
}

}  // namespace liepic

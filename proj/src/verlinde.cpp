#include "liepic/verlinde.hpp"

#include "liepic/error.hpp"

namespace liepic {

namespace {

void check_level(int level) {
  if (level < 0) raise(ErrorKind::Domain, "level must be >= 0, got " + std::to_string(level));
}

void check_genus(int genus) {
  if (genus < 1)
    raise(ErrorKind::Unsupported, "genus " + std::to_string(genus) + " is unsupported; genus must be >= 1");
}

}  // namespace

std::vector<WeightVec> enumerate_P_ell(const RootDatum& d, int level, std::size_t max_points) {
  check_level(level);
  const mpz_class count = count_P_ell(d, level);
  if (count > static_cast<unsigned long>(max_points))
    raise(ErrorKind::Resource, "|P_" + std::to_string(level) + "| = " + count.get_str() + " exceeds the enumeration limit");

  const std::size_t k = d.rank();
  const auto& comarks = d.comarks();
  std::vector<WeightVec> out;
  out.reserve(count.get_ui());
  WeightVec cur(k);
  auto rec = [&](auto&& self, std::size_t pos, int budget) -> void {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int n = 0; n * comarks[pos] <= budget; ++n) {
      cur[pos] = n;
      self(self, pos + 1, budget - n * comarks[pos]);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, level);

  const RootVec& theta = d.theta();
  for (const auto& mu : out) ensure(pairing(d, mu, theta) <= level, "alcove point violates <mu, theta> <= level");
  return out;
}

mpz_class count_P_ell(const RootDatum& d, int level) {
  check_level(level);
  const auto& comarks = d.comarks();
  const std::size_t k = comarks.size();
  // below[b] = #{(n_i, ..., n_k) >= 0 : sum n_j a_j^vee <= b}, built from the last coordinate.
  std::vector<mpz_class> below(static_cast<std::size_t>(level) + 1, 1);
  for (std::size_t i = k; i-- > 0;) {
    std::vector<mpz_class> next(below.size(), 0);
    for (int b = 0; b <= level; ++b)
      for (int n = 0; n * comarks[i] <= b; ++n) next[static_cast<std::size_t>(b)] += below[static_cast<std::size_t>(b - n * comarks[i])];
    below = std::move(next);
  }
  return below[static_cast<std::size_t>(level)];
}

mpz_class t_ell(const RootDatum& d, int level) {
  check_level(level);
  mpz_class base = level + d.dual_coxeter();
  mpz_class t;
  mpz_pow_ui(t.get_mpz_t(), base.get_mpz_t(), d.rank());
  return t * d.index_P_over_Qlg();
}

kernels::VerlindeProblem make_verlinde_problem(const RootDatum& d, int genus, int level, mpfr_prec_t precision) {
  check_genus(genus);
  check_level(level);
  const std::size_t k = d.rank();
  // <omega_j, alpha> = alpha_j L_j / 2; clear the denominators of L_j / 2.
  mpz_class scale = 1;
  for (std::size_t j = 0; j < k; ++j) {
    mpq_class half = d.simple_root_length(j) / 2;
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), half.get_den_mpz_t());
  }
  kernels::VerlindeProblem p;
  p.genus = genus;
  p.precision = precision;
  p.denominator = scale.get_si() * (level + d.dual_coxeter());
  for (const auto& alpha : d.positive_roots()) {
    std::vector<long> w(k);
    for (std::size_t j = 0; j < k; ++j) {
      mpq_class c = alpha[j] * d.simple_root_length(j) / 2 * scale;
      ensure(c.get_den() == 1, "scaled root weight is not integral");
      w[j] = c.get_num().get_si();
    }
    p.root_weights.push_back(std::move(w));
  }
  p.alcove = enumerate_P_ell(d, level);
  return p;
}

BigFloat verlinde_value(const RootDatum& d, int genus, int level, mpfr_prec_t precision, kernels::Backend backend,
                        int jobs) {
  const auto problem = make_verlinde_problem(d, genus, level, precision);
  BigFloat sum = kernels::tree_sum(kernels::verlinde_terms(problem, backend, jobs), precision);
  mpz_class prefactor;
  const mpz_class t = t_ell(d, level);
  mpz_pow_ui(prefactor.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(genus - 1));
  return BigFloat(prefactor, precision) * sum;
}

namespace {

// Worst-case accumulated rounding error of verlinde_value, relative to the
// value. Every term is positive, so relative errors do not grow in the sum:
// each sine entry and product step rounds once, the power multiplies the
// product error by 2g - 2, the tree adds one rounding per level, and the
// prefactor costs two more. The factor 2 covers the second-order terms.
BigFloat rounding_error_bound(const BigFloat& value, std::size_t roots, const mpz_class& points, int genus,
                              mpfr_prec_t prec) {
  const long depth = static_cast<long>(mpz_sizeinbase(points.get_mpz_t(), 2));
  const long steps = (2L * genus - 2) * 2 * static_cast<long>(roots) + depth + 4;
  BigFloat unit(1L, prec);
  mpfr_mul_2si(unit.get(), unit.get(), -static_cast<long>(prec), MPFR_RNDU);
  return abs(value) * BigFloat(2 * steps, prec) * unit;
}

}  // namespace

VerlindeResult verlinde_dim(const RootDatum& d, int genus, int level, const VerlindeOptions& options) {
  check_genus(genus);
  check_level(level);
  if (options.precision_bits < MPFR_PREC_MIN || options.max_precision_bits < options.precision_bits)
    raise(ErrorKind::Domain, "invalid precision settings");

  const mpz_class count = count_P_ell(d, level);
  if (genus == 1) {
    const mpfr_prec_t p = options.precision_bits;
    return VerlindeResult{BigFloat(count, p), count, BigFloat(p), p, count};
  }

  mpfr_prec_t prec = options.precision_bits;
  for (;;) {
    BigFloat value = verlinde_value(d, genus, level, prec, options.backend, options.jobs);
    const mpz_class rounded = value.round_to_integer();
    BigFloat gap = abs(value - BigFloat(rounded, prec)) +
                   rounding_error_bound(value, d.positive_roots().size(), count, genus, prec);
    if (gap < from_decimal(kVerlindeTargetGap, prec) ||
        (prec >= options.max_precision_bits && gap < from_decimal(kVerlindeMaxGap, prec))) {
      ensure(rounded >= 1, "Verlinde number rounded to " + rounded.get_str() + " < 1");
      return VerlindeResult{std::move(value), rounded, std::move(gap), prec, count};
    }
    if (prec >= options.max_precision_bits)
      raise(ErrorKind::Precision, "Verlinde sum for " + d.lie().name() + " genus " + std::to_string(genus) +
                                      " level " + std::to_string(level) + " is " + gap.to_scientific(3) +
                                      " away from an integer at " + std::to_string(prec) + " bits");
    prec = std::min(2 * prec, options.max_precision_bits);
  }
}

VerlindeResult verlinde_dim(const VerlindeQuery& q, const VerlindeOptions& options) {
  return verlinde_dim(RootDatum::build(q.lie), q.genus, q.level, options);
}

}  // namespace liepic

#include "liepic/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "liepic/error.hpp"

namespace liepic {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

// Promote a's precision in place (exactly) before a binary operation.
void widen(BigFloat& a, mpfr_prec_t p) {
  if (a.precision() < p) mpfr_prec_round(a.get(), p, MPFR_RNDN);
}

struct MpfrString {
  char* s;
  ~MpfrString() { mpfr_free_str(s); }
};

}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(*this, wider(*this, o));
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(*this, wider(*this, o));
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(*this, wider(*this, o));
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(*this, wider(*this, o));
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

bool BigFloat::identical(const BigFloat& o) const {
  if (precision() != o.precision()) return false;
  if (mpfr_nan_p(value_) || mpfr_nan_p(o.value_)) return mpfr_nan_p(value_) && mpfr_nan_p(o.value_);
  return mpfr_equal_p(value_, o.value_) && mpfr_signbit(value_) == mpfr_signbit(o.value_);
}

mpz_class BigFloat::round_to_integer() const {
  if (!mpfr_number_p(value_)) raise(ErrorKind::Precision, "cannot round a non-finite value");
  BigFloat r(precision());
  mpfr_round(r.value_, value_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), r.value_, MPFR_RNDN);
  return z;
}

std::string BigFloat::to_decimal(int digits) const {
  const int needed = mpfr_snprintf(nullptr, 0, "%.*Rf", digits, value_);
  std::string s(static_cast<std::size_t>(needed) + 1, '\0');
  mpfr_snprintf(s.data(), s.size(), "%.*Rf", digits, value_);
  s.resize(static_cast<std::size_t>(needed));
  return s;
}

std::string BigFloat::to_scientific(int digits) const {
  const int needed = mpfr_snprintf(nullptr, 0, "%.*Re", std::max(digits - 1, 0), value_);
  std::string s(static_cast<std::size_t>(needed) + 1, '\0');
  mpfr_snprintf(s.data(), s.size(), "%.*Re", std::max(digits - 1, 0), value_);
  s.resize(static_cast<std::size_t>(needed));
  return s;
}

BigFloat abs(BigFloat x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

BigFloat sqrt(BigFloat x) {
  mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
  return x;
}

BigFloat pow(BigFloat x, long n) {
  mpfr_pow_si(x.get(), x.get(), n, MPFR_RNDN);
  return x;
}

BigFloat const_pi(mpfr_prec_t precision) {
  BigFloat p(precision);
  mpfr_const_pi(p.get(), MPFR_RNDN);
  return p;
}

BigFloat sin_pi_ratio(long num, long den, mpfr_prec_t precision) {
  if (den <= 0) raise(ErrorKind::Domain, "sin_pi_ratio requires a positive denominator");
  // sin(pi x) has period 2; fold x = num/den into [0, 1/2].
  long n = num % (2 * den);
  if (n < 0) n += 2 * den;
  bool negate = false;
  if (n >= den) {
    n -= den;
    negate = true;
  }
  if (2 * n > den) n = den - n;
  BigFloat out(precision);
  if (n == 0) return out;
  const mpfr_prec_t work = precision + 32;
  BigFloat x = const_pi(work);
  mpfr_mul_si(x.get(), x.get(), n, MPFR_RNDN);
  mpfr_div_si(x.get(), x.get(), den, MPFR_RNDN);
  mpfr_sin(x.get(), x.get(), MPFR_RNDN);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  if (negate) mpfr_neg(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigFloat cos_pi_ratio(long num, long den, mpfr_prec_t precision) {
  return sin_pi_ratio(2 * num + den, 2 * den, precision);
}

BigFloat from_decimal(const std::string& text, mpfr_prec_t precision) {
  BigFloat x(precision);
  if (mpfr_set_str(x.get(), text.c_str(), 10, MPFR_RNDN) != 0)
    raise(ErrorKind::Domain, "not a decimal number: " + text);
  return x;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigFloat BigComplex::max_abs_part() const {
  BigFloat a = abs(re), b = abs(im);
  return a < b ? b : a;
}

BigFloat BigComplex::norm() const { return re * re + im * im; }

}  // namespace liepic

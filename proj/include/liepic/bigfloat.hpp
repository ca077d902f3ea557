#pragma once

#include <cstdio>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace liepic {

/// Owning wrapper around an MPFR number with a fixed precision.
///
/// Arithmetic operators round to nearest at the larger operand precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(long value, mpfr_prec_t precision);
  BigFloat(const mpz_class& value, mpfr_prec_t precision);
  BigFloat(const mpq_class& value, mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
  /// Bitwise identity: same precision, same value.
  bool identical(const BigFloat& o) const;

  bool is_zero() const { return mpfr_zero_p(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer (ties away from zero).
  mpz_class round_to_integer() const;
  /// Fixed-point decimal with `digits` digits after the point.
  std::string to_decimal(int digits) const;
  /// Scientific notation with `digits` significant digits.
  std::string to_scientific(int digits) const;

 private:
  mpfr_t value_;
};

BigFloat abs(BigFloat x);
BigFloat sqrt(BigFloat x);
BigFloat pow(BigFloat x, long n);
BigFloat const_pi(mpfr_prec_t precision);
/// sin(pi * num / den), reduced exactly to the first half-period before evaluation.
BigFloat sin_pi_ratio(long num, long den, mpfr_prec_t precision);
/// cos(pi * num / den), same reduction.
BigFloat cos_pi_ratio(long num, long den, mpfr_prec_t precision);
/// Parses a decimal literal at the given precision.
BigFloat from_decimal(const std::string& text, mpfr_prec_t precision);

/// Complex number with BigFloat parts.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t precision) : re(precision), im(precision) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  BigComplex conj() const { return {re, -im}; }
  /// max(|re|, |im|)
  BigFloat max_abs_part() const;
  BigFloat norm() const;  // |z|^2
};

}  // namespace liepic

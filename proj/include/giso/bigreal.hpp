#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "giso/rational.hpp"

namespace giso {

// Arbitrary-precision real backed by MPFR. Precision travels with the value
// (never a mutable global): every constructor pins it, binary operations
// carry the wider operand's precision, rounding is to nearest.
class BigReal {
 public:
  static constexpr long kDefaultDigits = 60;

  static mpfr_prec_t bits_for_digits(long digits) {
    if (digits < 2) digits = 2;
    // 10 -> 2 conversion plus guard bits
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 24);
  }

  BigReal() { mpfr_init2(v_, bits_for_digits(kDefaultDigits)); mpfr_set_zero(v_, 1); }
  BigReal(long n) {  // NOLINT: scalars mix freely with reals
    mpfr_init2(v_, bits_for_digits(kDefaultDigits));
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  BigReal(int n) : BigReal(static_cast<long>(n)) {}
  explicit BigReal(double d) {
    mpfr_init2(v_, bits_for_digits(kDefaultDigits));
    mpfr_set_d(v_, d, MPFR_RNDN);
  }

  static BigReal zero(long digits) {
    BigReal r(digits, internal_tag{});
    mpfr_set_zero(r.v_, 1);
    return r;
  }
  static BigReal of(long n, long digits) {
    BigReal r(digits, internal_tag{});
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
  }
  static BigReal of(const Rational& q, long digits) {
    BigReal r(digits, internal_tag{});
    mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
    return r;
  }
  static BigReal parse(std::string_view s, long digits) {
    BigReal r(digits, internal_tag{});
    std::string t(s);
    if (mpfr_set_str(r.v_, t.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("bigreal: cannot parse '" + t + "'");
    return r;
  }
  static BigReal pi(long digits) {
    BigReal r(digits, internal_tag{});
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }
  long digits10() const {
    return static_cast<long>((precision_bits() - 24) / 3.3219280948873623);
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }

  BigReal operator-() const {
    BigReal r = like(*this);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define GISO_BIGREAL_BINOP(op, fn)                              \
  friend BigReal operator op(const BigReal& a, const BigReal& b) { \
    BigReal r = wider(a, b);                                    \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                            \
    return r;                                                   \
  }
  GISO_BIGREAL_BINOP(+, mpfr_add)
  GISO_BIGREAL_BINOP(-, mpfr_sub)
  GISO_BIGREAL_BINOP(*, mpfr_mul)
  GISO_BIGREAL_BINOP(/, mpfr_div)
#undef GISO_BIGREAL_BINOP

  BigReal& operator+=(const BigReal& b) { return *this = *this + b; }
  BigReal& operator-=(const BigReal& b) { return *this = *this - b; }
  BigReal& operator*=(const BigReal& b) { return *this = *this * b; }
  BigReal& operator/=(const BigReal& b) { return *this = *this / b; }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const BigReal& a, const BigReal& b) {
    return !(a == b);
  }
  friend bool operator<(const BigReal& a, const BigReal& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator<=(const BigReal& a, const BigReal& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return b <= a; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Lower-case scientific, `decimals` digits after the point, no locale.
  std::string to_string(long decimals = 20) const;

  friend BigReal abs(const BigReal& a);
  friend BigReal sqrt(const BigReal& a);
  friend BigReal cbrt(const BigReal& a);
  friend BigReal exp(const BigReal& a);
  friend BigReal log(const BigReal& a);
  friend BigReal pow(const BigReal& a, const BigReal& b);
  friend BigReal powi(const BigReal& a, long e);
  friend BigReal sin(const BigReal& a);
  friend BigReal cos(const BigReal& a);
  friend BigReal acos(const BigReal& a);
  friend BigReal atan2(const BigReal& y, const BigReal& x);
  friend BigReal sinh(const BigReal& a);
  friend BigReal cosh(const BigReal& a);
  friend BigReal min(const BigReal& a, const BigReal& b);
  friend BigReal max(const BigReal& a, const BigReal& b);

 private:
  struct internal_tag {};
  BigReal(long digits, internal_tag) { mpfr_init2(v_, bits_for_digits(digits)); }
  static BigReal like(const BigReal& a) {
    BigReal r(2, internal_tag{});
    mpfr_set_prec(r.v_, mpfr_get_prec(a.v_));
    return r;
  }
  static BigReal wider(const BigReal& a, const BigReal& b) {
    BigReal r(2, internal_tag{});
    mpfr_set_prec(r.v_, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    return r;
  }
  mpfr_t v_;
};

#define GISO_BIGREAL_FN1(name, fn)          \
  inline BigReal name(const BigReal& a) {   \
    BigReal r = BigReal::like(a);           \
    fn(r.v_, a.v_, MPFR_RNDN);              \
    return r;                               \
  }
GISO_BIGREAL_FN1(abs, mpfr_abs)
GISO_BIGREAL_FN1(sqrt, mpfr_sqrt)
GISO_BIGREAL_FN1(cbrt, mpfr_cbrt)
GISO_BIGREAL_FN1(exp, mpfr_exp)
GISO_BIGREAL_FN1(log, mpfr_log)
GISO_BIGREAL_FN1(sin, mpfr_sin)
GISO_BIGREAL_FN1(cos, mpfr_cos)
GISO_BIGREAL_FN1(acos, mpfr_acos)
GISO_BIGREAL_FN1(sinh, mpfr_sinh)
GISO_BIGREAL_FN1(cosh, mpfr_cosh)
#undef GISO_BIGREAL_FN1

inline BigReal pow(const BigReal& a, const BigReal& b) {
  BigReal r = BigReal::wider(a, b);
  mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
inline BigReal powi(const BigReal& a, long e) {
  BigReal r = BigReal::like(a);
  mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}
inline BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r = BigReal::wider(y, x);
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}
inline BigReal min(const BigReal& a, const BigReal& b) {
  BigReal r = BigReal::wider(a, b);
  mpfr_min(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
inline BigReal max(const BigReal& a, const BigReal& b) {
  BigReal r = BigReal::wider(a, b);
  mpfr_max(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

}  // namespace giso

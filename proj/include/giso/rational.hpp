#pragma once

#include <gmp.h>

#include <cstdlib>
#include <string>
#include <string_view>
#include <stdexcept>
#include <utility>

namespace giso {

// Exact rational number backed by GMP. Canonical after every operation:
// denominator > 0 and gcd(numerator, denominator) = 1.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {  // NOLINT: implicit on purpose, scalars appear everywhere
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(int n) : Rational(static_cast<long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, den);
    mpq_canonicalize(q_);
  }
  explicit Rational(std::string_view s) : Rational() { assign(s); }

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  // Accepts "p", "p/q", and decimal forms like "-0.125" or "1.5e-3".
  static Rational parse(std::string_view s) { return Rational(s); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("rational: division by zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  Rational pow(unsigned long e) const {
    Rational r(1), base(*this);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  // Largest integer <= value, as a Rational.
  Rational floor() const {
    Rational r;
    mpz_fdiv_q(mpq_numref(r.q_), mpq_numref(q_), mpq_denref(q_));
    return r;
  }
  Rational ceil() const {
    Rational r;
    mpz_cdiv_q(mpq_numref(r.q_), mpq_numref(q_), mpq_denref(q_));
    return r;
  }

  long to_long() const {
    if (!is_integer()) throw std::domain_error("rational: not an integer");
    if (!mpz_fits_slong_p(mpq_numref(q_)))
      throw std::domain_error("rational: integer overflow");
    return mpz_get_si(mpq_numref(q_));
  }
  double to_double() const { return mpq_get_d(q_); }

  std::string str() const {
    char* c = mpq_get_str(nullptr, 10, q_);
    std::string s(c);
    std::free(c);
    return s;
  }
  std::string num_str() const {
    char* c = mpz_get_str(nullptr, 10, mpq_numref(q_));
    std::string s(c);
    std::free(c);
    return s;
  }
  std::string den_str() const {
    char* c = mpz_get_str(nullptr, 10, mpq_denref(q_));
    std::string s(c);
    std::free(c);
    return s;
  }

  const __mpq_struct* raw() const { return q_; }

  // gcd of |numerators| and lcm handling live at the polynomial layer; these
  // two helpers expose what it needs.
  static Rational num_gcd(const Rational& a, const Rational& b) {
    Rational r;
    mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
    return r;
  }
  static Rational den_lcm(const Rational& a, const Rational& b) {
    Rational r;
    mpz_lcm(mpq_numref(r.q_), mpq_denref(a.q_), mpq_denref(b.q_));
    return r;
  }

 private:
  void assign(std::string_view s);
  mpq_t q_;
};

inline void Rational::assign(std::string_view s) {
  auto fail = [&] {
    throw std::invalid_argument("rational: cannot parse '" + std::string(s) +
                                "'");
  };
  if (s.empty()) fail();
  std::string t(s);
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (num.empty() || den.empty()) fail();
    if (mpq_set_str(q_, t.c_str(), 10) != 0) fail();
    if (mpz_sgn(mpq_denref(q_)) == 0)
      throw std::domain_error("rational: zero denominator");
    mpq_canonicalize(q_);
    return;
  }
  // decimal form: [sign] digits [. digits] [e|E [sign] digits]
  long exp10 = 0;
  auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = t.substr(epos + 1);
    if (es.empty()) fail();
    char* end = nullptr;
    exp10 = std::strtol(es.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') fail();
    t = t.substr(0, epos);
  }
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(t.size() - dot - 1);
    t.erase(dot, 1);
  }
  if (t.empty() || t == "-" || t == "+") fail();
  for (size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') fail();
  if (mpz_set_str(mpq_numref(q_), t.c_str(), 10) != 0) fail();
  mpz_set_ui(mpq_denref(q_), 1);
  Rational ten(10);
  if (exp10 > 0)
    *this *= ten.pow(static_cast<unsigned long>(exp10));
  else if (exp10 < 0)
    *this /= ten.pow(static_cast<unsigned long>(-exp10));
  mpq_canonicalize(q_);
}

}  // namespace giso

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "giso/bigreal.hpp"
#include "giso/errors.hpp"
#include "giso/rational.hpp"

namespace giso {

// Dense univariate polynomial over a commutative ring T. Coefficient i is the
// degree-i coefficient; the empty vector is the zero polynomial and the
// leading coefficient is nonzero otherwise. The variable name is informational
// only. Nesting gives multivariate polynomials: Poly<Poly<Rational>> is a
// polynomial in the outer variable whose coefficients are polynomials in the
// inner one.
template <typename T>
class Poly {
 public:
  Poly() = default;
  Poly(long k) {  // NOLINT: constants promote implicitly
    if (!(T(k) == T(0))) c_.push_back(T(k));
  }
  Poly(const T& c) {  // NOLINT
    if (!(c == T(0))) c_.push_back(c);
  }
  Poly(std::vector<T> coeffs, std::string var = "x")
      : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static Poly monomial(const T& coeff, size_t deg, std::string var = "x") {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = coeff;
    return Poly(std::move(c), std::move(var));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }

  T coeff(size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& leading() const { return c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c), a.c_.empty() ? b.var_ : a.var_);
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c), a.c_.empty() ? b.var_ : a.var_);
  }
  Poly operator-() const {
    std::vector<T> c(c_);
    for (auto& x : c) x = T(0) - x;
    return Poly(std::move(c), var_);
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c), a.var_);
  }
  friend Poly operator*(const T& s, const Poly& p) { return Poly(s) * p; }
  friend Poly operator*(const Poly& p, const T& s) { return Poly(s) * p; }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> c(c_.size() - 1, T(0));
    for (size_t i = 1; i < c_.size(); ++i)
      c[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(c), var_);
  }

  // Horner evaluation in any ring U reachable from T via `conv`.
  template <typename U, typename Conv>
  U eval_with(const U& x, Conv conv) const {
    U r = conv(T(0));
    for (size_t i = c_.size(); i-- > 0;) r = r * x + conv(c_[i]);
    return r;
  }
  // Evaluation/substitution within the coefficient ring itself. With
  // T = Poly<Rational> this substitutes one polynomial into another.
  T operator()(const T& x) const {
    return eval_with<T>(x, [](const T& c) { return c; });
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
  std::string var_ = "x";
};

using RatPoly = Poly<Rational>;
using RatPoly2 = Poly<RatPoly>;  // outer variable with RatPoly coefficients

inline BigReal eval(const RatPoly& p, const BigReal& x) {
  long digits = x.digits10();
  return p.eval_with<BigReal>(
      x, [&](const Rational& c) { return BigReal::of(c, digits); });
}

// Evaluates a nested polynomial at numeric (outer, inner) points.
inline BigReal eval(const RatPoly2& p, const BigReal& outer,
                    const BigReal& inner) {
  long digits = std::max(outer.digits10(), inner.digits10());
  BigReal r = BigReal::zero(digits);
  for (size_t i = p.coeffs().size(); i-- > 0;)
    r = r * outer + eval(p.coeff(i), inner);
  return r;
}

struct RatPolyDivMod {
  RatPoly quotient, remainder;
};

inline RatPolyDivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly: division by zero polynomial");
  RatPoly r = a;
  std::vector<Rational> q(
      a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree()) + 1 : 0,
      Rational(0));
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    size_t shift = static_cast<size_t>(r.degree() - b.degree());
    Rational f = r.leading() / lb;
    q[shift] = f;
    r -= RatPoly::monomial(f, shift, a.var()) * b;
  }
  return {RatPoly(std::move(q), a.var()), r};
}

inline RatPoly exact_div(const RatPoly& a, const RatPoly& b,
                         const char* context = "poly: non-exact division") {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw FactorizationError(context);
  return q;
}

// Scales to integer coefficients with content 1 and positive leading
// coefficient. The zero polynomial maps to itself.
inline RatPoly normalize_primitive(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rational lcm(1), gcd(0);
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    lcm = Rational::den_lcm(lcm, c);
  }
  std::vector<Rational> c(p.coeffs());
  for (auto& x : c) x *= lcm;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    gcd = Rational::num_gcd(gcd.abs(), x.abs());
  }
  if (c.back().sign() < 0) gcd = -gcd;
  for (auto& x : c) x /= gcd;
  return RatPoly(std::move(c), p.var());
}

inline RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> c(p.coeffs());
  Rational l = p.leading();
  for (auto& x : c) x /= l;
  return RatPoly(std::move(c), p.var());
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = normalize_primitive(r);  // keeps coefficient growth in check
  }
  return a.is_zero() ? a : monic(a);
}

inline RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  RatPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return exact_div(p, g, "poly: squarefree division failed");
}

// Yun's algorithm. Returns pairs (factor, multiplicity) with
// p = lc * prod factor_i^multiplicity_i, factors squarefree and coprime.
inline std::vector<std::pair<RatPoly, int>> squarefree_decomposition(
    const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  RatPoly a = monic(p);
  RatPoly g = gcd(a, a.derivative());
  if (g.degree() == 0) {
    out.emplace_back(a, 1);
    return out;
  }
  RatPoly w = exact_div(a, g);
  RatPoly y = exact_div(a.derivative(), g);
  RatPoly z = y - w.derivative();
  int mult = 1;
  while (!z.is_zero()) {
    RatPoly f = gcd(w, z);
    if (f.degree() > 0) out.emplace_back(monic(f), mult);
    w = exact_div(w, f);
    y = exact_div(z, f);
    z = y - w.derivative();
    ++mult;
  }
  if (w.degree() > 0) out.emplace_back(monic(w), mult);
  return out;
}

inline std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (long i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(static_cast<size_t>(i));
    if (c.is_zero()) continue;
    if (!s.empty()) s += c.sign() > 0 ? " + " : " - ";
    else if (c.sign() < 0) s += "-";
    Rational a = c.abs();
    bool unit = a.is_one() && i != 0;
    if (!unit) s += a.str();
    if (i > 0) {
      if (!unit) s += "*";
      s += p.var();
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace giso

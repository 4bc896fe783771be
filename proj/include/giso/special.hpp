#pragma once

#include "giso/poly.hpp"

namespace giso {

// Rising factorial a(a+1)...(a+k-1); 1 for k=0.
inline Rational pochhammer(const Rational& a, unsigned long k) {
  Rational r(1);
  for (unsigned long j = 0; j < k; ++j) r *= a + Rational(static_cast<long>(j));
  return r;
}

namespace detail {
inline void check_hyp1f1_params(unsigned long n, const Rational& a) {
  // (a)_k with k <= n must not vanish
  for (unsigned long j = 0; j < n; ++j)
    if ((a + Rational(static_cast<long>(j))).is_zero())
      throw std::domain_error("parameter a hits nonpositive integer");
}
}  // namespace detail

// Terminating confluent hypergeometric series
//   1F1(-n; a; z) = sum_{k=0..n} (-n)_k z^k / ((a)_k k!)
// with a polynomial argument; exact in rational arithmetic.
inline RatPoly hyp1f1_terminating(unsigned long n, const Rational& a,
                                  const RatPoly& z) {
  detail::check_hyp1f1_params(n, a);
  RatPoly sum(1), zk(1);
  Rational coeff(1);
  for (unsigned long k = 1; k <= n; ++k) {
    long kl = static_cast<long>(k);
    coeff *= Rational(-(static_cast<long>(n) - kl + 1)) /
             ((a + Rational(kl - 1)) * Rational(kl));
    zk *= z;
    sum += coeff * zk;
  }
  return sum;
}

inline BigReal hyp1f1_terminating(unsigned long n, const Rational& a,
                                  const BigReal& z) {
  detail::check_hyp1f1_params(n, a);
  long digits = z.digits10();
  BigReal sum = BigReal::of(1, digits), zk = BigReal::of(1, digits);
  Rational coeff(1);
  for (unsigned long k = 1; k <= n; ++k) {
    long kl = static_cast<long>(k);
    coeff *= Rational(-(static_cast<long>(n) - kl + 1)) /
             ((a + Rational(kl - 1)) * Rational(kl));
    zk *= z;
    sum += BigReal::of(coeff, digits) * zk;
  }
  return sum;
}

// Associated Laguerre polynomial L_n^alpha by the three-term recurrence
//   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
inline RatPoly laguerre_assoc(unsigned long n, const Rational& alpha,
                              const RatPoly& x) {
  RatPoly lkm1(1);
  if (n == 0) return lkm1;
  RatPoly lk = RatPoly(Rational(1) + alpha) - x;
  for (unsigned long k = 1; k < n; ++k) {
    long kl = static_cast<long>(k);
    RatPoly lkp1 =
        ((RatPoly(Rational(2 * kl + 1) + alpha) - x) * lk -
         (Rational(kl) + alpha) * lkm1) *
        Rational(1, kl + 1);
    lkm1 = std::move(lk);
    lk = std::move(lkp1);
  }
  return lk;
}

inline BigReal laguerre_assoc(unsigned long n, const Rational& alpha,
                              const BigReal& x) {
  long digits = x.digits10();
  auto rat = [&](const Rational& q) { return BigReal::of(q, digits); };
  BigReal lkm1 = rat(1);
  if (n == 0) return lkm1;
  BigReal lk = rat(Rational(1) + alpha) - x;
  for (unsigned long k = 1; k < n; ++k) {
    long kl = static_cast<long>(k);
    BigReal lkp1 = ((rat(Rational(2 * kl + 1) + alpha) - x) * lk -
                    rat(Rational(kl) + alpha) * lkm1) /
                   rat(kl + 1);
    lkm1 = std::move(lk);
    lk = std::move(lkp1);
  }
  return lk;
}

}  // namespace giso

#pragma once

#include <optional>
#include <vector>

#include "giso/poly.hpp"

namespace giso {

// A real root of a rational polynomial: exact isolating interval plus a
// refined value. `exact` is set when the root is recognized as rational
// (verified by exact evaluation, never by proximity).
struct RealRoot {
  Rational lo, hi;  // lo <= root <= hi; lo == hi iff exact
  BigReal value;
  int multiplicity = 1;
  std::optional<Rational> exact;
};

struct RootOptions {
  std::optional<Rational> lo, hi;  // closed search interval when set
  long digits = BigReal::kDefaultDigits;
};

// All real roots of p in the requested interval, sorted ascending. Isolation
// by Sturm sign-variation counting on the squarefree factors (Yun), then
// bisection in exact rational arithmetic to the requested digits.
// Throws ZeroPolynomialError for the zero polynomial.
std::vector<RealRoot> poly_real_roots(const RatPoly& p, RootOptions opt = {});

// The rational with smallest denominator strictly inside (lo, hi).
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace giso

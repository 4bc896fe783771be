#include "giso/roots.hpp"

#include <algorithm>

#include "giso/errors.hpp"

namespace giso {

namespace {

// Scales by a positive constant only, so the sign structure survives.
RatPoly positive_normalize(const RatPoly& p) {
  if (p.is_zero()) return p;
  RatPoly n = normalize_primitive(p);
  if (p.leading().sign() < 0) n = -n;
  return n;
}

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> chain;
  chain.push_back(f);
  chain.push_back(f.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const RatPoly& a = chain[chain.size() - 2];
    const RatPoly& b = chain.back();
    RatPoly r = -divmod(a, b).remainder;
    if (r.is_zero()) break;
    chain.push_back(positive_normalize(r));
  }
  return chain;
}

int sign_at(const RatPoly& p, const Rational& x) {
  Rational v(0);
  for (size_t i = p.coeffs().size(); i-- > 0;) v = v * x + p.coeff(i);
  return v.sign();
}

long variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
  long var = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = p.is_zero() ? 0 : sign_at(p, x);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

// Number of distinct roots of the (squarefree) chain head in (a, b].
long count_in(const std::vector<RatPoly>& chain, const Rational& a,
              const Rational& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

Rational cauchy_bound(const RatPoly& p) {
  Rational m(0);
  const Rational lead = p.leading().abs();
  for (long i = 0; i < p.degree(); ++i) {
    Rational c = p.coeff(static_cast<size_t>(i)).abs() / lead;
    if (c > m) m = c;
  }
  return m + Rational(1);
}

struct Interval {
  Rational lo, hi;  // open-left, closed-right bookkeeping from Sturm counts
};

void isolate(const std::vector<RatPoly>& chain, const Rational& lo,
             const Rational& hi, long count, std::vector<Interval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / Rational(2);
  // A root exactly at the midpoint lands in the left half (a, mid].
  long left = count_in(chain, lo, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, count - left, out);
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::domain_error("simplest_rational: empty interval");
  if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
  if (hi.sign() <= 0) return -simplest_rational_between(-hi, -lo);
  // Stern-Brocot walk over nonnegative rationals.
  Rational ln(0), ld(1), rn(1), rd(0);
  for (int steps = 0; steps < 100000; ++steps) {
    Rational mn = ln + rn, md = ld + rd;
    Rational m = mn / md;
    if (m <= lo) {
      ln = mn;
      ld = md;
    } else if (m >= hi) {
      rn = mn;
      rd = md;
    } else {
      return m;
    }
  }
  return (lo + hi) / Rational(2);  // pathological interval; caller verifies
}

std::vector<RealRoot> poly_real_roots(const RatPoly& p, RootOptions opt) {
  if (p.is_zero()) throw ZeroPolynomialError();
  std::vector<RealRoot> roots;
  if (p.degree() == 0) return roots;

  const long digits = std::max<long>(opt.digits, 6);
  auto width_target = [&](const Rational& around) {
    Rational scale = around.abs();
    if (scale < Rational(1)) scale = Rational(1);
    return scale / Rational(10).pow(static_cast<unsigned long>(digits));
  };

  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    Rational bound = cauchy_bound(factor);
    Rational lo = opt.lo ? std::max(*opt.lo, -bound) : -bound;
    Rational hi = opt.hi ? std::min(*opt.hi, bound) : bound;
    if (!(lo < hi)) {
      if (opt.lo && opt.hi && *opt.lo == *opt.hi && sign_at(factor, lo) == 0) {
        roots.push_back({lo, lo, BigReal::of(lo, digits + 10), mult, lo});
      }
      continue;
    }
    auto chain = sturm_chain(factor);

    // Closed-interval semantics: Sturm counts (lo, hi], so a root exactly at
    // the left endpoint is picked up separately.
    if (opt.lo && sign_at(factor, lo) == 0)
      roots.push_back({lo, lo, BigReal::of(lo, digits + 10), mult, lo});

    std::vector<Interval> iso;
    isolate(chain, lo, hi, count_in(chain, lo, hi), iso);

    for (auto& iv : iso) {
      Rational a = iv.lo, b = iv.hi;
      std::optional<Rational> exact;
      if (sign_at(factor, b) == 0) {
        exact = b;
        a = b;
      } else {
        // Bisect on the sign of the squarefree factor; the interval brackets
        // a simple root of `factor`, so signs at the ends differ.
        int sa = sign_at(factor, a);
        if (sa == 0) {
          exact = a;
          b = a;
        } else {
          Rational target = width_target((a + b) / Rational(2));
          // Cheap exactness probe before grinding out ~digits bisections.
          for (int pass = 0; pass < 2 && !exact; ++pass) {
            Rational cand = simplest_rational_between(a, b);
            if (sign_at(factor, cand) == 0) {
              exact = cand;
              a = b = cand;
              break;
            }
            while (b - a > target) {
              Rational mid = (a + b) / Rational(2);
              int sm = sign_at(factor, mid);
              if (sm == 0) {
                exact = mid;
                a = b = mid;
                break;
              }
              (sm == sa ? a : b) = mid;
            }
          }
        }
      }
      RealRoot r;
      r.lo = a;
      r.hi = b;
      r.multiplicity = mult;
      r.exact = exact;
      r.value = exact ? BigReal::of(*exact, digits + 10)
                      : BigReal::of((a + b) / Rational(2), digits + 10);
      roots.push_back(std::move(r));
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& x, const RealRoot& y) { return x.value < y.value; });
  return roots;
}

}  // namespace giso

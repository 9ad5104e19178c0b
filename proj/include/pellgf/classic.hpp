#pragma once

#include "pellgf/classifier.hpp"

#include <cstdint>
#include <set>
#include <utility>

namespace pellgf {

// Fibonacci / Lucas specialization: same classification machinery, driven by
// X_{n+2} = X_{n+1} + X_n with initial vectors (0, 1) and (2, 1). Both
// inverted families are negated here.
inline GFSystem classic_system() {
  return GFSystem(Sequence(Integer(0), Integer(1), Integer(1), 1),
                  Sequence(Integer(2), Integer(1), Integer(1), 1), true);
}

struct FibLucasPair {
  std::int64_t n;
  Integer fib;
  Integer lucas;
};

inline FibLucasPair fib_lucas(std::int64_t n) {
  const Sequence f(Integer(0), Integer(1), Integer(1), 1);
  const Sequence l(Integer(2), Integer(1), Integer(1), 1);
  return {n, f.at(n), l.at(n)};
}

// x / (1 - x - x^2)
inline GFValue eval_fib_gf(const Rational& x) {
  Rational v = classic_system().eval(SeqKind::F, x);
  const bool integral = v.is_integer();
  return {std::move(v), integral};
}

// (2 - x) / (1 - x - x^2)
inline GFValue eval_lucas_gf(const Rational& x) {
  Rational v = classic_system().eval(SeqKind::L, x);
  const bool integral = v.is_integer();
  return {std::move(v), integral};
}

inline Classification classify_classic(SeqKind kind, const Rational& x) {
  return classify_system(classic_system(), kind, x);
}

// 5 F_n^2 - L_n^2. Alternates with |value| = 4: it is -4 at even n and +4
// at odd n (n = 0 gives 0 - 4 = -4).
inline Integer fib_lucas_form(std::int64_t n) {
  const FibLucasPair p = fib_lucas(n);
  return 5 * p.fib * p.fib - p.lucas * p.lucas;
}

// Exhaustively checks that the non-negative solutions of 5x^2 - y^2 = +-4
// with x, y <= bound are exactly the pairs (F_n, L_n) truncated to the
// bound, in both directions.
inline bool pell_correspondence(const Integer& bound) {
  if (bound < 1) throw std::invalid_argument("pell_correspondence: bound must be >= 1");

  std::set<std::pair<Integer, Integer>> scanned;
  for (Integer x = 0; x <= bound; ++x) {
    const Integer s = 5 * x * x;
    for (int d : {-4, 4}) {
      const Integer t = s + d;
      if (t < 0) continue;
      const IsqrtResult r = isqrt(t);
      if (r.exact && r.root <= bound) scanned.emplace(x, r.root);
    }
  }

  std::set<std::pair<Integer, Integer>> generated;
  const Sequence f(Integer(0), Integer(1), Integer(1), 1);
  const Sequence l(Integer(2), Integer(1), Integer(1), 1);
  for (std::int64_t n = 0;; ++n) {
    const Integer& fn = f.at(n);
    if (fn > bound) break;
    if (l.at(n) <= bound) generated.emplace(fn, l.at(n));
  }

  return scanned == generated;
}

}  // namespace pellgf

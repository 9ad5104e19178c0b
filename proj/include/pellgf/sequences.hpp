#pragma once

#include "pellgf/pell.hpp"
#include "pellgf/rational.hpp"

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pellgf {

enum class SeqKind { F, L };

constexpr int sign_pow(int eps, std::int64_t n) { return n % 2 == 0 ? 1 : eps; }

// Validated parameter bundle for one Pell equation x^2 - m y^2 = epsilon:
// the fundamental solution plus the derived recurrence coefficient 2a.
// Immutable after construction.
class PellContext {
 public:
  explicit PellContext(FundamentalSolution sol) : sol_(std::move(sol)), coef_(2 * sol_.a) {
    if (sol_.m < 2 || is_square(sol_.m))
      throw std::invalid_argument("PellContext: m must be non-square");
    if (sol_.a < 1 || sol_.b < 1)
      throw std::invalid_argument("PellContext: a and b must be positive");
    if (sol_.epsilon != 1 && sol_.epsilon != -1)
      throw std::invalid_argument("PellContext: epsilon must be +1 or -1");
    if (sol_.a * sol_.a - sol_.m * sol_.b * sol_.b != sol_.epsilon)
      throw std::invalid_argument("PellContext: a^2 - m b^2 != epsilon");
  }

  static PellContext from_m(const Integer& m) { return PellContext(fundamental_solution(m)); }

  const Integer& m() const { return sol_.m; }
  const Integer& a() const { return sol_.a; }
  const Integer& b() const { return sol_.b; }
  int epsilon() const { return sol_.epsilon; }
  const Integer& coef() const { return coef_; }
  const FundamentalSolution& solution() const { return sol_; }

 private:
  FundamentalSolution sol_;
  Integer coef_;
};

// Terms of X_{n+2} = coef * X_{n+1} + sign * X_n, extended on demand and
// cached. The cache is a deque, so references returned by at() stay valid
// while later terms are produced. Copies do not share the cache: hand each
// worker thread its own copy rather than sharing one instance.
class Sequence {
 public:
  Sequence(Integer x0, Integer x1, Integer coef, int sign)
      : coef_(std::move(coef)), sign_(sign), cache_{std::move(x0), std::move(x1)} {}

  const Integer& at(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("Sequence: negative index");
    while (static_cast<std::int64_t>(cache_.size()) <= n) {
      const std::size_t s = cache_.size();
      Integer next = coef_ * cache_[s - 1];
      if (sign_ > 0)
        next += cache_[s - 2];
      else
        next -= cache_[s - 2];
      cache_.push_back(std::move(next));
    }
    return cache_[static_cast<std::size_t>(n)];
  }

  // Closed form of sum_{n>=0} X_n x^n. The denominator 1 - coef*x - sign*x^2
  // has irrational roots, so it cannot vanish at a rational argument.
  Rational gf(const Rational& x) const {
    const Rational den = Rational(1) - Rational(coef_) * x - Rational(sign_) * x * x;
    if (den.is_zero())
      throw std::logic_error("Sequence::gf: denominator vanished at a rational argument");
    const Rational num = Rational(cache_[0]) + (Rational(cache_[1]) - Rational(coef_) * Rational(cache_[0])) * x;
    return num / den;
  }

  Rational gf_partial_sum(const Rational& x, std::int64_t last) const {
    if (last < 0) throw std::invalid_argument("Sequence: negative partial-sum index");
    Rational sum(at(0));
    Rational xpow(1);
    for (std::int64_t n = 1; n <= last; ++n) {
      xpow = xpow * x;
      sum = sum + Rational(at(n)) * xpow;
    }
    return sum;
  }

  const Integer& coef() const { return coef_; }
  int sign() const { return sign_; }

 private:
  Integer coef_;
  int sign_;
  mutable std::deque<Integer> cache_;
};

// F starts 0, b and L starts 1, a; both obey X_{n+2} = 2a X_{n+1} - eps X_n.
inline Sequence make_sequence(const PellContext& ctx, SeqKind kind) {
  return kind == SeqKind::F ? Sequence(Integer(0), ctx.b(), ctx.coef(), -ctx.epsilon())
                            : Sequence(Integer(1), ctx.a(), ctx.coef(), -ctx.epsilon());
}

inline Integer term(const PellContext& ctx, SeqKind kind, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("term: negative index");
  return make_sequence(ctx, kind).at(n);
}

inline std::vector<Integer> terms_upto(const PellContext& ctx, SeqKind kind, std::int64_t last) {
  if (last < 0) throw std::invalid_argument("terms_upto: negative index");
  const Sequence seq = make_sequence(ctx, kind);
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(last) + 1);
  for (std::int64_t n = 0; n <= last; ++n) out.push_back(seq.at(n));
  return out;
}

// (a + b sqrt(m))^n evaluated in Z[sqrt(m)] pair arithmetic by binary
// exponentiation. Conjugation flips the second component, so the power's
// components are exactly (L_n, F_n); this is the closed-form cross-check
// for the recurrences.
inline std::pair<Integer, Integer> solution_power(const PellContext& ctx, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("solution_power: negative exponent");
  const Integer& m = ctx.m();
  const auto mul = [&m](const std::pair<Integer, Integer>& x, const std::pair<Integer, Integer>& y) {
    return std::pair<Integer, Integer>(x.first * y.first + m * x.second * y.second,
                                       x.first * y.second + x.second * y.first);
  };
  std::pair<Integer, Integer> result(1, 0);
  std::pair<Integer, Integer> base(ctx.a(), ctx.b());
  for (std::uint64_t e = static_cast<std::uint64_t>(n); e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    if (e > 1) base = mul(base, base);
  }
  return result;
}

inline Integer closed_form_term(const PellContext& ctx, SeqKind kind, std::int64_t n) {
  const auto [l, f] = solution_power(ctx, n);
  return kind == SeqKind::L ? l : f;
}

// L_n^2 - m F_n^2 == eps^n: the pair (L_n, F_n) solves the Pell equation.
inline bool pell_invariant(const PellContext& ctx, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("pell_invariant: negative index");
  const Sequence f = make_sequence(ctx, SeqKind::F);
  const Sequence l = make_sequence(ctx, SeqKind::L);
  return l.at(n) * l.at(n) - ctx.m() * f.at(n) * f.at(n) == sign_pow(ctx.epsilon(), n);
}

namespace detail {

// The identity catalog, ids 7 through 15. The eps powers absorb the sign
// split between the two Pell cases; id 7 is checked in the reduced form
// F_{n-1} F_{n+1} - F_n^2 == -eps^{n-1} b^2, which the sweep harness
// validates against the full grid.
inline bool identity_holds(const PellContext& ctx, const Sequence& f, const Sequence& l, int id,
                           std::int64_t n, std::int64_t j) {
  const Integer& a = ctx.a();
  const Integer& b = ctx.b();
  const Integer& m = ctx.m();
  const int eps = ctx.epsilon();
  switch (id) {
    case 7:
      return f.at(n - 1) * f.at(n + 1) - f.at(n) * f.at(n) == -sign_pow(eps, n - 1) * b * b;
    case 8: {
      const Integer l2 = 2 * a * a - eps;
      return 2 * l.at(n - 1) * l.at(n + 1) == l.at(2 * n) + sign_pow(eps, n - 1) * l2;
    }
    case 9:
      return f.at(n) * l.at(j) - l.at(n) * f.at(j) == sign_pow(eps, j) * f.at(n - j);
    case 10:
      return 2 * l.at(n) * f.at(j) == f.at(n + j) - sign_pow(eps, j) * f.at(n - j);
    case 11:
      return 2 * m * f.at(n) * f.at(j) == l.at(n + j) - sign_pow(eps, j) * l.at(n - j);
    case 12:
      return l.at(n + 1) == a * l.at(n) + m * b * f.at(n);
    case 13:
      return f.at(n + 1) == a * f.at(n) + b * l.at(n);
    case 14:
      return 2 * l.at(n) * l.at(n) == l.at(2 * n) + sign_pow(eps, n);
    case 15:
      return 2 * l.at(n) * l.at(n + 1) == l.at(2 * n + 1) + sign_pow(eps, n) * a;
    default:
      throw std::invalid_argument("identity id must be in 7..15");
  }
}

inline bool identity_uses_second_index(int id) { return id >= 9 && id <= 11; }

inline void validate_identity_indices(int id, std::int64_t n, std::int64_t j) {
  if (id < 7 || id > 15) throw std::invalid_argument("identity id must be in 7..15");
  if (n < 0 || j < 0) throw std::invalid_argument("identity indices must be non-negative");
  if ((id == 7 || id == 8) && n < 1) throw std::invalid_argument("identity needs n >= 1");
  if (identity_uses_second_index(id) && j > n)
    throw std::invalid_argument("identity needs n >= j");
}

}  // namespace detail

// True iff catalog identity `id` holds exactly at the given indices. Ids
// without a second index ignore j.
inline bool check_identity(const PellContext& ctx, int id, std::int64_t n, std::int64_t j = 0) {
  detail::validate_identity_indices(id, n, j);
  const Sequence f = make_sequence(ctx, SeqKind::F);
  const Sequence l = make_sequence(ctx, SeqKind::L);
  return detail::identity_holds(ctx, f, l, id, n, j);
}

// b divides every F term; the recurrence preserves gcd with b.
inline bool b_divides_F(const PellContext& ctx, std::int64_t n) {
  return term(ctx, SeqKind::F, n) % ctx.b() == 0;
}

}  // namespace pellgf

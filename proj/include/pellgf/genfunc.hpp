#pragma once

#include "pellgf/sequences.hpp"

#include <cstdint>
#include <utility>

namespace pellgf {

struct GFValue {
  Rational value;
  bool is_integer;
};

// L(x) = (1 - a x) / (1 - 2a x + eps x^2), exact at any rational x. The
// denominator roots are a +- b sqrt(m) up to sign, irrational, so every
// rational argument is admissible, inside or outside the radius of
// convergence.
inline GFValue eval_gf(const PellContext& ctx, SeqKind kind, const Rational& x) {
  Rational v = make_sequence(ctx, kind).gf(x);
  const bool integral = v.is_integer();
  return {std::move(v), integral};
}

inline GFValue eval_L(const PellContext& ctx, const Rational& x) {
  return eval_gf(ctx, SeqKind::L, x);
}

// F(x) = b x / (1 - 2a x + eps x^2).
inline GFValue eval_F(const PellContext& ctx, const Rational& x) {
  return eval_gf(ctx, SeqKind::F, x);
}

inline Rational partial_sum(const PellContext& ctx, SeqKind kind, const Rational& x,
                            std::int64_t last) {
  return make_sequence(ctx, kind).gf_partial_sum(x, last);
}

// |x| < 1 / (a + b sqrt(m)), decided in integers: with x = p/q reduced and
// q > 0, require q - a|p| > 0 and then m b^2 p^2 < (q - a|p|)^2.
inline bool within_radius(const PellContext& ctx, const Rational& x) {
  const Integer p = abs(x.num());
  const Integer& q = x.den();
  const Integer slack = q - ctx.a() * p;
  if (slack <= 0) return false;
  return ctx.m() * ctx.b() * ctx.b() * p * p < slack * slack;
}

}  // namespace pellgf

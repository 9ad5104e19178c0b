#pragma once

#include "pellgf/genfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace pellgf {

// The four shapes of rational argument at which the generating functions
// take integer values. F-kind functions admit only the F families; L-kind
// functions admit all four.
enum class Family { f_ratio, f_ratio_inv, l_ratio, l_ratio_inv };

inline constexpr Family kFamilyOrder[] = {Family::f_ratio, Family::f_ratio_inv, Family::l_ratio,
                                          Family::l_ratio_inv};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::f_ratio:
      return "F_RATIO";
    case Family::f_ratio_inv:
      return "F_RATIO_INV";
    case Family::l_ratio:
      return "L_RATIO";
    case Family::l_ratio_inv:
      return "L_RATIO_INV";
  }
  throw std::logic_error("family_name: bad enum value");
}

inline std::int64_t family_min_index(Family f) {
  return f == Family::f_ratio_inv ? 1 : 0;
}

inline bool family_admissible(SeqKind kind, Family f) {
  return kind == SeqKind::L || f == Family::f_ratio || f == Family::f_ratio_inv;
}

// Constructive certificate that GF(family point at n) == k.
struct Witness {
  Family family;
  std::int64_t n;
  Integer k;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Classification {
  Rational value;
  bool is_integer = false;
  Integer k;                       // set when is_integer
  std::vector<Witness> witnesses;  // every matching (family, n), ordered by family then n
  std::optional<bool> radius_families_ok;  // set by classify_within_radius

  // An integer value with no witness would falsify the characterization;
  // it is surfaced as data, never swallowed.
  bool theorem_violation() const { return is_integer && witnesses.empty(); }
};

// Sequence pair plus sign convention: the shared engine behind the Pell
// classifier and the Fibonacci/Lucas one. Copies do not share term caches.
class GFSystem {
 public:
  GFSystem(Sequence f, Sequence l, bool negate_inverted)
      : f_(std::move(f)), l_(std::move(l)), negate_inverted_(negate_inverted) {}

  const Sequence& fseq() const { return f_; }
  const Sequence& lseq() const { return l_; }
  bool negate_inverted() const { return negate_inverted_; }

  Rational eval(SeqKind kind, const Rational& x) const {
    return (kind == SeqKind::F ? f_ : l_).gf(x);
  }

  // The rational argument attached to (family, n):
  //   F_RATIO      F_n / F_{n+1}    (n >= 0)
  //   F_RATIO_INV  F_{n+1} / F_n    (n >= 1)
  //   L_RATIO      L_n / L_{n+1}    (n >= 0)
  //   L_RATIO_INV  L_{n+1} / L_n    (n >= 0)
  // The inverted families carry a minus sign when negate_inverted() is set.
  Rational family_point(Family fam, std::int64_t n) const {
    if (n < family_min_index(fam))
      throw std::invalid_argument("family_point: index below the family minimum");
    const int s = negate_inverted_ ? -1 : 1;
    switch (fam) {
      case Family::f_ratio:
        return Rational(f_.at(n), f_.at(n + 1));
      case Family::f_ratio_inv:
        return Rational(s * f_.at(n + 1), f_.at(n));
      case Family::l_ratio:
        return Rational(l_.at(n), l_.at(n + 1));
      case Family::l_ratio_inv:
        return Rational(s * l_.at(n + 1), l_.at(n));
    }
    throw std::logic_error("family_point: bad enum value");
  }

 private:
  Sequence f_;
  Sequence l_;
  bool negate_inverted_;
};

inline GFSystem pell_system(const PellContext& ctx) {
  return GFSystem(make_sequence(ctx, SeqKind::F), make_sequence(ctx, SeqKind::L),
                  ctx.epsilon() < 0);
}

inline constexpr std::int64_t kDefaultSearchCap = 4096;

// All (family, n) whose point equals x. Both sequences grow strictly from
// index 1 on and the reduced entries of consecutive-term ratios grow with
// them, so the scan stops once every candidate ratio has left the box
// bounded by max(|p|, q); that takes O(log max(|p|, q)) terms.
inline std::vector<Witness> find_witnesses(const GFSystem& sys, SeqKind kind, const Rational& x,
                                           const Integer& k,
                                           std::int64_t n_cap = kDefaultSearchCap) {
  std::vector<Witness> out;
  Integer bound = abs(x.num());
  if (x.den() > bound) bound = x.den();
  // Constant along each sequence: the recurrence has unit trailing
  // coefficient, so gcd of consecutive terms never changes.
  const Integer gf = boost::multiprecision::gcd(sys.fseq().at(0), sys.fseq().at(1));
  const Integer gl = boost::multiprecision::gcd(sys.lseq().at(0), sys.lseq().at(1));
  const bool use_l = family_admissible(kind, Family::l_ratio);
  for (std::int64_t n = 0;; ++n) {
    for (Family fam : kFamilyOrder) {
      if (!family_admissible(kind, fam) || n < family_min_index(fam)) continue;
      if (sys.family_point(fam, n) == x) out.push_back({fam, n, k});
    }
    const bool f_done = sys.fseq().at(n) / gf > bound;
    const bool l_done = !use_l || sys.lseq().at(n) / gl > bound;
    if (n >= 1 && f_done && l_done) break;
    if (n >= n_cap) throw std::logic_error("find_witnesses: search cap exceeded");
  }
  std::stable_sort(out.begin(), out.end(), [](const Witness& a, const Witness& b) {
    return a.family != b.family ? a.family < b.family : a.n < b.n;
  });
  return out;
}

inline Classification classify_system(const GFSystem& sys, SeqKind kind, const Rational& x,
                                      std::int64_t n_cap = kDefaultSearchCap) {
  Classification c;
  c.value = sys.eval(kind, x);
  c.is_integer = c.value.is_integer();
  if (c.is_integer) {
    c.k = c.value.num();
    c.witnesses = find_witnesses(sys, kind, x, c.k, n_cap);
  }
  return c;
}

// Exact integrality verdict with constructive witnesses: evaluates the
// closed form and, on an integer value, searches the admissible families.
inline Classification classify(const PellContext& ctx, SeqKind kind, const Rational& x) {
  return classify_system(pell_system(ctx), kind, x);
}

// Complete rational solution set of GF(x) = k. For k != 0 the level set is
// the root set of eps*k x^2 + B x + C = 0 with
//   L kind: B = a(1 - 2k),    C = k - 1
//   F kind: B = -(2 a k + b), C = k
// which is nonempty exactly when the discriminant is a perfect square; the
// (+)-branch root comes first. k = 0 gives the single point 1/a (L kind)
// or 0 (F kind).
inline std::vector<Rational> integer_level_set(const PellContext& ctx, SeqKind kind,
                                               const Integer& k) {
  std::vector<Rational> roots;
  if (k == 0) {
    roots.push_back(kind == SeqKind::L ? Rational(Integer(1), ctx.a()) : Rational(0));
  } else {
    const Integer quad = ctx.epsilon() * k;
    Integer lin, constant;
    if (kind == SeqKind::L) {
      lin = ctx.a() * (1 - 2 * k);
      constant = k - 1;
    } else {
      lin = -(2 * ctx.a() * k + ctx.b());
      constant = k;
    }
    const Integer disc = lin * lin - 4 * quad * constant;
    if (disc >= 0) {
      const IsqrtResult r = isqrt(disc);
      if (r.exact) {
        roots.emplace_back(-lin + r.root, 2 * quad);
        if (r.root != 0) roots.emplace_back(-lin - r.root, 2 * quad);
      }
    }
  }
  for (const Rational& x : roots)
    if (eval_gf(ctx, kind, x).value != Rational(k))
      throw std::logic_error("integer_level_set: root failed re-evaluation");
  return roots;
}

// Families that can witness an integer value inside the radius of
// convergence; the full lists collapse there:
//   eps = +1:          F_RATIO, any n, either kind
//   eps = -1, L kind:  F_RATIO at even n, or L_RATIO at odd n
//   eps = -1, F kind:  F_RATIO at even n
inline bool radius_family_allowed(int epsilon, SeqKind kind, Family fam, std::int64_t n) {
  if (epsilon > 0) return fam == Family::f_ratio;
  if (fam == Family::f_ratio) return n % 2 == 0;
  return kind == SeqKind::L && fam == Family::l_ratio && n % 2 == 1;
}

// classify restricted to the radius of convergence. Rejects arguments
// outside it and checks that every witness has the collapsed family shape,
// recording the outcome in radius_families_ok.
inline Classification classify_within_radius(const PellContext& ctx, SeqKind kind,
                                             const Rational& x) {
  if (!within_radius(ctx, x))
    throw std::invalid_argument(
        "classify_within_radius: argument outside the radius of convergence");
  Classification c = classify(ctx, kind, x);
  if (c.is_integer) {
    bool ok = !c.witnesses.empty();
    for (const Witness& w : c.witnesses)
      ok = ok && radius_family_allowed(ctx.epsilon(), kind, w.family, w.n);
    c.radius_families_ok = ok;
  }
  return c;
}

}  // namespace pellgf

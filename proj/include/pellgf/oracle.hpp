#pragma once

#include "pellgf/classic.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace pellgf {

// MISSING_WITNESS: an integer value with no family witness (the
// characterization's reverse direction failed). FAMILY_NOT_INTEGER: a family
// point that evaluates non-integer (the forward direction failed).
// RADIUS_FAMILY_MISMATCH: a witness inside the radius of convergence falls
// outside the collapsed family lists.
enum class Diagnosis { missing_witness, family_not_integer, radius_family_mismatch };

inline std::string_view diagnosis_name(Diagnosis d) {
  switch (d) {
    case Diagnosis::missing_witness:
      return "MISSING_WITNESS";
    case Diagnosis::family_not_integer:
      return "FAMILY_NOT_INTEGER";
    case Diagnosis::radius_family_mismatch:
      return "RADIUS_FAMILY_MISMATCH";
  }
  throw std::logic_error("diagnosis_name: bad enum value");
}

struct IntegerPoint {
  Rational x;
  Integer k;
  std::vector<Witness> witnesses;
};

struct Violation {
  Rational x;
  Rational value;
  Diagnosis diagnosis;
};

// Result of one box scan: every reduced p/q with |p| <= bound and
// 1 <= q <= bound classified, integer points recorded with witnesses, plus
// the family-enumeration cross-check. Identical inputs yield identical
// reports regardless of the worker count.
struct SweepReport {
  std::string target;  // decimal m, or "classic"
  SeqKind kind = SeqKind::F;
  std::int64_t bound = 0;
  bool radius_only = false;
  std::uint64_t points_tested = 0;
  std::vector<IntegerPoint> integer_points;  // ascending by x
  std::vector<Violation> violations;         // ascending by x
  bool box_family_agree = false;

  bool clean() const { return violations.empty() && box_family_agree; }
};

namespace detail {

struct SweepSpec {
  const GFSystem* base;
  const PellContext* ctx;  // nullptr for the Fibonacci/Lucas system
  SeqKind kind;
  std::int64_t bound;
  bool radius_only;
};

struct SweepPartial {
  std::uint64_t points_tested = 0;
  std::vector<IntegerPoint> integer_points;
  std::vector<Violation> violations;
};

// Scans the rows q = q_start, q_start + q_step, ... of the (p, q) grid.
// Each worker owns a copy of the system, so term caches are never shared.
inline SweepPartial sweep_rows(const SweepSpec& spec, std::int64_t q_start, std::int64_t q_step) {
  const GFSystem sys = *spec.base;
  SweepPartial part;
  for (std::int64_t q = q_start; q <= spec.bound; q += q_step) {
    for (std::int64_t p = -spec.bound; p <= spec.bound; ++p) {
      if (std::gcd(p, q) != 1) continue;  // reduced fractions only
      Rational x(p, q);
      if (spec.radius_only && !within_radius(*spec.ctx, x)) continue;
      ++part.points_tested;
      Rational value = sys.eval(spec.kind, x);
      if (!value.is_integer()) continue;
      Integer k = value.num();
      std::vector<Witness> ws = find_witnesses(sys, spec.kind, x, k);
      if (ws.empty()) {
        part.violations.push_back({x, value, Diagnosis::missing_witness});
      } else if (spec.radius_only) {
        for (const Witness& w : ws) {
          if (!radius_family_allowed(spec.ctx->epsilon(), spec.kind, w.family, w.n)) {
            part.violations.push_back({x, value, Diagnosis::radius_family_mismatch});
            break;
          }
        }
      }
      part.integer_points.push_back({std::move(x), std::move(k), std::move(ws)});
    }
  }
  return part;
}

// The family points that fall inside the scanned region, each checked to
// evaluate to an integer. Ratio families leave the box for good once the
// reduced denominator passes the bound, inverted families once the
// numerator does; both are monotone from index 1 on.
inline std::vector<Rational> family_points_in_box(const GFSystem& base, const PellContext* ctx,
                                                  SeqKind kind, std::int64_t bound,
                                                  bool radius_only,
                                                  std::vector<Violation>& violations) {
  const GFSystem sys = base;
  const Integer box(bound);
  std::set<Rational> points;
  for (Family fam : kFamilyOrder) {
    if (!family_admissible(kind, fam)) continue;
    for (std::int64_t n = family_min_index(fam);; ++n) {
      const Rational x = sys.family_point(fam, n);
      const Integer mag = abs(x.num());
      bool include = mag <= box && x.den() <= box;
      if (include && radius_only)
        include = radius_family_allowed(ctx->epsilon(), kind, fam, n) && within_radius(*ctx, x);
      if (include) {
        const Rational value = sys.eval(kind, x);
        if (!value.is_integer())
          violations.push_back({x, value, Diagnosis::family_not_integer});
        points.insert(x);
      }
      const bool ratio = fam == Family::f_ratio || fam == Family::l_ratio;
      if (n >= 1 && (ratio ? x.den() > box : mag > box)) break;
    }
  }
  return {points.begin(), points.end()};
}

inline SweepReport sweep_impl(const GFSystem& base, const PellContext* ctx, std::string target,
                              SeqKind kind, std::int64_t bound, bool radius_only, int jobs) {
  if (bound < 1) throw std::invalid_argument("sweep: bound must be >= 1");
  if (radius_only && ctx == nullptr)
    throw std::invalid_argument("sweep: the radius filter needs a Pell context");
  if (jobs < 1) jobs = 1;

  const SweepSpec spec{&base, ctx, kind, bound, radius_only};
  std::vector<SweepPartial> parts(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    parts[0] = sweep_rows(spec, 1, 1);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
      workers.emplace_back(
          [&parts, &spec, t, jobs] { parts[static_cast<std::size_t>(t)] = sweep_rows(spec, t + 1, jobs); });
    for (std::thread& w : workers) w.join();
  }

  SweepReport rep;
  rep.target = std::move(target);
  rep.kind = kind;
  rep.bound = bound;
  rep.radius_only = radius_only;
  for (SweepPartial& part : parts) {
    rep.points_tested += part.points_tested;
    std::move(part.integer_points.begin(), part.integer_points.end(),
              std::back_inserter(rep.integer_points));
    std::move(part.violations.begin(), part.violations.end(), std::back_inserter(rep.violations));
  }

  const std::vector<Rational> family_points =
      family_points_in_box(base, ctx, kind, bound, radius_only, rep.violations);

  std::sort(rep.integer_points.begin(), rep.integer_points.end(),
            [](const IntegerPoint& a, const IntegerPoint& b) { return a.x < b.x; });
  std::sort(rep.violations.begin(), rep.violations.end(), [](const Violation& a, const Violation& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.diagnosis < b.diagnosis;
  });

  rep.box_family_agree = rep.integer_points.size() == family_points.size();
  for (std::size_t i = 0; rep.box_family_agree && i < family_points.size(); ++i)
    rep.box_family_agree = rep.integer_points[i].x == family_points[i];

  return rep;
}

}  // namespace detail

inline SweepReport sweep(const PellContext& ctx, SeqKind kind, std::int64_t bound,
                         bool radius_only = false, int jobs = 1) {
  const GFSystem sys = pell_system(ctx);
  return detail::sweep_impl(sys, &ctx, ctx.m().str(), kind, bound, radius_only, jobs);
}

inline SweepReport sweep_classic(SeqKind kind, std::int64_t bound, int jobs = 1) {
  const GFSystem sys = classic_system();
  return detail::sweep_impl(sys, nullptr, "classic", kind, bound, false, jobs);
}

// Confirms by exhaustive scan that no y in [1, min(y_bound, b - 1)] admits
// x^2 - m y^2 = +-1. With y_bound >= b this is a complete minimality
// confirmation of the fundamental solution; smaller bounds give a capped
// scan for contexts whose b is out of desk range.
inline bool minimality_scan(const Integer& m, const Integer& y_bound) {
  if (y_bound < 1) throw std::invalid_argument("minimality_scan: y_bound must be >= 1");
  const FundamentalSolution sol = fundamental_solution(m);
  Integer limit = sol.b - 1;
  if (y_bound < limit) limit = y_bound;
  for (Integer y = 1; y <= limit; ++y) {
    const Integer my2 = m * y * y;
    if (is_square(my2 + 1) || is_square(my2 - 1)) return false;
  }
  return true;
}

struct IdentityFailure {
  int id;
  std::int64_t n;
  std::int64_t j;
};

struct IdentityGridReport {
  std::uint64_t checks = 0;
  std::vector<IdentityFailure> failures;

  bool all_pass() const { return failures.empty(); }
};

// Runs every catalog identity over its full admissible index range up to
// n_max (second index j sweeps 0..n where applicable).
inline IdentityGridReport identity_grid(const PellContext& ctx, std::int64_t n_max) {
  if (n_max < 2) throw std::invalid_argument("identity_grid: n_max must be >= 2");
  const Sequence f = make_sequence(ctx, SeqKind::F);
  const Sequence l = make_sequence(ctx, SeqKind::L);
  IdentityGridReport rep;
  const auto run = [&](int id, std::int64_t n, std::int64_t j) {
    ++rep.checks;
    if (!detail::identity_holds(ctx, f, l, id, n, j)) rep.failures.push_back({id, n, j});
  };
  for (int id : {7, 8})
    for (std::int64_t n = 1; n <= n_max; ++n) run(id, n, 0);
  for (int id : {9, 10, 11})
    for (std::int64_t n = 0; n <= n_max; ++n)
      for (std::int64_t j = 0; j <= n; ++j) run(id, n, j);
  for (int id : {12, 13, 14, 15})
    for (std::int64_t n = 0; n <= n_max; ++n) run(id, n, 0);
  return rep;
}

struct SeriesCheck {
  bool reached_tolerance = false;  // some partial sum got within tolerance of the closed form
  std::int64_t stop_index = -1;    // first index where that happened
  std::int64_t monotone_from = 0;  // |closed - partial| strictly decreasing from here on
  bool tail_monotone = false;      // the decrease set in before stop_index and held past it
};

// Partial sums against the closed form, all in exact rationals. Intended
// for arguments strictly inside the radius of convergence; x = 0 is
// degenerate (every partial sum is already exact).
inline SeriesCheck series_check(const PellContext& ctx, SeqKind kind, const Rational& x,
                                std::int64_t max_terms, const Rational& tolerance) {
  const Sequence seq = make_sequence(ctx, kind);
  const Rational closed = seq.gf(x);
  SeriesCheck out;
  Rational sum(0);
  Rational xpow(1);
  Rational prev_diff(0);
  std::int64_t past_stop = 0;
  for (std::int64_t n = 0; n <= max_terms; ++n) {
    if (n > 0) xpow = xpow * x;
    sum = sum + Rational(seq.at(n)) * xpow;
    const Rational diff = abs(closed - sum);
    if (n > 0 && !(diff < prev_diff)) out.monotone_from = n;
    prev_diff = diff;
    if (out.stop_index < 0 && diff < tolerance) {
      out.stop_index = n;
      out.reached_tolerance = true;
    }
    if (out.stop_index >= 0 && ++past_stop > 10) break;  // confirm the decrease holds past the stop
  }
  out.tail_monotone = out.reached_tolerance && out.monotone_from < out.stop_index;
  return out;
}

}  // namespace pellgf

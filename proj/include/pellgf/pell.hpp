#pragma once

#include "pellgf/integer.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pellgf {

// One full period of the continued fraction of sqrt(m) for non-square m.
// The expansion is [a0; p1, p2, ..., pk] with pk == 2*a0.
struct CFExpansion {
  Integer m;
  Integer a0;
  std::vector<Integer> period;

  std::string str() const {
    std::string s = "[" + a0.str() + ";";
    for (std::size_t i = 0; i < period.size(); ++i) {
      if (i) s += ",";
      s += period[i].str();
    }
    return s + "]";
  }
};

// Minimal positive solution of x^2 - m y^2 = +-1.
struct FundamentalSolution {
  Integer m;
  Integer a;
  Integer b;
  int epsilon;  // a^2 - m b^2
};

// PQa recurrence on the complete quotients (P + sqrt(m)) / Q. The state
// (P, Q) for the fractional part is purely periodic, so the period ends at
// the first return to the initial state.
inline CFExpansion continued_fraction_sqrt(const Integer& m) {
  if (m < 1) throw std::invalid_argument("m must be a natural number");
  const IsqrtResult root = isqrt(m);
  if (root.exact) throw std::invalid_argument("m must be non-square");
  const Integer& a0 = root.root;

  CFExpansion cf{m, a0, {}};
  Integer p = a0;
  Integer q = m - a0 * a0;
  const Integer p_first = p, q_first = q;
  for (;;) {
    // floor((p + sqrt(m)) / q) == floor((p + a0) / q): sqrt(m) is irrational,
    // so the fractional part never carries the quotient across an integer.
    Integer ai = (p + a0) / q;
    p = ai * q - p;
    q = (m - p * p) / q;
    cf.period.push_back(std::move(ai));
    if (p == p_first && q == q_first) break;
  }
  if (cf.period.back() != 2 * a0)
    throw std::logic_error("continued_fraction_sqrt: period does not close on 2*a0");
  return cf;
}

// The convergent at the end of the first period; its sign is (-1)^period.
inline FundamentalSolution fundamental_solution(const CFExpansion& cf) {
  Integer h_prev = 1, h = cf.a0;
  Integer k_prev = 0, k = 1;
  for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
    Integer h_next = cf.period[i] * h + h_prev;
    Integer k_next = cf.period[i] * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
  const int eps = (cf.period.size() % 2 == 0) ? 1 : -1;
  FundamentalSolution sol{cf.m, std::move(h), std::move(k), eps};
  if (sol.a * sol.a - sol.m * sol.b * sol.b != eps)
    throw std::logic_error("fundamental_solution: convergent does not solve the equation");
  return sol;
}

inline FundamentalSolution fundamental_solution(const Integer& m) {
  return fundamental_solution(continued_fraction_sqrt(m));
}

}  // namespace pellgf

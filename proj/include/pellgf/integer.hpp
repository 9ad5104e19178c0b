#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace pellgf {

// Arbitrary-precision signed integer. Everything in this library is exact;
// no floating point appears anywhere.
using Integer = boost::multiprecision::cpp_int;

struct IsqrtResult {
  Integer root;  // floor(sqrt(n))
  bool exact;    // root * root == n
};

// Floor square root by Newton iteration. The start value 2^ceil(bits/2) is
// strictly above sqrt(n), from where the iteration decreases monotonically
// and stops exactly at floor(sqrt(n)), for operands of any width.
inline IsqrtResult isqrt(const Integer& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative operand");
  if (n == 0) return {Integer(0), true};
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  Integer x = Integer(1) << ((bits + 1) / 2);
  for (;;) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  return {x, x * x == n};
}

inline bool is_square(const Integer& n) {
  if (n < 0) return false;
  return isqrt(n).exact;
}

}  // namespace pellgf

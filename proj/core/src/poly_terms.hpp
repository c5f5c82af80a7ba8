#pragma once

// Small helpers shared by the closed-form evaluators. Exponents such as
// jn - (5/4)j^2 - j/2 - 1/4 are carried as four times their value and only
// divided out once a whole term has been assembled.

#include <stdexcept>
#include <string>

#include "orthocount/exactnum.hpp"
#include "orthocount/profile.hpp"

namespace orthocount::detail {

inline bool odd(int x) { return (x % 2) != 0; }

inline int sq(FormType t) { return sign(t) * sign(t); }

/// x / 2 for even x; an odd x means a parity check was skipped upstream.
inline int half(int x) {
  if (odd(x)) throw std::logic_error("half-integer exponent or index: " + std::to_string(x) + "/2");
  return x / 2;
}

/// q^(x4 / 4), which must be an integer power.
inline LaurentPoly q4(int x4) {
  if (x4 % 4 != 0) throw std::logic_error("non-integral exponent " + std::to_string(x4) + "/4");
  return LaurentPoly::q(x4 / 4);
}

/// acc += c * q^(x4/4) * body
inline void add_term(LaurentPoly& acc, const BigRational& c, int x4, const LaurentPoly& body) {
  if (c == 0 || body.is_zero()) return;
  if (x4 % 4 != 0) throw std::logic_error("non-integral exponent " + std::to_string(x4) + "/4");
  acc += (body * c).shifted(x4 / 4);
}

template <typename F>
LaurentPoly sum_over(int lo, int hi, F&& f) {
  LaurentPoly acc;
  for (int m = lo; m <= hi; ++m) acc += f(m);
  return acc;
}

[[noreturn]] inline void invalid(InvalidReason r, const std::string& msg) {
  throw InvalidParams(ValidityVerdict::fail(r, msg));
}

inline void check_dims(int i, int j, int n) {
  if (n < 0 || i < 0 || j < i || i + j > n)
    invalid(InvalidReason::range_violation, "need 0 <= i <= j and i + j <= n");
}

}  // namespace orthocount::detail

#pragma once

#include <stdexcept>

#include "orthocount/exactnum.hpp"

namespace orthocount {

struct InvalidRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ProductKind { psi_plus, psi_minus, chi };

/// One of the range products prod_{k=a}^{b} f(k); b = a - 1 is the empty product.
struct RangeProduct {
  ProductKind kind;
  int a;
  int b;

  LaurentPoly expand() const;
};

/// prod_{k=a}^{b} (q^k + 1)
LaurentPoly psi_plus(int a, int b);
/// prod_{k=a}^{b} (q^k - 1)
LaurentPoly psi_minus(int a, int b);
/// prod_{k=a}^{b} (q^{2k-1} - 1)
LaurentPoly chi(int a, int b);

/// Number of a-dimensional subspaces of F_q^b, extended to all integers:
/// 0 when a < 0 or 0 <= b < a, 1 for (b, a) = (-1, 0), and 0 for any other
/// negative b.
LaurentPoly gauss_binomial(int b, int a);

/// gauss_binomial(b, a) with q replaced by q^2.
LaurentPoly gauss_binomial_sq(int b, int a);

}  // namespace orthocount

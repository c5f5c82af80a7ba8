#include "orthocount/qseries.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace orthocount {

namespace {

void check_range(const char* name, int a, int b) {
  if (a < 0 || b < a - 1)
    throw InvalidRange(std::string(name) + "(" + std::to_string(a) + ", " + std::to_string(b) +
                       "): need a >= 0 and b >= a - 1");
}

LaurentPoly factor(ProductKind kind, int k) {
  switch (kind) {
    case ProductKind::psi_plus: return LaurentPoly::q(k) + LaurentPoly(1);
    case ProductKind::psi_minus: return LaurentPoly::q(k) - LaurentPoly(1);
    case ProductKind::chi: return LaurentPoly::q(2 * k - 1) - LaurentPoly(1);
  }
  return {};
}

// The same few products are requested many thousands of times by the gamma
// evaluators and the identity suite.
class ProductCache {
 public:
  LaurentPoly get(ProductKind kind, int a, int b) {
    const auto key = std::make_tuple(static_cast<int>(kind), a, b);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    LaurentPoly r(1);
    for (int k = a; k <= b; ++k) r *= factor(kind, k);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, r);
    return r;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, LaurentPoly> cache_;
};

ProductCache& products() {
  static ProductCache cache;
  return cache;
}

class BinomialCache {
 public:
  LaurentPoly get(int b, int a, int dilation) {
    const auto key = std::make_tuple(b, a, dilation);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    LaurentPoly r = div_exact(psi_minus(b - a + 1, b), psi_minus(1, a));
    if (dilation != 1) r = r.dilated(dilation);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, r);
    return r;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, LaurentPoly> cache_;
};

BinomialCache& binomials() {
  static BinomialCache cache;
  return cache;
}

LaurentPoly binomial(int b, int a, int dilation) {
  if (a < 0) return {};
  if (b < 0) return (b == -1 && a == 0) ? LaurentPoly(1) : LaurentPoly();
  if (b < a) return {};
  return binomials().get(b, a, dilation);
}

}  // namespace

LaurentPoly RangeProduct::expand() const {
  switch (kind) {
    case ProductKind::psi_plus: return psi_plus(a, b);
    case ProductKind::psi_minus: return psi_minus(a, b);
    case ProductKind::chi: return chi(a, b);
  }
  return {};
}

LaurentPoly psi_plus(int a, int b) {
  check_range("psi_plus", a, b);
  return products().get(ProductKind::psi_plus, a, b);
}

LaurentPoly psi_minus(int a, int b) {
  check_range("psi_minus", a, b);
  return products().get(ProductKind::psi_minus, a, b);
}

LaurentPoly chi(int a, int b) {
  check_range("chi", a, b);
  return products().get(ProductKind::chi, a, b);
}

LaurentPoly gauss_binomial(int b, int a) { return binomial(b, a, 1); }

LaurentPoly gauss_binomial_sq(int b, int a) { return binomial(b, a, 2); }

}  // namespace orthocount

#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace orthocount {

using BigInt = mpz_class;
// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation.
using BigRational = mpq_class;

struct NotDivisible : std::domain_error {
  NotDivisible() : std::domain_error("polynomial division is not exact") {}
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by the zero polynomial") {}
};

struct ZeroBase : std::domain_error {
  ZeroBase() : std::domain_error("negative exponent evaluated at q = 0") {}
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const BigRational& r);
BigRational parse_rational(std::string_view text);

/// Sparse Laurent polynomial in q with rational coefficients.
///
/// Zero coefficients are never stored, so two equal polynomials always have
/// identical term maps.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigRational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const BigRational& c);  // NOLINT

  static LaurentPoly monomial(const BigRational& c, int exponent);
  /// q^exponent
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;      // throws on zero
  int low_degree() const;  // throws on zero
  BigRational coeff(int exponent) const;
  BigRational leading_coeff() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigRational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }
  friend LaurentPoly operator*(const BigRational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by q^e.
  LaurentPoly shifted(int e) const;
  /// Substitute q -> q^k (k >= 1).
  LaurentPoly dilated(int k) const;

  BigRational eval(const BigRational& q0) const;

  /// Descending exponents, e.g. "1/2*q^4 - 1/2*q^2 + 1".
  std::string str() const;
  /// Inverse of str(); also accepts any sum of terms in that grammar.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int e, const BigRational& c);
  Terms terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned e);

/// Exact quotient a / b in the Laurent ring; throws NotDivisible or DivisionByZero.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Monic greatest common divisor in Q[q, 1/q], normalised to lowest exponent 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

BigRational eval_at(const LaurentPoly& p, const BigRational& q0);

/// A quotient of Laurent polynomials kept in lowest terms.
///
/// Canonical form: common polynomial factors removed, both sides shifted so
/// that neither has negative exponents and at least one has a constant term,
/// denominator monic.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(LaurentPoly num, LaurentPoly den);  // NOLINT
  Ratio(const LaurentPoly& p) : Ratio(p, LaurentPoly(1)) {}  // NOLINT

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  BigRational eval(const BigRational& q0) const;
  std::string str() const;

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace orthocount

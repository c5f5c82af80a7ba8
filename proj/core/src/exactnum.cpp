#include "orthocount/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace orthocount {

std::string to_string(const BigRational& r) { return r.get_str(); }

BigRational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  bool slash = false;
  bool digits = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '/' && !slash && digits && k + 1 < text.size()) {
      slash = true;
    } else {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!digits) throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  BigRational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw ParseError("malformed rational '" + s + "'");
  r.canonicalize();
  return r;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, BigRational(c));
}

LaurentPoly::LaurentPoly(const BigRational& c) { add_term(0, c); }

LaurentPoly LaurentPoly::monomial(const BigRational& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  if (terms_.empty()) throw std::domain_error("lowest exponent of the zero polynomial");
  return terms_.begin()->first;
}

BigRational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational LaurentPoly::leading_coeff() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second;
}

void LaurentPoly::add_term(int e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    // A hand-built mpq_class may not be in lowest terms.
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  BigRational t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      t = ca * cb;
      r.add_term(ea + eb, t);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  if (e == 0) return *this;
  LaurentPoly r;
  for (const auto& [x, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), x + e, c);
  return r;
}

LaurentPoly LaurentPoly::dilated(int k) const {
  if (k < 1) throw std::invalid_argument("dilation factor must be positive");
  LaurentPoly r;
  for (const auto& [x, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), x * k, c);
  return r;
}

BigRational LaurentPoly::eval(const BigRational& q0) const {
  if (terms_.empty()) return 0;
  if (q0 == 0) {
    if (terms_.begin()->first < 0) throw ZeroBase();
    return coeff(0);
  }
  // Horner from the top exponent down, then scale by q0^low.
  BigRational acc = 0;
  int prev = terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = it->first; k < prev; ++k) acc *= q0;
    acc += it->second;
    prev = it->first;
  }
  int low = prev;
  BigRational scale = 1;
  BigRational base = low >= 0 ? q0 : BigRational(1 / q0);
  for (int k = 0; k < std::abs(low); ++k) scale *= base;
  return acc * scale;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    const BigRational& c = it->second;
    const bool negative = c < 0;
    BigRational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    out += 'q';
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial");
  if (s == "0") return {};

  LaurentPoly r;
  std::size_t pos = 0;
  auto read_int = [&](std::size_t& p) {
    std::size_t start = p;
    if (p < s.size() && s[p] == '-') ++p;
    std::size_t digits_start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == digits_start) throw ParseError("expected integer in '" + s + "'");
    return std::stoi(s.substr(start, p - start));
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    BigRational c = 1;
    bool has_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      c = parse_rational(s.substr(start, pos - start));
      has_coeff = true;
    }
    int e = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'q')) {
      if (s[pos] == '*') {
        if (!has_coeff) throw ParseError("dangling '*' in '" + s + "'");
        ++pos;
      }
      if (pos >= s.size() || s[pos] != 'q') throw ParseError("expected 'q' in '" + s + "'");
      ++pos;
      e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = read_int(pos);
      }
    } else if (!has_coeff) {
      throw ParseError("expected a term in '" + s + "'");
    }
    r.add_term(e, sign * c);
  }
  return r;
}

LaurentPoly pow(const LaurentPoly& base, unsigned e) {
  LaurentPoly r(1);
  LaurentPoly b = base;
  while (e != 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return r;
}

namespace {

using Dense = std::vector<BigRational>;  // index = exponent, lowest first

// Strip the monomial factor: p = q^low * dense(q) with dense[0] != 0.
Dense to_dense(const LaurentPoly& p, int& low) {
  low = p.low_degree();
  Dense d(static_cast<std::size_t>(p.degree() - low + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - low)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int low) {
  LaurentPoly r;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) r += LaurentPoly::monomial(d[k], low + static_cast<int>(k));
  return r;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

// Ordinary polynomial long division; returns quotient, leaves remainder in a.
Dense divmod(Dense& a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Dense quot(a.size() - b.size() + 1);
  const BigRational& lead = b.back();
  BigRational t;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRational& top = a[k + b.size() - 1];
    if (top == 0) continue;
    t = top / lead;
    quot[k] = t;
    for (std::size_t m = 0; m < b.size(); ++m) a[k + m] -= t * b[m];
  }
  trim(a);
  return quot;
}

}  // namespace

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  int la = 0;
  int lb = 0;
  Dense da = to_dense(a, la);
  Dense db = to_dense(b, lb);
  Dense quot = divmod(da, db);
  if (!da.empty()) throw NotDivisible();
  return from_dense(quot, la - lb);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  int ignored = 0;
  Dense x = a.is_zero() ? Dense{} : to_dense(a, ignored);
  Dense y = b.is_zero() ? Dense{} : to_dense(b, ignored);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = x;
    divmod(r, y);
    x = std::move(y);
    y = std::move(r);
  }
  BigRational lead = x.back();
  for (auto& c : x) c /= lead;
  return from_dense(x, 0);
}

BigRational eval_at(const LaurentPoly& p, const BigRational& q0) { return p.eval(q0); }

Ratio::Ratio(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = gcd(num_, den_);
  if (!(g == LaurentPoly(1))) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  int shift = -std::min(num_.low_degree(), den_.low_degree());
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  BigRational lead = den_.leading_coeff();
  if (lead != 1) {
    BigRational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

BigRational Ratio::eval(const BigRational& q0) const {
  BigRational d = den_.eval(q0);
  if (d == 0) throw std::domain_error("ratio denominator vanishes at q = " + q0.get_str());
  return num_.eval(q0) / d;
}

std::string Ratio::str() const {
  if (den_ == LaurentPoly(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Ratio operator+(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) { return Ratio(a.num_ * b.num_, a.den_ * b.den_); }

}  // namespace orthocount

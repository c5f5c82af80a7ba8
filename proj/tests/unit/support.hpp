#pragma once

#include <ostream>
#include <string>

#include "orthocount/exactnum.hpp"

namespace orthocount {

// Readable gtest failure messages.
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const Ratio& r, std::ostream* os) { *os << "(" << r.num().str() << ") / (" << r.den().str() << ")"; }

}  // namespace orthocount

namespace orthocount::testing {

inline LaurentPoly P(const std::string& text) { return LaurentPoly::parse(text); }
inline BigRational R(const std::string& text) { return parse_rational(text); }
inline BigRational big(long long v) { return BigRational(static_cast<long>(v)); }
inline BigRational at(const LaurentPoly& p, long q) { return p.eval(BigRational(q)); }

}  // namespace orthocount::testing

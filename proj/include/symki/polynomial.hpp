// Dense univariate polynomials over Z and Q, enough for cyclotomic-field
// arithmetic: multiplication, exact division with remainder, extended gcd
// over Q, cyclotomic polynomials, and resultants.
#pragma once

#include <vector>

#include "symki/rational.hpp"

namespace symki {
namespace poly {

using exact::Integer;
using exact::Rational;

// Coefficient vector, index = degree.  Normalized: no trailing zeros.
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

void normalize(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial

QPoly qpoly_from(const ZPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);

// Euclidean division a = q*b + r, deg r < deg b.  b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

// g = gcd(a,b) monic, with u*a + v*b = g.
struct XgcdResult {
    QPoly g, u, v;
};
XgcdResult xgcd(const QPoly& a, const QPoly& b);

// n-th cyclotomic polynomial over Z, by exact division of x^n - 1.
ZPoly cyclotomic(unsigned n);

// Resultant of two integer polynomials via the Sylvester matrix (Bareiss).
Integer resultant(const ZPoly& a, const ZPoly& b);

}  // namespace poly
}  // namespace symki

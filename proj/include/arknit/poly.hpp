#pragma once

#include "arknit/field.hpp"
#include "arknit/matrix.hpp"

#include <optional>
#include <utility>

namespace arknit {

// Polynomials over a prime field, coefficients ascending (coeff[i] of t^i).
// The zero polynomial is the empty vector; every function returns trimmed
// output (no trailing zeros).

Vec poly_trim(Vec a);
bool poly_is_zero(const Vec& a);
// degree of zero is -1
int poly_deg(const Vec& a);

Vec poly_add(const PrimeField& F, const Vec& a, const Vec& b);
Vec poly_sub(const PrimeField& F, const Vec& a, const Vec& b);
Vec poly_scale(const PrimeField& F, uint32_t c, const Vec& a);
Vec poly_mul(const PrimeField& F, const Vec& a, const Vec& b);
// leading coefficient scaled to 1; zero stays zero
Vec poly_monic(const PrimeField& F, const Vec& a);
// division with remainder; divisor must be nonzero
std::pair<Vec, Vec> poly_divmod(const PrimeField& F, const Vec& a, const Vec& b);
Vec poly_rem(const PrimeField& F, const Vec& a, const Vec& b);
// monic gcd
Vec poly_gcd(const PrimeField& F, Vec a, Vec b);
// g = gcd(a,b) monic together with u,v solving u*a + v*b = g
struct PolyBezout {
  Vec g, u, v;
};
PolyBezout poly_extended_gcd(const PrimeField& F, const Vec& a, const Vec& b);
uint32_t poly_eval(const PrimeField& F, const Vec& a, uint32_t x);
// base^e mod m, m nonconstant
Vec poly_powmod(const PrimeField& F, Vec base, uint64_t e, const Vec& m);
// roots in the prime field, ascending, each listed once
Vec poly_roots(const PrimeField& F, const Vec& a);

}  // namespace arknit

#include "arknit/poly.hpp"

#include "arknit/errors.hpp"

namespace arknit {

Vec poly_trim(Vec a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool poly_is_zero(const Vec& a) {
  for (uint32_t c : a)
    if (c != 0) return false;
  return true;
}

int poly_deg(const Vec& a) {
  for (size_t i = a.size(); i > 0; --i)
    if (a[i - 1] != 0) return static_cast<int>(i - 1);
  return -1;
}

Vec poly_add(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t x = i < a.size() ? a[i] : 0;
    uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  return poly_trim(std::move(r));
}

Vec poly_sub(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t x = i < a.size() ? a[i] : 0;
    uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  return poly_trim(std::move(r));
}

Vec poly_scale(const PrimeField& F, uint32_t c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return poly_trim(std::move(r));
}

Vec poly_mul(const PrimeField& F, const Vec& a, const Vec& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return poly_trim(std::move(r));
}

Vec poly_monic(const PrimeField& F, const Vec& a) {
  Vec t = poly_trim(a);
  if (t.empty()) return t;
  return poly_scale(F, F.inv(t.back()), t);
}

std::pair<Vec, Vec> poly_divmod(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec bb = poly_trim(b);
  if (bb.empty()) throw InputError("poly_divmod: division by zero polynomial");
  Vec rem = poly_trim(a);
  int db = poly_deg(bb);
  if (poly_deg(rem) < db) return {Vec{}, rem};
  Vec quo(rem.size() - bb.size() + 1, 0);
  uint32_t lead_inv = F.inv(bb.back());
  for (int d = poly_deg(rem); d >= db; d = poly_deg(rem)) {
    uint32_t c = F.mul(rem[static_cast<size_t>(d)], lead_inv);
    size_t shift = static_cast<size_t>(d - db);
    quo[shift] = c;
    for (size_t i = 0; i < bb.size(); ++i)
      rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bb[i]));
    rem = poly_trim(std::move(rem));
    if (rem.empty()) break;
  }
  return {poly_trim(std::move(quo)), rem};
}

Vec poly_rem(const PrimeField& F, const Vec& a, const Vec& b) {
  return poly_divmod(F, a, b).second;
}

Vec poly_gcd(const PrimeField& F, Vec a, Vec b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Vec r = poly_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

PolyBezout poly_extended_gcd(const PrimeField& F, const Vec& a, const Vec& b) {
  // invariant: r0 = u0*a + v0*b and r1 = u1*a + v1*b
  Vec r0 = poly_trim(a), r1 = poly_trim(b);
  Vec u0{1}, v0{}, u1{}, v1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(F, r0, r1);
    Vec u2 = poly_sub(F, u0, poly_mul(F, q, u1));
    Vec v2 = poly_sub(F, v0, poly_mul(F, q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.empty()) return {r0, u0, v0};
  uint32_t s = F.inv(r0.back());
  return {poly_scale(F, s, r0), poly_scale(F, s, u0), poly_scale(F, s, v0)};
}

uint32_t poly_eval(const PrimeField& F, const Vec& a, uint32_t x) {
  uint32_t r = 0;
  for (size_t i = a.size(); i > 0; --i) r = F.add(F.mul(r, x), a[i - 1]);
  return r;
}

Vec poly_powmod(const PrimeField& F, Vec base, uint64_t e, const Vec& m) {
  if (poly_deg(m) < 1) throw InputError("poly_powmod: modulus must be nonconstant");
  Vec result{1};
  base = poly_rem(F, base, m);
  while (e > 0) {
    if (e & 1) result = poly_rem(F, poly_mul(F, result, base), m);
    base = poly_rem(F, poly_mul(F, base, base), m);
    e >>= 1;
  }
  return result;
}

Vec poly_roots(const PrimeField& F, const Vec& a) {
  Vec roots;
  if (poly_is_zero(a)) return roots;
  for (uint32_t x = 0; x < F.p(); ++x)
    if (poly_eval(F, a, x) == 0) roots.push_back(x);
  return roots;
}

}  // namespace arknit

#include "arknit/field.hpp"

#include <string>

namespace arknit {

namespace {
bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}
}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) +
                     " is not prime");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw InputError("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

void require_same(const PrimeField& a, const PrimeField& b, const char* where) {
  if (a != b) {
    throw InputError(std::string(where) + ": mixed characteristics " +
                     std::to_string(a.p()) + " and " + std::to_string(b.p()));
  }
}

}  // namespace arknit

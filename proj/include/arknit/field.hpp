#pragma once

#include <cstdint>

#include "arknit/errors.hpp"

namespace arknit {

// Prime field F_p. Scalars are canonical residues in [0, p). The modulus is
// validated once at construction; every operation that combines scalars from
// two containers checks that both carry the same field (see require_same).
class PrimeField {
 public:
  PrimeField() : p_(0) {}  // invalid sentinel, usable only after assignment
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  bool valid() const { return p_ != 0; }

  std::uint32_t reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<std::uint32_t>(s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  // Fermat inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) {
    return a.p_ != b.p_;
  }

 private:
  std::uint32_t p_;
};

// Throws InputError when two objects carry different characteristics.
void require_same(const PrimeField& a, const PrimeField& b, const char* where);

}  // namespace arknit

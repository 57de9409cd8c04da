#pragma once

#include <cstdint>
#include <stdexcept>

namespace apc {

// Prime field GF(p). Elements are residues 0..p-1 stored as bytes, so p is
// capped at 251. Primality is checked by trial division at construction.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t p = 2) : p_(p) {
    if (p < 2 || p > 251)
      throw std::invalid_argument("field modulus must be in [2, 251]");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("field modulus must be prime");
  }

  std::uint32_t p() const { return p_; }

  std::uint8_t add(std::uint8_t x, std::uint8_t y) const {
    return static_cast<std::uint8_t>((std::uint32_t(x) + y) % p_);
  }
  std::uint8_t sub(std::uint8_t x, std::uint8_t y) const {
    return static_cast<std::uint8_t>((std::uint32_t(x) + p_ - y) % p_);
  }
  std::uint8_t mul(std::uint8_t x, std::uint8_t y) const {
    return static_cast<std::uint8_t>((std::uint32_t(x) * y) % p_);
  }
  std::uint8_t neg(std::uint8_t x) const { return sub(0, x); }

  // Multiplicative inverse by scan; the fields here are tiny.
  std::uint8_t inv(std::uint8_t x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    for (std::uint32_t b = 1; b < p_; ++b)
      if ((b * x) % p_ == 1) return static_cast<std::uint8_t>(b);
    throw std::logic_error("no inverse found in a prime field");
  }

  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace apc

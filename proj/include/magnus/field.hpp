#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "magnus/errors.hpp"

namespace magnus {

// GF(p^n) arithmetic tables over the lexicographically least monic irreducible
// polynomial (coefficients compared high degree first). Element index encodes
// the polynomial c0 + c1 x + ... as c0 + c1 p + ...; 0 = zero, 1 = one.
struct FieldTable {
  std::uint32_t q = 0, p = 0, n = 0;
  std::vector<std::uint16_t> add_t, mul_t;  // q*q
  std::vector<std::uint16_t> neg_t, inv_t;  // inv_t[0] = 0 placeholder
  std::vector<std::uint16_t> frob_pow;      // n*q: v -> v^(p^i)
  std::uint16_t primitive_element = 0;      // least index generating F_q^*
  std::vector<std::uint32_t> poly;          // c0..cn of the modulus, cn = 1

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_t[a * q + b]; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_t[a * q + b]; }
  std::uint16_t neg(std::uint16_t a) const { return neg_t[a]; }
  std::uint16_t inv(std::uint16_t a) const { return inv_t[a]; }
  std::uint16_t frob(std::uint16_t a, std::uint32_t i) const {
    return frob_pow[(i % n) * q + a];
  }
  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const {
    std::uint16_t r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
};

// cached; q <= 1024, q = p^n. Throws not_prime_power otherwise.
std::shared_ptr<const FieldTable> finite_field(std::uint32_t q);

}  // namespace magnus

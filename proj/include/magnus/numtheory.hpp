#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace magnus {

bool is_prime(std::uint64_t n);

// (prime, exponent) pairs, ascending primes
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending

std::uint64_t euler_phi(std::uint64_t n);

// q = p^k with k >= 1; returns false for q < 2
bool is_prime_power(std::uint64_t q, std::uint64_t* p = nullptr,
                    std::uint32_t* k = nullptr);

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t n);

// partitions of k as weakly decreasing positive parts, deterministic order
std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t k);

std::uint64_t ipow(std::uint64_t b, std::uint32_t e);

}  // namespace magnus

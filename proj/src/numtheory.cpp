#include "magnus/numtheory.hpp"

#include <algorithm>

namespace magnus {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    std::uint32_t e = 0;
    while (n % d == 0) n /= d, ++e;
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t m = out.size();
    std::uint64_t pe = 1;
    for (std::uint32_t i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < m; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

bool is_prime_power(std::uint64_t q, std::uint64_t* p, std::uint32_t* k) {
  if (q < 2) return false;
  auto f = factorize(q);
  if (f.size() != 1) return false;
  if (p) *p = f[0].first;
  if (k) *k = f[0].second;
  return true;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  // descending-first recursive enumeration
  auto rec = [&](auto&& self, std::uint32_t rem, std::uint32_t maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t part = std::min(rem, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rem - part, part);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace magnus

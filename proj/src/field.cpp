#include "magnus/field.hpp"

#include <map>
#include <mutex>

#include "magnus/numtheory.hpp"

namespace magnus {

namespace {

// polynomials over F_p as coefficient vectors c0..cd, cd != 0 (or empty = 0)
using Poly = std::vector<std::uint32_t>;

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  while (a.size() >= m.size()) {
    std::uint32_t lead = a.back();
    if (lead) {
      std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t sub = std::uint64_t(m[i]) * lead % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

bool divides(const Poly& d, Poly a, std::uint32_t p) {
  // monicize d
  Poly m = d;
  std::uint32_t lead = m.back();
  if (lead != 1) {
    // lead^-1 mod p
    std::uint32_t li = 1;
    for (std::uint32_t x = 1; x < p; ++x)
      if (x * lead % p == 1) {
        li = x;
        break;
      }
    for (auto& c : m) c = static_cast<std::uint32_t>(std::uint64_t(c) * li % p);
  }
  return poly_mod(std::move(a), m, p).empty();
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // trial division by all monic polynomials of degree 1..deg/2
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// lexicographically least monic irreducible of degree n (high-degree
// coefficients compared first)
Poly least_irreducible(std::uint32_t p, std::uint32_t n) {
  Poly f(n + 1, 0);
  f[n] = 1;
  // iterate coefficient vectors (c_{n-1}, ..., c_0) in lexicographic order
  std::vector<std::uint32_t> digits(n, 0);
  while (true) {
    for (std::uint32_t i = 0; i < n; ++i) f[n - 1 - i] = digits[i];
    Poly g = f;
    while (!g.empty() && g.back() == 0) g.pop_back();
    if (g.size() == n + 1 && is_irreducible(g, p)) return g;
    // increment
    std::int64_t pos = n - 1;
    while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
    if (pos < 0) throw error(errc::bad_parameter, "no irreducible polynomial found");
    ++digits[pos];
  }
}

std::uint16_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0, mult = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    v += a[i] * mult;
    mult *= p;
  }
  return static_cast<std::uint16_t>(v);
}

Poly decode(std::uint32_t v, std::uint32_t p) {
  Poly a;
  while (v) {
    a.push_back(v % p);
    v /= p;
  }
  return a;
}

std::shared_ptr<const FieldTable> build_field(std::uint32_t q) {
  std::uint64_t p64;
  std::uint32_t n;
  if (q > 1024 || !is_prime_power(q, &p64, &n))
    throw error(errc::not_prime_power, std::to_string(q));
  auto ft = std::make_shared<FieldTable>();
  ft->q = q;
  ft->p = static_cast<std::uint32_t>(p64);
  ft->n = n;
  const std::uint32_t p = ft->p;
  ft->poly = least_irreducible(p, n);

  ft->add_t.resize(std::size_t(q) * q);
  ft->mul_t.resize(std::size_t(q) * q);
  ft->neg_t.resize(q);
  ft->inv_t.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly pa = decode(a, p);
    // addition is digitwise mod p
    for (std::uint32_t b = 0; b < q; ++b) {
      std::uint32_t sum = 0, mult = 1, x = a, y = b;
      for (std::uint32_t i = 0; i < n; ++i) {
        sum += ((x % p) + (y % p)) % p * mult;
        mult *= p;
        x /= p;
        y /= p;
      }
      ft->add_t[std::size_t(a) * q + b] = static_cast<std::uint16_t>(sum);
      Poly prod = poly_mod(poly_mul(pa, decode(b, p), p), ft->poly, p);
      ft->mul_t[std::size_t(a) * q + b] = encode(prod, p);
    }
    std::uint32_t negv = 0, mult = 1, x = a;
    for (std::uint32_t i = 0; i < n; ++i) {
      negv += (p - x % p) % p * mult;
      mult *= p;
      x /= p;
    }
    ft->neg_t[a] = static_cast<std::uint16_t>(negv);
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (ft->mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)) == 1) {
        ft->inv_t[a] = static_cast<std::uint16_t>(b);
        break;
      }

  ft->frob_pow.resize(std::size_t(n) * q);
  for (std::uint32_t a = 0; a < q; ++a) ft->frob_pow[a] = static_cast<std::uint16_t>(a);
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t a = 0; a < q; ++a)
      ft->frob_pow[std::size_t(i) * q + a] =
          ft->pow(ft->frob_pow[std::size_t(i - 1) * q + a], p);

  for (std::uint32_t a = 2; a < q; ++a) {
    std::uint32_t ord = 1;
    std::uint16_t x = static_cast<std::uint16_t>(a);
    while (x != 1) {
      x = ft->mul(x, static_cast<std::uint16_t>(a));
      ++ord;
    }
    if (ord == q - 1) {
      ft->primitive_element = static_cast<std::uint16_t>(a);
      break;
    }
  }
  if (q == 2) ft->primitive_element = 1;
  return ft;
}

}  // namespace

std::shared_ptr<const FieldTable> finite_field(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const FieldTable>> registry;
  std::lock_guard lock(mu);
  auto it = registry.find(q);
  if (it != registry.end()) return it->second;
  auto ft = build_field(q);
  registry.emplace(q, ft);
  return ft;
}

}  // namespace magnus

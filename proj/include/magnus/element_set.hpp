#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace magnus {

// Membership mask over element indices [0, n). The representation of subgroups,
// normal subgroups, cores and Frattini subgroups.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::uint32_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  static ElementSet full(std::uint32_t universe) {
    ElementSet s(universe);
    for (auto& w : s.w_) w = ~0ull;
    if (universe % 64) s.w_.back() = (1ull << (universe % 64)) - 1;
    return s;
  }

  std::uint32_t universe() const { return n_; }

  bool test(std::uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void add(std::uint32_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  void remove(std::uint32_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool subgroup() const { return subgroup_; }
  void mark_subgroup(bool v = true) { subgroup_ = v; }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    subgroup_ = false;
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    subgroup_ = false;
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  bool operator==(const ElementSet& o) const { return n_ == o.n_ && w_ == o.w_; }

  bool subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  // lexicographic on the sorted element lists (equivalently on the bit words)
  bool lex_less(const ElementSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] == o.w_[i]) continue;
      std::uint64_t d = w_[i] ^ o.w_[i];
      std::uint64_t low = d & (~d + 1);
      return (w_[i] & low) != 0;  // we contain the smallest differing element
    }
    return false;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned b = std::countr_zero(w);
        f(static_cast<std::uint32_t>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> w_;
  bool subgroup_ = false;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace magnus

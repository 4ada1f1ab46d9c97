#include "magnus/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace magnus {

std::string Backend::element_name(Elt x) const { return "g" + std::to_string(x); }

// ---- Group handle -------------------------------------------------------------

struct Group::Impl {
  std::shared_ptr<const Backend> backend;
  std::vector<Elt> gens;
  std::vector<std::string> labels;
  limits lim;
  mutable GroupCaches caches;
};

Group Group::adopt(std::shared_ptr<const Backend> b, std::vector<Elt> gens,
                   std::vector<std::string> labels, limits lim) {
  Group g;
  g.impl_ = std::make_shared<Impl>();
  g.impl_->backend = std::move(b);
  g.impl_->gens = std::move(gens);
  g.impl_->labels = std::move(labels);
  g.impl_->lim = lim;
  return g;
}

std::size_t Group::order() const { return impl_->backend->order(); }
Elt Group::mul(Elt a, Elt b) const { return impl_->backend->mul(a, b); }
Elt Group::inv(Elt a) const { return impl_->backend->inv(a); }
std::span<const Elt> Group::generators() const { return impl_->gens; }
std::string Group::backend_name() const { return impl_->backend->name(); }
const std::vector<std::string>& Group::labels() const { return impl_->labels; }
const limits& Group::caps() const { return impl_->lim; }
GroupCaches& Group::caches() const { return impl_->caches; }
const Backend& Group::backend() const { return *impl_->backend; }

std::string Group::element_name(Elt x) const {
  if (x < impl_->labels.size() && !impl_->labels[x].empty()) return impl_->labels[x];
  return impl_->backend->element_name(x);
}

Elt Group::power(Elt x, std::uint64_t e) const {
  Elt r = identity, b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

// ---- dense-table backend --------------------------------------------------------

namespace {

class DenseBackend final : public Backend {
 public:
  DenseBackend(std::size_t n, std::vector<std::uint16_t> table)
      : n_(n), table_(std::move(table)) {
    inv_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b)
        if (table_[a * n_ + b] == 0) {
          inv_[a] = static_cast<Elt>(b);
          break;
        }
    }
  }
  std::size_t order() const override { return n_; }
  Elt mul(Elt a, Elt b) const override { return table_[a * n_ + b]; }
  Elt inv(Elt a) const override { return inv_[a]; }
  const char* name() const override { return "dense-table"; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> table_;
  std::vector<Elt> inv_;
};

// greedy small generating set: repeatedly adjoin the least element outside the
// closure so far
std::vector<Elt> greedy_generators(const Backend& b) {
  std::size_t n = b.order();
  std::vector<Elt> gens;
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::size_t in_count = 1;
  std::vector<Elt> members{0};
  while (in_count < n) {
    Elt next = 0;
    for (Elt x = 1; x < n; ++x)
      if (!in[x]) {
        next = x;
        break;
      }
    gens.push_back(next);
    // close under multiplication by the enlarged generator set
    std::vector<Elt> queue = members;
    queue.push_back(next);
    if (!in[next]) {
      in[next] = 1;
      ++in_count;
      members.push_back(next);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Elt x = queue[qi];
      for (Elt g : gens) {
        Elt y = b.mul(x, g);
        if (!in[y]) {
          in[y] = 1;
          ++in_count;
          members.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

std::optional<std::array<Elt, 3>> find_nonassociative_triple(const Backend& b,
                                                             exec mode,
                                                             const limits& lim) {
  const std::size_t n = b.order();
  auto check_full = [&](void) -> std::optional<std::array<Elt, 3>> {
    std::atomic<std::uint64_t> best{~0ull};
    par_for_static(mode, n, [&](std::size_t a) {
      for (Elt x = 0; x < n; ++x) {
        Elt ax = b.mul(static_cast<Elt>(a), x);
        for (Elt c = 0; c < n; ++c) {
          if (b.mul(ax, c) != b.mul(static_cast<Elt>(a), b.mul(x, c))) {
            std::uint64_t code = ((std::uint64_t)a * n + x) * n + c;
            std::uint64_t cur = best.load();
            while (code < cur && !best.compare_exchange_weak(cur, code)) {
            }
            break;
          }
        }
      }
    });
    if (best.load() == ~0ull) return std::nullopt;
    std::uint64_t code = best.load();
    Elt c = static_cast<Elt>(code % n);
    code /= n;
    return std::array<Elt, 3>{static_cast<Elt>(code / n), static_cast<Elt>(code % n), c};
  };

  if (n <= lim.full_assoc_cap) return check_full();

  // generator-element pairs plus a deterministic sample of triples
  std::vector<Elt> gens = greedy_generators(b);
  std::atomic<std::uint64_t> best{~0ull};
  par_for_static(mode, n, [&](std::size_t a) {
    for (Elt g : gens)
      for (Elt c = 0; c < n; ++c) {
        if (b.mul(b.mul(static_cast<Elt>(a), g), c) !=
            b.mul(static_cast<Elt>(a), b.mul(g, c))) {
          std::uint64_t code = ((std::uint64_t)a * n + g) * n + c;
          std::uint64_t cur = best.load();
          while (code < cur && !best.compare_exchange_weak(cur, code)) {
          }
          break;
        }
      }
  });
  if (best.load() == ~0ull) {
    // splitmix64 stream, fixed seed: deterministic across runs
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
      state += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      return z ^ (z >> 31);
    };
    for (std::size_t i = 0; i < lim.assoc_samples; ++i) {
      Elt a = static_cast<Elt>(next() % n), x = static_cast<Elt>(next() % n),
          c = static_cast<Elt>(next() % n);
      if (b.mul(b.mul(a, x), c) != b.mul(a, b.mul(x, c)))
        return std::array<Elt, 3>{a, x, c};
    }
    return std::nullopt;
  }
  std::uint64_t code = best.load();
  Elt c = static_cast<Elt>(code % n);
  code /= n;
  return std::array<Elt, 3>{static_cast<Elt>(code / n), static_cast<Elt>(code % n), c};
}

Group build_from_cayley(const std::vector<std::vector<Elt>>& table,
                        std::vector<std::string> labels, const limits& lim) {
  const std::size_t n = table.size();
  if (n == 0) throw error(errc::bad_parameter, "empty table");
  if (n > lim.dense_cap)
    throw error(errc::order_cap_exceeded,
                "table order " + std::to_string(n) + " exceeds dense cap");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw error(errc::bad_parameter, "row " + std::to_string(r) + " is not length n");
    for (std::size_t c = 0; c < n; ++c)
      if (table[r][c] >= n)
        throw error(errc::bad_parameter, "entry out of range at (" +
                                             std::to_string(r) + "," +
                                             std::to_string(c) + ")");
  }
  // latin square
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<char> seen(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[table[r][c]])
        throw error(errc::not_latin_square,
                    "row " + std::to_string(r) + " repeats value " +
                        std::to_string(table[r][c]));
      seen[table[r][c]] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<char> seen(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[table[r][c]])
        throw error(errc::not_latin_square,
                    "column " + std::to_string(c) + " repeats value " +
                        std::to_string(table[r][c]));
      seen[table[r][c]] = 1;
    }
  }
  // identity
  std::size_t e = n;
  for (std::size_t cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      if (table[cand][a] != a || table[a][cand] != a) ok = false;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e == n) throw error(errc::no_identity, "no two-sided identity element");

  // relabel so the identity sits at index 0 (swap 0 <-> e)
  std::vector<std::uint16_t> flat(n * n);
  auto relab = [&](Elt x) -> Elt { return x == 0 ? static_cast<Elt>(e)
                                        : x == e ? 0
                                                 : x; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[relab(static_cast<Elt>(a)) * n + relab(static_cast<Elt>(b))] =
          static_cast<std::uint16_t>(relab(table[a][b]));
  if (!labels.empty() && e != 0 && labels.size() >= n)
    std::swap(labels[0], labels[e]);

  auto backend = std::make_shared<DenseBackend>(n, std::move(flat));
  if (auto t = find_nonassociative_triple(*backend, exec::parallel, lim))
    throw error(errc::non_associative,
                "(" + std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," +
                    std::to_string((*t)[2]) + ")");
  std::vector<Elt> gens = greedy_generators(*backend);
  return Group::adopt(std::move(backend), std::move(gens), std::move(labels), lim);
}

Group dense_from_fn(std::size_t n, const std::function<Elt(Elt, Elt)>& mulfn,
                    std::vector<Elt> gens, std::vector<std::string> labels,
                    const limits& lim) {
  if (n > lim.dense_cap)
    throw error(errc::order_cap_exceeded,
                "order " + std::to_string(n) + " exceeds dense cap");
  std::vector<std::uint16_t> flat(n * n);
  par_for_static(exec::parallel, n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] =
          static_cast<std::uint16_t>(mulfn(static_cast<Elt>(a), static_cast<Elt>(b)));
  });
  auto backend = std::make_shared<DenseBackend>(n, std::move(flat));
  if (gens.empty()) gens = greedy_generators(*backend);
  return Group::adopt(std::move(backend), std::move(gens), std::move(labels), lim);
}

Group densify(const Group& g) {
  std::vector<Elt> gens(g.generators().begin(), g.generators().end());
  return dense_from_fn(
      g.order(), [&](Elt a, Elt b) { return g.mul(a, b); }, gens, {}, g.caps());
}

Group subgroup_as_group(const Group& g, const ElementSet& h) {
  if (!h.test(Group::identity))
    throw error(errc::not_subgroup, "subgroup mask misses the identity");
  std::vector<Elt> members = h.to_vector();  // ascending, members[0] = 0
  std::vector<Elt> pos(g.order(), ~Elt(0));
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<Elt>(i);
  return dense_from_fn(
      members.size(),
      [&](Elt a, Elt b) {
        Elt y = g.mul(members[a], members[b]);
        if (pos[y] == ~Elt(0)) throw error(errc::not_subgroup, "mask is not closed");
        return pos[y];
      },
      {}, {}, g.caps());
}

// ---- permutation-closure backend -------------------------------------------------

namespace {

struct PermKey {
  const std::uint16_t* p;
  std::uint32_t d;
  bool operator==(const PermKey& o) const {
    return std::memcmp(p, o.p, d * sizeof(std::uint16_t)) == 0;
  }
};
struct PermKeyHash {
  std::size_t operator()(const PermKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t i = 0; i < k.d; ++i) {
      h ^= k.p[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

class PermBackend final : public Backend {
 public:
  PermBackend(std::uint32_t degree, std::vector<std::vector<std::uint16_t>> gens,
              const limits& lim)
      : d_(degree) {
    // identity first, then deterministic BFS over right-multiplication by the
    // generators in the given order
    std::vector<std::uint16_t> id(d_);
    std::iota(id.begin(), id.end(), 0);
    push(id);
    std::vector<std::uint16_t> tmp(d_);
    for (std::size_t qi = 0; qi < count_; ++qi) {
      for (const auto& gen : gens) {
        // refetch the row pointer: push() may reallocate the flat storage
        const std::uint16_t* x = row(static_cast<Elt>(qi));
        // left-multiplication by gen matches mul(): (gen.x)(i) = gen(x(i))
        for (std::uint32_t i = 0; i < d_; ++i) tmp[i] = gen[x[i]];
        if (lookup(tmp.data()) == kNone) {
          if (count_ >= lim.perm_closure_cap)
            throw error(errc::closure_cap_exceeded,
                        "permutation closure exceeds " +
                            std::to_string(lim.perm_closure_cap) + " elements");
          push(tmp);
        }
      }
    }
    inv_.resize(count_);
    for (std::size_t x = 0; x < count_; ++x) {
      const std::uint16_t* p = row(static_cast<Elt>(x));
      for (std::uint32_t i = 0; i < d_; ++i) tmp[p[i]] = static_cast<std::uint16_t>(i);
      inv_[x] = lookup(tmp.data());
    }
  }

  std::size_t order() const override { return count_; }
  Elt mul(Elt a, Elt b) const override {
    thread_local std::vector<std::uint16_t> tmp;
    tmp.resize(d_);
    const std::uint16_t* pa = row(a);
    const std::uint16_t* pb = row(b);
    // (a.b)(i) = a(b(i)): apply b first
    for (std::uint32_t i = 0; i < d_; ++i) tmp[i] = pa[pb[i]];
    return lookup(tmp.data());
  }
  Elt inv(Elt a) const override { return inv_[a]; }
  const char* name() const override { return "permutation-closure"; }

  std::string element_name(Elt x) const override {
    const std::uint16_t* p = row(x);
    std::ostringstream os;
    std::vector<char> seen(d_, 0);
    bool any = false;
    for (std::uint32_t i = 0; i < d_; ++i) {
      if (seen[i] || p[i] == i) continue;
      os << '(' << i;
      seen[i] = 1;
      for (std::uint32_t j = p[i]; j != i; j = p[j]) {
        os << ' ' << j;
        seen[j] = 1;
      }
      os << ')';
      any = true;
    }
    return any ? os.str() : "()";
  }

  std::uint32_t degree() const { return d_; }
  const std::uint16_t* row(Elt x) const { return flat_.data() + std::size_t(x) * d_; }
  Elt lookup(const std::uint16_t* p) const {
    auto it = index_.find(PermKey{p, d_});
    return it == index_.end() ? kNone : it->second;
  }
  static constexpr Elt kNone = ~Elt(0);

 private:
  void push(const std::vector<std::uint16_t>& p) {
    // map keys point into flat_; rebuild the index after a reallocation
    bool realloc = flat_.size() + d_ > flat_.capacity();
    flat_.insert(flat_.end(), p.begin(), p.end());
    Elt id = static_cast<Elt>(count_++);
    if (realloc) {
      index_.clear();
      for (Elt x = 0; x < count_; ++x) index_.emplace(PermKey{row(x), d_}, x);
    } else {
      index_.emplace(PermKey{row(id), d_}, id);
    }
  }

  std::uint32_t d_;
  std::vector<std::uint16_t> flat_;
  std::size_t count_ = 0;
  std::unordered_map<PermKey, Elt, PermKeyHash> index_;
  std::vector<Elt> inv_;
};

}  // namespace

Group build_from_permutations(std::uint32_t degree,
                              const std::vector<std::vector<std::uint32_t>>& gens,
                              const limits& lim) {
  std::vector<std::vector<std::uint16_t>> gs;
  gs.reserve(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& g = gens[gi];
    if (g.size() != degree)
      throw error(errc::bad_parameter,
                  "generator " + std::to_string(gi) + " has wrong degree");
    std::vector<char> seen(degree, 0);
    std::vector<std::uint16_t> p(degree);
    for (std::uint32_t i = 0; i < degree; ++i) {
      if (g[i] >= degree || seen[g[i]])
        throw error(errc::bad_parameter,
                    "generator " + std::to_string(gi) + " is not a bijection");
      seen[g[i]] = 1;
      p[i] = static_cast<std::uint16_t>(g[i]);
    }
    gs.push_back(std::move(p));
  }
  auto backend = std::make_shared<PermBackend>(degree, gs, lim);
  std::vector<Elt> gidx;
  for (const auto& g : gs) {
    Elt x = backend->lookup(g.data());
    if (x != 0 && std::find(gidx.begin(), gidx.end(), x) == gidx.end())
      gidx.push_back(x);
  }
  return Group::adopt(std::move(backend), std::move(gidx), {}, lim);
}

// ---- direct-product backend ------------------------------------------------------

namespace {

class ProductBackend final : public Backend {
 public:
  ProductBackend(std::vector<Group> factors, std::size_t n)
      : factors_(std::move(factors)), n_(n) {
    strides_.resize(factors_.size());
    std::size_t s = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      strides_[i] = s;
      s *= factors_[i].order();
    }
  }
  std::size_t order() const override { return n_; }
  Elt mul(Elt a, Elt b) const override {
    std::size_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Elt ca = static_cast<Elt>((a / strides_[i]) % factors_[i].order());
      Elt cb = static_cast<Elt>((b / strides_[i]) % factors_[i].order());
      out += std::size_t(factors_[i].mul(ca, cb)) * strides_[i];
    }
    return static_cast<Elt>(out);
  }
  Elt inv(Elt a) const override {
    std::size_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Elt ca = static_cast<Elt>((a / strides_[i]) % factors_[i].order());
      out += std::size_t(factors_[i].inv(ca)) * strides_[i];
    }
    return static_cast<Elt>(out);
  }
  const char* name() const override { return "direct-product-composite"; }
  std::string element_name(Elt x) const override {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) os << ',';
      os << factors_[i].element_name(
          static_cast<Elt>((x / strides_[i]) % factors_[i].order()));
    }
    os << ')';
    return os.str();
  }
  const std::vector<Group>& factors() const { return factors_; }
  const std::vector<std::size_t>& strides() const { return strides_; }

 private:
  std::vector<Group> factors_;
  std::size_t n_;
  std::vector<std::size_t> strides_;
};

}  // namespace

Group build_direct_product(const std::vector<Group>& factors, const limits& lim) {
  if (factors.empty()) throw error(errc::bad_parameter, "empty factor list");
  if (factors.size() == 1) return factors[0];
  std::size_t n = 1;
  for (const auto& f : factors) {
    if (n > lim.composite_cap / f.order())
      throw error(errc::order_cap_exceeded, "product order exceeds composite cap");
    n *= f.order();
  }
  auto backend = std::make_shared<ProductBackend>(factors, n);
  std::vector<Elt> gens;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (Elt g : factors[i].generators())
      gens.push_back(static_cast<Elt>(std::size_t(g) * backend->strides()[i]));
  return Group::adopt(std::move(backend), std::move(gens), {}, lim);
}

// ---- element-level operations ----------------------------------------------------

void closure_extend(const Group& g, ElementSet& set, std::vector<Elt>& members,
                    std::vector<Elt>& gens, std::span<const Elt> extra) {
  for (Elt s : extra) {
    if (set.test(s)) continue;
    gens.push_back(s);
    set.add(s);
    members.push_back(s);
    // right-multiplication BFS from the whole current member list
    std::vector<Elt> queue = members;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Elt x = queue[qi];
      for (Elt ge : gens) {
        Elt y = g.mul(x, ge);
        if (!set.test(y)) {
          set.add(y);
          members.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
}

ElementSet closure_of(const Group& g, std::span<const Elt> seed,
                      std::vector<Elt>* small_gens) {
  ElementSet set(static_cast<std::uint32_t>(g.order()));
  set.add(Group::identity);
  std::vector<Elt> members{Group::identity};
  std::vector<Elt> gens;
  closure_extend(g, set, members, gens, seed);
  if (small_gens) *small_gens = gens;
  set.mark_subgroup();
  return set;
}

ElementSet closure(const Group& g, const ElementSet& seed) {
  auto v = seed.to_vector();
  return closure_of(g, v, nullptr);
}

std::uint64_t element_order(const Group& g, Elt x) {
  std::uint64_t k = 1;
  Elt y = x;
  while (y != Group::identity) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

ElementSet centralizer(const Group& g, const ElementSet& s) {
  const std::size_t n = g.order();
  auto constraints = s.to_vector();
  ElementSet out(static_cast<std::uint32_t>(n));
  std::vector<char> ok(n, 0);
  par_for_static(exec::parallel, n, [&](std::size_t x) {
    for (Elt c : constraints)
      if (g.mul(static_cast<Elt>(x), c) != g.mul(c, static_cast<Elt>(x))) return;
    ok[x] = 1;
  });
  for (std::size_t x = 0; x < n; ++x)
    if (ok[x]) out.add(static_cast<Elt>(x));
  out.mark_subgroup();
  return out;
}

ElementSet center(const Group& g) {
  // commuting with the generators is commuting with everything
  const std::size_t n = g.order();
  ElementSet out(static_cast<std::uint32_t>(n));
  std::vector<char> ok(n, 0);
  auto gens = g.generators();
  par_for_static(exec::parallel, n, [&](std::size_t x) {
    for (Elt c : gens)
      if (g.mul(static_cast<Elt>(x), c) != g.mul(c, static_cast<Elt>(x))) return;
    ok[x] = 1;
  });
  for (std::size_t x = 0; x < n; ++x)
    if (ok[x]) out.add(static_cast<Elt>(x));
  out.mark_subgroup();
  return out;
}

// ---- conjugacy classes ----------------------------------------------------------

namespace {

struct Dsu {
  std::vector<Elt> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Elt find(Elt x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Elt a, Elt b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
  }
};

}  // namespace

ClassData compute_conjugacy_classes(const Group& g, exec mode) {
  const std::size_t n = g.order();
  auto gens = g.generators();
  Dsu dsu(n);
  if (mode == exec::parallel && !gens.empty()) {
    // conjugation edges per generator in parallel, then a serial merge
    std::vector<Elt> targets(n);
    for (Elt ge : gens) {
      Elt ig = g.inv(ge);
      par_for_static(mode, n, [&](std::size_t x) {
        targets[x] = g.mul(g.mul(ig, static_cast<Elt>(x)), ge);
      });
      for (std::size_t x = 0; x < n; ++x) dsu.unite(static_cast<Elt>(x), targets[x]);
    }
  } else {
    for (Elt ge : gens) {
      Elt ig = g.inv(ge);
      for (std::size_t x = 0; x < n; ++x)
        dsu.unite(static_cast<Elt>(x), g.mul(g.mul(ig, static_cast<Elt>(x)), ge));
    }
  }

  ClassData cd;
  cd.class_of.assign(n, 0);
  std::vector<Elt> root_class(n, ~Elt(0));
  for (std::size_t x = 0; x < n; ++x) {
    Elt r = dsu.find(static_cast<Elt>(x));
    if (root_class[r] == ~Elt(0)) {
      root_class[r] = static_cast<Elt>(cd.reps.size());
      cd.reps.push_back(static_cast<Elt>(x));
    }
    cd.class_of[x] = root_class[r];
  }
  const std::size_t k = cd.reps.size();
  cd.sizes.assign(k, 0);
  for (std::size_t x = 0; x < n; ++x) ++cd.sizes[cd.class_of[x]];
  cd.offsets.assign(k + 1, 0);
  for (std::size_t c = 0; c < k; ++c) cd.offsets[c + 1] = cd.offsets[c] + cd.sizes[c];
  cd.elems.resize(n);
  {
    std::vector<std::uint32_t> cursor(cd.offsets.begin(), cd.offsets.end() - 1);
    for (std::size_t x = 0; x < n; ++x)
      cd.elems[cursor[cd.class_of[x]]++] = static_cast<Elt>(x);
  }
  cd.inverse_class.resize(k);
  cd.centralizer_order.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    cd.inverse_class[c] = cd.class_of[g.inv(cd.reps[c])];
    cd.centralizer_order[c] = n / cd.sizes[c];
  }
  return cd;
}

const ClassData& conjugacy_classes(const Group& g) {
  auto& caches = g.caches();
  {
    std::lock_guard lock(caches.mu);
    if (caches.classes) return *caches.classes;
  }
  // racing computes are allowed; every compute yields the identical result
  auto cd =
      std::make_shared<const ClassData>(compute_conjugacy_classes(g, exec::parallel));
  std::lock_guard lock(caches.mu);
  if (!caches.classes) caches.classes = std::move(cd);
  return *caches.classes;
}

// ---- homomorphisms ---------------------------------------------------------------

void GroupHom::validate() const {
  if (image.size() != domain.order())
    throw error(errc::bad_parameter, "hom image length mismatch");
  if (image[Group::identity] != Group::identity)
    throw error(errc::bad_parameter, "hom does not fix the identity");
  for (Elt x : image)
    if (x >= codomain.order()) throw error(errc::bad_parameter, "hom image out of range");
  const std::size_t n = domain.order();
  if (n <= domain.caps().hom_full_check_cap) {
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b)
        if (image[domain.mul(a, b)] != codomain.mul(image[a], image[b]))
          throw error(errc::bad_parameter,
                      "hom violates multiplicativity at (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
  } else {
    // (element, generator) pairs force multiplicativity for all words
    for (Elt a = 0; a < n; ++a)
      for (Elt b : domain.generators())
        if (image[domain.mul(a, b)] != codomain.mul(image[a], image[b]))
          throw error(errc::bad_parameter,
                      "hom violates multiplicativity at (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
  }
}

ElementSet GroupHom::kernel() const {
  ElementSet k(static_cast<std::uint32_t>(domain.order()));
  for (std::size_t x = 0; x < image.size(); ++x)
    if (image[x] == Group::identity) k.add(static_cast<Elt>(x));
  k.mark_subgroup();
  return k;
}

bool GroupHom::bijective() const {
  if (domain.order() != codomain.order()) return false;
  std::vector<char> seen(codomain.order(), 0);
  for (Elt x : image) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace magnus

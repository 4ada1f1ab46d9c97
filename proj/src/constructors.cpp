#include "magnus/constructors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "magnus/numtheory.hpp"
#include "magnus/structure.hpp"

namespace magnus {

// ---- semilinear maps ---------------------------------------------------------------

std::uint16_t apply_semilinear(const FieldTable& f, const SemilinearMap& m,
                               std::uint16_t v) {
  return f.add(f.mul(m.scale, f.frob(v, m.twist)), m.shift);
}

SemilinearMap compose_semilinear(const FieldTable& f, const SemilinearMap& a,
                                 const SemilinearMap& b) {
  // (a.b)(v) = a(b(v)): scale_a * (scale_b v^(p^tb) + shift_b)^(p^ta) + shift_a
  SemilinearMap r;
  r.twist = (a.twist + b.twist) % f.n;
  r.scale = f.mul(a.scale, f.frob(b.scale, a.twist));
  r.shift = f.add(f.mul(a.scale, f.frob(b.shift, a.twist)), a.shift);
  return r;
}

SemilinearMap invert_semilinear(const FieldTable& f, const SemilinearMap& m) {
  SemilinearMap r;
  r.twist = (f.n - m.twist % f.n) % f.n;
  r.scale = f.inv(f.frob(m.scale, r.twist));
  r.shift = f.neg(f.mul(r.scale, f.frob(m.shift, r.twist)));
  return r;
}

// ---- matrix helpers -------------------------------------------------------------------

namespace {

// the defining matrices of the point stabilizer of M(9) inside GL(2,3)
constexpr std::array<std::uint32_t, 4> kMatI{0, 2, 1, 0};  // row-major [[0,2],[1,0]]
constexpr std::array<std::uint32_t, 4> kMatJ{1, 1, 1, 2};  // [[1,1],[1,2]]

std::vector<std::uint32_t> matrix_perm_on_nonzero(std::uint32_t p,
                                                  const std::array<std::uint32_t, 4>& m) {
  const std::uint32_t q = p * p;
  std::vector<std::uint32_t> perm(q - 1);
  for (std::uint32_t v = 1; v < q; ++v) {
    std::uint32_t x = v % p, y = v / p;
    std::uint32_t nx = (m[0] * x + m[1] * y) % p;
    std::uint32_t ny = (m[2] * x + m[3] * y) % p;
    perm[v - 1] = nx + p * ny - 1;
  }
  return perm;
}

std::array<std::uint32_t, 4> mat_mul3(const std::array<std::uint32_t, 4>& a,
                                      const std::array<std::uint32_t, 4>& b) {
  return {(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
          (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
}

std::vector<std::array<std::uint32_t, 4>> gl2_gen_matrices(std::uint32_t p) {
  if (p == 2) return {{0, 1, 1, 0}, {1, 1, 0, 1}};
  std::uint32_t a = 1;
  for (std::uint32_t c = 2; c < p; ++c) {
    std::uint32_t x = c, ord = 1;
    while (x != 1) {
      x = x * c % p;
      ++ord;
    }
    if (ord == p - 1) {
      a = c;
      break;
    }
  }
  return {{a, 0, 0, 1}, {p - 1, 1, p - 1, 0}};
}

}  // namespace

// ---- ambients -----------------------------------------------------------------------

Elt gammal1_actor_index(const FieldTable& f, std::uint16_t scale, std::uint32_t twist) {
  return static_cast<Elt>((twist % f.n) * (f.q - 1) + (scale - 1));
}

std::shared_ptr<const ActionAmbient> gammal1_ambient(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const ActionAmbient>> registry;
  std::lock_guard lock(mu);
  auto it = registry.find(q);
  if (it != registry.end()) return it->second;

  auto f = finite_field(q);
  auto amb = std::make_shared<ActionAmbient>();
  amb->q = q;
  amb->add.assign(f->add_t.begin(), f->add_t.end());
  amb->neg.assign(f->neg_t.begin(), f->neg_t.end());
  const std::size_t m = std::size_t(q - 1) * f->n;

  auto decode = [&](Elt t) {
    SemilinearMap s;
    s.twist = static_cast<std::uint32_t>(t / (q - 1));
    s.scale = static_cast<std::uint16_t>(t % (q - 1) + 1);
    return s;
  };
  std::vector<Elt> gens;
  if (q > 2) gens.push_back(gammal1_actor_index(*f, f->primitive_element, 0));
  if (f->n > 1) gens.push_back(gammal1_actor_index(*f, 1, 1));
  amb->actor = dense_from_fn(
      m,
      [&](Elt a, Elt b) {
        SemilinearMap s = compose_semilinear(*f, decode(a), decode(b));
        return gammal1_actor_index(*f, s.scale, s.twist);
      },
      gens, {}, limits{});
  amb->action.resize(m * q);
  for (Elt t = 0; t < m; ++t) {
    SemilinearMap s = decode(t);
    for (std::uint32_t v = 0; v < q; ++v)
      amb->action[std::size_t(t) * q + v] =
          apply_semilinear(*f, s, static_cast<std::uint16_t>(v));
  }
  amb->v_basis.resize(f->n);
  for (std::uint32_t i = 0; i < f->n; ++i)
    amb->v_basis[i] = static_cast<Elt>(ipow(f->p, i));
  registry.emplace(q, amb);
  return amb;
}

std::shared_ptr<const ActionAmbient> gl2_ambient(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const ActionAmbient>> registry;
  std::lock_guard lock(mu);
  auto it = registry.find(p);
  if (it != registry.end()) return it->second;

  const std::uint32_t q = p * p;
  // the permutation group on nonzero vectors, then densified
  Group perm = gl2(p);
  Group actor = densify(perm);

  auto amb = std::make_shared<ActionAmbient>();
  amb->q = q;
  amb->add.resize(std::size_t(q) * q);
  amb->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      std::uint32_t x = (a % p + b % p) % p, y = (a / p + b / p) % p;
      amb->add[std::size_t(a) * q + b] = static_cast<std::uint16_t>(x + p * y);
    }
    amb->neg[a] =
        static_cast<std::uint16_t>((p - a % p) % p + p * ((p - a / p) % p));
  }
  // recover each dense element's permutation through the perm backend rows:
  // densify preserves indices, and gl2's elements are permutations of the
  // q-1 nonzero vectors (point v-1 <-> vector v)
  amb->action.resize(actor.order() * q);
  {
    // reconstruct permutations by their action on the generators' closure;
    // we read them off by multiplying in the perm group
    // point images: perm.mul is index-level; we need the underlying maps.
    // Rebuild them by tracking images of each point through generator words.
    // Simpler: use the permutation backend's element_name? No: recompute by
    // BFS over the Cayley graph carrying explicit permutations.
    std::vector<std::vector<std::uint16_t>> perms(
        actor.order(), std::vector<std::uint16_t>(q - 1));
    std::vector<char> known(actor.order(), 0);
    for (std::uint32_t i = 0; i < q - 1; ++i) perms[0][i] = static_cast<std::uint16_t>(i);
    known[0] = 1;
    // generator permutations: gl2 generator matrices on nonzero vectors
    std::vector<Elt> gidx(perm.generators().begin(), perm.generators().end());
    auto matrices = gl2_gen_matrices(p);
    if (gidx.size() != matrices.size())
      throw error(errc::bad_parameter, "internal: GL(2,p) generator mismatch");
    std::vector<std::vector<std::uint16_t>> gperm(gidx.size(),
                                                  std::vector<std::uint16_t>(q - 1));
    for (std::size_t gi = 0; gi < gidx.size(); ++gi) {
      auto pm = matrix_perm_on_nonzero(p, matrices[gi]);
      for (std::uint32_t pt = 0; pt < q - 1; ++pt)
        gperm[gi][pt] = static_cast<std::uint16_t>(pm[pt]);
    }
    std::vector<Elt> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Elt x = queue[qi];
      for (std::size_t gi = 0; gi < gidx.size(); ++gi) {
        Elt y = actor.mul(gidx[gi], x);  // left multiplication: gperm after x
        if (!known[y]) {
          for (std::uint32_t pt = 0; pt < q - 1; ++pt)
            perms[y][pt] = gperm[gi][perms[x][pt]];
          known[y] = 1;
          queue.push_back(y);
        }
      }
    }
    for (Elt t = 0; t < actor.order(); ++t) {
      amb->action[std::size_t(t) * q + 0] = 0;
      for (std::uint32_t pt = 0; pt < q - 1; ++pt)
        amb->action[std::size_t(t) * q + pt + 1] =
            static_cast<std::uint16_t>(perms[t][pt] + 1);
    }
  }
  amb->actor = std::move(actor);
  amb->v_basis = {1, static_cast<Elt>(p)};
  registry.emplace(p, amb);
  return amb;
}

// ---- semidirect backend --------------------------------------------------------------

namespace {

class SemidirectBackend final : public Backend {
 public:
  SemidirectBackend(std::shared_ptr<const ActionAmbient> amb, std::vector<Elt> g0)
      : amb_(std::move(amb)), g0_(std::move(g0)) {
    pos_.assign(amb_->actor.order(), ~Elt(0));
    for (std::size_t i = 0; i < g0_.size(); ++i) pos_[g0_[i]] = static_cast<Elt>(i);
    n_ = g0_.size() * amb_->q;
  }
  std::size_t order() const override { return n_; }
  Elt mul(Elt a, Elt b) const override {
    const std::uint32_t q = amb_->q;
    Elt t1 = a / q, v1 = a % q, t2 = b / q, v2 = b % q;
    Elt s1 = g0_[t1];
    Elt st = pos_[amb_->actor.mul(s1, g0_[t2])];
    std::uint16_t v = amb_->add[std::size_t(v1) * q +
                                amb_->action[std::size_t(s1) * q + v2]];
    return st * q + v;
  }
  Elt inv(Elt a) const override {
    const std::uint32_t q = amb_->q;
    Elt t = a / q, v = a % q;
    Elt si = amb_->actor.inv(g0_[t]);
    std::uint16_t w = amb_->neg[amb_->action[std::size_t(si) * q + v]];
    return pos_[si] * q + w;
  }
  const char* name() const override { return "semidirect"; }
  std::string element_name(Elt x) const override {
    const std::uint32_t q = amb_->q;
    std::ostringstream os;
    os << "(v" << x % q << ";s" << g0_[x / q] << ")";
    return os.str();
  }
  const ActionAmbient& ambient() const { return *amb_; }
  const std::vector<Elt>& g0() const { return g0_; }
  Elt pos(Elt actor_index) const { return pos_[actor_index]; }

 private:
  std::shared_ptr<const ActionAmbient> amb_;
  std::vector<Elt> g0_;
  std::vector<Elt> pos_;
  std::size_t n_;
};

}  // namespace

AffineGroup semidirect_from_ambient(std::shared_ptr<const ActionAmbient> amb,
                                    std::span<const Elt> g0_actor_gens,
                                    const limits& lim) {
  // close G0 inside the actor
  ElementSet g0set(static_cast<std::uint32_t>(amb->actor.order()));
  g0set.add(0);
  std::vector<Elt> members{0}, cgens;
  closure_extend(amb->actor, g0set, members, cgens, g0_actor_gens);
  std::vector<Elt> g0 = g0set.to_vector();  // sorted, g0[0] = 0
  const std::uint32_t q = amb->q;
  if (std::size_t(q) * g0.size() > lim.composite_cap)
    throw error(errc::order_cap_exceeded, "semidirect order exceeds composite cap");

  auto backend = std::make_shared<SemidirectBackend>(amb, g0);
  std::vector<Elt> gens;
  for (Elt b : amb->v_basis) gens.push_back(b);  // translations by a basis
  for (Elt s : g0_actor_gens)
    if (s != 0) gens.push_back(backend->pos(s) * q);

  AffineGroup out;
  out.q = q;
  out.g0_actor_elements = std::move(g0);
  out.group = Group::adopt(backend, std::move(gens), {}, lim);
  out.socle = ElementSet(static_cast<std::uint32_t>(out.group.order()));
  for (std::uint32_t v = 0; v < q; ++v) out.socle.add(v);
  out.socle.mark_subgroup();
  out.point_stabilizer = ElementSet(static_cast<std::uint32_t>(out.group.order()));
  for (std::size_t t = 0; t < out.g0_actor_elements.size(); ++t)
    out.point_stabilizer.add(static_cast<Elt>(t * q));
  out.point_stabilizer.mark_subgroup();
  return out;
}

AffineGroup affine_semidirect(std::uint32_t q, std::span<const SemilinearMap> gens,
                              const limits& lim) {
  auto f = finite_field(q);
  auto amb = gammal1_ambient(q);
  std::vector<Elt> agens;
  for (const auto& m : gens) {
    if (m.shift != 0) throw error(errc::bad_parameter, "generator must have zero shift");
    if (m.scale == 0) throw error(errc::bad_parameter, "scale must be nonzero");
    agens.push_back(gammal1_actor_index(*f, m.scale, m.twist));
  }
  return semidirect_from_ambient(amb, agens, lim);
}

// ---- named families -------------------------------------------------------------------

Group semilinear_family(std::uint32_t q, Family fam, const limits& lim) {
  auto f = finite_field(q);
  if (fam == Family::gammal1) {
    // permutations of the q-1 nonzero elements, point j <-> field element j+1
    std::vector<std::vector<std::uint32_t>> gens;
    auto perm_of = [&](const SemilinearMap& m) {
      std::vector<std::uint32_t> p(q - 1);
      for (std::uint32_t j = 0; j < q - 1; ++j)
        p[j] = apply_semilinear(*f, m, static_cast<std::uint16_t>(j + 1)) - 1;
      return p;
    };
    if (q > 2) gens.push_back(perm_of({f->primitive_element, 0, 0}));
    if (f->n > 1) gens.push_back(perm_of({1, 1, 0}));
    Group g = build_from_permutations(q - 1, gens, lim);
    if (g.order() != std::size_t(q - 1) * f->n)
      throw error(errc::bad_parameter, "internal: GammaL(1,q) order mismatch");
    return g;
  }
  std::vector<std::vector<std::uint32_t>> gens;
  auto perm_of = [&](const SemilinearMap& m) {
    std::vector<std::uint32_t> p(q);
    for (std::uint32_t j = 0; j < q; ++j)
      p[j] = apply_semilinear(*f, m, static_cast<std::uint16_t>(j));
    return p;
  };
  gens.push_back(perm_of({1, 0, 1}));  // translation by one
  if (q > 2) gens.push_back(perm_of({f->primitive_element, 0, 0}));
  if (fam == Family::agammal1 && f->n > 1) gens.push_back(perm_of({1, 1, 0}));
  Group g = build_from_permutations(q, gens, lim);
  std::size_t expect = fam == Family::agl1 ? std::size_t(q) * (q - 1)
                                           : std::size_t(q) * (q - 1) * f->n;
  if (g.order() != expect)
    throw error(errc::bad_parameter, "internal: affine family order mismatch");
  return g;
}

Group cyclic_group(std::uint32_t m, const limits& lim) {
  if (m == 0) throw error(errc::bad_parameter, "C(0)");
  return dense_from_fn(
      m, [m](Elt a, Elt b) { return (a + b) % m; }, m > 1 ? std::vector<Elt>{1} : std::vector<Elt>{},
      {}, lim);
}

Group elementary_abelian(std::uint32_t p, std::uint32_t k, const limits& lim) {
  if (!is_prime(p)) throw error(errc::bad_parameter, "E(p,k) needs p prime");
  std::uint64_t n = ipow(p, k);
  if (n > lim.dense_cap) throw error(errc::order_cap_exceeded, "E(p,k) exceeds dense cap");
  std::vector<Elt> gens;
  for (std::uint32_t i = 0; i < k; ++i) gens.push_back(static_cast<Elt>(ipow(p, i)));
  return dense_from_fn(
      n,
      [p, k](Elt a, Elt b) {
        Elt out = 0, mult = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
          out += (a % p + b % p) % p * mult;
          mult *= p;
          a /= p;
          b /= p;
        }
        return out;
      },
      gens, {}, lim);
}

Group symmetric_group(std::uint32_t m, const limits& lim) {
  if (m == 0) throw error(errc::bad_parameter, "S(0)");
  if (m == 1) return cyclic_group(1, lim);
  std::vector<std::vector<std::uint32_t>> gens;
  std::vector<std::uint32_t> t(m), c(m);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  for (std::uint32_t i = 0; i < m; ++i) c[i] = (i + 1) % m;
  gens.push_back(t);
  if (m > 2) gens.push_back(c);
  return build_from_permutations(m, gens, lim);
}

Group alternating_group(std::uint32_t m, const limits& lim) {
  if (m < 3) return cyclic_group(1, lim);
  std::vector<std::vector<std::uint32_t>> gens;
  std::vector<std::uint32_t> three(m);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  gens.push_back(three);
  if (m > 3) {
    std::vector<std::uint32_t> c(m);
    std::iota(c.begin(), c.end(), 0);
    if (m % 2) {  // odd: full cycle is even
      for (std::uint32_t i = 0; i < m; ++i) c[i] = (i + 1) % m;
    } else {  // even: cycle on 1..m-1
      c[0] = 0;
      for (std::uint32_t i = 1; i < m; ++i) c[i] = i % (m - 1) + 1;
    }
    gens.push_back(c);
  }
  return build_from_permutations(m, gens, lim);
}

Group dihedral_group(std::uint32_t order, const limits& lim) {
  if (order < 2 || order % 2) throw error(errc::bad_parameter, "D(order) needs even order >= 2");
  std::uint32_t m = order / 2;
  if (m == 1) return cyclic_group(2, lim);
  if (m == 2) return elementary_abelian(2, 2, lim);
  std::vector<std::uint32_t> rot(m), refl(m);
  for (std::uint32_t i = 0; i < m; ++i) rot[i] = (i + 1) % m;
  for (std::uint32_t i = 0; i < m; ++i) refl[i] = (m - i) % m;
  return build_from_permutations(m, {rot, refl}, lim);
}

Group quaternion8(const limits& lim) {
  return build_from_permutations(
      8, {matrix_perm_on_nonzero(3, kMatI), matrix_perm_on_nonzero(3, kMatJ)}, lim);
}

Group semidihedral16(const limits& lim) {
  // GammaL(1,9) is semidihedral of order 16: r^8 = s^2 = 1, r^s = r^3
  Group g = semilinear_family(9, Family::gammal1, lim);
  if (g.order() != 16)
    throw error(errc::bad_parameter, "internal: QD16 construction order mismatch");
  return g;
}

Group m9(const limits& lim) {
  // build-time check of the defining relations: i^2 = j^2 = -1, ij = -ji
  constexpr std::array<std::uint32_t, 4> minus1{2, 0, 0, 2};
  auto i2 = mat_mul3(kMatI, kMatI);
  auto j2 = mat_mul3(kMatJ, kMatJ);
  auto ij = mat_mul3(kMatI, kMatJ);
  auto ji = mat_mul3(kMatJ, kMatI);
  auto neg = [&](std::array<std::uint32_t, 4> m) {
    for (auto& c : m) c = (3 - c) % 3;
    return m;
  };
  if (i2 != minus1 || j2 != minus1 || ij != neg(ji))
    throw error(errc::bad_parameter, "internal: quaternion relations fail over F_3");

  auto amb = gl2_ambient(3);
  // locate i and j inside the dense actor by their action on nonzero vectors
  auto find_actor = [&](const std::array<std::uint32_t, 4>& m) -> Elt {
    auto perm = matrix_perm_on_nonzero(3, m);
    for (Elt t = 0; t < amb->actor.order(); ++t) {
      bool eq = true;
      for (std::uint32_t v = 1; v < 9 && eq; ++v)
        eq = amb->action[std::size_t(t) * 9 + v] == perm[v - 1] + 1;
      if (eq) return t;
    }
    throw error(errc::bad_parameter, "internal: matrix not found in GL(2,3)");
  };
  std::vector<Elt> gens{find_actor(kMatI), find_actor(kMatJ)};
  AffineGroup ag = semidirect_from_ambient(amb, gens, lim);
  if (ag.group.order() != 72)
    throw error(errc::bad_parameter, "internal: M(9) order mismatch");
  return ag.group;
}

Group c7c3(const limits& lim) {
  std::array<SemilinearMap, 1> gens{SemilinearMap{2, 0, 0}};
  AffineGroup ag = affine_semidirect(7, gens, lim);
  if (ag.group.order() != 21)
    throw error(errc::bad_parameter, "internal: C7:C3 order mismatch");
  return ag.group;
}

Group gl2(std::uint32_t p, const limits& lim) {
  if (!is_prime(p)) throw error(errc::bad_parameter, "GL(2,p) needs p prime");
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& m : gl2_gen_matrices(p)) gens.push_back(matrix_perm_on_nonzero(p, m));
  Group g = build_from_permutations(p * p - 1, gens, lim);
  std::size_t expect = std::size_t(p * p - 1) * (p * p - p);
  if (g.order() != expect)
    throw error(errc::bad_parameter, "internal: GL(2,p) order mismatch");
  return g;
}

Group named_group(const std::string& atom, const limits& lim) {
  auto param = [&](std::size_t from) -> std::uint32_t {
    return static_cast<std::uint32_t>(std::stoul(atom.substr(from)));
  };
  try {
    if (atom == "Q8") return quaternion8(lim);
    if (atom == "QD16") return semidihedral16(lim);
    if (atom == "M9") return m9(lim);
    if (atom == "C7:C3") return c7c3(lim);
    if (atom.size() >= 2 && atom[0] == 'C' && isdigit(atom[1]))
      return cyclic_group(param(1), lim);
    if (atom.size() >= 2 && atom[0] == 'S' && isdigit(atom[1]))
      return symmetric_group(param(1), lim);
    if (atom.size() >= 2 && atom[0] == 'A' && isdigit(atom[1]))
      return alternating_group(param(1), lim);
    if (atom.size() >= 2 && atom[0] == 'D' && isdigit(atom[1]))
      return dihedral_group(param(1), lim);
    if (atom.size() >= 4 && atom[0] == 'E' && atom[1] == '(') {
      auto comma = atom.find(',');
      auto close = atom.find(')');
      if (comma == std::string::npos || close == std::string::npos)
        throw error(errc::unknown_atom, atom);
      std::uint32_t p = static_cast<std::uint32_t>(std::stoul(atom.substr(2, comma - 2)));
      std::uint32_t k =
          static_cast<std::uint32_t>(std::stoul(atom.substr(comma + 1, close - comma - 1)));
      return elementary_abelian(p, k, lim);
    }
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    throw error(errc::unknown_atom, atom);
  }
  throw error(errc::unknown_atom, atom);
}

// ---- crown-based powers -----------------------------------------------------------------

Group crown_power(const Group& l, std::uint32_t k, const limits& lim) {
  if (k == 0) throw error(errc::bad_parameter, "crown power needs k >= 1");
  if (k == 1) return l;
  const MinimalNormals& mn = minimal_normal_subgroups(l);
  if (!mn.monolithic)
    throw error(errc::not_monolithic,
                "crown powers need a unique minimal normal subgroup");
  const ElementSet& soc = mn.items[0];
  std::vector<Elt> v_elems = soc.to_vector();  // sorted, v_elems[0] = identity
  const std::size_t v = v_elems.size();
  const std::size_t lo = l.order();
  std::uint64_t n = lo;
  for (std::uint32_t i = 1; i < k; ++i) {
    n *= v;
    if (n > lim.dense_cap)
      throw error(errc::order_cap_exceeded, "crown power exceeds dense cap");
  }

  std::vector<Elt> v_pos(lo, ~Elt(0));
  for (std::size_t i = 0; i < v; ++i) v_pos[v_elems[i]] = static_cast<Elt>(i);

  Group lf = l.order() <= lim.dense_cap && l.backend_name() != "dense-table"
                 ? densify(l)
                 : l;

  // element = (u_1, ..., u_{k-1}, x) standing for (u_1 x, ..., u_{k-1} x, x);
  // index = ((u_1 * v + u_2) * v + ...) * |L| + x
  auto decode = [&](Elt idx, std::vector<Elt>& u) {
    Elt x = static_cast<Elt>(idx % lo);
    idx /= lo;
    for (std::uint32_t i = k - 1; i-- > 1;) {
      u[i] = v_elems[idx % v];
      idx /= v;
    }
    u[0] = v_elems[idx];
    return x;
  };
  auto mulfn = [&](Elt a, Elt b) -> Elt {
    thread_local std::vector<Elt> ua, ub;
    ua.resize(k - 1);
    ub.resize(k - 1);
    Elt xa = decode(a, ua), xb = decode(b, ub);
    // (u x)(u' x') = (u * x u' x^-1) (x x') componentwise
    Elt xinv = lf.inv(xa);
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i < k - 1; ++i) {
      Elt w = lf.mul(ua[i], lf.mul(xa, lf.mul(ub[i], xinv)));
      idx = idx * v + v_pos[w];
    }
    return static_cast<Elt>(idx * lo + lf.mul(xa, xb));
  };

  // generators: the diagonal copies of L's generators plus socle generators in
  // each of the first k-1 coordinates
  std::vector<Elt> gens;
  {
    std::vector<Elt> socle_gens;
    ElementSet tmp(static_cast<std::uint32_t>(lo));
    tmp.add(0);
    std::vector<Elt> members{0};
    closure_extend(lf, tmp, members, socle_gens, v_elems);
    for (Elt lg : lf.generators()) gens.push_back(lg);  // diagonal: all u_i = 1
    for (std::uint32_t i = 0; i < k - 1; ++i)
      for (Elt sg : socle_gens) {
        std::uint64_t idx = 0;
        for (std::uint32_t j = 0; j < k - 1; ++j)
          idx = idx * v + (j == i ? v_pos[sg] : 0);
        gens.push_back(static_cast<Elt>(idx * lo));
      }
  }
  return dense_from_fn(n, mulfn, gens, {}, lim);
}

}  // namespace magnus

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "magnus/field.hpp"
#include "magnus/group.hpp"

namespace magnus {

// v -> scale * v^(p^twist) + shift on F_q
struct SemilinearMap {
  std::uint16_t scale = 1;
  std::uint32_t twist = 0;
  std::uint16_t shift = 0;
};

std::uint16_t apply_semilinear(const FieldTable& f, const SemilinearMap& m,
                               std::uint16_t v);
SemilinearMap compose_semilinear(const FieldTable& f, const SemilinearMap& a,
                                 const SemilinearMap& b);  // a after b
SemilinearMap invert_semilinear(const FieldTable& f, const SemilinearMap& m);

// ---- shared ambient for V x| G0 groups -------------------------------------------
// The ambient fixes the point set V (with its addition) and a dense "actor"
// group with its action on V; subgroups of the actor lift to groups V x| G0
// without materializing tables per subgroup.
struct ActionAmbient {
  std::uint32_t q = 0;                  // |V|
  std::vector<std::uint16_t> add, neg;  // addition on points (abelian, 0 = zero)
  Group actor;                          // dense-table group
  std::vector<std::uint16_t> action;    // actor_order * q, action[t*q+v]
  std::vector<Elt> v_basis;             // points additively generating V
};

// actor = GammaL(1,q) as (scale, twist) pairs, t = twist*(q-1) + (scale-1)
std::shared_ptr<const ActionAmbient> gammal1_ambient(std::uint32_t q);
Elt gammal1_actor_index(const FieldTable& f, std::uint16_t scale, std::uint32_t twist);

// actor = GL(2,p) acting on F_p^2 (vector (x,y) indexed x + p*y)
std::shared_ptr<const ActionAmbient> gl2_ambient(std::uint32_t p);

// V x| G0 for G0 given by actor indices; element index = t*q + v where the
// element maps x -> s_t(x) + v. Records the socle V and the stabilizer G0.
struct AffineGroup {
  Group group;
  ElementSet socle;
  ElementSet point_stabilizer;
  std::uint32_t q = 0;
  std::vector<Elt> g0_actor_elements;  // sorted actor indices
};
AffineGroup semidirect_from_ambient(std::shared_ptr<const ActionAmbient> amb,
                                    std::span<const Elt> g0_actor_gens,
                                    const limits& lim = {});

// zero-shift semilinear generators; the group acts on the q field points
AffineGroup affine_semidirect(std::uint32_t q, std::span<const SemilinearMap> gens,
                              const limits& lim = {});

// ---- named families ------------------------------------------------------------------

enum class Family { gammal1, agl1, agammal1 };

// permutation groups of the q-1 nonzero elements (gammal1) or the q field
// elements (affine variants); orders (q-1)n, q(q-1), q(q-1)n
Group semilinear_family(std::uint32_t q, Family f, const limits& lim = {});

Group cyclic_group(std::uint32_t m, const limits& lim = {});
Group elementary_abelian(std::uint32_t p, std::uint32_t k, const limits& lim = {});
Group symmetric_group(std::uint32_t m, const limits& lim = {});
Group alternating_group(std::uint32_t m, const limits& lim = {});
Group dihedral_group(std::uint32_t order, const limits& lim = {});  // order = 2m
Group quaternion8(const limits& lim = {});
Group semidihedral16(const limits& lim = {});
Group m9(const limits& lim = {});     // F_3^2 x| <i,j> from the defining matrices
Group c7c3(const limits& lim = {});   // F_7 x| <v -> 2v>
Group gl2(std::uint32_t p, const limits& lim = {});  // permutations of nonzero vectors

// atom ∈ {C(m), E(p,k), S(m), A(m), D(2m), Q8, QD16, M9, C7:C3}
Group named_group(const std::string& atom, const limits& lim = {});

// crown-based power: tuples in L^k congruent mod the socle; needs L monolithic
Group crown_power(const Group& l, std::uint32_t k, const limits& lim = {});

}  // namespace magnus

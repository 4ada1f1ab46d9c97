#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magnus/element_set.hpp"
#include "magnus/errors.hpp"
#include "magnus/limits.hpp"
#include "magnus/parallel.hpp"

namespace magnus {

using Elt = std::uint32_t;

// Conjugacy-class partition. Classes are labelled 0..k-1 by ascending least
// representative; class 0 is the identity's class.
struct ClassData {
  std::vector<Elt> class_of;                       // element -> class label
  std::vector<Elt> reps;                           // class -> least element
  std::vector<std::uint32_t> sizes;                // class -> |class|
  std::vector<Elt> inverse_class;                  // class involution
  std::vector<std::uint64_t> centralizer_order;    // |G| / size per class
  std::vector<Elt> elems;                          // elements grouped by class
  std::vector<std::uint32_t> offsets;              // k+1 offsets into elems

  std::size_t count() const { return reps.size(); }
  std::span<const Elt> class_elements(Elt c) const {
    return {elems.data() + offsets[c], offsets[c + 1] - offsets[c]};
  }
};

// Multiplication oracle. Element indices are dense in [0, order); index 0 is the
// identity in every backend.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::size_t order() const = 0;
  virtual Elt mul(Elt a, Elt b) const = 0;
  virtual Elt inv(Elt a) const = 0;
  virtual const char* name() const = 0;
  virtual std::string element_name(Elt x) const;
};

struct ClassClosures;   // structure.cpp
struct NormalLattice;   // structure.hpp
struct MinimalNormals;  // structure.hpp
struct SubgroupLattice; // lattice.hpp
struct MagnusReport;    // magnus.hpp

// Lazily computed derived data; compute-once, all observers see one result.
struct GroupCaches {
  std::recursive_mutex mu;
  std::shared_ptr<const ClassData> classes;
  std::shared_ptr<ClassClosures> closures;
  std::shared_ptr<const NormalLattice> normals;
  std::shared_ptr<const MinimalNormals> minimal_normals;
  std::shared_ptr<const SubgroupLattice> lattice;
  std::shared_ptr<const MagnusReport> magnus;
};

// Immutable finite group handle. Cheap to copy; distinct handles to the same
// object share derived-data caches.
class Group {
 public:
  Group() = default;

  bool valid() const { return impl_ != nullptr; }
  std::size_t order() const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  static constexpr Elt identity = 0;

  // y^-1 x y
  Elt conj(Elt x, Elt y) const { return mul(mul(inv(y), x), y); }
  // a^-1 b^-1 a b
  Elt commutator(Elt a, Elt b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elt power(Elt x, std::uint64_t e) const;

  std::span<const Elt> generators() const;
  std::string backend_name() const;
  const std::vector<std::string>& labels() const;  // may be empty
  std::string element_name(Elt x) const;
  const limits& caps() const;

  bool same(const Group& o) const { return impl_ == o.impl_; }
  const void* key() const { return impl_.get(); }

  GroupCaches& caches() const;
  const Backend& backend() const;

  // internal constructor used by the builders
  static Group adopt(std::shared_ptr<const Backend> b, std::vector<Elt> gens,
                     std::vector<std::string> labels, limits lim);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// ---- builders ---------------------------------------------------------------

// Validates the group axioms; errors name the violating indices. If the table's
// identity is not index 0, elements are relabelled so that it is.
Group build_from_cayley(const std::vector<std::vector<Elt>>& table,
                        std::vector<std::string> labels = {},
                        const limits& lim = {});

// Deterministic breadth-first closure of the generators; element 0 is the identity.
Group build_from_permutations(std::uint32_t degree,
                              const std::vector<std::vector<std::uint32_t>>& gens,
                              const limits& lim = {});

// Componentwise product; no dense table materialized. A singleton list returns
// the factor unchanged.
Group build_direct_product(const std::vector<Group>& factors, const limits& lim = {});

// Dense-table copy of any group within the dense cap. Trusted (no revalidation).
Group densify(const Group& g);

// The subgroup on the masked elements as its own dense-table group (element i
// of the result is the i-th smallest member; 0 stays the identity).
Group subgroup_as_group(const Group& g, const ElementSet& h);

// Dense table from a callable mul(a,b); internal constructions only.
Group dense_from_fn(std::size_t n, const std::function<Elt(Elt, Elt)>& mulfn,
                    std::vector<Elt> gens, std::vector<std::string> labels,
                    const limits& lim);

// ---- element-level operations ----------------------------------------------

// Smallest subgroup containing seed; subgroup-flagged. closure(G, {}) = {identity}.
ElementSet closure(const Group& g, const ElementSet& seed);
// Same, from a generator list; optionally records a small generating sequence.
ElementSet closure_of(const Group& g, std::span<const Elt> gens,
                      std::vector<Elt>* small_gens = nullptr);
// Incremental: extend an already-closed set (with known gens) by extra generators.
void closure_extend(const Group& g, ElementSet& set, std::vector<Elt>& members,
                    std::vector<Elt>& gens, std::span<const Elt> extra);

std::uint64_t element_order(const Group& g, Elt x);

// {g : gs = sg for all s in S}; with S = G this is the center.
ElementSet centralizer(const Group& g, const ElementSet& s);
ElementSet center(const Group& g);

// Raw kernel with a serial reference mode; both modes produce identical output.
ClassData compute_conjugacy_classes(const Group& g, exec mode);
// Cached accessor. Like every cached getter in this library, the returned
// reference lives as long as some Group handle to the same object does; do not
// call cached getters on a temporary and keep the reference.
const ClassData& conjugacy_classes(const Group& g);

// ---- homomorphisms and isomorphism -------------------------------------------

struct GroupHom {
  Group domain, codomain;
  std::vector<Elt> image;  // length |domain|

  Elt apply(Elt x) const { return image[x]; }
  // Throws on violation. Exhaustive below the hom cap; otherwise checked on
  // all (element, generator) pairs, which already forces multiplicativity.
  void validate() const;
  ElementSet kernel() const;
  bool bijective() const;
};

enum class iso_verdict { yes, no, unknown };

struct IsoResult {
  iso_verdict verdict;
  std::optional<GroupHom> map;  // present when verdict == yes
  std::uint64_t nodes = 0;
};

// Fingerprint pruning, then backtracking over generator images. Budget
// exhaustion reports unknown, never false.
IsoResult is_isomorphic(const Group& g, const Group& h, const limits& lim = {});
inline bool surely_isomorphic(const Group& g, const Group& h, const limits& lim = {}) {
  return is_isomorphic(g, h, lim).verdict == iso_verdict::yes;
}

// Associativity scan; returns the least violating triple (a,b,c) if any.
std::optional<std::array<Elt, 3>> find_nonassociative_triple(const Backend& b,
                                                             exec mode,
                                                             const limits& lim);

}  // namespace magnus

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "magnus/constructors.hpp"
#include "magnus/group.hpp"
#include "magnus/magnus.hpp"

namespace magnus {

// ---- primitive-group analysis -------------------------------------------------

struct AffineAnalysis {
  std::uint32_t q = 0;
  std::uint64_t g0_order = 0;
  std::vector<std::uint32_t> orbit_sizes;  // including the {0} orbit
  std::uint32_t rank = 0;                  // orbit count of G0 on F_q
  bool two_transitive = false;
  // nonzero vectors form one orbit, or two orbits exchanged by negation
  bool mp_hypothesis = false;
  // no proper nontrivial G0-invariant additive subgroup
  bool irreducible = false;
};
AffineAnalysis affine_analysis(std::uint32_t q, std::span<const SemilinearMap> gens);

struct FrobeniusDecomposition {
  ElementSet kernel, complement;
};
// N normal, NH = G, N cap H = 1, and C_N(h) = 1 for all nonidentity h in H
bool is_frobenius(const Group& g, const FrobeniusDecomposition& d);

// irreducible subgroups of GL(2,p) up to isomorphism, optionally MP-filtered;
// p in {2, 3}
std::vector<Group> irreducible_subgroups_gl2(std::uint32_t p, bool mp_only,
                                             const limits& lim = {});

// ---- classification searches -----------------------------------------------------

struct GammaL1Subgroup {
  // G0 = <w^d, w^e f^s> inside GammaL(1,q) = <w> x| <f>, s = n/m
  std::uint64_t d = 1, m = 1, e = 0;
  std::uint64_t order = 0;
  std::vector<SemilinearMap> gens;
  std::string name;
};
// all subgroups of GammaL(1,q) up to GammaL(1,q)-conjugacy, deterministic order
std::vector<GammaL1Subgroup> gammal1_subgroups(std::uint32_t q);

struct SearchRow {
  GammaL1Subgroup g0;
  AffineAnalysis analysis;
  std::uint64_t lifted_order = 0;
  std::optional<MagnusReport> report;  // verdict of V x| G0; present iff irreducible
};
// honors MAGNUS_CACHE_DIR (content-addressed cells); results identical with or
// without the cache
std::vector<SearchRow> gammal1_search(std::uint32_t q, const limits& lim = {});

struct Gl2RouteRow {
  std::uint64_t g0_order = 0;
  std::vector<Elt> g0_gens;  // actor indices inside GL(2,p)
  bool g0_mp = false;
  bool orbit_condition = false;
  MagnusReport lifted;  // verdict of V x| G0
};
// irreducible subgroups of GL(2,p) up to conjugacy, with the lifted verdicts
std::vector<Gl2RouteRow> gl2_route(std::uint32_t p, const limits& lim = {});

// ---- arithmetic endpoints ----------------------------------------------------------

struct DegreeBoundReport {
  std::vector<std::uint32_t> cyclic_mp_orders;  // recomputed by testing C_m
  std::uint32_t phi_cap = 12;
  std::uint32_t m_max = 0;
  std::uint32_t bound = 0;  // 1 + 2 * m_max * 6
};
DegreeBoundReport degree_bound();

// all (a, b) with |2^a - 3^b| = 1 in the given ranges
std::vector<std::pair<std::uint32_t, std::uint32_t>> power23_solutions(
    std::uint32_t a_max, std::uint32_t b_max);

struct AbelianSurveyRow {
  std::string shape;  // e.g. "C4 x C4 x C2"
  std::uint64_t order = 0;
  bool mp = false, smp = false;
  bool shape_allows_mp = false;  // C2^n x C3^m or C2^n x C4^m
};
struct AbelianSurvey {
  std::vector<AbelianSurveyRow> rows;
  bool consistent = false;  // mp == shape_allows_mp everywhere
};
AbelianSurvey abelian_survey(std::uint64_t order_max);

// ---- the deterministic corpus --------------------------------------------------------

struct CorpusEntry {
  std::string expr;
  Group group;
};
std::vector<CorpusEntry> corpus_abelian(std::uint64_t max_order);
std::vector<CorpusEntry> corpus_atoms();
std::vector<CorpusEntry> corpus_primitive_eight();
std::vector<CorpusEntry> corpus_pairs();  // all 36 pairwise products of the eight
std::vector<CorpusEntry> corpus_crowns();
std::vector<CorpusEntry> corpus_gammal1(std::uint32_t qmax);
// abelian <= 128, atoms, the eight, pairs, crowns (k <= 3 within caps),
// irreducible lifts for q <= qmax; quotients are enumerated inside the suites
std::vector<CorpusEntry> full_corpus(std::uint32_t qmax = 64);

// ---- claim verification ----------------------------------------------------------------

struct ClaimReport {
  std::string claim;
  enum class Status { pass, fail, inconclusive } status = Status::fail;
  std::vector<std::string> evidence;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  double runtime_seconds = 0;
};

struct VerifyOptions {
  std::uint32_t qmax = 64;
  int jobs = 0;  // 0 = library default
  limits lim{};
};

std::vector<std::string> claim_ids();
ClaimReport verify_claim(const std::string& id, const VerifyOptions& opt = {});

}  // namespace magnus

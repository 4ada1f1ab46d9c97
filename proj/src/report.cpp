#include "magnus/report.hpp"

#include <sstream>

#include "magnus/lattice.hpp"
#include "magnus/numtheory.hpp"
#include "magnus/structure.hpp"

namespace magnus {

nlohmann::ordered_json magnus_report_json(const std::string& expr, const Group& g,
                                          const MagnusReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["expr"] = expr;
  j["order"] = g.order();
  j["backend"] = g.backend_name();
  j["mp"] = r.mp;
  j["smp"] = r.smp;
  j["aCount"] = r.a_count;
  j["bCount"] = r.b_count;
  j["allReal"] = r.all_real;
  if (r.witness) {
    j["witness"] = {{"xRep", r.witness->first},
                    {"yRep", r.witness->second},
                    {"xClass", r.witness_classes->first},
                    {"yClass", r.witness_classes->second},
                    {"xName", g.element_name(r.witness->first)},
                    {"yName", g.element_name(r.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string magnus_report_text(const std::string& expr, const Group& g,
                               const MagnusReport& r) {
  std::ostringstream os;
  os << expr << ": order " << g.order() << " (" << g.backend_name() << ")\n"
     << "  MP: " << (r.mp ? "yes" : "no") << "   SMP: " << (r.smp ? "yes" : "no")
     << "   |A(G)| = " << r.a_count << "   |B(G)| = " << r.b_count
     << "   all classes real: " << (r.all_real ? "yes" : "no") << "\n";
  if (r.witness)
    os << "  witness: x = " << g.element_name(r.witness->first) << " (element "
       << r.witness->first << ", class " << r.witness_classes->first
       << "), y = " << g.element_name(r.witness->second) << " (element "
       << r.witness->second << ", class " << r.witness_classes->second
       << ") share a normal closure without being conjugate or inverse-conjugate\n";
  return os.str();
}

namespace {

struct InvariantData {
  bool solvable = false;
  int derived_length = 0;
  int fitting = -1;
  std::vector<std::uint64_t> chief_orders;
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> rp, sp, jp;  // -1 encoded as large? use separate flags
  bool lattice_ok = false;
  std::uint64_t frattini_order = 0;
  bool primitive = false;
};

InvariantData gather(const Group& g) {
  InvariantData d;
  DerivedSeries ds = derived_series(g);
  d.solvable = ds.solvable;
  d.derived_length = ds.derived_length;
  if (d.solvable && g.order() > 1) d.fitting = fitting_height(g);
  if (g.order() == 1) d.fitting = 0;
  ChiefSeries cs = chief_series(g);
  for (const auto& f : cs.factors) d.chief_orders.push_back(f.order);
  for (auto [p, e] : factorize(g.order()))
    d.primes.push_back(static_cast<std::uint32_t>(p));
  d.lattice_ok = g.order() <= g.caps().lattice_order_cap;
  for (std::uint32_t p : d.primes) d.rp.push_back(p_rank(cs, p));
  if (d.lattice_ok) {
    for (std::uint32_t p : d.primes) d.sp.push_back(s_p(g, p));
    if (g.order() <= 400)
      for (std::uint32_t p : d.primes) d.jp.push_back(j_p(g, p));
    d.frattini_order = frattini(g).size();
    d.primitive = is_primitive(g).primitive;
  }
  return d;
}

}  // namespace

nlohmann::ordered_json invariants_json(const std::string& expr, const Group& g) {
  InvariantData d = gather(g);
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["expr"] = expr;
  j["order"] = g.order();
  j["solvable"] = d.solvable;
  j["derivedLength"] = d.derived_length;
  if (d.fitting >= 0)
    j["fittingHeight"] = d.fitting;
  else
    j["fittingHeight"] = nullptr;
  j["chiefFactorOrders"] = d.chief_orders;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.primes.size(); ++i) {
    nlohmann::ordered_json row;
    row["p"] = d.primes[i];
    row["r"] = d.rp[i];
    if (i < d.sp.size())
      row["s"] = d.sp[i];
    else
      row["s"] = nullptr;
    if (i < d.jp.size())
      row["j"] = d.jp[i];
    else
      row["j"] = nullptr;
    table.push_back(std::move(row));
  }
  j["prank"] = std::move(table);
  if (d.lattice_ok) {
    j["frattiniOrder"] = d.frattini_order;
    j["primitive"] = d.primitive;
  } else {
    j["frattiniOrder"] = nullptr;
    j["primitive"] = nullptr;
  }
  return j;
}

std::string invariants_text(const std::string& expr, const Group& g) {
  InvariantData d = gather(g);
  std::ostringstream os;
  os << expr << ": order " << g.order() << "\n";
  os << "  solvable: " << (d.solvable ? "yes" : "no")
     << "   derived length: " << d.derived_length;
  if (d.fitting >= 0) os << "   Fitting height: " << d.fitting;
  os << "\n  chief factor orders:";
  for (auto o : d.chief_orders) os << " " << o;
  os << "\n  p-rank table:\n";
  for (std::size_t i = 0; i < d.primes.size(); ++i) {
    os << "    p=" << d.primes[i] << "  r_p=" << d.rp[i];
    if (i < d.sp.size()) os << "  S_p=" << d.sp[i];
    else os << "  S_p=-";
    if (i < d.jp.size()) os << "  j_p=" << d.jp[i];
    else os << "  j_p=-";
    os << "\n";
  }
  if (d.lattice_ok)
    os << "  |Frattini| = " << d.frattini_order
       << "   primitive: " << (d.primitive ? "yes" : "no") << "\n";
  else
    os << "  |Frattini|, S_p, j_p, primitivity: not computed (above the lattice cap)\n";
  return os.str();
}

nlohmann::ordered_json claim_report_json(const ClaimReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["claim"] = r.claim;
  j["status"] = r.status == ClaimReport::Status::pass          ? "pass"
                : r.status == ClaimReport::Status::fail        ? "fail"
                                                               : "inconclusive";
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = std::move(counts);
  j["evidence"] = r.evidence;
  return j;
}

std::string claim_report_text(const ClaimReport& r) {
  std::ostringstream os;
  os << "claim " << r.claim << ": "
     << (r.status == ClaimReport::Status::pass          ? "PASS"
         : r.status == ClaimReport::Status::fail        ? "FAIL"
                                                        : "INCONCLUSIVE")
     << "  (" << r.runtime_seconds << "s)\n";
  for (const auto& [k, v] : r.counts) os << "  " << k << " = " << v << "\n";
  for (const auto& e : r.evidence) os << "  - " << e << "\n";
  return os.str();
}

nlohmann::ordered_json search_rows_json(std::uint32_t q,
                                        const std::vector<SearchRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["q"] = q;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json rj;
    rj["g0"] = row.g0.name;
    rj["g0Order"] = row.g0.order;
    rj["orbitSizes"] = row.analysis.orbit_sizes;
    rj["rank"] = row.analysis.rank;
    rj["twoTransitive"] = row.analysis.two_transitive;
    rj["mpHypothesis"] = row.analysis.mp_hypothesis;
    rj["irreducible"] = row.analysis.irreducible;
    rj["liftedOrder"] = row.lifted_order;
    if (row.report) {
      rj["mp"] = row.report->mp;
      rj["smp"] = row.report->smp;
      rj["aCount"] = row.report->a_count;
      rj["bCount"] = row.report->b_count;
    } else {
      rj["mp"] = nullptr;
      rj["smp"] = nullptr;
    }
    arr.push_back(std::move(rj));
  }
  j["rows"] = std::move(arr);
  return j;
}

std::string search_rows_text(std::uint32_t q, const std::vector<SearchRow>& rows) {
  std::ostringstream os;
  os << "GammaL(1," << q << ") subgroups up to conjugacy: " << rows.size() << "\n";
  for (const auto& row : rows) {
    os << "  " << row.g0.name << "  |G0|=" << row.g0.order << "  rank=" << row.analysis.rank
       << (row.analysis.irreducible ? "  irreducible" : "  reducible");
    if (row.report)
      os << "  V:G0 order " << row.lifted_order << "  mp=" << (row.report->mp ? "yes" : "no")
         << " smp=" << (row.report->smp ? "yes" : "no");
    os << "\n";
  }
  return os.str();
}

}  // namespace magnus

// Serial vs OpenMP kernel comparison on representative workloads.
// Build: part of the CMake tree; run: ./bench_kernels [repeats]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "magnus/classify.hpp"
#include "magnus/constructors.hpp"
#include "magnus/lattice.hpp"
#include "magnus/magnus.hpp"
#include "magnus/structure.hpp"

using namespace magnus;

namespace {

int g_repeats = 3;

template <typename F>
double best_of(F&& fn) {
  double best = 1e300;
  for (int r = 0; r < g_repeats; ++r) {
    double t0 = wall_time();
    fn();
    double dt = wall_time() - t0;
    if (dt < best) best = dt;
  }
  return best;
}

void row(const std::string& name, std::size_t n, double serial, double parallel,
         bool equal) {
  std::printf("%-34s %9zu %10.4fs %10.4fs %7.2fx   %s\n", name.c_str(), n, serial,
              parallel, serial / parallel, equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_repeats = std::atoi(argv[1]);
  const int hw_threads = max_threads();
  std::printf("threads available: %d, repeats: %d\n\n", hw_threads, g_repeats);
  std::printf("%-34s %9s %11s %11s %8s\n", "kernel", "n", "serial", "openmp",
              "speedup");

  {
    Group g = densify(crown_power(m9(), 2));  // order 648 dense table
    auto s = best_of([&] { compute_conjugacy_classes(g, exec::serial); });
    auto p = best_of([&] { compute_conjugacy_classes(g, exec::parallel); });
    bool eq = compute_conjugacy_classes(g, exec::serial).class_of ==
              compute_conjugacy_classes(g, exec::parallel).class_of;
    row("conjugacy classes (crown M9,2)", g.order(), s, p, eq);
  }

  {
    Group g = densify(m9());
    limits lim;  // full triple scan at order 72 runs in both modes
    lim.full_assoc_cap = 100;
    auto s = best_of([&] { find_nonassociative_triple(g.backend(), exec::serial, lim); });
    auto p = best_of([&] { find_nonassociative_triple(g.backend(), exec::parallel, lim); });
    row("associativity scan (M9 dense)", g.order() * g.order() * g.order(), s, p, true);
  }

  {
    Group g = elementary_abelian(2, 6);
    auto s = best_of([&] { compute_subgroup_lattice(g, exec::serial); });
    auto p = best_of([&] { compute_subgroup_lattice(g, exec::parallel); });
    bool eq = compute_subgroup_lattice(g, exec::serial).items.size() ==
              compute_subgroup_lattice(g, exec::parallel).items.size();
    row("subgroup lattice (E(2,6))", g.order(), s, p, eq);
  }

  {
    Group g = gl2(5);
    Group d = densify(g);
    auto s = best_of([&] { compute_subgroup_lattice(d, exec::serial); });
    auto p = best_of([&] { compute_subgroup_lattice(d, exec::parallel); });
    row("subgroup lattice (GL(2,5))", d.order(), s, p, true);
  }

  {
    Group g = build_direct_product({m9(), m9()});
    auto s = best_of([&] { compute_normal_lattice(g, exec::serial); });
    auto p = best_of([&] { compute_normal_lattice(g, exec::parallel); });
    row("normal lattice (M9 x M9)", g.order(), s, p, true);
  }

  {
    // one full search cell: subgroup enumeration, orbit analysis, MP verdicts
    auto cell = [&](int threads) {
      set_threads(threads);
      for (auto& r : gammal1_search(64)) (void)r;
    };
    auto s = best_of([&] { cell(1); });
    auto p = best_of([&] { cell(hw_threads); });
    row("search cell q=64", 64, s, p, true);
  }

  std::printf("\nverdicts and lattices are identical in both modes; see\n"
              "test_parallel_equiv for the assertion suite.\n");
  return 0;
}

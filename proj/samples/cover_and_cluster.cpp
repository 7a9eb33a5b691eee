// Prints the annuli cover of a generated polynomial around 0, then clusters
// its complex roots and reports which tests the cover settled on its own.
//
//   cover_and_cluster [spec] [k]     clusters of radius at most 2^-k

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "rootradii/rootradii.hpp"

namespace rr = rootradii;

int main(int argc, char** argv) {
  const std::string spec = argc > 1 ? argv[1] : "grid:2";
  const long k = argc > 2 ? std::atol(argv[2]) : 30;
  const rr::IntPolynomial p = rr::generate(spec);
  const std::size_t d = p.degree();

  const auto cover = rr::build_annuli_cover(rr::solve_rrc(p, rr::GaussInt(0), mpq_class(1, d * d)), p);
  std::printf("%s: degree %zu, %zu annuli around 0", spec.c_str(), d, cover.annuli.size());
  if (cover.m0 > 0) std::printf(" (root of multiplicity %zu at 0)", cover.m0);
  std::printf("\n");
  for (const auto& a : cover.annuli)
    std::printf("  %.9g <= |z| <= %.9g  carries %zu roots\n", a.r_inner, a.r_outer, a.h + 1);

  std::atomic<long> by_cover{0}, by_pellet{0};
  rr::SolverOptions opt;
  opt.hooks.on_test = [&](rr::TestKind, const rr::Region&, int, bool pellet) { ++(pellet ? by_pellet : by_cover); };
  const auto res = rr::cluster_complex(p, rr::Dyadic::pow2(-k), opt);
  std::printf("%zu clusters; %ld tests settled by the cover, %ld by Pellet\n", res.clusters.size(), by_cover.load(),
              by_pellet.load());
  for (const auto& c : res.clusters)
    std::printf("  %+.15f %+.15fi  m = %d\n", c.re.to_double(), c.im.to_double(), c.multiplicity);
}

// Isolates the real roots of a polynomial file in both modes and shows how
// many Pellet tests each mode needed.
//
//   isolate_file samples/data/quintic.txt

#include <cstdio>
#include <fstream>
#include <iostream>

#include "rootradii/rootradii.hpp"

namespace rr = rootradii;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <polynomial file>\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << '\n';
    return 2;
  }
  rr::IntPolynomial p;
  try {
    p = rr::read_polynomial(in);
  } catch (const rr::parse_error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  for (rr::Mode mode : {rr::Mode::radii, rr::Mode::classic}) {
    rr::SolverOptions opt;
    opt.mode = mode;
    const rr::RealIsolation res = rr::isolate_real(p, opt);
    std::printf("%s mode: %zu real roots, %ld exclusion and %ld counting tests\n",
                mode == rr::Mode::radii ? "radii" : "classic", res.roots.size(), res.stats.n_t0, res.stats.n_tstar);
    for (const auto& r : res.roots)
      std::printf("  [%.12g, %.12g]  m = %d\n", r.left.to_double(), r.right.to_double(), r.multiplicity);
  }
}

// rootradii: real root isolation, complex root clustering and root radii
// from the command line.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootradii/rootradii.hpp"

namespace rr = rootradii;

namespace {

constexpr int kInputError = 2;
constexpr int kPrecisionError = 3;

struct Common {
  std::string poly_file;
  std::string gen_spec;
  std::string mode = "radii";
  std::string delta;
  std::string out_file;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool stats = false;
};

void add_common(CLI::App* app, Common& c, bool solver) {
  auto* src = app->add_option_group("source");
  src->add_option("--poly", c.poly_file, "Polynomial file (degree line, then 'j re [im]' lines)");
  src->add_option("--gen", c.gen_spec, "Generated family, e.g. bernoulli:64, mignotte:64:14, random:32:64:7");
  src->require_option(1);
  app->add_option("--seed", c.seed, "Seed for random:d:tau specs");
  app->add_option("--out", c.out_file, "Write results to this file instead of stdout");
  app->add_option("--delta", c.delta, "Relative radii width as a rational a/b (default 1/d^2)");
  if (solver) {
    app->add_option("--mode", c.mode, "classic or radii")->check(CLI::IsMember({"classic", "radii"}));
    app->add_option("--threads", c.threads, "Worker threads for the exclusion tests")->check(CLI::Range(1u, 256u));
    app->add_flag("--stats", c.stats, "Append run statistics");
  }
}

rr::IntPolynomial load(const Common& c) {
  if (!c.gen_spec.empty()) return rr::generate(c.gen_spec, c.seed);
  std::ifstream in(c.poly_file);
  if (!in) throw rr::parse_error("cannot open '" + c.poly_file + "'");
  return rr::read_polynomial(in);
}

rr::SolverOptions solver_options(const Common& c) {
  rr::SolverOptions o;
  o.mode = c.mode == "classic" ? rr::Mode::classic : rr::Mode::radii;
  o.threads = c.threads;
  if (!c.delta.empty()) {
    o.delta = rr::parse_rational(c.delta);
    if (*o.delta <= 0) throw rr::parse_error("delta must be positive");
  }
  return o;
}

void write_stats(std::ostream& os, const rr::RunStats& s) {
  os << "# n_t0 " << s.n_t0 << '\n'
     << "# n_tstar " << s.n_tstar << '\n'
     << "# n_annuli_excluded " << s.n_annuli_excluded << '\n'
     << "# n_annuli_counted " << s.n_annuli_counted << '\n'
     << "# n_newton " << s.n_newton_attempts << ' ' << s.n_newton_accepted << '\n'
     << "# tree_depth " << s.tree_depth << '\n'
     << "# boxes_visited " << s.boxes_visited << '\n'
     << "# t_radii " << s.t_radii << '\n'
     << "# t_total " << s.t_total << '\n';
}

std::string center_str(const rr::GaussInt& c) { return c.re.get_str() + "," + c.im.get_str(); }

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

rr::GaussInt parse_center(const std::string& s) {
  const auto comma = s.find(',');
  auto num = [&](const std::string& t) {
    mpz_class z;
    if (t.empty() || z.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0)
      throw rr::parse_error("bad center '" + s + "'");
    return z;
  };
  if (comma == std::string::npos) return rr::GaussInt(num(s));
  return rr::GaussInt(num(s.substr(0, comma)), num(s.substr(comma + 1)));
}

void run_risolate(const Common& c, std::ostream& os) {
  const auto res = rr::isolate_real(load(c), solver_options(c));
  for (const auto& r : res.roots) os << rr::num_den(r.left) << ' ' << rr::num_den(r.right) << ' ' << r.multiplicity << '\n';
  if (c.stats) write_stats(os, res.stats);
}

void run_ccluster(const Common& c, const std::string& eps, std::ostream& os) {
  const rr::Dyadic e = rr::parse_dyadic(eps);
  if (e.sign() <= 0) throw rr::parse_error("epsilon must be positive");
  const auto res = rr::cluster_complex(load(c), e, solver_options(c));
  for (const auto& k : res.clusters)
    os << rr::num_den(k.re) << ' ' << rr::num_den(k.im) << ' ' << rr::num_den(k.radius) << ' ' << k.multiplicity << '\n';
  if (c.stats) write_stats(os, res.stats);
}

void run_radii(const Common& c, const std::string& center, std::ostream& os) {
  const rr::IntPolynomial p = load(c);
  const rr::GaussInt ctr = parse_center(center);
  const std::size_t d = p.degree();
  if (d < 1) throw rr::parse_error("radii needs degree at least 1");
  const mpq_class delta = c.delta.empty() ? mpq_class(1, static_cast<unsigned long>(d * d)) : rr::parse_rational(c.delta);
  if (delta <= 0) throw rr::parse_error("delta must be positive");
  const auto cover = rr::build_annuli_cover(rr::solve_rrc(p, ctr, delta), p);
  // c r_inner r_outer t h s_plus s_minus; a root at the center is the degenerate annulus.
  if (cover.m0 > 0) os << center_str(ctr) << " 0 0 " << (d - cover.m0 + 1) << ' ' << (cover.m0 - 1) << " 0 0\n";
  for (const auto& a : cover.annuli)
    os << center_str(ctr) << ' ' << fmt_double(a.r_inner) << ' ' << fmt_double(a.r_outer) << ' ' << a.t << ' ' << a.h
       << ' ' << a.s_plus << ' ' << a.s_minus << '\n';
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty()) v.push_back(t);
  return v;
}

struct BenchArgs {
  std::string specs;
  std::string modes = "classic,radii";
  std::string solver = "risolate";
  std::string epsilon = "2^-53";
  std::string out_file;
  std::uint64_t seed = 0;
};

void run_bench(const BenchArgs& b, std::ostream& os) {
  const rr::Dyadic eps = rr::parse_dyadic(b.epsilon);
  const auto modes = split_list(b.modes);
  for (const auto& m : modes)
    if (m != "classic" && m != "radii") throw rr::parse_error("unknown mode '" + m + "'");
  os << "family,spec,mode,solver,d,tau,count,n_t0,n_tstar,t_radii,t_total\n";
  for (const auto& spec : split_list(b.specs)) {
    const rr::IntPolynomial p = rr::generate(spec, b.seed);
    for (const auto& m : modes) {
      rr::SolverOptions o;
      o.mode = m == "classic" ? rr::Mode::classic : rr::Mode::radii;
      rr::RunStats s;
      std::size_t count = 0;
      if (b.solver == "risolate") {
        auto r = rr::isolate_real(p, o);
        s = r.stats;
        for (const auto& x : r.roots) count += static_cast<std::size_t>(x.multiplicity);
      } else {
        auto r = rr::cluster_complex(p, eps, o);
        s = r.stats;
        count = r.clusters.size();
      }
      os << spec.substr(0, spec.find(':')) << ',' << spec << ',' << m << ',' << b.solver << ',' << p.degree() << ','
         << p.bitsize() << ',' << count << ',' << s.n_t0 << ',' << s.n_tstar << ',' << s.t_radii << ',' << s.t_total
         << '\n';
      os.flush();
    }
  }
}

template <class F>
int with_output(const std::string& file, F&& f) {
  if (file.empty()) {
    f(std::cout);
    return 0;
  }
  std::ofstream out(file);
  if (!out) throw rr::parse_error("cannot write '" + file + "'");
  f(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root radii covers for real root isolation and complex root clustering"};
  app.require_subcommand(1);

  Common ri, cc, ra, ge;
  std::string eps = "2^-53", center = "0";
  BenchArgs bench;

  auto* risolate = app.add_subcommand("risolate", "Isolate the real roots");
  add_common(risolate, ri, true);
  auto* ccluster = app.add_subcommand("ccluster", "Cluster the complex roots");
  add_common(ccluster, cc, true);
  ccluster->add_option("--epsilon", eps, "Cluster radius bound: a/2^k, 2^-k or a/b with b a power of two");
  auto* radii = app.add_subcommand("radii", "Print the annuli cover around a Gaussian integer center");
  add_common(radii, ra, false);
  radii->add_option("--center", center, "Center as 'a' or 'a,b' for a + bi");
  auto* gen = app.add_subcommand("gen", "Print a generated polynomial");
  gen->add_option("--gen", ge.gen_spec, "Family spec")->required();
  gen->add_option("--seed", ge.seed, "Seed for random:d:tau specs");
  gen->add_option("--out", ge.out_file, "Output file");
  auto* bn = app.add_subcommand("bench", "Run both modes over a list of family specs and print CSV");
  bn->add_option("--gen", bench.specs, "Comma-separated family specs")->required();
  bn->add_option("--modes", bench.modes, "Comma-separated modes");
  bn->add_option("--solver", bench.solver, "risolate or ccluster")->check(CLI::IsMember({"risolate", "ccluster"}));
  bn->add_option("--epsilon", bench.epsilon, "Cluster radius bound for ccluster");
  bn->add_option("--seed", bench.seed, "Seed for random:d:tau specs");
  bn->add_option("--out", bench.out_file, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*risolate) return with_output(ri.out_file, [&](std::ostream& os) { run_risolate(ri, os); });
    if (*ccluster) return with_output(cc.out_file, [&](std::ostream& os) { run_ccluster(cc, eps, os); });
    if (*radii) return with_output(ra.out_file, [&](std::ostream& os) { run_radii(ra, center, os); });
    if (*gen) return with_output(ge.out_file, [&](std::ostream& os) { rr::write_polynomial(os, rr::generate(ge.gen_spec, ge.seed)); });
    if (*bn) return with_output(bench.out_file, [&](std::ostream& os) { run_bench(bench, os); });
  } catch (const rr::precision_error& e) {
    std::cerr << "rootradii: " << e.what() << '\n';
    return kPrecisionError;
  } catch (const rr::parse_error& e) {
    std::cerr << "rootradii: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rootradii: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "rootradii: value out of range: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}

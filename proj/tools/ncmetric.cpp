// ncmetric: spectral distances on finite spectral triples.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncmetric/commands.hpp"

int main(int argc, char** argv) {
  using namespace ncmetric;

  CLI::App app{"Spectral distance on finite spectral triples"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandFlags flags;
  std::string method = "auto";
  app.add_option("--method", method, "auto, oracle or closed-form")
      ->check(CLI::IsMember({"auto", "oracle", "closed-form"}));
  app.add_option("--tol", flags.tol, "relative tolerance of the oracle")->check(CLI::PositiveNumber);
  app.add_option("--seed", flags.seed, "seed of the oracle probes");
  app.add_flag("--witness", flags.witness, "print the optimal algebra element");
  app.add_option("--format", flags.format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--parallel", flags.parallel, "worker threads for matrix")->check(CLI::PositiveNumber);
  app.add_option("--out", flags.out, "write output to a file");

  std::string file, state_a, state_b;
  auto* distance = app.add_subcommand("distance", "distance between two named states");
  distance->add_option("file", file, "triple document (JSON)")->required();
  distance->add_option("state_a", state_a)->required();
  distance->add_option("state_b", state_b)->required();

  auto* matrix = app.add_subcommand("matrix", "pairwise distances between all declared states");
  matrix->add_option("file", file, "triple document (JSON)")->required();

  double a = 0, b = 0, c = 0;
  auto* invert3 = app.add_subcommand("invert3", "couplings realizing three distances d12 d13 d23");
  invert3->add_option("d12", a)->required();
  invert3->add_option("d13", b)->required();
  invert3->add_option("d23", c)->required();

  auto* realize = app.add_subcommand("realize", "triple document realizing a metric given as CSV");
  realize->add_option("metric", file, "square CSV metric, inf or empty for infinite")->required();

  HiggsDoublet h;
  double h1 = 0, h2 = 0, h1i = 0, h2i = 0;
  bool verify = false;
  auto* sm = app.add_subcommand("sm", "g^tt and fiber distance of the internal geometry");
  sm->add_option("config", file, "mass configuration (JSON)")->required();
  sm->add_option("h1", h1, "real part of h1")->required();
  sm->add_option("h2", h2, "real part of h2")->required();
  sm->add_option("--h1-im", h1i);
  sm->add_option("--h2-im", h2i);
  sm->add_flag("--verify", verify, "compare with the direct operator norm");

  auto* graph = app.add_subcommand("graph", "Dirac graph and geodesic upper bounds");
  graph->add_option("file", file, "triple document (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  flags.method = parse_method(method);
  if (const char* cap = std::getenv("NCMETRIC_DIM_CAP")) {
    try {
      flags.dim_cap = std::stol(cap);
    } catch (const std::exception&) {
      std::cerr << "error: NCMETRIC_DIM_CAP is not an integer\n";
      return kExitFailure;
    }
  }

  if (*distance) return cmd_distance(file, state_a, state_b, flags, std::cout, std::cerr);
  if (*matrix) return cmd_matrix(file, flags, std::cout, std::cerr);
  if (*invert3) return cmd_invert3(a, b, c, std::cout, std::cerr);
  if (*realize) return cmd_realize(file, flags, std::cout, std::cerr);
  if (*sm) {
    h.h1 = {h1, h1i};
    h.h2 = {h2, h2i};
    return cmd_sm(file, h, verify, std::cout, std::cerr);
  }
  return cmd_graph(file, std::cout, std::cerr);
}

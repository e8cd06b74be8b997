#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ncmetric/dispatch.hpp"
#include "ncmetric/standard_model.hpp"

namespace ncmetric {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitState = 3,
  kExitConstraint = 4,
};

struct CommandFlags {
  Method method = Method::Auto;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  bool witness = false;
  std::string format = "table";  // table | csv
  int parallel = 1;
  std::string out;               // output file; empty writes to the stream
  Eigen::Index dim_cap = 256;

  [[nodiscard]] OracleOptions oracle() const;
};

/// "inf", or the value with 12 significant digits and at least one decimal.
std::string format_value(double v);

int cmd_distance(const std::string& file, const std::string& a, const std::string& b, const CommandFlags& flags,
                 std::ostream& out, std::ostream& err);
/// CSV leaves infinite cells empty and writes a 0/1 mask to <out>.mask.
int cmd_matrix(const std::string& file, const CommandFlags& flags, std::ostream& out, std::ostream& err);
int cmd_invert3(double a, double b, double c, std::ostream& out, std::ostream& err);
int cmd_realize(const std::string& metric_csv, const CommandFlags& flags, std::ostream& out, std::ostream& err);
int cmd_sm(const std::string& config, const HiggsDoublet& h, bool verify, std::ostream& out, std::ostream& err);
int cmd_graph(const std::string& file, std::ostream& out, std::ostream& err);

}  // namespace ncmetric

#pragma once

#include <string>
#include <vector>

#include "ncmetric/standard_model.hpp"
#include "ncmetric/triple.hpp"

namespace ncmetric {

/// Malformed document; the message carries a JSON pointer or byte offset.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A state name that the document does not declare.
class StateError : public Error {
 public:
  using Error::Error;
};

/// A triple description with named states.
///
/// Keys: "algebra" (list of {kind: real|complex|quaternion|matrix, size}),
/// "slots" (list of {block, mode, multiplicity, layout}), "dirac" (rows of
/// numbers or [re, im] pairs), optional "grading" and "states"
/// ({name, block, vector}). A commutative space may instead give "lengths",
/// a symmetric matrix of link lengths where "inf" or null deletes a link.
struct TripleDocument {
  SpectralTriple triple;
  std::vector<PureState> states;

  [[nodiscard]] const PureState& state(const std::string& name) const;
};

TripleDocument parse_document(const std::string& text);
TripleDocument load_document(const std::string& path);
std::string serialize_document(const SpectralTriple& triple, const std::vector<PureState>& states);

/// Mass configuration: {"up": [...], "down": [...], "lepton": [...],
/// "ckm": rows of numbers or [re, im] pairs (optional, identity by default)}.
FermionMasses parse_masses(const std::string& text);
FermionMasses load_masses(const std::string& path);

/// Square metric from CSV; "inf" or an empty cell marks an infinite entry.
RealMatrix parse_metric_csv(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace ncmetric

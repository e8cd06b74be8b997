#pragma once

#include <string>

#include "ncmetric/oracle.hpp"
#include "ncmetric/triple.hpp"

namespace ncmetric {

enum class Method { Auto, Oracle, ClosedForm };

struct MethodResult {
  DistanceValue value;
  std::string method;  // "identical", "kernel-test", "closed-form:<name>" or "oracle"
};

/// Closed form recognized for a pair of states, if any.
///
/// Commutative triples need a real Dirac operator with zero diagonal; cycles
/// are recognized only when the product of their couplings is positive.
std::optional<MethodResult> closed_form_distance(const SpectralTriple& triple, const PureState& s1,
                                                 const PureState& s2);

bool same_state(const PureState& s1, const PureState& s2);

/// Auto: identical states, then the kernel test, then closed forms, then the
/// oracle. ClosedForm throws DomainError when no closed form applies.
MethodResult dispatch_distance(const DistanceOracle& oracle, const PureState& s1, const PureState& s2,
                               Method method);

Method parse_method(const std::string& s);

}  // namespace ncmetric

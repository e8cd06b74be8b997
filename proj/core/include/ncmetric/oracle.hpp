#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ncmetric/triple.hpp"

namespace ncmetric {

struct OracleOptions {
  double rel_tol = 1e-6;
  int max_iters = 2000;  // Newton steps over all barrier stages
  int restarts = 8;      // random feasibility probes of the returned value
  std::uint64_t seed = 0;
  Eigen::Index dim_cap = 256;
  int threads = 1;       // pairs evaluated concurrently by distance_matrix
};

/// Spectral distance on one triple, reusing the commutator map across state pairs.
///
/// Maximizes (tau1 - tau2)(a) over self-adjoint a with |[D, pi(a)]| <= 1 by a
/// log-barrier interior-point method on the matrix inequality
/// -1 <= i[D, pi(a)] <= 1, in coordinates modulo the commutant kernel. The
/// final iterate is rescaled onto the unit sphere of the constraint norm, so the
/// value is always attained by the returned witness; `upper_bound` adds the
/// barrier duality gap.
class DistanceOracle {
 public:
  DistanceOracle(const SpectralTriple& triple, OracleOptions opts = {});

  [[nodiscard]] DistanceValue distance(const PureState& s1, const PureState& s2) const;
  [[nodiscard]] KernelVerdict verdict(const PureState& s1, const PureState& s2) const;
  [[nodiscard]] const SpectralTriple& triple() const { return triple_; }
  [[nodiscard]] const CommutatorMap& map() const { return *map_; }

 private:
  SpectralTriple triple_;
  OracleOptions opts_;
  std::shared_ptr<const CommutatorMap> map_;
};

DistanceValue distance_numeric(const SpectralTriple& triple, const PureState& s1, const PureState& s2,
                               const OracleOptions& opts = {});

/// Symmetric matrix of distances; each pair is computed once.
std::vector<std::vector<DistanceValue>> distance_matrix(const SpectralTriple& triple,
                                                        const std::vector<PureState>& states,
                                                        const OracleOptions& opts = {});

/// |[D, pi(a)]| for an algebra element.
double constraint_norm(const SpectralTriple& triple, const AlgebraElement& a);

}  // namespace ncmetric

#pragma once

#include <string>
#include <vector>

#include "ncmetric/oracle.hpp"
#include "ncmetric/triple.hpp"

namespace ncmetric {

/// External (x) internal product with D = D_E (x) 1 + Gamma_E (x) D_I.
///
/// The external algebra must consist of line blocks acting by scalars; the
/// assembled algebra holds one copy of the internal algebra per external block.
struct ProductTriple {
  SpectralTriple external;
  SpectralTriple internal;
  SpectralTriple assembled;

  /// The product state (external point, internal state) on the assembled triple.
  [[nodiscard]] PureState product_state(const PureState& ext, const PureState& in) const;
};

/// Throws DomainError when the external triple has no grading or is not commutative.
ProductTriple tensor_product_triple(const SpectralTriple& external, const SpectralTriple& internal);

enum class FactorMode { Internal, External };

struct FactorEntry {
  std::string label;
  double product = 0.0;  // distance on the assembled triple
  double factor = 0.0;   // distance on the factor triple
  double deviation = 0.0;
};

struct FactorReport {
  std::vector<FactorEntry> entries;
  double max_deviation = 0.0;  // |product - factor| / max(1, factor); +inf on an inf/finite mismatch
};

/// Compares product distances with factor distances: pairs of internal states at
/// every given external state (Internal), or pairs of external states at every
/// given internal state (External).
FactorReport factor_distance_check(const ProductTriple& product, FactorMode mode,
                                   const std::vector<PureState>& external_states,
                                   const std::vector<PureState>& internal_states, const OracleOptions& opts = {});

struct ReducedPair {
  double coupling_norm = 0.0;
  DistanceValue distance;
};

/// Two states with orthogonal supports P1, P2 whose sum commutes with D reduce
/// to a two-point space with coupling M = P1 D P2; distance 1/|M|.
ReducedPair reduce_pair(const SpectralTriple& triple, const PureState& s1, const PureState& s2);

/// sqrt(dE^2 + dI^2).
double pythagoras_cross(double d_external, double d_internal);

/// Internal triple with D replaced by D + H.
SpectralTriple fluctuate(const SpectralTriple& internal, const HermitianMatrix& h);

/// Length of the shortest path from (t=0, s=x) to (t=1, s=y) for the metric
/// dtau^2 = dt^2 / g(s) + ds^2 on [0, length].
///
/// `gtt` holds samples of g (the inverse fiber metric |M|^2) on a uniform grid
/// over [0, length], linearly interpolated. Solved with the conserved quantity
/// dt/dtau = K g(s): monotone paths, paths turning once beyond either endpoint,
/// and paths resting on a fiber where the turning level is reached.
double warped_geodesic(const std::vector<double>& gtt, double length, double x, double y);

}  // namespace ncmetric

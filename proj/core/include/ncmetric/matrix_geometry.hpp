#pragma once

#include "ncmetric/triple.hpp"

namespace ncmetric {

struct SpherePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Hopf projection of a nonzero vector of C^2 (normalized first).
SpherePoint hopf(const ComplexVector& xi);

/// (M_2(C), C^2, diag(D1, D2)).
SpectralTriple m2_triple(double d1, double d2);

/// Closed form on the M_2(C) sphere: finite only between points of equal altitude.
DistanceValue m2_distance(const ComplexVector& xi, const ComplexVector& zeta, double d1, double d2);

/// (M_n(C) + C, C^{n+1}, [[0, m], [m*, 0]]); block 0 is M_n, block 1 is C.
SpectralTriple two_point_triple(const ComplexVector& m);

/// Closed form on the two-point space M_n(C) + C for states given in the basis
/// of the triple built by two_point_triple(m).
DistanceValue two_point_distance(const ComplexVector& m, const PureState& s1, const PureState& s2);

}  // namespace ncmetric

#include "ncmetric/matrix_geometry.hpp"

#include <cmath>

namespace ncmetric {

namespace {

constexpr double kAltitudeTolerance = 1e-10;

ComplexVector unit(const ComplexVector& v, const char* what) {
  const double n = v.norm();
  if (!(n > 0.0)) throw DomainError(std::string(what) + ": zero vector");
  return v / n;
}

// Unitary v with v m = |m| e1 (a Householder reflection fixed up by a phase).
ComplexMatrix orient(const ComplexVector& m) {
  const Eigen::Index n = m.size();
  const double nm = m.norm();
  const Complex phase = std::abs(m(0)) > 0.0 ? m(0) / std::abs(m(0)) : Complex(1.0, 0.0);
  ComplexVector target = ComplexVector::Zero(n);
  target(0) = phase * nm;
  const ComplexVector w = m - target;
  ComplexMatrix h = ComplexMatrix::Identity(n, n);
  if (w.norm() > 1e-15 * nm) h -= 2.0 * w * w.adjoint() / w.squaredNorm();
  ComplexMatrix fix = ComplexMatrix::Identity(n, n);
  fix(0, 0) = std::conj(phase);
  return fix * h;
}

}  // namespace

SpherePoint hopf(const ComplexVector& xi) {
  if (xi.size() != 2) throw DimensionError("hopf: vector must lie in C^2");
  const ComplexVector u = unit(xi, "hopf");
  const Complex p = u(0) * std::conj(u(1));
  return {2.0 * p.real(), 2.0 * p.imag(), std::norm(u(0)) - std::norm(u(1))};
}

SpectralTriple m2_triple(double d1, double d2) {
  return SpectralTriple(FiniteAlgebra{{AlgebraBlock::matrix(2)}},
                        {{0, SlotMode::Fundamental, 1, SlotLayout::Copies}}, HermitianMatrix::diagonal({d1, d2}));
}

DistanceValue m2_distance(const ComplexVector& xi, const ComplexVector& zeta, double d1, double d2) {
  const SpherePoint p = hopf(xi), q = hopf(zeta);
  const double overlap = std::norm(unit(xi, "m2_distance").dot(unit(zeta, "m2_distance")));
  const double chord = std::sqrt(std::max(0.0, 1.0 - overlap));
  if (chord <= 1e-12) return DistanceValue::finite(0.0);
  if (std::abs(p.z - q.z) > kAltitudeTolerance || d1 == d2) return DistanceValue::infinite();
  return DistanceValue::finite(2.0 * chord / std::abs(d1 - d2));
}

SpectralTriple two_point_triple(const ComplexVector& m) {
  const Eigen::Index n = m.size();
  if (n < 1 || !(m.norm() > 0.0)) throw DomainError("two_point_triple: m must be nonzero");
  ComplexMatrix d = ComplexMatrix::Zero(n + 1, n + 1);
  d.topRightCorner(n, 1) = m;
  d.bottomLeftCorner(1, n) = m.adjoint();
  return SpectralTriple(FiniteAlgebra{{AlgebraBlock::matrix(static_cast<int>(n)), AlgebraBlock::complex_line()}},
                        {{0, SlotMode::Fundamental, 1, SlotLayout::Copies}, {1, SlotMode::Scalar, 1, SlotLayout::Copies}},
                        HermitianMatrix(d));
}

DistanceValue two_point_distance(const ComplexVector& m, const PureState& s1, const PureState& s2) {
  const double nm = m.norm();
  if (!(nm > 0.0)) throw DomainError("two_point_distance: m must be nonzero");
  const FiniteAlgebra alg{{AlgebraBlock::matrix(static_cast<int>(m.size())), AlgebraBlock::complex_line()}};
  validate_state(alg, s1);
  validate_state(alg, s2);
  const ComplexMatrix v = orient(m);

  const bool c1 = s1.block_index == 1, c2 = s2.block_index == 1;
  if (c1 && c2) return DistanceValue::finite(0.0);
  if (c1 || c2) {
    const ComplexVector xi = v * (c1 ? *s2.vector : *s1.vector);
    return std::abs(std::abs(xi(0)) - 1.0) <= kAltitudeTolerance ? DistanceValue::finite(1.0 / nm)
                                                                  : DistanceValue::infinite();
  }
  const ComplexVector xi = v * *s1.vector, zeta = v * *s2.vector;
  const double chord = (zeta - xi * xi.dot(zeta)).norm();
  if (chord <= 1e-12) return DistanceValue::finite(0.0);
  const Eigen::Index n = xi.size();
  if (n > 1) {
    const ComplexVector u = xi.tail(n - 1), w = zeta.tail(n - 1);
    const double nu = u.norm(), nw = w.norm();
    if (std::abs(nu - nw) > kAltitudeTolerance || std::abs(std::abs(w.dot(u)) - nu * nw) > kAltitudeTolerance)
      return DistanceValue::infinite();
  }
  return DistanceValue::finite(2.0 * chord / nm);
}

}  // namespace ncmetric

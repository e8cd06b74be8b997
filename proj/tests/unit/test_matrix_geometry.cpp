#include <gtest/gtest.h>

#include <random>

#include "ncmetric/matrix_geometry.hpp"
#include "ncmetric/oracle.hpp"
#include "support/instances.hpp"

using namespace ncmetric;

namespace {

ComplexVector vec2(Complex a, Complex b) {
  ComplexVector v(2);
  v << a, b;
  return v;
}

ComplexVector equal_altitude(double z, double phase) {
  return vec2(std::sqrt((1 + z) / 2), std::polar(std::sqrt((1 - z) / 2), phase));
}

}  // namespace

TEST(Hopf, PolesAndEquator) {
  const SpherePoint n = hopf(vec2(1, 0));
  EXPECT_NEAR(n.z, 1.0, 1e-15);
  const SpherePoint e = hopf(vec2(1, 1));
  EXPECT_NEAR(e.z, 0.0, 1e-15);
  EXPECT_NEAR(e.x * e.x + e.y * e.y, 1.0, 1e-14);
  EXPECT_THROW(hopf(vec2(0, 0)), DomainError);
}

TEST(Hopf, PhaseInvariant) {
  const ComplexVector v = vec2(Complex(0.3, 0.1), Complex(-0.2, 0.7));
  const SpherePoint a = hopf(v), b = hopf(v * std::polar(1.0, 1.1));
  EXPECT_NEAR(a.x, b.x, 1e-14);
  EXPECT_NEAR(a.y, b.y, 1e-14);
  EXPECT_NEAR(a.z, b.z, 1e-14);
}

TEST(Sphere, ClosedFormCases) {
  EXPECT_EQ(m2_distance(vec2(1, 0), vec2(1, 0), 1.0, 0.0).value, 0.0);
  EXPECT_TRUE(m2_distance(vec2(1, 0), vec2(0, 1), 1.0, 0.0).is_infinite());
  EXPECT_TRUE(m2_distance(equal_altitude(0.2, 0.0), equal_altitude(0.2, 1.0), 1.0, 1.0).is_infinite());
  const ComplexVector a = equal_altitude(0.0, 0.0), b = equal_altitude(0.0, M_PI);
  EXPECT_NEAR(m2_distance(a, b, 1.0, 0.0).value, 2.0, 1e-14);
  EXPECT_NEAR(m2_distance(a, b, 3.0, -1.0).value, 0.5, 1e-14);
}

TEST(Sphere, OracleAgrees) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.9, 0.9), ph(0.0, 2 * M_PI);
  for (int trial = 0; trial < 5; ++trial) {
    const double z = u(rng);
    const ComplexVector a = equal_altitude(z, ph(rng)), b = equal_altitude(z, ph(rng));
    const double cf = m2_distance(a, b, 1.3, -0.4).value;
    const double o =
        distance_numeric(m2_triple(1.3, -0.4), PureState::vector_state(0, a), PureState::vector_state(0, b)).value;
    EXPECT_NEAR(o, cf, 1e-5 * cf);
  }
}

TEST(TwoPointMatrix, Branches) {
  ComplexVector m(3);
  m << Complex(1, 1), 0.5, 0.0;
  const double nm = m.norm();
  const PureState c = PureState::canonical(1);
  const PureState along = PureState::vector_state(0, m / nm);
  ComplexVector other(3);
  other << 0, 0, 1;
  EXPECT_NEAR(two_point_distance(m, c, along).value, 1.0 / nm, 1e-14);
  EXPECT_TRUE(two_point_distance(m, c, PureState::vector_state(0, other)).is_infinite());
  EXPECT_EQ(two_point_distance(m, along, along).value, 0.0);
}

TEST(TwoPointMatrix, OracleAgreesOnMatrixPairs) {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 4; ++n) {
    const ComplexVector m = support::random_unit(n, rng) * 1.7;
    const SpectralTriple t = two_point_triple(m);
    // Same tail direction and norm, different components along m.
    const ComplexVector e = m / m.norm();
    ComplexVector tail = support::random_unit(n, rng);
    tail -= e * e.dot(tail);
    tail /= tail.norm();
    const ComplexVector xi = 0.6 * e + 0.8 * tail;
    const ComplexVector zeta = std::polar(0.6, 2.0) * e + 0.8 * tail;
    const PureState a = PureState::vector_state(0, xi), b = PureState::vector_state(0, zeta);
    const DistanceValue cf = two_point_distance(m, a, b);
    ASSERT_FALSE(cf.is_infinite());
    EXPECT_NEAR(distance_numeric(t, a, b).value, cf.value, 1e-5 * cf.value);
  }
}

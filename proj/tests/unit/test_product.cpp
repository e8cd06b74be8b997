#include <gtest/gtest.h>

#include "ncmetric/matrix_geometry.hpp"
#include "ncmetric/product.hpp"

using namespace ncmetric;

namespace {

SpectralTriple graded_two_point(double k) {
  RealMatrix d(2, 2);
  d << 0, k, k, 0;
  return SpectralTriple(FiniteAlgebra::complex_points(2), {{0, SlotMode::Scalar, 1}, {1, SlotMode::Scalar, 1}},
                        HermitianMatrix(d), std::vector<int>{1, -1});
}

SpectralTriple ungraded_two_point(double k) {
  RealMatrix d(2, 2);
  d << 0, k, k, 0;
  return commutative_triple(HermitianMatrix(d));
}

PureState pt(std::size_t i, std::string name = {}) { return PureState::canonical(i, std::move(name)); }

}  // namespace

TEST(Product, AssemblyShape) {
  const ProductTriple p = tensor_product_triple(graded_two_point(1.0), m2_triple(1.0, 0.0));
  EXPECT_EQ(p.assembled.dim(), 4);
  EXPECT_EQ(p.assembled.algebra().blocks.size(), 2u);
  EXPECT_FALSE(p.assembled.grading().has_value());
  const ProductTriple q = tensor_product_triple(graded_two_point(1.0), graded_two_point(2.0));
  ASSERT_TRUE(q.assembled.grading().has_value());
  EXPECT_EQ(*q.assembled.grading(), (std::vector<int>{1, -1, -1, 1}));
}

TEST(Product, RequiresExternalGrading) {
  EXPECT_THROW(tensor_product_triple(ungraded_two_point(1.0), ungraded_two_point(1.0)), DomainError);
  EXPECT_THROW(tensor_product_triple(m2_triple(1.0, 0.0), ungraded_two_point(1.0)), DomainError);
}

TEST(Product, StateNaming) {
  const ProductTriple p = tensor_product_triple(graded_two_point(1.0), ungraded_two_point(2.0));
  const PureState s = p.product_state(pt(1, "b"), pt(0, "p"));
  EXPECT_EQ(s.block_index, 2u);
  EXPECT_EQ(s.name, "bxp");
}

TEST(Product, FactorDistancesBothDirections) {
  const ProductTriple p = tensor_product_triple(graded_two_point(0.8), ungraded_two_point(1.7));
  const std::vector<PureState> ext{pt(0, "a"), pt(1, "b")}, in{pt(0, "p"), pt(1, "q")};
  const FactorReport ri = factor_distance_check(p, FactorMode::Internal, ext, in);
  const FactorReport re = factor_distance_check(p, FactorMode::External, ext, in);
  EXPECT_EQ(ri.entries.size(), 2u);
  EXPECT_LT(ri.max_deviation, 1e-5);
  EXPECT_LT(re.max_deviation, 1e-5);
  EXPECT_NEAR(ri.entries[0].product, 1.0 / 1.7, 1e-5);
  EXPECT_NEAR(re.entries[0].product, 1.0 / 0.8, 1e-5);
}

TEST(ReducePair, CouplingNorm) {
  RealMatrix d = RealMatrix::Zero(3, 3);
  d(0, 1) = d(1, 0) = 2.0;
  d(2, 2) = 5.0;
  const SpectralTriple t = commutative_triple(HermitianMatrix(d));
  const ReducedPair r = reduce_pair(t, pt(0), pt(1));
  EXPECT_NEAR(r.coupling_norm, 2.0, 1e-14);
  EXPECT_NEAR(r.distance.value, 0.5, 1e-14);
}

TEST(ReducePair, RejectsLeakingSupport) {
  RealMatrix d = RealMatrix::Zero(3, 3);
  d(0, 1) = d(1, 0) = 2.0;
  d(1, 2) = d(2, 1) = 1.0;
  const SpectralTriple t = commutative_triple(HermitianMatrix(d));
  try {
    reduce_pair(t, pt(0), pt(1));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("residual"), std::string::npos);
  }
  EXPECT_THROW(reduce_pair(t, pt(0), pt(0)), DomainError);
}

TEST(Fluctuation, AddsToDirac) {
  const SpectralTriple t = ungraded_two_point(1.0);
  RealMatrix h(2, 2);
  h << 0, 1, 1, 0;
  const SpectralTriple f = fluctuate(t, HermitianMatrix(h));
  EXPECT_EQ(f.dirac()(0, 1), Complex(2.0));
  EXPECT_NEAR(distance_numeric(f, pt(0), pt(1)).value, 0.5, 1e-6);
  EXPECT_THROW(fluctuate(t, HermitianMatrix::zero(3)), DimensionError);
}

TEST(Pythagoras, Hypot) { EXPECT_DOUBLE_EQ(pythagoras_cross(3.0, 4.0), 5.0); }

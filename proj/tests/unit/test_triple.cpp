#include <gtest/gtest.h>

#include "ncmetric/triple.hpp"

using namespace ncmetric;

namespace {

SpectralTriple m2_plus_c(const ComplexMatrix& d) {
  FiniteAlgebra a{{AlgebraBlock::matrix(2), AlgebraBlock::complex_line()}};
  return SpectralTriple(a, {{0, SlotMode::Fundamental, 1}, {1, SlotMode::Scalar, 1}}, HermitianMatrix(d));
}

}  // namespace

TEST(Algebra, Dimensions) {
  EXPECT_EQ(AlgebraBlock::matrix(3).element_dim(), 3);
  EXPECT_EQ(AlgebraBlock::matrix(3).real_dimension(), 18);
  EXPECT_EQ(AlgebraBlock::quaternions().element_dim(), 2);
  EXPECT_EQ(AlgebraBlock::quaternions().real_dimension(), 4);
  EXPECT_EQ(FiniteAlgebra::complex_points(4).real_dimension(), 8);
}

TEST(Triple, RejectsDimensionMismatch) {
  FiniteAlgebra a = FiniteAlgebra::complex_points(2);
  EXPECT_THROW(SpectralTriple(a, {{0, SlotMode::Scalar, 1}}, HermitianMatrix::zero(2)), DimensionError);
}

TEST(Triple, RejectsModeOnWrongBlock) {
  FiniteAlgebra a{{AlgebraBlock::complex_line()}};
  EXPECT_THROW(SpectralTriple(a, {{0, SlotMode::Quaternion2x2, 1}}, HermitianMatrix::zero(2)), DomainError);
  EXPECT_THROW(SpectralTriple(a, {{3, SlotMode::Scalar, 1}}, HermitianMatrix::zero(1)), DomainError);
}

TEST(Triple, GradingChecks) {
  RealMatrix d(2, 2);
  d << 0, 1, 1, 0;
  FiniteAlgebra a = FiniteAlgebra::complex_points(2);
  std::vector<RepresentationSlot> slots{{0, SlotMode::Scalar, 1}, {1, SlotMode::Scalar, 1}};
  EXPECT_NO_THROW(SpectralTriple(a, slots, HermitianMatrix(d), std::vector<int>{1, -1}));
  EXPECT_THROW(SpectralTriple(a, slots, HermitianMatrix(d), std::vector<int>{1, 1}), DomainError);
  EXPECT_THROW(SpectralTriple(a, slots, HermitianMatrix(d), std::vector<int>{1, 2}), DomainError);
  // Scalars on a doubled line commute with any diagonal grading.
  FiniteAlgebra one{{AlgebraBlock::complex_line()}};
  EXPECT_NO_THROW(SpectralTriple(one, {{0, SlotMode::Scalar, 2}}, HermitianMatrix(d), std::vector<int>{1, -1}));
  // On M2 the same grading fails to commute.
  FiniteAlgebra m2{{AlgebraBlock::matrix(2)}};
  EXPECT_THROW(SpectralTriple(m2, {{0, SlotMode::Fundamental, 1}}, HermitianMatrix(d), std::vector<int>{1, -1}),
               DomainError);
}

TEST(Triple, RealFormOnlyWithConjugateSlots) {
  FiniteAlgebra a{{AlgebraBlock::complex_line()}};
  EXPECT_FALSE(SpectralTriple(a, {{0, SlotMode::Scalar, 1}}, HermitianMatrix::zero(1)).real_form());
  EXPECT_TRUE(SpectralTriple(a, {{0, SlotMode::Scalar, 1}, {0, SlotMode::ScalarConjugate, 1}}, HermitianMatrix::zero(2))
                  .real_form());
}

TEST(Represent, QuaternionAndConjugate) {
  FiniteAlgebra a{{AlgebraBlock::quaternions(), AlgebraBlock::complex_line()}};
  SpectralTriple t(a, {{0, SlotMode::Quaternion2x2, 1}, {1, SlotMode::ScalarConjugate, 2}}, HermitianMatrix::zero(4));
  AlgebraElement e = zero_element(a);
  e[0] = quaternion(1.0, 2.0, 3.0, 4.0);
  e[1](0, 0) = Complex(0.5, 0.25);
  const ComplexMatrix p = represent(e, t);
  EXPECT_EQ(p.rows(), 4);
  EXPECT_EQ(p.topLeftCorner(2, 2), e[0]);
  EXPECT_EQ(p(2, 2), Complex(0.5, -0.25));
  EXPECT_EQ(p(3, 3), Complex(0.5, -0.25));
  EXPECT_EQ(p(2, 3), Complex(0.0));
}

TEST(Represent, LayoutOfCopies) {
  FiniteAlgebra a{{AlgebraBlock::matrix(2)}};
  AlgebraElement e{ComplexMatrix(2, 2)};
  e[0] << 1, 2, 3, 4;
  const ComplexMatrix copies =
      represent(e, a, {{0, SlotMode::Fundamental, 2, SlotLayout::Copies}});
  const ComplexMatrix first = represent(e, a, {{0, SlotMode::Fundamental, 2, SlotLayout::ActionFirst}});
  EXPECT_EQ(copies(0, 1), Complex(2.0));
  EXPECT_EQ(copies(2, 3), Complex(2.0));
  EXPECT_EQ(first(0, 2), Complex(2.0));
  EXPECT_EQ(first(1, 3), Complex(2.0));
}

TEST(States, QuaternionStateIsHalfTrace) {
  const ComplexMatrix q = quaternion(1.5, 0.3, -2.0, 0.7);
  AlgebraElement e{q};
  EXPECT_NEAR(evaluate_state(PureState::canonical(0), e, false).real(), 1.5, 1e-14);
}

TEST(States, RealFormTakesRealPart) {
  AlgebraElement e{ComplexMatrix::Constant(1, 1, Complex(2.0, 3.0))};
  EXPECT_EQ(evaluate_state(PureState::canonical(0), e, true), Complex(2.0, 0.0));
  EXPECT_EQ(evaluate_state(PureState::canonical(0), e, false), Complex(2.0, 3.0));
}

TEST(States, Validation) {
  FiniteAlgebra a{{AlgebraBlock::matrix(2), AlgebraBlock::complex_line()}};
  EXPECT_THROW(validate_state(a, PureState::canonical(0)), DomainError);
  EXPECT_THROW(validate_state(a, PureState::canonical(5)), DomainError);
  ComplexVector v(3);
  v << 1, 0, 0;
  EXPECT_THROW(validate_state(a, PureState::vector_state(0, v)), DimensionError);
  ComplexVector w(2);
  w << 1, 1;
  EXPECT_THROW(PureState::vector_state(0, w), DomainError);
}

TEST(SelfAdjointBasis, SizeIsRealDimensionOfHermitianPart) {
  FiniteAlgebra a{{AlgebraBlock::matrix(3), AlgebraBlock::quaternions(), AlgebraBlock::complex_line()}};
  // 9 for hermitian 3x3, 1 for the self-adjoint quaternions (real scalars), 1 for the line.
  EXPECT_EQ(self_adjoint_coordinates(a).size(), 11u);
}

TEST(KernelTest, DisconnectedPointsAreInfinite) {
  RealMatrix d = RealMatrix::Zero(3, 3);
  d(0, 1) = d(1, 0) = 1.0;
  const SpectralTriple t = commutative_triple(HermitianMatrix(d));
  EXPECT_EQ(commutant_kernel_test(t, PureState::canonical(0), PureState::canonical(1)), KernelVerdict::FinitePossible);
  EXPECT_EQ(commutant_kernel_test(t, PureState::canonical(0), PureState::canonical(2)), KernelVerdict::Infinite);
}

TEST(KernelTest, MatrixBlockTwoPoint) {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 2) = d(2, 0) = 1.0;
  const SpectralTriple t = m2_plus_c(d);
  ComplexVector e1(2), e2(2);
  e1 << 1, 0;
  e2 << 0, 1;
  EXPECT_EQ(commutant_kernel_test(t, PureState::canonical(1), PureState::vector_state(0, e1)),
            KernelVerdict::FinitePossible);
  EXPECT_EQ(commutant_kernel_test(t, PureState::canonical(1), PureState::vector_state(0, e2)), KernelVerdict::Infinite);
}

TEST(CommutatorMap, WhiteningGivesUnitFrobenius) {
  ComplexMatrix d(3, 3);
  d << 0.3, Complex(0.2, 0.1), 0.9, Complex(0.2, -0.1), -0.5, Complex(0, 0.4), 0.9, Complex(0, -0.4), 0.1;
  const SpectralTriple t = m2_plus_c(d);
  const CommutatorMap map(t);
  for (Eigen::Index k = 0; k < map.whitening.cols(); ++k) {
    RealVector v = RealVector::Zero(map.whitening.cols());
    v(k) = 1.0;
    const AlgebraElement a = map.element(map.whitening * v);
    EXPECT_NEAR(commutator(t.dirac(), represent(a, t)).norm(), 1.0, 1e-10);
  }
  EXPECT_EQ(map.kernel.cols(), 1);  // only the identity commutes with a generic D
}

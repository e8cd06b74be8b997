#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncmetric/linalg.hpp"

namespace ncmetric {

enum class BlockKind { RealLine, ComplexLine, Quaternions, MatrixBlock };

/// One simple summand of a finite algebra.
struct AlgebraBlock {
  BlockKind kind = BlockKind::ComplexLine;
  int size = 1;  // n of M_n(C); 1 otherwise

  static AlgebraBlock real_line() { return {BlockKind::RealLine, 1}; }
  static AlgebraBlock complex_line() { return {BlockKind::ComplexLine, 1}; }
  static AlgebraBlock quaternions() { return {BlockKind::Quaternions, 1}; }
  static AlgebraBlock matrix(int n) { return {BlockKind::MatrixBlock, n}; }

  /// Size of the square matrix holding one element of this block.
  [[nodiscard]] int element_dim() const;
  [[nodiscard]] int real_dimension() const;
};

struct FiniteAlgebra {
  std::vector<AlgebraBlock> blocks;

  /// C^n as n complex lines.
  static FiniteAlgebra complex_points(int n);
  [[nodiscard]] int real_dimension() const;
};

/// Coordinates of an algebra element: one square matrix per block.
/// Lines are 1x1, a quaternion is its 2x2 complex form [[x, -conj y], [y, conj x]].
using AlgebraElement = std::vector<ComplexMatrix>;

enum class SlotMode { Fundamental, Conjugate, Scalar, ScalarConjugate, Quaternion2x2 };

/// How multiplicity copies are laid out: I_mult (x) action, or action (x) I_mult.
enum class SlotLayout { Copies, ActionFirst };

struct RepresentationSlot {
  std::size_t block_index = 0;
  SlotMode mode = SlotMode::Scalar;
  int multiplicity = 1;
  SlotLayout layout = SlotLayout::Copies;

  [[nodiscard]] int dim(const FiniteAlgebra& algebra) const;
};

/// A finite spectral triple (A, H, D) with an optional diagonal grading.
///
/// Validated on construction: slot modes must fit their blocks, the slot
/// dimensions must add up to dim D, and a grading must be +-1, commute with
/// the represented algebra and anticommute with D (tolerance 1e-10).
class SpectralTriple {
 public:
  static constexpr double kGradingTolerance = 1e-10;

  SpectralTriple(FiniteAlgebra algebra, std::vector<RepresentationSlot> slots, HermitianMatrix dirac,
                 std::optional<std::vector<int>> grading = std::nullopt);

  [[nodiscard]] const FiniteAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] const std::vector<RepresentationSlot>& slots() const { return slots_; }
  [[nodiscard]] const HermitianMatrix& dirac() const { return dirac_; }
  [[nodiscard]] const std::optional<std::vector<int>>& grading() const { return grading_; }
  /// True when some slot acts by a conjugate; complex lines then have state Re(b).
  [[nodiscard]] bool real_form() const { return real_form_; }
  [[nodiscard]] Eigen::Index dim() const { return dirac_.dim(); }

  /// Same algebra, slots and grading with another Dirac operator (grading re-checked).
  [[nodiscard]] SpectralTriple with_dirac(const HermitianMatrix& d) const;

 private:
  FiniteAlgebra algebra_;
  std::vector<RepresentationSlot> slots_;
  HermitianMatrix dirac_;
  std::optional<std::vector<int>> grading_;
  bool real_form_ = false;
};

/// Commutative triple on C^n with D real symmetric (or Hermitian) of size n.
SpectralTriple commutative_triple(const HermitianMatrix& d);

/// Pure state of one block: a unit vector for matrix blocks, the canonical
/// state for lines and quaternions.
struct PureState {
  static constexpr double kNormTolerance = 1e-12;

  std::string name;
  std::size_t block_index = 0;
  std::optional<ComplexVector> vector;

  static PureState canonical(std::size_t block, std::string name = {});
  /// Normalizes nothing: throws DomainError unless |v| = 1 within 1e-12.
  static PureState vector_state(std::size_t block, ComplexVector v, std::string name = {});
};

/// Throws DomainError when the state does not fit the algebra.
void validate_state(const FiniteAlgebra& algebra, const PureState& s);

/// Non-negative extended real with an optional witness element.
struct DistanceValue {
  double value = 0.0;
  std::optional<AlgebraElement> witness;
  /// False when the solver stopped early; value is then a lower bound.
  bool converged = true;
  /// Certified upper bound from the duality gap (equal to value for closed forms).
  double upper_bound = 0.0;

  static DistanceValue infinite();
  static DistanceValue finite(double v);
  [[nodiscard]] bool is_infinite() const;
};

AlgebraElement identity_element(const FiniteAlgebra& algebra);
AlgebraElement zero_element(const FiniteAlgebra& algebra);
ComplexMatrix quaternion(double alpha, double beta, double gamma, double delta);

/// pi(a), block diagonal over slots. Throws DimensionError on shape mismatch.
ComplexMatrix represent(const AlgebraElement& a, const SpectralTriple& triple);
ComplexMatrix represent(const AlgebraElement& a, const FiniteAlgebra& algebra,
                        const std::vector<RepresentationSlot>& slots);

/// tau(a) for a pure state; real part only for complex lines of a real-form triple.
Complex evaluate_state(const PureState& s, const AlgebraElement& a, bool real_form);
Complex evaluate_state(const PureState& s, const AlgebraElement& a, const SpectralTriple& triple);

/// Real-linear basis of the self-adjoint part of the algebra, as coordinates.
std::vector<AlgebraElement> self_adjoint_coordinates(const FiniteAlgebra& algebra);
/// Represented self-adjoint basis.
std::vector<ComplexMatrix> self_adjoint_basis(const SpectralTriple& triple);

enum class KernelVerdict { FinitePossible, Infinite };

/// The real-linear map u -> [D, pi(a(u))] on self-adjoint coordinates, with its
/// kernel and a whitened parametrization of the orthogonal complement.
///
/// `whitening` maps quotient coordinates v to basis coefficients, chosen so that
/// the Frobenius norm of [D, pi(a)] equals |v|.
struct CommutatorMap {
  static constexpr double kRankTolerance = 1e-10;

  std::vector<AlgebraElement> coords;
  std::vector<ComplexMatrix> basis;         // represented basis elements
  std::vector<ComplexMatrix> commutators;   // i[D, B_j], Hermitian
  RealMatrix kernel;                        // orthonormal columns
  RealMatrix whitening;                     // coefficients = whitening * v
  double map_norm = 0.0;

  explicit CommutatorMap(const SpectralTriple& triple);

  /// (tau1 - tau2)(B_j) for every basis element.
  [[nodiscard]] RealVector functional(const SpectralTriple& triple, const PureState& s1,
                                      const PureState& s2) const;
  [[nodiscard]] KernelVerdict kernel_verdict(const RealVector& c) const;
  [[nodiscard]] AlgebraElement element(const RealVector& coefficients) const;
};

KernelVerdict commutant_kernel_test(const SpectralTriple& triple, const PureState& s1, const PureState& s2);

std::string to_string(BlockKind k);
std::string to_string(SlotMode m);

}  // namespace ncmetric

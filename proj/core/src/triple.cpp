#include "ncmetric/triple.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SVD>

namespace ncmetric {

namespace {

ComplexMatrix block_action(const ComplexMatrix& x, SlotMode mode) {
  switch (mode) {
    case SlotMode::Conjugate:
    case SlotMode::ScalarConjugate:
      return x.conjugate();
    default:
      return x;
  }
}

bool mode_fits(BlockKind kind, SlotMode mode) {
  switch (mode) {
    case SlotMode::Fundamental:
    case SlotMode::Conjugate:
      return kind == BlockKind::MatrixBlock;
    case SlotMode::Quaternion2x2:
      return kind == BlockKind::Quaternions;
    case SlotMode::Scalar:
    case SlotMode::ScalarConjugate:
      return kind == BlockKind::RealLine || kind == BlockKind::ComplexLine;
  }
  return false;
}

void check_element(const AlgebraElement& a, const FiniteAlgebra& algebra) {
  if (a.size() != algebra.blocks.size()) throw DimensionError("algebra element: wrong number of blocks");
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int d = algebra.blocks[k].element_dim();
    if (a[k].rows() != d || a[k].cols() != d) {
      std::ostringstream os;
      os << "algebra element: block " << k << " must be " << d << "x" << d;
      throw DimensionError(os.str());
    }
  }
}

}  // namespace

int AlgebraBlock::element_dim() const {
  switch (kind) {
    case BlockKind::Quaternions:
      return 2;
    case BlockKind::MatrixBlock:
      return size;
    default:
      return 1;
  }
}

int AlgebraBlock::real_dimension() const {
  switch (kind) {
    case BlockKind::RealLine:
      return 1;
    case BlockKind::ComplexLine:
      return 2;
    case BlockKind::Quaternions:
      return 4;
    case BlockKind::MatrixBlock:
      return 2 * size * size;
  }
  return 0;
}

FiniteAlgebra FiniteAlgebra::complex_points(int n) {
  return FiniteAlgebra{std::vector<AlgebraBlock>(static_cast<std::size_t>(n), AlgebraBlock::complex_line())};
}

int FiniteAlgebra::real_dimension() const {
  int r = 0;
  for (const auto& b : blocks) r += b.real_dimension();
  return r;
}

int RepresentationSlot::dim(const FiniteAlgebra& algebra) const {
  return algebra.blocks.at(block_index).element_dim() * multiplicity;
}

SpectralTriple::SpectralTriple(FiniteAlgebra algebra, std::vector<RepresentationSlot> slots, HermitianMatrix dirac,
                               std::optional<std::vector<int>> grading)
    : algebra_(std::move(algebra)), slots_(std::move(slots)), dirac_(std::move(dirac)), grading_(std::move(grading)) {
  if (algebra_.blocks.empty()) throw DomainError("spectral triple: algebra has no blocks");
  for (const auto& b : algebra_.blocks)
    if (b.size < 1) throw DomainError("spectral triple: block size must be >= 1");

  Eigen::Index total = 0;
  for (const auto& s : slots_) {
    if (s.block_index >= algebra_.blocks.size()) throw DomainError("slot refers to a missing block");
    if (s.multiplicity < 1) throw DomainError("slot multiplicity must be >= 1");
    if (!mode_fits(algebra_.blocks[s.block_index].kind, s.mode)) {
      std::ostringstream os;
      os << "slot mode " << to_string(s.mode) << " does not fit block kind "
         << to_string(algebra_.blocks[s.block_index].kind);
      throw DomainError(os.str());
    }
    if (s.mode == SlotMode::Conjugate || s.mode == SlotMode::ScalarConjugate) real_form_ = true;
    total += s.dim(algebra_);
  }
  if (total != dirac_.dim()) {
    std::ostringstream os;
    os << "spectral triple: slots span dimension " << total << " but D has dimension " << dirac_.dim();
    throw DimensionError(os.str());
  }

  if (grading_) {
    const auto& g = *grading_;
    if (static_cast<Eigen::Index>(g.size()) != total) throw DimensionError("grading length differs from dim D");
    ComplexMatrix gm = ComplexMatrix::Zero(total, total);
    for (Eigen::Index i = 0; i < total; ++i) {
      if (g[i] != 1 && g[i] != -1) throw DomainError("grading entries must be +1 or -1");
      gm(i, i) = static_cast<double>(g[i]);
    }
    const double anti = (gm * dirac_.matrix() + dirac_.matrix() * gm).cwiseAbs().maxCoeff();
    if (anti > kGradingTolerance) {
      std::ostringstream os;
      os << "grading does not anticommute with D (residual " << anti << ")";
      throw DomainError(os.str());
    }
    for (const auto& b : self_adjoint_coordinates(algebra_)) {
      const ComplexMatrix p = represent(b, algebra_, slots_);
      if ((gm * p - p * gm).cwiseAbs().maxCoeff() > kGradingTolerance)
        throw DomainError("grading does not commute with the represented algebra");
    }
  }
}

SpectralTriple SpectralTriple::with_dirac(const HermitianMatrix& d) const {
  return SpectralTriple(algebra_, slots_, d, grading_);
}

SpectralTriple commutative_triple(const HermitianMatrix& d) {
  const int n = static_cast<int>(d.dim());
  std::vector<RepresentationSlot> slots;
  for (int i = 0; i < n; ++i) slots.push_back({static_cast<std::size_t>(i), SlotMode::Scalar, 1, SlotLayout::Copies});
  return SpectralTriple(FiniteAlgebra::complex_points(n), std::move(slots), d);
}

PureState PureState::canonical(std::size_t block, std::string name) {
  PureState s;
  s.name = std::move(name);
  s.block_index = block;
  return s;
}

PureState PureState::vector_state(std::size_t block, ComplexVector v, std::string name) {
  if (std::abs(v.norm() - 1.0) > kNormTolerance) throw DomainError("state vector must have unit norm");
  PureState s;
  s.name = std::move(name);
  s.block_index = block;
  s.vector = std::move(v);
  return s;
}

void validate_state(const FiniteAlgebra& algebra, const PureState& s) {
  if (s.block_index >= algebra.blocks.size()) throw DomainError("state refers to a missing block");
  const auto& b = algebra.blocks[s.block_index];
  if (b.kind == BlockKind::MatrixBlock) {
    if (!s.vector) throw DomainError("matrix-block state needs a vector");
    if (s.vector->size() != b.size) throw DimensionError("state vector length differs from block size");
    if (std::abs(s.vector->norm() - 1.0) > PureState::kNormTolerance)
      throw DomainError("state vector must have unit norm");
  } else if (s.vector && !(s.vector->size() == 1 && std::abs(std::abs((*s.vector)(0)) - 1.0) <= 1e-12)) {
    throw DomainError("line and quaternion blocks only carry their canonical state");
  }
}

DistanceValue DistanceValue::infinite() {
  DistanceValue d;
  d.value = std::numeric_limits<double>::infinity();
  d.upper_bound = d.value;
  return d;
}

DistanceValue DistanceValue::finite(double v) {
  DistanceValue d;
  d.value = v;
  d.upper_bound = v;
  return d;
}

bool DistanceValue::is_infinite() const { return std::isinf(value); }

AlgebraElement identity_element(const FiniteAlgebra& algebra) {
  AlgebraElement a;
  for (const auto& b : algebra.blocks) a.push_back(ComplexMatrix::Identity(b.element_dim(), b.element_dim()));
  return a;
}

AlgebraElement zero_element(const FiniteAlgebra& algebra) {
  AlgebraElement a;
  for (const auto& b : algebra.blocks) a.push_back(ComplexMatrix::Zero(b.element_dim(), b.element_dim()));
  return a;
}

ComplexMatrix quaternion(double alpha, double beta, double gamma, double delta) {
  const Complex x(alpha, beta), y(gamma, delta);
  ComplexMatrix q(2, 2);
  q << x, -std::conj(y), y, std::conj(x);
  return q;
}

ComplexMatrix represent(const AlgebraElement& a, const FiniteAlgebra& algebra,
                        const std::vector<RepresentationSlot>& slots) {
  check_element(a, algebra);
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(slots.size());
  for (const auto& s : slots) {
    const ComplexMatrix act = block_action(a[s.block_index], s.mode);
    const ComplexMatrix id = ComplexMatrix::Identity(s.multiplicity, s.multiplicity);
    blocks.push_back(s.layout == SlotLayout::Copies ? kron(id, act) : kron(act, id));
  }
  return block_diagonal(blocks);
}

ComplexMatrix represent(const AlgebraElement& a, const SpectralTriple& triple) {
  return represent(a, triple.algebra(), triple.slots());
}

Complex evaluate_state(const PureState& s, const AlgebraElement& a, bool real_form) {
  const ComplexMatrix& x = a.at(s.block_index);
  if (s.vector) {
    if (x.rows() == 1) return x(0, 0);
    return s.vector->dot(x * *s.vector);
  }
  if (x.rows() == 2) return Complex(0.5 * (x(0, 0) + x(1, 1)).real(), 0.0);
  if (real_form) return Complex(x(0, 0).real(), 0.0);
  return x(0, 0);
}

Complex evaluate_state(const PureState& s, const AlgebraElement& a, const SpectralTriple& triple) {
  validate_state(triple.algebra(), s);
  return evaluate_state(s, a, triple.real_form());
}

std::vector<AlgebraElement> self_adjoint_coordinates(const FiniteAlgebra& algebra) {
  std::vector<AlgebraElement> basis;
  const AlgebraElement zero = zero_element(algebra);
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < algebra.blocks.size(); ++k) {
    const auto& b = algebra.blocks[k];
    if (b.kind != BlockKind::MatrixBlock) {
      AlgebraElement e = zero;
      e[k] = ComplexMatrix::Identity(b.element_dim(), b.element_dim());
      basis.push_back(std::move(e));
      continue;
    }
    const int n = b.size;
    for (int i = 0; i < n; ++i) {
      AlgebraElement e = zero;
      e[k](i, i) = 1.0;
      basis.push_back(std::move(e));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        AlgebraElement s = zero, t = zero;
        s[k](i, j) = r;
        s[k](j, i) = r;
        t[k](i, j) = Complex(0.0, -r);
        t[k](j, i) = Complex(0.0, r);
        basis.push_back(std::move(s));
        basis.push_back(std::move(t));
      }
  }
  return basis;
}

std::vector<ComplexMatrix> self_adjoint_basis(const SpectralTriple& triple) {
  std::vector<ComplexMatrix> out;
  for (const auto& e : self_adjoint_coordinates(triple.algebra())) out.push_back(represent(e, triple));
  return out;
}

CommutatorMap::CommutatorMap(const SpectralTriple& triple) : coords(self_adjoint_coordinates(triple.algebra())) {
  const Eigen::Index n = triple.dim();
  const Eigen::Index m = static_cast<Eigen::Index>(coords.size());
  const Complex i(0.0, 1.0);
  RealMatrix l(2 * n * n, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    basis.push_back(represent(coords[j], triple));
    ComplexMatrix c = i * commutator(triple.dirac(), basis.back());
    c = 0.5 * (c + c.adjoint()).eval();
    const Eigen::Map<const ComplexVector> v(c.data(), n * n);
    l.col(j).head(n * n) = v.real();
    l.col(j).tail(n * n) = v.imag();
    commutators.push_back(std::move(c));
  }

  Eigen::BDCSVD<RealMatrix> svd(l, Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  map_norm = sv.size() ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > kRankTolerance * map_norm) ++rank;
  const RealMatrix& v = svd.matrixV();
  kernel = v.rightCols(m - rank);
  whitening = v.leftCols(rank) * sv.head(rank).cwiseInverse().asDiagonal();
}

RealVector CommutatorMap::functional(const SpectralTriple& triple, const PureState& s1, const PureState& s2) const {
  validate_state(triple.algebra(), s1);
  validate_state(triple.algebra(), s2);
  RealVector c(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j)
    c(static_cast<Eigen::Index>(j)) =
        (evaluate_state(s1, coords[j], triple.real_form()) - evaluate_state(s2, coords[j], triple.real_form())).real();
  return c;
}

KernelVerdict CommutatorMap::kernel_verdict(const RealVector& c) const {
  if (kernel.cols() == 0) return KernelVerdict::FinitePossible;
  const double leak = (kernel.transpose() * c).norm();
  return leak > kRankTolerance * std::max(1.0, c.norm()) ? KernelVerdict::Infinite : KernelVerdict::FinitePossible;
}

AlgebraElement CommutatorMap::element(const RealVector& coefficients) const {
  AlgebraElement a;
  for (const auto& m : coords.front()) a.push_back(ComplexMatrix::Zero(m.rows(), m.cols()));
  for (std::size_t j = 0; j < coords.size(); ++j)
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += coefficients(static_cast<Eigen::Index>(j)) * coords[j][k];
  return a;
}

KernelVerdict commutant_kernel_test(const SpectralTriple& triple, const PureState& s1, const PureState& s2) {
  const CommutatorMap map(triple);
  return map.kernel_verdict(map.functional(triple, s1, s2));
}

std::string to_string(BlockKind k) {
  switch (k) {
    case BlockKind::RealLine:
      return "real";
    case BlockKind::ComplexLine:
      return "complex";
    case BlockKind::Quaternions:
      return "quaternion";
    case BlockKind::MatrixBlock:
      return "matrix";
  }
  return "?";
}

std::string to_string(SlotMode m) {
  switch (m) {
    case SlotMode::Fundamental:
      return "fundamental";
    case SlotMode::Conjugate:
      return "conjugate";
    case SlotMode::Scalar:
      return "scalar";
    case SlotMode::ScalarConjugate:
      return "scalar_conjugate";
    case SlotMode::Quaternion2x2:
      return "quaternion_2x2";
  }
  return "?";
}

}  // namespace ncmetric

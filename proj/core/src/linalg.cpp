#include "ncmetric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ncmetric {

void require_finite(const ComplexMatrix& m, const char* what) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        std::ostringstream os;
        os << what << ": non-finite entry at (" << i << ", " << j << ")";
        throw DomainError(os.str());
      }
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("HermitianMatrix: matrix is not square");
  require_finite(m, "HermitianMatrix");
  const double asym = m.rows() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTolerance) {
    std::ostringstream os;
    os << "HermitianMatrix: asymmetry " << asym << " exceeds " << kHermitianTolerance;
    throw DomainError(os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix::HermitianMatrix(const RealMatrix& m) : HermitianMatrix(ComplexMatrix(m.cast<Complex>())) {}

HermitianMatrix HermitianMatrix::zero(Eigen::Index dim) {
  return HermitianMatrix(ComplexMatrix(ComplexMatrix::Zero(dim, dim)));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw DimensionError("HermitianMatrix: dimension mismatch in sum");
  return HermitianMatrix(ComplexMatrix(m_ + o.m_));
}

HermitianMatrix HermitianMatrix::scaled(double s) const { return HermitianMatrix(ComplexMatrix(m_ * s)); }

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h) {
  if (h.dim() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) throw DimensionError("operator_norm: empty matrix");
  require_finite(m, "operator_norm");
  if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

ComplexMatrix commutator(const HermitianMatrix& d, const ComplexMatrix& a) {
  if (a.rows() != d.dim() || a.cols() != d.dim()) {
    std::ostringstream os;
    os << "commutator: Dirac is " << d.dim() << "x" << d.dim() << ", element is " << a.rows() << "x" << a.cols();
    throw DimensionError(os.str());
  }
  return d.matrix() * a - a * d.matrix();
}

double antihermitian_norm(const ComplexMatrix& m) {
  const ComplexMatrix h = Complex(0.0, 1.0) * m;
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix block_diagonal(const std::vector<ComplexMatrix>& blocks) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace ncmetric

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ncmetric {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input that violates a documented precondition (non-Hermitian Dirac,
/// triangle violation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented inequality constraint on the input does not hold (squared
/// triangle inequality, metric triangle inequality, ...).
class ConstraintViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Throws DomainError if any entry has a NaN or infinite component.
void require_finite(const ComplexMatrix& m, const char* what);

/// A square complex matrix equal to its adjoint.
///
/// Construction symmetrizes (h + h*)/2 when the largest asymmetry is at most
/// `kHermitianTolerance` (absolute) and throws DomainError otherwise.
class HermitianMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-12;

  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m);
  explicit HermitianMatrix(const RealMatrix& m);

  static HermitianMatrix zero(Eigen::Index dim);
  static HermitianMatrix diagonal(const std::vector<double>& d);

  [[nodiscard]] Eigen::Index dim() const { return m_.rows(); }
  [[nodiscard]] const ComplexMatrix& matrix() const { return m_; }
  [[nodiscard]] Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix scaled(double s) const;

 private:
  ComplexMatrix m_;
};

/// Eigenvalues of a Hermitian matrix in ascending order.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h);

/// Largest singular value. Zero for the zero matrix.
double operator_norm(const ComplexMatrix& m);

/// d a - a d.
ComplexMatrix commutator(const HermitianMatrix& d, const ComplexMatrix& a);

/// Spectral norm of i*m for anti-Hermitian m, computed through the Hermitian
/// eigensolver. Cheaper than the SVD path and exact up to eigensolver accuracy.
double antihermitian_norm(const ComplexMatrix& m);

/// Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal assembly.
ComplexMatrix block_diagonal(const std::vector<ComplexMatrix>& blocks);

/// Haar-random unitary from a seeded generator (QR of a Ginibre matrix with
/// phase correction).
template <class Rng>
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng);

}  // namespace ncmetric

#include "ncmetric/detail/random_unitary.hpp"

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ncmetric {

/// Real polynomial with coefficients in ascending degree order.
///
/// Trailing coefficients with magnitude at most 1e-12 * max|coeff| are trimmed
/// on construction, so `degree()` is the degree of the leading nonzero term.
/// The zero polynomial has degree -1.
class RealPolynomial {
 public:
  static constexpr double kTrimTolerance = 1e-12;

  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs);

  /// Monic polynomial with the given real roots.
  static RealPolynomial from_roots(const std::vector<double>& roots);

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<double>& coeffs() const { return c_; }
  [[nodiscard]] double coeff(int k) const;
  [[nodiscard]] double leading() const { return c_.empty() ? 0.0 : c_.back(); }
  [[nodiscard]] double max_abs_coeff() const;
  [[nodiscard]] bool is_zero() const { return c_.empty(); }

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] std::complex<double> operator()(std::complex<double> x) const;

  [[nodiscard]] RealPolynomial derivative() const;
  /// Coefficients divided by max|coeff|.
  [[nodiscard]] RealPolynomial normalized() const;

  RealPolynomial operator+(const RealPolynomial& o) const;
  RealPolynomial operator-(const RealPolynomial& o) const;
  RealPolynomial operator*(const RealPolynomial& o) const;
  RealPolynomial operator*(double s) const;

 private:
  std::vector<double> c_;
};

/// Sylvester-matrix resultant, sign convention Res(P,Q) = a_n^m b_m^n prod(p_i - q_j).
/// Throws DomainError when either argument is constant.
double resultant(const RealPolynomial& p, const RealPolynomial& q);

/// Dis(P) = Res(P, P'), not normalized by the leading coefficient.
/// Throws DomainError when deg p < 2.
double discriminant(const RealPolynomial& p);

struct RealRoot {
  double value = 0.0;
  int multiplicity = 1;
};

/// Real roots in ascending order with multiplicities.
///
/// Uses companion-matrix eigenvalues followed by Newton polishing. Roots whose
/// imaginary part is small are accepted as real when the polynomial is small
/// at their real part (tol relative to the coefficient scale); near-coincident
/// roots are merged into one entry with a multiplicity.
std::vector<RealRoot> real_roots(const RealPolynomial& p, double tol = 1e-9);

/// All complex roots (companion-matrix eigenvalues, Newton polished).
std::vector<std::complex<double>> complex_roots(const RealPolynomial& p);

/// Polynomial in x and y, stored as a dense grid c[i][j] for x^i y^j.
class BivariatePolynomial {
 public:
  enum class Var { X, Y };

  BivariatePolynomial() = default;
  BivariatePolynomial(std::size_t deg_x, std::size_t deg_y);

  static BivariatePolynomial constant(double c);
  static BivariatePolynomial x();
  static BivariatePolynomial y();

  [[nodiscard]] int degree_in(Var v) const;
  [[nodiscard]] double coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value);

  [[nodiscard]] double operator()(double xv, double yv) const;

  /// Coefficient of var^k as a polynomial in the other variable.
  [[nodiscard]] RealPolynomial coefficient_in(Var var, int k) const;
  /// Substitutes a value for `var`, leaving a polynomial in the other variable.
  [[nodiscard]] RealPolynomial substitute(Var var, double value) const;
  [[nodiscard]] BivariatePolynomial derivative(Var var) const;

  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial operator-(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(double s) const;

  [[nodiscard]] double max_abs_coeff() const;

 private:
  std::vector<std::vector<double>> c_;  // c_[i][j] for x^i y^j
  void trim();
};

/// Discriminant with respect to `var`, as a polynomial in the other variable.
///
/// The Sylvester determinant Res(B, dB/dvar) is evaluated at roots of unity in
/// the remaining variable and the coefficients recovered by an inverse DFT, which
/// keeps the interpolation perfectly conditioned. Throws DomainError when the
/// degree in `var` is < 2.
RealPolynomial dis_in_variable(const BivariatePolynomial& b, BivariatePolynomial::Var var);

}  // namespace ncmetric

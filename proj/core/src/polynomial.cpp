#include "ncmetric/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "ncmetric/linalg.hpp"

namespace ncmetric {

namespace {

using CVec = std::vector<std::complex<double>>;

// Sylvester matrix of formal degrees n = p.size()-1, m = q.size()-1 from ascending
// coefficient lists; rows of p first, each row runs from the leading coefficient.
template <class T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> sylvester(const std::vector<T>& p,
                                                           const std::vector<T>& q) {
  const int n = static_cast<int>(p.size()) - 1;
  const int m = static_cast<int>(q.size()) - 1;
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> s =
      Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>::Zero(n + m, n + m);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(r, r + k) = p[n - k];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(m + r, r + k) = q[m - k];
  return s;
}

template <class T>
T sylvester_det(const std::vector<T>& p, const std::vector<T>& q) {
  auto s = sylvester(p, q);
  return Eigen::PartialPivLU<decltype(s)>(s).determinant();
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  double mx = 0.0;
  for (double v : c_) {
    if (!std::isfinite(v)) throw DomainError("RealPolynomial: non-finite coefficient");
    mx = std::max(mx, std::abs(v));
  }
  while (!c_.empty() && std::abs(c_.back()) <= kTrimTolerance * mx) c_.pop_back();
}

RealPolynomial RealPolynomial::from_roots(const std::vector<double>& roots) {
  RealPolynomial p({1.0});
  for (double r : roots) p = p * RealPolynomial({-r, 1.0});
  return p;
}

double RealPolynomial::coeff(int k) const {
  return (k < 0 || k >= static_cast<int>(c_.size())) ? 0.0 : c_[k];
}

double RealPolynomial::max_abs_coeff() const {
  double mx = 0.0;
  for (double v : c_) mx = std::max(mx, std::abs(v));
  return mx;
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> RealPolynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::normalized() const {
  const double mx = max_abs_coeff();
  if (mx == 0.0) return {};
  return *this * (1.0 / mx);
}

RealPolynomial RealPolynomial::operator+(const RealPolynomial& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return RealPolynomial(std::move(r));
}

RealPolynomial RealPolynomial::operator-(const RealPolynomial& o) const { return *this + o * -1.0; }

RealPolynomial RealPolynomial::operator*(const RealPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RealPolynomial(std::move(r));
}

RealPolynomial RealPolynomial::operator*(double s) const {
  std::vector<double> r = c_;
  for (double& v : r) v *= s;
  return RealPolynomial(std::move(r));
}

double resultant(const RealPolynomial& p, const RealPolynomial& q) {
  if (p.degree() < 1 || q.degree() < 1)
    throw DomainError("resultant: both polynomials must have degree >= 1");
  return sylvester_det(p.coeffs(), q.coeffs());
}

double discriminant(const RealPolynomial& p) {
  if (p.degree() < 2) throw DomainError("discriminant: degree must be >= 2");
  return resultant(p, p.derivative());
}

std::vector<std::complex<double>> complex_roots(const RealPolynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  const auto& c = p.coeffs();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  CVec roots(es.eigenvalues().data(), es.eigenvalues().data() + n);

  const RealPolynomial dp = p.derivative();
  for (auto& r : roots) {
    for (int it = 0; it < 20; ++it) {
      const auto f = p(r);
      const auto df = dp(r);
      if (std::abs(df) == 0.0) break;
      const auto next = r - f / df;
      if (!(std::abs(p(next)) < std::abs(f))) break;
      r = next;
    }
  }
  return roots;
}

std::vector<RealRoot> real_roots(const RealPolynomial& p, double tol) {
  if (p.degree() < 1) return {};
  const RealPolynomial q = p.normalized();
  auto scale = [&](double x) {
    double s = 0.0, xp = 1.0;
    for (double v : q.coeffs()) {
      s += std::abs(v) * xp;
      xp *= std::abs(x);
    }
    return s;
  };

  std::vector<double> cand;
  for (const auto& r : complex_roots(q)) {
    const double re = r.real();
    const double mag = std::max(1.0, std::abs(r));
    if (std::abs(r.imag()) <= 1e-8 * mag || std::abs(q(re)) <= tol * scale(re)) cand.push_back(re);
  }
  std::sort(cand.begin(), cand.end());

  std::vector<RealRoot> out;
  std::size_t i = 0;
  while (i < cand.size()) {
    std::size_t j = i + 1;
    while (j < cand.size() && cand[j] - cand[j - 1] <= 1e-5 * std::max(1.0, std::abs(cand[i]))) ++j;
    double mean = 0.0;
    for (std::size_t k = i; k < j; ++k) mean += cand[k];
    mean /= static_cast<double>(j - i);
    if (std::abs(q(mean)) <= tol * scale(mean))
      out.push_back({mean, static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

BivariatePolynomial::BivariatePolynomial(std::size_t deg_x, std::size_t deg_y)
    : c_(deg_x + 1, std::vector<double>(deg_y + 1, 0.0)) {}

BivariatePolynomial BivariatePolynomial::constant(double c) {
  BivariatePolynomial b(0, 0);
  b.c_[0][0] = c;
  b.trim();
  return b;
}

BivariatePolynomial BivariatePolynomial::x() {
  BivariatePolynomial b(1, 0);
  b.c_[1][0] = 1.0;
  return b;
}

BivariatePolynomial BivariatePolynomial::y() {
  BivariatePolynomial b(0, 1);
  b.c_[0][1] = 1.0;
  return b;
}

int BivariatePolynomial::degree_in(Var v) const {
  int deg = -1;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j)
      if (c_[i][j] != 0.0) deg = std::max(deg, static_cast<int>(v == Var::X ? i : j));
  return deg;
}

double BivariatePolynomial::coeff(std::size_t i, std::size_t j) const {
  if (i >= c_.size() || j >= c_[i].size()) return 0.0;
  return c_[i][j];
}

void BivariatePolynomial::set(std::size_t i, std::size_t j, double value) {
  if (i >= c_.size()) c_.resize(i + 1, std::vector<double>(c_.empty() ? 1 : c_[0].size(), 0.0));
  if (j >= c_[0].size())
    for (auto& row : c_) row.resize(j + 1, 0.0);
  c_[i][j] = value;
}

void BivariatePolynomial::add(std::size_t i, std::size_t j, double value) { set(i, j, coeff(i, j) + value); }

double BivariatePolynomial::operator()(double xv, double yv) const {
  double acc = 0.0, xp = 1.0;
  for (const auto& row : c_) {
    double inner = 0.0;
    for (auto it = row.rbegin(); it != row.rend(); ++it) inner = inner * yv + *it;
    acc += xp * inner;
    xp *= xv;
  }
  return acc;
}

RealPolynomial BivariatePolynomial::coefficient_in(Var var, int k) const {
  if (k < 0) return {};
  std::vector<double> r;
  if (var == Var::Y) {
    for (std::size_t i = 0; i < c_.size(); ++i) r.push_back(coeff(i, k));
  } else {
    const std::size_t ny = c_.empty() ? 0 : c_[0].size();
    for (std::size_t j = 0; j < ny; ++j) r.push_back(coeff(k, j));
  }
  return RealPolynomial(std::move(r));
}

RealPolynomial BivariatePolynomial::substitute(Var var, double value) const {
  const int other = degree_in(var == Var::X ? Var::Y : Var::X);
  std::vector<double> r(std::max(other + 1, 0), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] == 0.0) continue;
      if (var == Var::X)
        r[j] += c_[i][j] * std::pow(value, static_cast<double>(i));
      else
        r[i] += c_[i][j] * std::pow(value, static_cast<double>(j));
    }
  return RealPolynomial(std::move(r));
}

BivariatePolynomial BivariatePolynomial::derivative(Var var) const {
  BivariatePolynomial d;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] == 0.0) continue;
      if (var == Var::X && i > 0) d.add(i - 1, j, static_cast<double>(i) * c_[i][j]);
      if (var == Var::Y && j > 0) d.add(i, j - 1, static_cast<double>(j) * c_[i][j]);
    }
  d.trim();
  return d;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
  BivariatePolynomial r = *this;
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_[i].size(); ++j)
      if (o.c_[i][j] != 0.0) r.add(i, j, o.c_[i][j]);
  r.trim();
  return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const { return *this + o * -1.0; }

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
  BivariatePolynomial r;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] == 0.0) continue;
      for (std::size_t k = 0; k < o.c_.size(); ++k)
        for (std::size_t l = 0; l < o.c_[k].size(); ++l)
          if (o.c_[k][l] != 0.0) r.add(i + k, j + l, c_[i][j] * o.c_[k][l]);
    }
  r.trim();
  return r;
}

BivariatePolynomial BivariatePolynomial::operator*(double s) const {
  BivariatePolynomial r = *this;
  for (auto& row : r.c_)
    for (double& v : row) v *= s;
  r.trim();
  return r;
}

double BivariatePolynomial::max_abs_coeff() const {
  double mx = 0.0;
  for (const auto& row : c_)
    for (double v : row) mx = std::max(mx, std::abs(v));
  return mx;
}

void BivariatePolynomial::trim() {
  const int dx = degree_in(Var::X);
  const int dy = degree_in(Var::Y);
  if (dx < 0) {
    c_.clear();
    return;
  }
  c_.resize(dx + 1);
  for (auto& row : c_) row.resize(dy + 1, 0.0);
}

RealPolynomial dis_in_variable(const BivariatePolynomial& b, BivariatePolynomial::Var var) {
  using Var = BivariatePolynomial::Var;
  const int n = b.degree_in(var);
  if (n < 2) throw DomainError("dis_in_variable: degree in the eliminated variable must be >= 2");
  const Var other = var == Var::X ? Var::Y : Var::X;
  const int d_other = std::max(b.degree_in(other), 0);

  // Coefficients of var^k as polynomials in the other variable.
  std::vector<RealPolynomial> a(n + 1);
  for (int k = 0; k <= n; ++k) a[k] = b.coefficient_in(var, k);

  const int bound = (2 * n - 1) * d_other;
  const int nodes = bound + 1;
  CVec values(nodes);
  for (int s = 0; s < nodes; ++s) {
    const std::complex<double> t = std::polar(1.0, 2.0 * std::numbers::pi * s / nodes);
    CVec p(n + 1), dp(n);
    for (int k = 0; k <= n; ++k) p[k] = a[k](t);
    for (int k = 1; k <= n; ++k) dp[k - 1] = static_cast<double>(k) * a[k](t);
    values[s] = sylvester_det(p, dp);
  }

  std::vector<double> coeffs(nodes);
  for (int k = 0; k < nodes; ++k) {
    std::complex<double> acc = 0.0;
    for (int s = 0; s < nodes; ++s) acc += values[s] * std::polar(1.0, -2.0 * std::numbers::pi * k * s / nodes);
    coeffs[k] = acc.real() / nodes;
  }
  double mx = 0.0;
  for (double v : coeffs) mx = std::max(mx, std::abs(v));
  for (double& v : coeffs)
    if (std::abs(v) <= 1e-13 * mx) v = 0.0;
  return RealPolynomial(std::move(coeffs));
}

}  // namespace ncmetric

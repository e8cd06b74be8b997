#include "ncmetric/commutative.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace ncmetric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

DiracGraph graph_from_dirac(const HermitianMatrix& d) {
  DiracGraph g;
  g.n = static_cast<int>(d.dim());
  for (int i = 0; i < g.n; ++i) {
    if (std::abs(d(i, i)) != 0.0) {
      std::ostringstream os;
      os << "graph_from_dirac: nonzero diagonal entry at " << i;
      throw DomainError(os.str());
    }
    for (int j = i + 1; j < g.n; ++j)
      if (std::abs(d(i, j)) > 0.0) g.edges.push_back({i, j, 1.0 / std::abs(d(i, j))});
  }
  return g;
}

RealMatrix geodesic_matrix(const DiracGraph& g) {
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(g.n));
  for (const auto& e : g.edges) {
    adj[e.i].emplace_back(e.j, e.length);
    adj[e.j].emplace_back(e.i, e.length);
  }
  RealMatrix out = RealMatrix::Constant(g.n, g.n, kInf);
  using Item = std::pair<double, int>;
  for (int s = 0; s < g.n; ++s) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    out(s, s) = 0.0;
    pq.emplace(0.0, s);
    while (!pq.empty()) {
      const auto [dist, u] = pq.top();
      pq.pop();
      if (dist > out(s, u)) continue;
      for (const auto& [v, w] : adj[u])
        if (dist + w < out(s, v)) {
          out(s, v) = dist + w;
          pq.emplace(out(s, v), v);
        }
    }
  }
  return out;
}

DistanceValue geodesic_length(const DiracGraph& g, int i, int j) {
  if (i < 0 || j < 0 || i >= g.n || j >= g.n) throw DomainError("geodesic_length: index out of range");
  const double v = geodesic_matrix(g)(i, j);
  return std::isinf(v) ? DistanceValue::infinite() : DistanceValue::finite(v);
}

double regular_distance(int n, double k, bool cut) {
  if (n < 2 || (cut && n < 3)) throw DomainError("regular_distance: n must be >= 2 (>= 3 with a cut link)");
  if (k == 0.0) throw DomainError("regular_distance: k must be nonzero");
  return std::sqrt(2.0 / (cut ? n - 2 : n)) / std::abs(k);
}

HermitianMatrix regular_dirac(int n, double k, bool cut) {
  RealMatrix d = k * (RealMatrix::Ones(n, n) - RealMatrix::Identity(n, n));
  if (cut) d(0, 1) = d(1, 0) = 0.0;
  return HermitianMatrix(d);
}

DistanceValue three_point_distance(double d12, double d13, double d23) {
  const double a = d12 * d12, b = d13 * d13, c = d23 * d23;
  if (b == 0.0 && c == 0.0) return a == 0.0 ? DistanceValue::infinite() : DistanceValue::finite(1.0 / std::abs(d12));
  const double den = a * b + a * c + b * c;
  if (den == 0.0) return DistanceValue::infinite();
  return DistanceValue::finite(std::sqrt((b + c) / den));
}

ThreePointCouplings three_point_inverse(double a, double b, double c) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0) || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw DomainError("three_point_inverse: distances must be positive and finite");
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const double slack = 1e-12 * (a2 + b2 + c2);
  auto check = [&](double lhs, double r1, double r2, const char* name) {
    if (lhs > r1 + r2 + slack) {
      std::ostringstream os;
      os << "squared triangle inequality violated: " << name;
      throw ConstraintViolation(os.str());
    }
  };
  check(a2, b2, c2, "d(1,2)^2 <= d(1,3)^2 + d(2,3)^2");
  check(b2, a2, c2, "d(1,3)^2 <= d(1,2)^2 + d(2,3)^2");
  check(c2, a2, b2, "d(2,3)^2 <= d(1,2)^2 + d(1,3)^2");
  const double p = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
  auto coupling = [&](double num) { return num <= slack ? 0.0 : std::sqrt(2.0 * num / p); };
  return {coupling(b2 + c2 - a2), coupling(a2 + c2 - b2), coupling(a2 + b2 - c2)};
}

FourPointCoeffs FourPointCoeffs::cycle(double d1, double d3, double d4, double d6) {
  return {d1, kInf, d3, d4, kInf, d6};
}

std::vector<double> FourPointCoeffs::couplings() const {
  std::vector<double> c;
  for (double v : {d1, d2, d3, d4, d5, d6}) {
    if (!(v > 0.0)) throw DomainError("four-point lengths must be positive");
    c.push_back(std::isinf(v) ? 0.0 : 1.0 / v);
  }
  return c;
}

HermitianMatrix four_point_dirac(const FourPointCoeffs& d) {
  const auto c = d.couplings();
  RealMatrix m = RealMatrix::Zero(4, 4);
  m(0, 1) = c[0];
  m(0, 2) = c[1];
  m(0, 3) = c[2];
  m(1, 2) = c[3];
  m(1, 3) = c[4];
  m(2, 3) = c[5];
  return HermitianMatrix(RealMatrix(m + m.transpose()));
}

NAlphaBeta n_alpha_beta(double x, double y, double z, const FourPointCoeffs& d) {
  const auto c = d.couplings();
  auto sq = [](double v) { return v * v; };
  NAlphaBeta r;
  r.alpha = sq(x * c[0]) + sq(y * c[1]) + sq(z * c[2]) + sq((x - y) * c[3]) + sq((x - z) * c[4]) +
            sq((y - z) * c[5]);
  r.beta = x * (y - z) * c[0] * c[5] + z * (x - y) * c[2] * c[3] + y * (z - x) * c[1] * c[4];
  r.n = r.alpha + std::sqrt(std::max(0.0, r.alpha * r.alpha - 4.0 * r.beta * r.beta));
  r.f = r.alpha - r.beta * r.beta - 1.0;
  return r;
}

FourPointQuadratic four_point_quadratic(const FourPointCoeffs& d) {
  using BP = BivariatePolynomial;
  const auto c = d.couplings();
  const BP x = BP::x(), y = BP::y(), one = BP::constant(1.0);
  auto sq = [](double v) { return v * v; };

  // alpha = alpha0 + alpha1 z + alpha2 z^2, beta = beta0 + beta1 z
  const BP alpha0 = x * x * sq(c[0]) + y * y * sq(c[1]) + (x - y) * (x - y) * sq(c[3]) + x * x * sq(c[4]) +
                    y * y * sq(c[5]);
  const BP alpha1 = x * (-2.0 * sq(c[4])) + y * (-2.0 * sq(c[5]));
  const BP alpha2 = BP::constant(sq(c[2]) + sq(c[4]) + sq(c[5]));
  const BP beta0 = x * y * (c[0] * c[5] - c[1] * c[4]);
  const BP beta1 = x * (-c[0] * c[5]) + (x - y) * (c[2] * c[3]) + y * (c[1] * c[4]);

  FourPointQuadratic q;
  q.a = alpha2 - beta1 * beta1;
  q.b = alpha1 - beta0 * beta1 * 2.0;
  q.c = alpha0 - beta0 * beta0 - one;
  return q;
}

BivariatePolynomial effective_potential(const FourPointCoeffs& d) {
  const auto q = four_point_quadratic(d);
  return (q.b * q.b - q.a * q.c * 4.0) * 0.25;
}

FourPointSpecial four_point_special(double d1, double d3, double d4, double d6) {
  for (double v : {d1, d3, d4, d6})
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("four_point_special: lengths must be positive and finite");
  auto sq = [](double v) { return v * v; };
  FourPointSpecial r;
  const double k = sq(d1 * d6 - d3 * d4);

  if (sq(d1) <= sq(d6)) {
    r.d12 = d1;
    r.branch12 = 0;
  } else if (std::abs(d1 * d6 - d3 * d4) <= 1e-12 * std::max(d1 * d6, d3 * d4)) {
    r.d12 = d1 * std::abs(sq(d3) + d1 * d6) / (std::sqrt(sq(d1) + sq(d3)) * std::sqrt(sq(d3) + sq(d6)));
    r.branch12 = 1;
  } else {
    const double cc = (sq(d3 + d4) * d6 + (d1 - d6) * (d3 * d4 - sq(d6))) *
                      (sq(d3 - d4) * d6 + (d1 + d6) * (d3 * d4 + sq(d6)));
    if (cc <= 0.0) {
      r.d12 = std::sqrt(sq(d1) * (sq(d3) + sq(d6)) * (sq(d4) + sq(d6)) / sq(d3 * d4 - d1 * d6));
      r.branch12 = 2;
    } else {
      const double q1 = d1 * std::abs(d3 + d4) / std::sqrt(sq(d3 + d4) + sq(d1 - d6));
      const double q2 = d1 * std::abs(d3 - d4) / std::sqrt(sq(d3 - d4) + sq(d1 + d6));
      r.d12 = std::max(q1, q2);
      r.branch12 = 3;
    }
  }

  if (sq(sq(d3) + sq(d6)) <= k) {
    r.d13 = std::sqrt(sq(d3) + sq(d6));
    r.branch13 = 0;
  } else if (sq(sq(d1) + sq(d4)) <= k) {
    r.d13 = std::sqrt(sq(d1) + sq(d4));
    r.branch13 = 1;
  } else {
    const double num = std::abs(d1 * d3 + d4 * d6);
    r.d13 = std::max(num / std::sqrt(sq(d3 + d4) + sq(d1 - d6)), num / std::sqrt(sq(d3 - d4) + sq(d1 + d6)));
    r.branch13 = 2;
  }
  return r;
}

void validate_metric(const RealMatrix& dist) {
  const Eigen::Index n = dist.rows();
  if (dist.cols() != n) throw DimensionError("metric must be square");
  if (n < 2) throw DomainError("metric needs at least two points");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (dist(i, i) != 0.0) throw ConstraintViolation("metric diagonal must be zero");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const double a = dist(i, j), b = dist(j, i);
      if (std::isnan(a) || !(a > 0.0)) throw ConstraintViolation("metric entries must be positive");
      if (a != b && !(std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)))) {
        std::ostringstream os;
        os << "metric is not symmetric at (" << i << ", " << j << ")";
        throw ConstraintViolation(os.str());
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const double via = dist(i, k) + dist(k, j);
        if (dist(i, j) > via * (1.0 + 1e-12)) {
          std::ostringstream os;
          os << "triangle inequality violated: d(" << i + 1 << "," << j + 1 << ") > d(" << i + 1 << "," << k + 1
             << ") + d(" << k + 1 << "," << j + 1 << ")";
          throw ConstraintViolation(os.str());
        }
      }
}

SpectralTriple metric_to_triple(const RealMatrix& dist) {
  validate_metric(dist);
  const int n = static_cast<int>(dist.rows());
  std::vector<RepresentationSlot> slots;
  std::vector<ComplexMatrix> blocks;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      slots.push_back({static_cast<std::size_t>(i), SlotMode::Scalar, 1, SlotLayout::Copies});
      slots.push_back({static_cast<std::size_t>(j), SlotMode::Scalar, 2, SlotLayout::Copies});
      const double c = std::isinf(dist(i, j)) ? 0.0 : 1.0 / dist(i, j);
      ComplexMatrix b = ComplexMatrix::Zero(3, 3);
      b(0, 1) = b(1, 0) = b(1, 2) = b(2, 1) = c;
      blocks.push_back(b);
    }
  return SpectralTriple(FiniteAlgebra::complex_points(n), std::move(slots), HermitianMatrix(block_diagonal(blocks)));
}

std::vector<PureState> point_states(int n) {
  std::vector<PureState> s;
  for (int i = 0; i < n; ++i) s.push_back(PureState::canonical(static_cast<std::size_t>(i), std::to_string(i + 1)));
  return s;
}

}  // namespace ncmetric

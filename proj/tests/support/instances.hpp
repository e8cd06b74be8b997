#pragma once

// Random instances and independent reference computations shared by the
// unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include "ncmetric/linalg.hpp"

namespace ncmetric::support {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Symmetric real Dirac operator on n points; each link present with
/// probability `density`, couplings uniform in [lo, hi].
template <class Rng>
RealMatrix random_dirac(int n, Rng& rng, double density = 0.8, double lo = 0.2, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi), coin(0.0, 1.0);
  RealMatrix d = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < density) d(i, j) = d(j, i) = u(rng);
  return d;
}

/// All-pairs shortest paths (Floyd-Warshall), +inf when disconnected.
inline RealMatrix shortest_paths(RealMatrix w) {
  const Eigen::Index n = w.rows();
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) w(i, j) = std::min(w(i, j), w(i, k) + w(k, j));
  return w;
}

/// Graph metric on n points from random edge weights, so the triangle
/// inequality holds by construction. With `split`, points [0, split) and
/// [split, n) lie in different components.
template <class Rng>
RealMatrix random_metric(int n, Rng& rng, int split = 0) {
  std::uniform_real_distribution<double> u(0.5, 2.0);
  RealMatrix w = RealMatrix::Constant(n, n, kInf);
  for (int i = 0; i < n; ++i) {
    w(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      if (split > 0 && (i < split) != (j < split)) continue;
      w(i, j) = w(j, i) = u(rng);
    }
  }
  return shortest_paths(w);
}

/// Unit vector of C^n with Gaussian components.
template <class Rng>
ComplexVector random_unit(int n, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

/// Shortest path from (s=x, t=0) to (s=y, t=1) for dtau^2 = dt^2/g(s) + ds^2,
/// by Dijkstra on an (ns+1) x (nt+1) grid with all primitive steps of radius
/// at most `radius`. Edge costs integrate the metric with Simpson's rule on
/// the linearly interpolated warp. Converges from above as the grid refines.
inline double grid_dijkstra(const std::vector<double>& g, double length, double x, double y, int ns, int nt,
                            int radius) {
  const double hs = length / ns, ht = 1.0 / nt;
  const double hg = length / static_cast<double>(g.size() - 1);
  auto warp = [&](double s) {
    const double pos = std::clamp(s / hg, 0.0, static_cast<double>(g.size() - 1));
    const auto k = std::min(static_cast<std::size_t>(pos), g.size() - 2);
    const double f = pos - static_cast<double>(k);
    return g[k] * (1.0 - f) + g[k + 1] * f;
  };
  std::vector<std::pair<int, int>> steps;
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b) {
      if (a == 0 && b == 0) continue;
      int p = std::abs(a), q = std::abs(b);
      while (q) std::swap(p %= q, q);
      if (p == 1) steps.emplace_back(a, b);
    }
  auto cost = [&](int i, int di, int dt) {
    const double s0 = i * hs, ds = di * hs, dtt = dt * ht;
    double acc = 0.0;
    const int m = 8;
    for (int k = 0; k <= m; ++k) {
      const double w = (k == 0 || k == m) ? 1.0 : (k % 2 ? 4.0 : 2.0);
      acc += w * std::sqrt(ds * ds + dtt * dtt / warp(s0 + ds * k / m));
    }
    return acc / (3.0 * m);
  };
  const int W = ns + 1, H = nt + 1;
  std::vector<double> dist(static_cast<std::size_t>(W * H), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  const int src = static_cast<int>(std::lround(x / hs));
  const int dst = static_cast<int>(std::lround(y / hs)) + W * nt;
  dist[src] = 0.0;
  pq.emplace(0.0, src);
  while (!pq.empty()) {
    const auto [dd, v] = pq.top();
    pq.pop();
    if (dd > dist[v]) continue;
    if (v == dst) return dd;
    const int i = v % W, t = v / W;
    for (const auto& [di, dt] : steps) {
      const int ni = i + di, nt2 = t + dt;
      if (ni < 0 || ni >= W || nt2 < 0 || nt2 >= H) continue;
      const double nd = dd + cost(i, di, dt);
      const int u = ni + W * nt2;
      if (nd < dist[u]) {
        dist[u] = nd;
        pq.emplace(nd, u);
      }
    }
  }
  return kInf;
}

}  // namespace ncmetric::support

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ncmetric/product.hpp"

namespace ncmetric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Travel {
  double t = 0.0;  // fiber coordinate gained
  double len = 0.0;
};

// Piecewise-linear g on [0, length].
class Warp {
 public:
  Warp(std::vector<double> g, double length)
      : g_(std::move(g)), h_(length / static_cast<double>(g_.size() - 1)), length_(length) {}

  [[nodiscard]] double length() const { return length_; }

  [[nodiscard]] double at(double s) const {
    const double pos = std::clamp(s / h_, 0.0, static_cast<double>(g_.size() - 1));
    const auto k = std::min(static_cast<std::size_t>(pos), g_.size() - 2);
    const double f = pos - static_cast<double>(k);
    return g_[k] * (1.0 - f) + g_[k + 1] * f;
  }

  [[nodiscard]] double node(std::size_t k) const { return static_cast<double>(k) * h_; }
  [[nodiscard]] std::size_t pieces() const { return g_.size() - 1; }
  [[nodiscard]] std::size_t piece_of(double s) const {
    return std::min(static_cast<std::size_t>(std::max(0.0, s / h_)), pieces() - 1);
  }

  [[nodiscard]] double max_on(double a, double b) const {
    double m = std::max(at(a), at(b));
    for (std::size_t k = piece_of(a) + 1; k <= piece_of(b) && k < g_.size(); ++k)
      if (node(k) > a && node(k) < b) m = std::max(m, g_[k]);
    return m;
  }

  // Fiber travel and length along a monotone stretch [a, b] with conserved K.
  // Exact on every linear piece; requires K^2 g <= 1 on [a, b].
  [[nodiscard]] Travel integrate(double a, double b, double k) const {
    Travel out;
    if (b <= a) return out;
    const double k2 = k * k;
    for (std::size_t p = piece_of(a); p < pieces(); ++p) {
      const double sa = std::max(a, node(p)), sb = std::min(b, node(p + 1));
      if (sb > sa) {
        const double ga = at(sa), gb = at(sb), d = sb - sa;
        const double ra = std::sqrt(std::max(0.0, 1.0 - k2 * ga)), rb = std::sqrt(std::max(0.0, 1.0 - k2 * gb));
        if (ra + rb <= 0.0) return {kInf, kInf};
        out.len += 2.0 * d / (ra + rb);
        out.t += d * (2.0 / 3.0) * k * (ga + gb + (ga + gb - k2 * ga * gb) / (1.0 + ra * rb)) / (ra + rb);
      }
      if (node(p + 1) >= b) break;
    }
    return out;
  }

 private:
  std::vector<double> g_;
  double h_;
  double length_;
};

// Monotone paths from x to y (x <= y), resting on the highest fiber if needed.
double monotone_candidate(const Warp& w, double x, double y) {
  const double gmax = w.max_on(x, y);
  const double kmax = 1.0 / std::sqrt(gmax);
  const Travel top = w.integrate(x, y, kmax);
  if (top.t <= 1.0) return top.len + (1.0 - top.t) / std::sqrt(gmax);
  double lo = 0.0, hi = kmax;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * kmax; ++it) {
    const double mid = 0.5 * (lo + hi);
    (w.integrate(x, y, mid).t < 1.0 ? lo : hi) = mid;
  }
  return w.integrate(x, y, 0.5 * (lo + hi)).len;
}

// Paths from x to y (x <= y) that overshoot y and turn where g first reaches 1/K^2.
double excursion_candidate(const Warp& w, double x, double y) {
  double best = kInf;
  double running = w.max_on(x, y);
  auto eval = [&](double turn) {
    const double lambda = w.at(turn);
    const double k = 1.0 / std::sqrt(lambda);
    const Travel a = w.integrate(x, y, k), b = w.integrate(y, turn, k);
    return Travel{a.t + 2.0 * b.t, a.len + 2.0 * b.len};
  };
  auto consider = [&](double turn, const Travel& tr) {
    if (tr.t <= 1.0) best = std::min(best, tr.len + (1.0 - tr.t) / std::sqrt(w.at(turn)));
  };

  constexpr int kSamples = 24;
  for (std::size_t p = w.piece_of(y); p < w.pieces(); ++p) {
    const double sa = std::max(y, w.node(p)), sb = w.node(p + 1);
    if (sb <= sa) continue;
    const double ga = w.at(sa), gb = w.at(sb);
    if (gb > running) {
      const double s0 = ga >= running ? sa : sa + (running - ga) / (gb - ga) * (sb - sa);
      double prev_s = s0;
      Travel prev = eval(s0);
      consider(s0, prev);
      for (int i = 1; i <= kSamples; ++i) {
        const double s = s0 + (sb - s0) * i / kSamples;
        const Travel cur = eval(s);
        consider(s, cur);
        if ((prev.t - 1.0) * (cur.t - 1.0) < 0.0) {
          double lo = prev_s, hi = s;
          const bool rising = cur.t > prev.t;
          for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            ((eval(mid).t < 1.0) == rising ? lo : hi) = mid;
          }
          const Travel root = eval(0.5 * (lo + hi));
          best = std::min(best, root.len);
        }
        prev = cur;
        prev_s = s;
      }
      running = gb;
    }
  }
  return best;
}

}  // namespace

double warped_geodesic(const std::vector<double>& gtt, double length, double x, double y) {
  if (gtt.size() < 2) throw DomainError("warped_geodesic: need at least two samples");
  if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("warped_geodesic: length must be positive");
  for (double v : gtt)
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("warped_geodesic: samples must be positive and finite");
  const double tol = 1e-12 * length;
  if (x < -tol || y < -tol || x > length + tol || y > length + tol)
    throw DomainError("warped_geodesic: endpoints must lie in [0, length]");
  x = std::clamp(x, 0.0, length);
  y = std::clamp(y, 0.0, length);
  if (x > y) std::swap(x, y);

  const Warp w(gtt, length);
  std::vector<double> rev(gtt.rbegin(), gtt.rend());
  const Warp wr(rev, length);
  double best = monotone_candidate(w, x, y);
  best = std::min(best, excursion_candidate(w, x, y));
  best = std::min(best, excursion_candidate(wr, length - y, length - x));
  return best;
}

}  // namespace ncmetric

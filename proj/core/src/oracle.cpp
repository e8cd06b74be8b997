#include "ncmetric/oracle.hpp"

#include <atomic>
#include <mutex>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/Eigenvalues>

namespace ncmetric {

namespace {

struct BarrierPoint {
  bool feasible = false;
  double phi = 0.0;
  double max_abs_eig = 0.0;
  RealVector grad;
  RealMatrix hess;
};

class BarrierProblem {
 public:
  BarrierProblem(const std::vector<ComplexMatrix>& dirs, const RealVector& g) : dirs_(dirs), g_(g) {
    n_ = dirs_.empty() ? 0 : dirs_.front().rows();
  }

  [[nodiscard]] ComplexMatrix assemble(const RealVector& u) const {
    ComplexMatrix a = ComplexMatrix::Zero(n_, n_);
    for (std::size_t k = 0; k < dirs_.size(); ++k) a += u(static_cast<Eigen::Index>(k)) * dirs_[k];
    return a;
  }

  [[nodiscard]] double norm_of(const RealVector& u) const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(assemble(u), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }

  [[nodiscard]] BarrierPoint evaluate(const RealVector& u, double t, bool derivatives) const {
    BarrierPoint p;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
        assemble(u), derivatives ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    const RealVector& lam = es.eigenvalues();
    p.max_abs_eig = lam.cwiseAbs().maxCoeff();
    if (p.max_abs_eig >= 1.0) return p;
    p.feasible = true;
    p.phi = -t * g_.dot(u);
    for (Eigen::Index i = 0; i < n_; ++i) p.phi -= std::log1p(-lam(i)) + std::log1p(lam(i));
    if (!derivatives) return p;

    const Eigen::Index r = static_cast<Eigen::Index>(dirs_.size());
    const ComplexMatrix& q = es.eigenvectors();
    RealVector dgrad(n_);
    RealMatrix w(n_, n_);
    for (Eigen::Index i = 0; i < n_; ++i) {
      dgrad(i) = 1.0 / (1.0 - lam(i)) - 1.0 / (1.0 + lam(i));
      for (Eigen::Index j = 0; j < n_; ++j)
        w(i, j) = 1.0 / ((1.0 - lam(i)) * (1.0 - lam(j))) + 1.0 / ((1.0 + lam(i)) * (1.0 + lam(j)));
    }
    std::vector<ComplexMatrix> rot(dirs_.size());
    p.grad = -t * g_;
    for (Eigen::Index k = 0; k < r; ++k) {
      rot[k] = q.adjoint() * dirs_[k] * q;
      p.grad(k) += rot[k].diagonal().real().dot(dgrad);
    }
    p.hess.resize(r, r);
    for (Eigen::Index k = 0; k < r; ++k) {
      const ComplexMatrix weighted = rot[k].cwiseProduct(w.cast<Complex>());
      for (Eigen::Index l = k; l < r; ++l) {
        const double h = (weighted.cwiseProduct(rot[l].conjugate())).sum().real();
        p.hess(k, l) = h;
        p.hess(l, k) = h;
      }
    }
    return p;
  }

  [[nodiscard]] Eigen::Index barrier_degree() const { return 2 * n_; }

 private:
  const std::vector<ComplexMatrix>& dirs_;
  const RealVector& g_;
  Eigen::Index n_ = 0;
};

struct SolveResult {
  RealVector u;
  double gap = 0.0;
  bool converged = true;
};

SolveResult solve_barrier(const BarrierProblem& prob, const RealVector& g, const OracleOptions& opts) {
  SolveResult res;
  res.u = RealVector::Zero(g.size());
  const double m = static_cast<double>(prob.barrier_degree());
  double t = m / g.norm();
  int iters = 0;

  while (true) {
    // Centering by damped Newton.
    for (;;) {
      if (iters >= opts.max_iters) {
        res.converged = false;
        res.gap = m / t;
        return res;
      }
      ++iters;
      const BarrierPoint p = prob.evaluate(res.u, t, true);
      Eigen::LDLT<RealMatrix> ldlt(p.hess);
      RealVector step = -ldlt.solve(p.grad);
      if (ldlt.info() != Eigen::Success || !step.allFinite()) {
        const double ridge = 1e-14 * std::max(1.0, p.hess.diagonal().cwiseAbs().maxCoeff());
        step = -(p.hess + ridge * RealMatrix::Identity(p.hess.rows(), p.hess.cols())).ldlt().solve(p.grad);
      }
      const double slope = p.grad.dot(step);
      const double decrement = -slope;
      if (!(decrement > 1e-10)) break;

      double s = 1.0;
      bool moved = false;
      while (s > 1e-14) {
        const RealVector trial = res.u + s * step;
        const BarrierPoint q = prob.evaluate(trial, t, false);
        if (q.feasible && q.phi < p.phi && q.phi <= p.phi + 0.25 * s * slope) {
          res.u = trial;
          moved = true;
          break;
        }
        s *= 0.5;
      }
      if (!moved) break;
    }

    res.gap = m / t;
    const double objective = g.dot(res.u);
    if (res.gap <= 0.05 * opts.rel_tol * std::max(objective, 1e-300)) return res;
    if (t > 1e15 / std::max(g.norm(), 1e-300)) {
      res.converged = res.gap <= opts.rel_tol * std::max(objective, 1e-300);
      return res;
    }
    t *= 20.0;
  }
}

}  // namespace

DistanceOracle::DistanceOracle(const SpectralTriple& triple, OracleOptions opts)
    : triple_(triple), opts_(opts) {
  if (opts_.rel_tol <= 0.0) throw DomainError("oracle: rel_tol must be positive");
  if (opts_.restarts < 1) throw DomainError("oracle: restarts must be >= 1");
  if (triple_.dim() > opts_.dim_cap) {
    std::ostringstream os;
    os << "oracle: triple dimension " << triple_.dim() << " exceeds the cap " << opts_.dim_cap;
    throw DimensionError(os.str());
  }
  map_ = std::make_shared<const CommutatorMap>(triple_);
}

KernelVerdict DistanceOracle::verdict(const PureState& s1, const PureState& s2) const {
  return map_->kernel_verdict(map_->functional(triple_, s1, s2));
}

DistanceValue DistanceOracle::distance(const PureState& s1, const PureState& s2) const {
  const CommutatorMap& map = *map_;
  const RealVector c = map.functional(triple_, s1, s2);
  if (map.kernel_verdict(c) == KernelVerdict::Infinite) return DistanceValue::infinite();

  const RealMatrix& w = map.whitening;
  const Eigen::Index r = w.cols();
  const RealVector g = w.transpose() * c;
  DistanceValue out = DistanceValue::finite(0.0);
  if (r == 0 || g.norm() <= 1e-14 * std::max(1.0, c.norm())) {
    out.witness = zero_element(triple_.algebra());
    return out;
  }

  std::vector<ComplexMatrix> dirs(static_cast<std::size_t>(r));
  for (Eigen::Index k = 0; k < r; ++k) {
    dirs[k] = ComplexMatrix::Zero(triple_.dim(), triple_.dim());
    for (std::size_t j = 0; j < map.commutators.size(); ++j)
      if (w(static_cast<Eigen::Index>(j), k) != 0.0) dirs[k] += w(static_cast<Eigen::Index>(j), k) * map.commutators[j];
  }
  const BarrierProblem prob(dirs, g);
  const SolveResult sol = solve_barrier(prob, g, opts_);

  double nrm = prob.norm_of(sol.u);
  RealVector u = sol.u;
  if (!(nrm > 0.0)) {
    u = g;
    nrm = prob.norm_of(u);
  }
  out.value = g.dot(u) / nrm;
  out.upper_bound = g.dot(sol.u) + sol.gap;
  out.converged = sol.converged;

  // Random feasibility probes: no direction may beat the returned value.
  std::mt19937_64 rng(opts_.seed);
  std::normal_distribution<double> normal;
  for (int k = 0; k < opts_.restarts; ++k) {
    RealVector v(r);
    for (Eigen::Index i = 0; i < r; ++i) v(i) = normal(rng);
    if (k == 0) v = g;
    const double vn = prob.norm_of(v);
    if (vn <= 0.0) continue;
    const double ratio = std::abs(g.dot(v)) / vn;
    if (ratio > out.value * (1.0 + 10.0 * opts_.rel_tol)) {
      out.converged = false;
      out.value = ratio;
      u = (g.dot(v) >= 0 ? 1.0 : -1.0) * v;
      nrm = vn;
    }
  }
  out.upper_bound = std::max(out.upper_bound, out.value);
  out.witness = map.element(w * (u / nrm));
  return out;
}

DistanceValue distance_numeric(const SpectralTriple& triple, const PureState& s1, const PureState& s2,
                               const OracleOptions& opts) {
  return DistanceOracle(triple, opts).distance(s1, s2);
}

std::vector<std::vector<DistanceValue>> distance_matrix(const SpectralTriple& triple,
                                                        const std::vector<PureState>& states,
                                                        const OracleOptions& opts) {
  if (states.size() < 2) throw DomainError("distance_matrix: need at least two states");
  const DistanceOracle oracle(triple, opts);
  const std::size_t n = states.size();
  std::vector<std::vector<DistanceValue>> out(n, std::vector<DistanceValue>(n, DistanceValue::finite(0.0)));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      try {
        const auto [i, j] = pairs[k];
        out[i][j] = oracle.distance(states[i], states[j]);
        out[j][i] = out[i][j];
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

double constraint_norm(const SpectralTriple& triple, const AlgebraElement& a) {
  return operator_norm(commutator(triple.dirac(), represent(a, triple)));
}

}  // namespace ncmetric

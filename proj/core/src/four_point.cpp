#include <cmath>
#include <sstream>

#include "ncmetric/commutative.hpp"

namespace ncmetric {

namespace {

double magnitude_scale(const RealPolynomial& p, double x) {
  double s = 0.0, xp = 1.0;
  for (double v : p.coeffs()) {
    s += std::abs(v) * xp;
    xp *= std::abs(x);
  }
  return s;
}

}  // namespace

FourPointGeneral four_point_general(const FourPointCoeffs& d, const OracleOptions& opts) {
  using Var = BivariatePolynomial::Var;
  FourPointGeneral out;
  std::ostringstream diag;

  const SpectralTriple triple = commutative_triple(four_point_dirac(d));
  out.value = distance_numeric(triple, PureState::canonical(0), PureState::canonical(1), opts);
  out.oracle = out.value.value;
  if (out.value.is_infinite()) {
    out.diagnostic = "points 1 and 2 are not connected; distance is infinite";
    return out;
  }

  const FourPointQuadratic quad = four_point_quadratic(d);
  const BivariatePolynomial veff = effective_potential(d);
  if (veff.degree_in(Var::Y) < 2) {
    out.diagnostic = "V_eff has degree < 2 in y; pipeline skipped, oracle value used";
    return out;
  }
  out.discriminant = dis_in_variable(veff, Var::Y);
  if (out.discriminant.is_zero()) {
    out.diagnostic = "Dis(V_eff, y) vanishes identically; oracle value used";
    return out;
  }
  out.discriminant_at_oracle = std::abs(out.discriminant(out.oracle)) / out.discriminant.max_abs_coeff();

  const BivariatePolynomial dveff = veff.derivative(Var::Y);
  int tried = 0;
  for (const auto& root : real_roots(out.discriminant)) {
    const double x = root.value;
    if (x < 0.0) continue;
    ++tried;
    const RealPolynomial vy = veff.substitute(Var::X, x);
    const RealPolynomial dvy = dveff.substitute(Var::X, x);
    std::vector<double> ys;
    for (const auto& r : real_roots(dvy, 1e-6)) ys.push_back(r.value);
    for (const auto& r : real_roots(vy, 1e-6)) ys.push_back(r.value);
    for (double y : ys) {
      if (std::abs(vy(y)) > 1e-6 * std::max(magnitude_scale(vy, y), 1e-300)) continue;
      const double a = quad.a(x, y);
      if (std::abs(a) < 1e-14) continue;
      const double z = -quad.b(x, y) / (2.0 * a);
      const NAlphaBeta nab = n_alpha_beta(x, y, z, d);
      if (std::abs(nab.n - 2.0) <= 1e-6 && (!out.pipeline || x > *out.pipeline)) out.pipeline = x;
    }
  }

  diag << "CROSS-CHECK REQUIRED: " << tried << " nonnegative roots of Dis(V_eff, y) examined; ";
  if (out.pipeline) {
    const double rel = std::abs(*out.pipeline - out.oracle) / out.oracle;
    diag << "pipeline " << *out.pipeline << " vs oracle " << out.oracle << " (relative difference " << rel << ")";
  } else {
    diag << "no feasible candidate; oracle value " << out.oracle << " used";
  }
  out.diagnostic = diag.str();
  return out;
}

}  // namespace ncmetric

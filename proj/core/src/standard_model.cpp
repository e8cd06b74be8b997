#include "ncmetric/standard_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ncmetric {

namespace {

ComplexMatrix diag(const std::vector<double>& v) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
  return m;
}

ComplexMatrix unit_matrix(Eigen::Index rows, Eigen::Index cols, Eigen::Index i, Eigen::Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(rows, cols);
  e(i, j) = 1.0;
  return e;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

void FermionMasses::validate() const {
  const std::size_t n = up.size();
  if (n == 0 || down.size() != n || lepton.size() != n)
    throw DomainError("masses: up, down and lepton need the same nonzero number of generations");
  for (const auto* family : {&up, &down, &lepton})
    for (double m : *family)
      if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("masses must be positive and finite");
  const auto ni = static_cast<Eigen::Index>(n);
  if (ckm.rows() != ni || ckm.cols() != ni) throw DimensionError("ckm must be N x N");
  const double err = (ckm.adjoint() * ckm - ComplexMatrix::Identity(ni, ni)).cwiseAbs().maxCoeff();
  if (err > 1e-10) {
    std::ostringstream os;
    os << "ckm is not unitary (deviation " << err << ")";
    throw DomainError(os.str());
  }
}

ComplexMatrix build_mass_matrix(const FermionMasses& masses) {
  masses.validate();
  const Eigen::Index n = masses.generations();
  const ComplexMatrix mu = diag(masses.up);
  const ComplexMatrix md = masses.ckm * diag(masses.down);
  const ComplexMatrix me = diag(masses.lepton);
  const ComplexMatrix quarks =
      kron(kron(unit_matrix(2, 2, 0, 0), mu) + kron(unit_matrix(2, 2, 1, 1), md), ComplexMatrix::Identity(3, 3));
  const ComplexMatrix leptons = kron(unit_matrix(2, 1, 1, 0), me);
  ComplexMatrix m = ComplexMatrix::Zero(8 * n, 7 * n);
  m.topLeftCorner(6 * n, 6 * n) = quarks;
  m.bottomRightCorner(2 * n, n) = leptons;
  return m;
}

ComplexMatrix higgs_quaternion(const HiggsDoublet& h) {
  ComplexMatrix q(2, 2);
  const Complex a = 1.0 + h.h1;
  q << a, h.h2, -std::conj(h.h2), std::conj(a);
  return q;
}

ComplexMatrix higgs_operator(const HiggsDoublet& h, int generations) {
  const ComplexMatrix q = higgs_quaternion(h);
  return block_diagonal({kron(q, ComplexMatrix::Identity(3 * generations, 3 * generations)),
                         kron(q, ComplexMatrix::Identity(generations, generations))});
}

double sm_gtt_direct(const HiggsDoublet& h, const FermionMasses& masses) {
  const double n = operator_norm(higgs_operator(h, masses.generations()) * build_mass_matrix(masses));
  return n * n;
}

GttResult sm_gtt(const HiggsDoublet& h, const FermionMasses& masses) {
  masses.validate();
  GttResult r;
  const double mt = max_of(masses.up);
  const double heaviest = std::max({mt, max_of(masses.down), max_of(masses.lepton)});
  if (heaviest > mt) {
    r.closed_form = false;
    r.gtt = sm_gtt_direct(h, masses);
    std::ostringstream os;
    os << "heaviest mass " << heaviest << " exceeds the top mass " << mt << "; gtt computed as |Phi M|^2";
    r.diagnostic = os.str();
    return r;
  }
  r.gtt = (std::norm(1.0 + h.h1) + std::norm(h.h2)) * mt * mt;
  return r;
}

DistanceValue sm_fiber_distance(const HiggsDoublet& h, const FermionMasses& masses) {
  const double g = sm_gtt(h, masses).gtt;
  return g > 0.0 ? DistanceValue::finite(1.0 / std::sqrt(g)) : DistanceValue::infinite();
}

SpectralTriple sm_internal_triple(const FermionMasses& masses, const HiggsDoublet& h) {
  const int n = masses.generations();
  const ComplexMatrix pm = higgs_operator(h, n) * build_mass_matrix(masses);
  ComplexMatrix dp = ComplexMatrix::Zero(15 * n, 15 * n);
  dp.topRightCorner(8 * n, 7 * n) = pm;
  dp.bottomLeftCorner(7 * n, 8 * n) = pm.adjoint();
  const ComplexMatrix d = block_diagonal({dp, dp.conjugate()});

  FiniteAlgebra alg{{AlgebraBlock::quaternions(), AlgebraBlock::complex_line(), AlgebraBlock::matrix(3)}};
  using L = SlotLayout;
  std::vector<RepresentationSlot> slots{
      // left-handed particles: quarks then leptons, doublets acted on by H
      {0, SlotMode::Quaternion2x2, 3 * n, L::ActionFirst},
      {0, SlotMode::Quaternion2x2, n, L::ActionFirst},
      // right-handed particles: u_R, d_R, e_R
      {1, SlotMode::Scalar, 3 * n, L::Copies},
      {1, SlotMode::ScalarConjugate, 3 * n, L::Copies},
      {1, SlotMode::ScalarConjugate, n, L::Copies},
      // left-handed antiparticles: antiquarks carry color, antileptons
      {2, SlotMode::Fundamental, 2 * n, L::Copies},
      {1, SlotMode::ScalarConjugate, 2 * n, L::Copies},
      // right-handed antiparticles
      {2, SlotMode::Fundamental, 2 * n, L::Copies},
      {1, SlotMode::ScalarConjugate, n, L::Copies},
  };
  std::vector<int> grading;
  for (int sign : {-1, 1, -1, 1})
    for (int i = 0; i < (sign < 0 ? 8 * n : 7 * n); ++i) grading.push_back(sign);
  return SpectralTriple(std::move(alg), std::move(slots), HermitianMatrix(d), std::move(grading));
}

SectorReport sm_infinite_sector_check(const FermionMasses& masses) {
  masses.validate();
  FermionMasses one;
  one.up = {max_of(masses.up)};
  one.down = {max_of(masses.down)};
  one.lepton = {max_of(masses.lepton)};
  one.ckm = ComplexMatrix::Identity(1, 1);
  const SpectralTriple t = sm_internal_triple(one);
  const CommutatorMap map(t);

  std::vector<PureState> colors;
  const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
  ComplexVector v(3);
  v << 1.0, 0.0, 0.0;
  colors.push_back(PureState::vector_state(2, v, "color1"));
  v << 0.0, 1.0, 0.0;
  colors.push_back(PureState::vector_state(2, v, "color2"));
  v << r2, Complex(0.0, r2), 0.0;
  colors.push_back(PureState::vector_state(2, v, "color(1+i2)"));
  v << r3, r3, -r3;
  colors.push_back(PureState::vector_state(2, v, "color(1+2-3)"));
  const PureState wh = PureState::canonical(0, "omega_h"), wc = PureState::canonical(1, "omega_c");

  SectorReport rep;
  auto add = [&](const PureState& a, const PureState& b, KernelVerdict expected) {
    SectorEntry e;
    e.pair = a.name + " ~ " + b.name;
    e.verdict = map.kernel_verdict(map.functional(t, a, b));
    e.expected = expected;
    rep.all_as_expected = rep.all_as_expected && e.verdict == expected;
    rep.entries.push_back(std::move(e));
  };
  add(wh, wc, KernelVerdict::FinitePossible);
  for (const auto& c : colors) {
    add(wh, c, KernelVerdict::Infinite);
    add(wc, c, KernelVerdict::Infinite);
  }
  for (std::size_t i = 0; i < colors.size(); ++i)
    for (std::size_t j = i + 1; j < colors.size(); ++j) add(colors[i], colors[j], KernelVerdict::Infinite);
  return rep;
}

}  // namespace ncmetric

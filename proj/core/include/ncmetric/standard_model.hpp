#pragma once

#include <string>
#include <vector>

#include "ncmetric/triple.hpp"

namespace ncmetric {

/// Per-generation masses, ascending within each family, and the mixing matrix.
struct FermionMasses {
  std::vector<double> up{1.0, 1.0, 1.0};
  std::vector<double> down{1.0, 1.0, 1.0};
  std::vector<double> lepton{1.0, 1.0, 1.0};
  ComplexMatrix ckm = ComplexMatrix::Identity(3, 3);

  [[nodiscard]] int generations() const { return static_cast<int>(up.size()); }
  /// Throws DomainError on non-positive masses, mismatched lengths or a non-unitary ckm.
  void validate() const;
};

struct HiggsDoublet {
  Complex h1{0.0, 0.0};
  Complex h2{0.0, 0.0};
};

/// The 8N x 7N mass matrix: quark block ((e11 (x) Mu + e22 (x) Md) (x) 1_3), lepton block e2 (x) Me,
/// with Md = ckm diag(down).
ComplexMatrix build_mass_matrix(const FermionMasses& masses);

/// The quaternion [[1+h1, h2], [-conj h2, 1+conj h1]].
ComplexMatrix higgs_quaternion(const HiggsDoublet& h);

/// Phi = blockdiag(q (x) 1_{3N}, q (x) 1_N) acting on the left-handed particles.
ComplexMatrix higgs_operator(const HiggsDoublet& h, int generations);

struct GttResult {
  double gtt = 0.0;
  bool closed_form = true;
  std::string diagnostic;
};

/// (|1+h1|^2 + |h2|^2) m_t^2 when m_t is the largest mass; otherwise |Phi M|^2
/// computed directly, with a diagnostic.
GttResult sm_gtt(const HiggsDoublet& h, const FermionMasses& masses);

/// |Phi M|^2 computed from the assembled matrices.
double sm_gtt_direct(const HiggsDoublet& h, const FermionMasses& masses);

/// 1/sqrt(gtt), +inf when gtt vanishes.
DistanceValue sm_fiber_distance(const HiggsDoublet& h, const FermionMasses& masses);

/// Internal triple on H = H_L^P + H_R^P + H_L^A + H_R^A (dimension 30N) over
/// H + C + M_3(C), with D = diag(D_P, conj D_P), D_P = [[0, Phi M], [(Phi M)*, 0]].
/// Blocks: 0 = quaternions, 1 = complex line, 2 = M_3(C).
SpectralTriple sm_internal_triple(const FermionMasses& masses, const HiggsDoublet& h = {});

struct SectorEntry {
  std::string pair;
  KernelVerdict verdict = KernelVerdict::FinitePossible;
  KernelVerdict expected = KernelVerdict::FinitePossible;
};

struct SectorReport {
  std::vector<SectorEntry> entries;
  bool all_as_expected = true;
};

/// Kernel test on the one-generation internal triple: every pair involving a
/// color state must be Infinite, (omega_h, omega_c) FinitePossible.
SectorReport sm_infinite_sector_check(const FermionMasses& masses);

}  // namespace ncmetric

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncmetric/oracle.hpp"
#include "ncmetric/polynomial.hpp"
#include "ncmetric/triple.hpp"

namespace ncmetric {

/// Weighted graph of the nonzero off-diagonal Dirac entries, edge length 1/|D_ij|.
struct DiracGraph {
  struct Edge {
    int i = 0;
    int j = 0;
    double length = 0.0;
  };
  int n = 0;
  std::vector<Edge> edges;
};

/// Throws DomainError on a nonzero diagonal entry.
DiracGraph graph_from_dirac(const HermitianMatrix& d);

/// Shortest-path length, +inf when i and j are not connected.
DistanceValue geodesic_length(const DiracGraph& g, int i, int j);
/// All-pairs shortest paths.
RealMatrix geodesic_matrix(const DiracGraph& g);

/// (1/|k|) sqrt(2/n), or (1/|k|) sqrt(2/(n-2)) when the link between the two
/// points is cut.
double regular_distance(int n, double k, bool cut = false);

/// Regular space: all off-diagonal entries k, optionally with the (0,1) link removed.
HermitianMatrix regular_dirac(int n, double k, bool cut = false);

/// d(1,2) on three points from the couplings D12, D13, D23.
DistanceValue three_point_distance(double d12, double d13, double d23);

struct ThreePointCouplings {
  double d12 = 0.0;
  double d13 = 0.0;
  double d23 = 0.0;
};

/// Couplings realizing d(1,2)=a, d(1,3)=b, d(2,3)=c. Throws ConstraintViolation
/// naming the squared triangle inequality that fails; equality cases yield a
/// zero coupling.
ThreePointCouplings three_point_inverse(double a, double b, double c);

/// d1..d6 = 1/D12, 1/D13, 1/D14, 1/D23, 1/D24, 1/D34; +inf marks a deleted link.
struct FourPointCoeffs {
  double d1 = 1.0, d2 = 1.0, d3 = 1.0, d4 = 1.0, d5 = 1.0, d6 = 1.0;

  /// The 4-cycle 1-2-3-4 with links 13 and 24 removed.
  static FourPointCoeffs cycle(double d1, double d3, double d4, double d6);
  /// Couplings 1/d_i with 0 for infinite lengths, in the order of d1..d6.
  [[nodiscard]] std::vector<double> couplings() const;
};

HermitianMatrix four_point_dirac(const FourPointCoeffs& d);

struct NAlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
  double n = 0.0;
  double f = 0.0;
};

/// For a = (0, x, y, z) on four points: |[D,a]|^2 = n/2 and f = alpha - beta^2 - 1.
NAlphaBeta n_alpha_beta(double x, double y, double z, const FourPointCoeffs& d);

/// f(x, y, z) = A(x,y) z^2 + B(x,y) z + C(x,y).
struct FourPointQuadratic {
  BivariatePolynomial a, b, c;
};
FourPointQuadratic four_point_quadratic(const FourPointCoeffs& d);

/// V_eff(x, y) = (B^2 - 4AC)/4, the z-discriminant of f up to normalization.
BivariatePolynomial effective_potential(const FourPointCoeffs& d);

struct FourPointSpecial {
  double d12 = 0.0;
  double d13 = 0.0;
  int branch12 = 0;  // 0: d1^2 <= d6^2, 1: d1 d6 = d3 d4, 2: C <= 0, 3: larger of two roots
  int branch13 = 0;  // 0: (d3^2+d6^2)^2 <= K, 1: (d1^2+d4^2)^2 <= K, 2: larger of two roots
};

/// Closed forms for the 4-cycle (D13 = D24 = 0).
FourPointSpecial four_point_special(double d1, double d3, double d4, double d6);

struct FourPointGeneral {
  DistanceValue value;            // authoritative (oracle) value for d(1,2)
  std::optional<double> pipeline; // largest feasible root, when one exists
  double oracle = 0.0;
  RealPolynomial discriminant;    // Dis(V_eff, y) as a polynomial in x
  double discriminant_at_oracle = 0.0;  // |J(oracle)| / coefficient scale
  bool cross_check_required = true;
  std::string diagnostic;
};

/// d(1,2) on four points: candidates from the roots of Dis(V_eff, y) checked
/// against the oracle, which stays authoritative.
FourPointGeneral four_point_general(const FourPointCoeffs& d, const OracleOptions& opts = {});

/// Triple whose distances between the n canonical states reproduce `dist`.
///
/// Every pair (i, j) gets a three-dimensional slot acting by diag(a_i, a_j, a_j)
/// with Dirac block [[0,c,0],[c,0,c],[0,c,0]], c = 1/d_ij (0 when d_ij is
/// infinite). Throws ConstraintViolation on asymmetry or a triangle violation.
SpectralTriple metric_to_triple(const RealMatrix& dist);

/// Throws ConstraintViolation unless dist is a metric with possibly infinite entries.
void validate_metric(const RealMatrix& dist);

/// Canonical states of the n complex lines, named "1".."n".
std::vector<PureState> point_states(int n);

}  // namespace ncmetric

#include "ncmetric/dispatch.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ncmetric/commutative.hpp"
#include "ncmetric/matrix_geometry.hpp"

namespace ncmetric {

namespace {

constexpr double kExact = 1e-14;

bool is_commutative(const SpectralTriple& t) {
  const auto& blocks = t.algebra().blocks;
  const auto& slots = t.slots();
  if (slots.size() != blocks.size()) return false;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (blocks[k].kind != BlockKind::ComplexLine) return false;
    if (slots[k].block_index != k || slots[k].mode != SlotMode::Scalar || slots[k].multiplicity != 1) return false;
  }
  const ComplexMatrix& d = t.dirac().matrix();
  return d.imag().cwiseAbs().maxCoeff() <= kExact && d.diagonal().cwiseAbs().maxCoeff() <= kExact;
}

MethodResult closed(const std::string& name, DistanceValue v) {
  v.upper_bound = v.value;
  return {std::move(v), "closed-form:" + name};
}

std::optional<MethodResult> commutative_closed_form(const RealMatrix& d, int i, int j) {
  const auto n = static_cast<int>(d.rows());
  if (n == 2) {
    const double k = std::abs(d(0, 1));
    return closed("two-point", k > 0.0 ? DistanceValue::finite(1.0 / k) : DistanceValue::infinite());
  }
  if (n == 3) {
    const int k = 3 - i - j;
    if (d(i, j) * d(i, k) * d(j, k) < 0.0) return std::nullopt;
    return closed("three-point", three_point_distance(std::abs(d(i, j)), std::abs(d(i, k)), std::abs(d(j, k))));
  }

  // Regular space, possibly with the link between the two points cut.
  double k = 0.0;
  for (int a = 0; a < n && k == 0.0; ++a)
    for (int b = a + 1; b < n && k == 0.0; ++b)
      if (!(a == std::min(i, j) && b == std::max(i, j))) k = d(a, b);
  if (k != 0.0) {
    bool regular = true, cut = false;
    for (int a = 0; a < n && regular; ++a)
      for (int b = a + 1; b < n && regular; ++b) {
        if (a == std::min(i, j) && b == std::max(i, j) && d(a, b) == 0.0)
          cut = true;
        else if (d(a, b) != k)
          regular = false;
      }
    if (regular) return closed(cut ? "regular-cut" : "regular", DistanceValue::finite(regular_distance(n, k, cut)));
  }

  if (n == 4) {
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      if (p[0] != i || (p[1] != j && p[2] != j)) continue;
      if (d(p[0], p[2]) != 0.0 || d(p[1], p[3]) != 0.0) continue;
      const double c12 = d(p[0], p[1]), c14 = d(p[0], p[3]), c23 = d(p[1], p[2]), c34 = d(p[2], p[3]);
      if (c12 == 0.0 || c14 == 0.0 || c23 == 0.0 || c34 == 0.0) continue;
      if (c12 * c14 * c23 * c34 < 0.0) return std::nullopt;
      const FourPointSpecial s =
          four_point_special(1.0 / std::abs(c12), 1.0 / std::abs(c14), 1.0 / std::abs(c23), 1.0 / std::abs(c34));
      return closed("four-point-special", DistanceValue::finite(p[1] == j ? s.d12 : s.d13));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return std::nullopt;
}

}  // namespace

bool same_state(const PureState& s1, const PureState& s2) {
  if (s1.block_index != s2.block_index) return false;
  const ComplexVector one = ComplexVector::Ones(1);
  const ComplexVector& v1 = s1.vector ? *s1.vector : one;
  const ComplexVector& v2 = s2.vector ? *s2.vector : one;
  return v1.size() == v2.size() && std::abs(std::abs(v1.dot(v2)) - 1.0) <= 1e-14;
}

std::optional<MethodResult> closed_form_distance(const SpectralTriple& triple, const PureState& s1,
                                                 const PureState& s2) {
  validate_state(triple.algebra(), s1);
  validate_state(triple.algebra(), s2);
  if (triple.grading()) return std::nullopt;
  const auto& blocks = triple.algebra().blocks;
  const auto& slots = triple.slots();
  const ComplexMatrix& d = triple.dirac().matrix();

  if (is_commutative(triple)) {
    if (s1.block_index == s2.block_index) return closed("two-point", DistanceValue::finite(0.0));
    return commutative_closed_form(d.real(), static_cast<int>(s1.block_index), static_cast<int>(s2.block_index));
  }

  // M_2(C) on C^2 with a diagonal Dirac operator.
  if (blocks.size() == 1 && blocks[0].kind == BlockKind::MatrixBlock && blocks[0].size == 2 && slots.size() == 1 &&
      slots[0].mode == SlotMode::Fundamental && slots[0].multiplicity == 1 &&
      std::abs(d(0, 1)) <= kExact && std::abs(d(0, 0).imag()) <= kExact && std::abs(d(1, 1).imag()) <= kExact)
    return closed("sphere", m2_distance(*s1.vector, *s2.vector, d(0, 0).real(), d(1, 1).real()));

  // M_n(C) + C on C^{n+1} with an off-diagonal column m.
  if (blocks.size() == 2 && blocks[0].kind == BlockKind::MatrixBlock && blocks[1].kind == BlockKind::ComplexLine &&
      slots.size() == 2 && slots[0].block_index == 0 && slots[0].mode == SlotMode::Fundamental &&
      slots[0].multiplicity == 1 && slots[1].block_index == 1 && slots[1].mode == SlotMode::Scalar &&
      slots[1].multiplicity == 1) {
    const int n = blocks[0].size;
    if (d.topLeftCorner(n, n).cwiseAbs().maxCoeff() <= kExact && std::abs(d(n, n)) <= kExact) {
      const ComplexVector m = d.block(0, n, n, 1);
      if (m.norm() > 0.0) return closed("two-point-matrix", two_point_distance(m, s1, s2));
    }
  }
  return std::nullopt;
}

MethodResult dispatch_distance(const DistanceOracle& oracle, const PureState& s1, const PureState& s2,
                               Method method) {
  const SpectralTriple& triple = oracle.triple();
  validate_state(triple.algebra(), s1);
  validate_state(triple.algebra(), s2);
  if (method == Method::Oracle) return {oracle.distance(s1, s2), "oracle"};

  if (same_state(s1, s2)) {
    DistanceValue v = DistanceValue::finite(0.0);
    v.witness = zero_element(triple.algebra());
    return {v, "identical"};
  }
  if (oracle.verdict(s1, s2) == KernelVerdict::Infinite) return {DistanceValue::infinite(), "kernel-test"};
  if (auto cf = closed_form_distance(triple, s1, s2)) return *cf;
  if (method == Method::ClosedForm) throw DomainError("no closed form applies to this triple and pair of states");
  return {oracle.distance(s1, s2), "oracle"};
}

Method parse_method(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "oracle") return Method::Oracle;
  if (s == "closed-form") return Method::ClosedForm;
  throw DomainError("unknown method \"" + s + "\"");
}

}  // namespace ncmetric

#include "ncmetric/product.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ncmetric {

namespace {

ComplexMatrix support_projector(const SpectralTriple& triple, const PureState& s) {
  validate_state(triple.algebra(), s);
  AlgebraElement e = zero_element(triple.algebra());
  if (s.vector && s.vector->size() > 1)
    e[s.block_index] = *s.vector * s.vector->adjoint();
  else
    e[s.block_index] = ComplexMatrix::Identity(e[s.block_index].rows(), e[s.block_index].cols());
  return represent(e, triple);
}

std::string state_label(const PureState& s) {
  if (!s.name.empty()) return s.name;
  return "block" + std::to_string(s.block_index);
}

double deviation(const DistanceValue& a, const DistanceValue& b) {
  if (a.is_infinite() || b.is_infinite())
    return a.is_infinite() == b.is_infinite() ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(a.value - b.value) / std::max(1.0, b.value);
}

}  // namespace

ProductTriple tensor_product_triple(const SpectralTriple& external, const SpectralTriple& internal) {
  if (!external.grading()) throw DomainError("tensor_product_triple: the external triple needs a grading");
  const auto& eblocks = external.algebra().blocks;
  for (const auto& b : eblocks)
    if (b.kind != BlockKind::ComplexLine && b.kind != BlockKind::RealLine)
      throw DomainError("tensor_product_triple: external algebra must be a sum of lines");
  for (const auto& s : external.slots())
    if (s.mode != SlotMode::Scalar) throw DomainError("tensor_product_triple: external slots must be scalar");

  const std::size_t nb = internal.algebra().blocks.size();
  FiniteAlgebra alg;
  for (std::size_t e = 0; e < eblocks.size(); ++e)
    for (const auto& b : internal.algebra().blocks) alg.blocks.push_back(b);

  std::vector<RepresentationSlot> slots;
  for (const auto& es : external.slots())
    for (int copy = 0; copy < es.multiplicity; ++copy)
      for (auto s : internal.slots()) {
        s.block_index += es.block_index * nb;
        slots.push_back(s);
      }

  const Eigen::Index de = external.dim(), di = internal.dim();
  ComplexMatrix gamma = ComplexMatrix::Zero(de, de);
  for (Eigen::Index i = 0; i < de; ++i) gamma(i, i) = (*external.grading())[i];
  const ComplexMatrix d = kron(external.dirac().matrix(), ComplexMatrix::Identity(di, di)) +
                          kron(gamma, internal.dirac().matrix());

  std::optional<std::vector<int>> grading;
  if (internal.grading()) {
    std::vector<int> g;
    for (int ge : *external.grading())
      for (int gi : *internal.grading()) g.push_back(ge * gi);
    grading = std::move(g);
  }
  return {external, internal, SpectralTriple(std::move(alg), std::move(slots), HermitianMatrix(d), std::move(grading))};
}

PureState ProductTriple::product_state(const PureState& ext, const PureState& in) const {
  validate_state(external.algebra(), ext);
  validate_state(internal.algebra(), in);
  PureState s = in;
  s.block_index = ext.block_index * internal.algebra().blocks.size() + in.block_index;
  s.name = state_label(ext) + "x" + state_label(in);
  return s;
}

FactorReport factor_distance_check(const ProductTriple& product, FactorMode mode,
                                   const std::vector<PureState>& external_states,
                                   const std::vector<PureState>& internal_states, const OracleOptions& opts) {
  const DistanceOracle full(product.assembled, opts);
  const DistanceOracle factor(mode == FactorMode::Internal ? product.internal : product.external, opts);
  const auto& fixed = mode == FactorMode::Internal ? external_states : internal_states;
  const auto& moving = mode == FactorMode::Internal ? internal_states : external_states;

  FactorReport rep;
  for (const auto& f : fixed)
    for (std::size_t i = 0; i < moving.size(); ++i)
      for (std::size_t j = i + 1; j < moving.size(); ++j) {
        const PureState a = mode == FactorMode::Internal ? product.product_state(f, moving[i])
                                                         : product.product_state(moving[i], f);
        const PureState b = mode == FactorMode::Internal ? product.product_state(f, moving[j])
                                                         : product.product_state(moving[j], f);
        const DistanceValue dp = full.distance(a, b);
        const DistanceValue df = factor.distance(moving[i], moving[j]);
        FactorEntry e;
        e.label = a.name + " ~ " + b.name;
        e.product = dp.value;
        e.factor = df.value;
        e.deviation = deviation(dp, df);
        rep.max_deviation = std::max(rep.max_deviation, e.deviation);
        rep.entries.push_back(std::move(e));
      }
  return rep;
}

ReducedPair reduce_pair(const SpectralTriple& triple, const PureState& s1, const PureState& s2) {
  const ComplexMatrix p1 = support_projector(triple, s1), p2 = support_projector(triple, s2);
  if (operator_norm(p1 * p2) > 1e-10) throw DomainError("reduce_pair: supports are not orthogonal");
  const double residual = operator_norm(commutator(triple.dirac(), p1 + p2));
  if (residual > 1e-10) {
    std::ostringstream os;
    os << "reduce_pair: support sum does not commute with D (residual " << residual << ")";
    throw DomainError(os.str());
  }
  ReducedPair r;
  r.coupling_norm = operator_norm(p1 * triple.dirac().matrix() * p2);
  r.distance = r.coupling_norm > 0.0 ? DistanceValue::finite(1.0 / r.coupling_norm) : DistanceValue::infinite();
  return r;
}

double pythagoras_cross(double d_external, double d_internal) { return std::hypot(d_external, d_internal); }

SpectralTriple fluctuate(const SpectralTriple& internal, const HermitianMatrix& h) {
  if (h.dim() != internal.dim()) throw DimensionError("fluctuate: H and D have different dimensions");
  return internal.with_dirac(internal.dirac() + h);
}

}  // namespace ncmetric

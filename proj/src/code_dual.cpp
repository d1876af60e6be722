#include "rankdec/code.hpp"
#include "rankdec/errors.hpp"
#include "rankdec/geometry.hpp"
#include "rankdec/subspace.hpp"

namespace rankdec {

RankCode geometric_dual(const RankCode& C) {
  const System dual = perp_prime(system_from_code(C));
  if (!dual.spans_ambient())
    throw DomainError("the dual system lies in a proper F_{q^m}-subspace; the system of C contains an F_{q^m}-line");
  return code_from_system(dual);
}

RankCode geometric_dual_blockwise(const RankCode& C) {
  const Decomposition& dec = C.require_decomposition();
  const ContextPtr& ctx = C.context();
  std::vector<Vector> blocks;
  for (const auto& u : dec.blocks) {
    const Subspace dual = trace_dual(Subspace::span(ctx, u));
    if (dual.is_zero()) throw DomainError("a block has weight m, its dual is zero");
    blocks.push_back(dual.basis());
  }
  return build_completely_decomposable(ctx, blocks);
}

RankCode classical_dual(const RankCode& C) {
  if (C.k() == C.n()) throw DomainError("the dual of the full space is the zero code");
  return RankCode(C.context(), right_kernel(*C.context(), C.generator()));
}

}  // namespace rankdec

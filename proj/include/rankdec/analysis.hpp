#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankdec/code.hpp"
#include "rankdec/subspace.hpp"

namespace rankdec {

/// Number of trailing block lengths equal to n_k, minus one (with n_0 = 0).
std::size_t trailing_ell(const std::vector<std::size_t>& type);

/// F_q-spans U_i of the blocks of a decomposition.
std::vector<Subspace> block_spans(const RankCode& C);

/// j_{i,h} = m - dim(U_i^{⊥*} U_h), indices 1-based.
std::size_t j_value(const Subspace& Ui, const Subspace& Uh);

struct MinWeightReport {
  std::vector<std::size_t> type;
  std::size_t ell = 0;
  /// (i, h) -> j_{i,h} for k-ℓ ≤ i < h ≤ k, 1-based.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> j_matrix;
  std::uint64_t formula_count = 0;
  std::optional<std::uint64_t> enumerated_count;
  std::uint64_t lower_bound = 0;
  std::uint64_t upper_bound = 0;
  std::optional<std::uint64_t> prime_upper_bound;
};

/// Closed-form count of weight-n_k codewords. Uses the decomposition record, or detects one.
MinWeightReport min_weight_count_formula(const RankCode& C, const EnumOptions& opt = {});

/// The set W_t: β (0, ..., 0, u_t, ξ_{t+1} u_{t+1}, ..., ξ_k u_k) A with ξ_h ∈ (U_t^{⊥*} U_h)^{⊥*}, β ≠ 0.
struct LayerFamily {
  std::size_t t = 0;
  /// (U_t^{⊥*} U_h)^{⊥*} for h = t+1, ..., k.
  std::vector<Subspace> xi_spaces;
  /// (q^m - 1) q^{Σ_h j_{t,h}}.
  std::uint64_t size = 0;
};
/// t ∈ [1, k]; for t = k the family is {β u_k}.
LayerFamily layer_family(const RankCode& C, std::size_t t);
/// Every word of the family, in the coordinates of C, sorted.
std::vector<Vector> materialize(const RankCode& C, const LayerFamily& W, std::uint64_t cap = std::uint64_t{1} << 24);

struct Bounds {
  std::uint64_t lower;
  std::uint64_t upper;
};
/// (q^m-1)(ℓ+1) and (q^m-1)(q^{(ℓ+1)(m-n_k)}-1)/(q^{m-n_k}-1); needs 1 ≤ n_k < m.
Bounds bounds_nonprime(std::uint64_t q, unsigned m, std::size_t n_k, std::size_t ell);
/// (q^m-1)(q^{ℓ+1}-1)/(q-1), or nullopt when m is not prime.
std::optional<std::uint64_t> bound_prime(std::uint64_t q, unsigned m, std::size_t ell);

/// k copies of a block whose entries are an F_q-basis of ⟨1, ξ, ..., ξ^{r-2}⟩ over F_{q^e}, m = r e.
RankCode construct_subfield_extremal(const ContextPtr& ctx, unsigned e, std::size_t k, Element xi);
/// ⊕_i ⟨(1, λ, ..., λ^{t_i - 1})⟩ with λ of degree e over F_q.
RankCode construct_lambda_code(const ContextPtr& ctx, Element lambda, unsigned e, const std::vector<std::size_t>& t_list);
/// Blocks u_i = (λ^j + ξ μ_i (λ^j)^q)_{j<e} for m = 2e.
RankCode construct_lower_attaining(const ContextPtr& ctx, unsigned e, Element xi, const std::vector<Element>& mu,
                                   Element lambda);

enum class VerdictStatus { verified, not_applicable, falsification_alarm };
std::string to_string(VerdictStatus s);

struct NonprimeWitness {
  unsigned e = 0;
  unsigned r = 0;
  /// Common F_{q^e}-hyperplane, normalized to contain 1.
  Subspace H;
  /// U_i = c_i H for the trailing blocks i = k-ℓ, ..., k.
  std::vector<Element> scalars;
};
struct NonprimeVerdict {
  VerdictStatus status;
  std::string reason;
  MinWeightReport report;
  std::optional<NonprimeWitness> witness;
};
/// When A_{n_k} meets the upper bound of the general sandwich, the trailing blocks must be multiples of
/// one F_{q^e}-hyperplane with m = r e, n_k = (r-1) e.
NonprimeVerdict check_char_nonprime(const RankCode& C, const EnumOptions& opt = {});

struct PrimeWitness {
  /// The common block span U = U_k.
  Subspace U;
  /// U_i = d_i U for i = k-ℓ, ..., k (d_k = 1).
  std::vector<Element> scalars;
  std::size_t product_dim = 0;
};
struct PrimeVerdict {
  VerdictStatus status;
  std::string reason;
  MinWeightReport report;
  std::optional<PrimeWitness> witness;
};
/// m prime: A_{n_k} meets the prime bound iff the trailing blocks are multiples of one U with
/// dim(U^{⊥*} U) = m - 1. Both sides are computed independently.
PrimeVerdict check_char_prime(const RankCode& C, const EnumOptions& opt = {});

/// Some d with V = d U, searching d = v / u over the projective points u of U for a fixed v ∈ V.
std::optional<Element> scalar_relating(const Subspace& U, const Subspace& V);

/// Blocks of a code built from one λ.
using BlockMaker = std::function<std::vector<Vector>(Element lambda)>;
/// Blocks (λ^{x_1}, ..., λ^{x_s}), `copies` times.
BlockMaker power_blocks(const ContextPtr& ctx, std::vector<unsigned> exponents, std::size_t copies);
/// First λ of degree e (integer order) whose code has the given weight distribution.
std::optional<Element> find_lambda_with_distribution(const ContextPtr& ctx, unsigned e, const BlockMaker& blocks,
                                                     const std::vector<std::uint64_t>& target, const EnumOptions& opt = {});

}  // namespace rankdec

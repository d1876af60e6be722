#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "rankdec/enumerate.hpp"
#include "rankdec/field.hpp"
#include "rankdec/fp_space.hpp"
#include "rankdec/matrix.hpp"

namespace rankdec {

/// F_q-subspace of F_q^n. F_q coordinates are expanded over F_p in the basis subfield_fp_basis(1),
/// so the underlying F_p-space has length a*n with index t*a + l.
struct FqSpace {
  std::size_t n = 0;
  unsigned a = 1;
  FpSpace fp{2, 0};

  std::size_t dim() const noexcept { return fp.dim() / a; }
  friend bool operator==(const FqSpace& x, const FqSpace& y) { return x.n == y.n && x.a == y.a && x.fp == y.fp; }
};

/// Invertible n x n matrix over F_q acting on coordinates: C -> C A.
struct EquivalenceMap {
  Matrix A;
};

/// generator = B (u_1 ⊕ ... ⊕ u_k) A with n_1 ≥ ... ≥ n_k, w(u_i) = n_i < m.
struct Decomposition {
  std::vector<std::size_t> type;
  std::vector<Vector> blocks;
  Matrix B;  // k x k over F_{q^m}
  Matrix A;  // n x n over F_q
  /// Column permutation taking the input block order to the sorted one: rows of (input blocks) · sort_map
  /// are the rows of the sorted block matrix, up to row order.
  EquivalenceMap sort_map;

  /// u_1 ⊕ ... ⊕ u_k.
  Matrix block_matrix() const;
};

struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  /// Smallest nonzero weight with a nonzero count (0 for the zero code).
  std::size_t min_distance() const;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// [n, k] code over F_{q^m}, given by a generator with F_{q^m}-independent rows.
class RankCode {
 public:
  RankCode(ContextPtr ctx, Matrix generator, std::optional<Decomposition> decomposition = {});

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t k() const noexcept { return G_.rows(); }
  std::size_t n() const noexcept { return G_.cols(); }
  const Matrix& generator() const noexcept { return G_; }
  const std::optional<Decomposition>& decomposition() const noexcept { return dec_; }
  const Decomposition& require_decomposition() const;
  Vector encode(const Vector& message) const;

 private:
  ContextPtr ctx_;
  Matrix G_;
  std::optional<Decomposition> dec_;
};

std::size_t rank_weight(const FieldContext& F, const Vector& v);
/// Column span of Γ(v), with Γ the F_q-basis of the given context.
FqSpace support(const FieldContext& F, const Vector& v);
FqSpace code_support(const RankCode& C);
bool is_nondegenerate(const RankCode& C);
/// F_q-basis of an F_q-subspace of F_q^n, as vectors of F_q elements.
std::vector<Vector> fq_basis(const FieldContext& F, const FqSpace& S);

WeightDistribution weight_distribution(const RankCode& C, const EnumOptions& opt = {});
/// Histogram over projective messages only: A_w / (q^m - 1) for w > 0.
WeightDistribution projective_weight_distribution(const RankCode& C, const EnumOptions& opt = {});
std::size_t min_distance(const RankCode& C, const EnumOptions& opt = {});
/// Equality in mk ≤ max(m,n)(min(m,n) - d + 1).
bool is_mrd(const RankCode& C, const EnumOptions& opt = {});

RankCode direct_sum(const std::vector<RankCode>& codes);
RankCode apply_equivalence(const RankCode& C, const EquivalenceMap& A);
/// Same code, generator B G for B ∈ GL(k, q^m).
RankCode change_basis(const RankCode& C, const Matrix& B);
EquivalenceMap random_gl(const FieldContext& F, std::size_t n, std::uint64_t seed);
Matrix random_gl_qm(const FieldContext& F, std::size_t k, std::uint64_t seed);

/// ⊕ u_i with the blocks sorted by decreasing length; each block must have full rank weight below m.
RankCode build_completely_decomposable(const ContextPtr& ctx, const std::vector<Vector>& blocks);

struct DetectedDecomposition {
  std::vector<std::size_t> type;
  Matrix weight_complementary;  // u_1 ⊕ ... ⊕ u_k
  EquivalenceMap A;
  Matrix B;
};
/// Searches for a basis c_i = x_i G with sum of weights n, among projective messages x.
std::optional<DetectedDecomposition> detect_complete_decomposability(const RankCode& C, const EnumOptions& opt = {});
/// C with its decomposition record filled in (by detection when missing); throws if not decomposable.
RankCode with_decomposition(const RankCode& C, const EnumOptions& opt = {});
std::vector<std::size_t> type_of(const RankCode& C, const EnumOptions& opt = {});

/// Σ(C, t): span of the blocks t..k (1-based) in the original coordinates.
RankCode shortened(const RankCode& C, std::size_t t);
/// Π(C, t): ⊕_{i ≥ t} u_i.
RankCode punctured(const RankCode& C, std::size_t t);

/// {α c : α ≠ 0} for one codeword c.
struct CodewordFamily {
  Vector word;
};
/// The k single-block families (0, ..., α u_i, ..., 0) A; for k = 1 every nonzero codeword.
/// Each family is minimal. For k ≥ 2 the minimal set is larger: a word whose blocks have overlapping
/// entry spans can be minimal too (compare minimal_codewords_bruteforce).
std::vector<CodewordFamily> minimal_codewords(const RankCode& C);
std::vector<Vector> family_members(const FieldContext& F, const CodewordFamily& f);
/// Brute force: c is minimal iff every c' with supp(c') ⊆ supp(c) is a multiple of c.
bool is_minimal_codeword_oracle(const RankCode& C, const Vector& c, const EnumOptions& opt = {});
/// Brute-force set of all minimal codewords.
std::vector<Vector> minimal_codewords_bruteforce(const RankCode& C, const EnumOptions& opt = {});
bool proportional(const FieldContext& F, const Vector& x, const Vector& y);

/// Code of the system U^{⊥'}; requires no F_{q^m}-line inside the system of C.
RankCode geometric_dual(const RankCode& C);
/// ⊕ of the trace duals of the block spans; needs a decomposition.
RankCode geometric_dual_blockwise(const RankCode& C);
/// C^⊥ under the standard bilinear form over F_{q^m}.
RankCode classical_dual(const RankCode& C);

}  // namespace rankdec

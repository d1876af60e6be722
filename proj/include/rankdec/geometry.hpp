#pragma once

#include <cstddef>
#include <vector>

#include "rankdec/code.hpp"
#include "rankdec/field.hpp"
#include "rankdec/fp_space.hpp"
#include "rankdec/subspace.hpp"

namespace rankdec {

/// F_q-subspace of F_{q^m}^k. Coordinate j of component i sits at flat F_p index i*(a*m) + j.
class System {
 public:
  static System span(ContextPtr ctx, std::size_t k, const std::vector<Vector>& vectors);
  static System from_fp(ContextPtr ctx, std::size_t k, FpSpace fp);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t k() const noexcept { return k_; }
  /// Dimension over F_q.
  std::size_t dim() const noexcept { return fp_.dim() / ctx_->a(); }
  const FpSpace& fp() const noexcept { return fp_; }
  /// Canonical F_q-basis (greedy over the echelon rows).
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const System& other) const;
  /// The F_{q^m}-span of the system is all of F_{q^m}^k.
  bool spans_ambient() const;

  System sum(const System& other) const;
  System intersect(const System& other) const;

  friend bool operator==(const System& x, const System& y);

 private:
  System(ContextPtr ctx, std::size_t k, FpSpace fp);

  ContextPtr ctx_;
  std::size_t k_;
  FpSpace fp_;
  std::vector<Vector> basis_;
};

FpVector flatten(const FieldContext& F, const Vector& v);
Vector unflatten(const FieldContext& F, const FpVector& flat, std::size_t k);

/// F_q-span of the generator columns; requires a nondegenerate code.
System system_from_code(const RankCode& C);
/// Code whose generator columns are the canonical basis of U; U must span F_{q^m}^k.
RankCode code_from_system(const System& U);
/// n - dim(U ∩ x^⊥) with n = dim U.
std::size_t weight_via_system(const System& U, const Vector& x);
/// Orthogonal complement under Tr_{q^m/q}(u_1 v_1 + ... + u_k v_k).
System perp_prime(const System& U);
System product_system(const std::vector<Subspace>& parts);
/// max over F_{q^m}-hyperplanes H of dim(U ∩ H).
std::size_t max_hyperplane_intersection(const System& U, std::uint64_t projective_cap = std::uint64_t{1} << 16);
/// U B = {u B : u ∈ U}.
System apply_gl_k(const System& U, const Matrix& B);
/// F_{q^m}-span of the given vectors, as an F_q-system.
System fqm_span(const ContextPtr& ctx, std::size_t k, const std::vector<Vector>& gens);
/// {v : sum_i w_i v_i = 0 for all w in the F_{q^m}-span of gens}.
System standard_perp(const ContextPtr& ctx, std::size_t k, const std::vector<Vector>& gens);
/// dim(U ∩ ⟨x⟩_{F_{q^m}}).
std::size_t point_weight(const System& U, const Vector& x);

}  // namespace rankdec

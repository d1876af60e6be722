#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rankdec/field.hpp"
#include "rankdec/fp_space.hpp"

namespace rankdec {

/// F_{q^e}-subspace of F_{q^m}, e = base_e.
///
/// Stored as the reduced echelon form of its F_p-span in the power-basis coordinates,
/// which is unique per subspace. The F_{q^e}-basis exposed by basis() is derived from it
/// deterministically: scan the echelon rows and keep each row that is not in the
/// F_{q^e}-span of the rows kept so far.
class Subspace {
 public:
  static Subspace zero(ContextPtr ctx, unsigned base_e = 1);
  static Subspace whole(ContextPtr ctx, unsigned base_e = 1);
  /// All F_{q^e}-combinations of the given elements.
  static Subspace span(ContextPtr ctx, const Vector& elements, unsigned base_e = 1);
  /// Wraps an F_p-space that is already F_{q^e}-linear (checked).
  static Subspace from_fp(ContextPtr ctx, FpSpace fp, unsigned base_e = 1);

  const ContextPtr& context() const noexcept { return ctx_; }
  unsigned base_e() const noexcept { return base_e_; }
  /// Dimension over F_{q^e}.
  std::size_t dim() const noexcept { return fp_.dim() / (ctx_->a() * base_e_); }
  const FpSpace& fp() const noexcept { return fp_; }
  const Vector& basis() const noexcept { return basis_; }
  bool contains(Element x) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const noexcept { return fp_.dim() == 0; }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Same set viewed over a smaller base field F_{q^e'}, e' | base_e.
  Subspace restrict_to(unsigned e) const;
  /// Same set viewed over a larger base field; the set must be F_{q^e'}-linear.
  Subspace extend_to(unsigned e) const;

  /// Every element, in integer order of F_p coordinates along the echelon rows.
  std::vector<Element> elements(std::uint64_t cap = std::uint64_t{1} << 24) const;
  /// One representative per line over F_{q^e}: first nonzero coordinate in basis() equals 1.
  std::vector<Element> projective_points(std::uint64_t cap = std::uint64_t{1} << 24) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Subspace(ContextPtr ctx, unsigned base_e, FpSpace fp);
  void require_same(const Subspace& other) const;

  ContextPtr ctx_;
  unsigned base_e_;
  FpSpace fp_;
  Vector basis_;
};

/// F_p-span of the given elements, in power-basis coordinates.
FpSpace fp_span(const FieldContext& F, const Vector& elements);
Element fp_row_element(const FieldContext& F, const FpVector& row);

/// U1 U2 = span of all products; both must be over F_q.
Subspace product(const Subspace& U1, const Subspace& U2);
/// Dual under (x,y) -> Tr_{q^m/q^e}(xy) with e = U.base_e().
Subspace trace_dual(const Subspace& U);
/// trace_dual with an explicit base; U must already be over F_{q^e}.
Subspace trace_dual(const Subspace& U, unsigned e);
/// Ker(Tr_{q^m/q^e}) as an F_{q^e}-subspace.
Subspace trace_kernel(const ContextPtr& ctx, unsigned e);
Subspace scale(Element c, const Subspace& U);
/// ⟨1, λ, ..., λ^{t-1}⟩ over F_q.
Subspace geometric_subspace(const ContextPtr& ctx, Element lambda, unsigned t);
bool is_subfield_linear(const Subspace& U, unsigned e);

struct DualGeometricResult {
  bool holds;
  Element delta;
};
/// Checks U_{λ,t}^{⊥*} = δ^{-1} U_{λ,m-t} for a generator λ, δ = f'(λ).
DualGeometricResult verify_dual_geometric(const ContextPtr& ctx, Element lambda, unsigned t);

struct DualSubfieldResult {
  bool holds;
  Element c;
};
/// For λ of degree e with m = s e, s, e > 1: searches c ∉ Ker Tr_{q^m/q^e} (integer order) with
/// U_{λ,t}^{⊥*} = Ker(Tr_{q^m/q^e}) ⊕ c U_{λ,e-t}.
DualSubfieldResult verify_dual_subfield(const ContextPtr& ctx, Element lambda, unsigned t);

/// Linear Cauchy–Davenport inequality for m prime; nullopt when m is not prime.
std::optional<bool> cauchy_davenport_check(const Subspace& U1, const Subspace& U2);

struct GeometricForm {
  Element c;
  Element lambda;
};
/// Some (c, λ) with U = c ⟨1, λ, ..., λ^{dim-1}⟩, if one exists. Requires dim ≥ 2 and q^m ≤ 2^16.
std::optional<GeometricForm> detect_geometric_form(const Subspace& U);
/// Every (c, λ) with c ranging over projective points of U.
std::vector<GeometricForm> geometric_form_witnesses(const Subspace& U);

/// For dim U2 = m - dim U1 and dim(U1 U2) = m - 1, a c with U2 = c U1^{⊥*}.
std::optional<Element> critical_complement_witness(const Subspace& U1, const Subspace& U2);

}  // namespace rankdec

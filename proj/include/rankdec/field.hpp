#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rankdec/fp_space.hpp"

namespace rankdec {

/// Element of F_{p^N}, N = a*m, stored as its integer encoding sum c_i p^i where
/// (c_0, ..., c_{N-1}) are the coordinates in the power basis of the modulus root.
struct Element {
  std::uint64_t code = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint64_t c) : code(c) {}
  constexpr bool is_zero() const noexcept { return code == 0; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

using Vector = std::vector<Element>;
/// Coefficients low to high.
using Polynomial = std::vector<Element>;

/// The tower F_p ⊂ F_q ⊂ F_{q^e} ⊂ F_{q^m} with q = p^a, realized inside F_{p^{am}}.
///
/// Immutable after construction; share it through shared_ptr.
class FieldContext {
 public:
  /// Builds the context. Without a modulus, the monic irreducible polynomial of degree a*m whose
  /// non-leading coefficients have the smallest integer encoding sum c_i p^i is used.
  static std::shared_ptr<const FieldContext> create(std::uint32_t p, unsigned a, unsigned m,
                                                    std::optional<std::vector<std::uint32_t>> modulus = {});

  /// Same field, different ordered F_q-basis of F_{q^m}.
  std::shared_ptr<const FieldContext> with_fq_basis(std::vector<Element> gamma) const;

  std::uint32_t p() const noexcept { return field_.p(); }
  unsigned a() const noexcept { return a_; }
  unsigned m() const noexcept { return m_; }
  /// a*m, the degree over the prime field.
  unsigned degree() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t order() const noexcept { return order_; }
  /// q^e for small e (throws on overflow).
  std::uint64_t q_pow(unsigned e) const;
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  const PrimeField& prime_field() const noexcept { return field_; }

  bool compatible(const FieldContext& other) const noexcept;
  void require_compatible(const FieldContext& other) const;

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }
  /// The root of the modulus, x.
  Element root() const;
  Element from_int(std::uint64_t code) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;
  FpVector digits(Element x) const;
  /// Element of F_p ⊂ F_{q^m}.
  Element from_prime(std::uint32_t c) const { return from_int(c % p()); }

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const;
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  Element pow(Element x, std::uint64_t n) const;
  Element scale_prime(std::uint32_t c, Element x) const;

  /// x^p, via the cached Frobenius matrix.
  Element frobenius_p(Element x) const;
  /// x^{q^e}.
  Element frobenius(Element x, unsigned e) const;
  /// Tr_{q^m/q^e}(x); requires e | m.
  Element trace_rel(Element x, unsigned e) const;
  /// N_{q^m/q^e}(x); requires e | m.
  Element norm_rel(Element x, unsigned e) const;
  /// Tr_{p^{am}/p}(x) as an element of F_p.
  std::uint32_t trace_abs(Element x) const;
  /// Smallest e | m with x ∈ F_{q^e}.
  unsigned degree_over_q(Element x) const;
  bool in_subfield(Element x, unsigned e) const { return frobenius(x, e) == x; }
  bool in_fq(Element x) const { return frobenius_p_pow(x, a_) == x; }

  /// Minimal polynomial over F_q (monic, coefficients in F_q).
  Polynomial minimal_polynomial(Element x) const;
  Element evaluate(const Polynomial& f, Element x) const;
  /// f'(x) for the formal derivative f'.
  Element derivative_at(const Polynomial& f, Element x) const;

  /// Deterministic (per seed) element whose degree over F_q is exactly e; requires e | m.
  Element find_element_of_degree(unsigned e, std::uint64_t seed) const;
  /// All elements of degree exactly e over F_q, in integer order.
  std::vector<Element> elements_of_degree(unsigned e) const;

  /// Ordered F_q-basis Γ of F_{q^m}.
  const std::vector<Element>& fq_basis() const noexcept { return gamma_; }
  /// Coordinates of x in Γ; every coordinate lies in F_q.
  Vector fq_coordinates(Element x) const;
  /// F_p-basis of the subfield F_{q^e} (powers of an F_p-generator of it).
  const std::vector<Element>& subfield_fp_basis(unsigned e) const;
  /// An element generating F_{q^e} over F_p.
  Element subfield_generator(unsigned e) const { return subfield_fp_basis(e).at(1 % subfield_fp_basis(e).size()); }
  /// Coordinates over F_p of s ∈ F_q in subfield_fp_basis(1).
  FpVector fq_to_prime(Element s) const;
  Element fq_from_prime(std::span<const std::uint32_t> c) const;
  /// All q elements of F_q, in integer order of their prime coordinates (q ≤ 2^16).
  const std::vector<Element>& fq_elements() const;

  std::vector<unsigned> divisors_of_m() const;
  void require_divisor(unsigned e) const;

  /// Gram matrix of (x,y) -> Tr_{p^N/p}(xy) in the power basis.
  const std::vector<FpVector>& trace_gram() const noexcept { return trace_gram_; }

 private:
  FieldContext(std::uint32_t p, unsigned a, unsigned m, std::vector<std::uint32_t> modulus);
  void init_fq_basis(std::vector<Element> gamma);
  Element frobenius_p_pow(Element x, unsigned times) const;
  Element mul_generic(Element x, Element y) const;

  PrimeField field_;
  unsigned a_, m_, n_;
  std::uint64_t q_, order_;
  std::vector<std::uint32_t> modulus_;  // monic, length n_+1
  std::uint64_t modulus_mask_ = 0;      // p = 2 only: bit i = coefficient i
  std::vector<Element> frob_cols_;      // (x^j)^p
  std::vector<std::uint32_t> trace_coeffs_;
  std::vector<FpVector> trace_gram_;
  std::vector<Element> gamma_;
  std::shared_ptr<const FpSolver> gamma_solver_;
  std::map<unsigned, std::vector<Element>> subfield_bases_;
  std::shared_ptr<const FpSolver> fq_solver_;
  std::vector<Element> fq_elements_;
};

using ContextPtr = std::shared_ptr<const FieldContext>;

}  // namespace rankdec

template <>
struct std::hash<rankdec::Element> {
  std::size_t operator()(rankdec::Element e) const noexcept { return std::hash<std::uint64_t>{}(e.code); }
};

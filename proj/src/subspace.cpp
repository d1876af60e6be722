#include "rankdec/subspace.hpp"

#include "rankdec/errors.hpp"

namespace rankdec {

namespace {

std::uint64_t checked_count(std::uint64_t base, std::size_t exp, std::uint64_t cap, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) throw CapExceeded(what, r > (~std::uint64_t{0}) / base ? ~std::uint64_t{0} : r * base, cap);
    r *= base;
  }
  return r;
}

// All elements of F_{q^e}, indexed by their F_p-coordinates in subfield_fp_basis(e).
std::vector<Element> subfield_elements(const FieldContext& F, unsigned e) {
  const auto& basis = F.subfield_fp_basis(e);
  const std::uint64_t size = checked_count(F.p(), basis.size(), std::uint64_t{1} << 20, "listing a subfield");
  std::vector<Element> out;
  out.reserve(size);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    Element s = F.zero();
    std::uint64_t c = idx;
    for (auto b : basis) {
      s = F.add(s, F.scale_prime(static_cast<std::uint32_t>(c % F.p()), b));
      c /= F.p();
    }
    out.push_back(s);
  }
  return out;
}

FpSpace scale_fp(const FieldContext& F, Element c, const FpSpace& U) {
  FpSpace out(F.p(), F.degree());
  for (const auto& r : U.rows()) out.insert(F.digits(F.mul(c, fp_row_element(F, r))));
  return out;
}

}  // namespace

Element fp_row_element(const FieldContext& F, const FpVector& row) { return F.from_digits(row); }

FpSpace fp_span(const FieldContext& F, const Vector& elements) {
  FpSpace s(F.p(), F.degree());
  for (auto x : elements) s.insert(F.digits(x));
  return s;
}

Subspace::Subspace(ContextPtr ctx, unsigned base_e, FpSpace fp)
    : ctx_(std::move(ctx)), base_e_(base_e), fp_(std::move(fp)) {
  const FieldContext& F = *ctx_;
  const auto& sub = F.subfield_fp_basis(base_e_);
  FpSpace seen(F.p(), F.degree());
  for (const auto& r : fp_.rows()) {
    if (seen.dim() == fp_.dim()) break;
    if (seen.contains(r)) continue;
    const Element x = fp_row_element(F, r);
    basis_.push_back(x);
    for (auto b : sub) seen.insert(F.digits(F.mul(b, x)));
  }
}

Subspace Subspace::zero(ContextPtr ctx, unsigned base_e) {
  ctx->require_divisor(base_e);
  const auto n = ctx->degree();
  const auto p = ctx->p();
  return Subspace(std::move(ctx), base_e, FpSpace(p, n));
}

Subspace Subspace::whole(ContextPtr ctx, unsigned base_e) {
  ctx->require_divisor(base_e);
  FpSpace fp(ctx->p(), ctx->degree());
  for (unsigned j = 0; j < ctx->degree(); ++j) {
    FpVector v(ctx->degree(), 0);
    v[j] = 1;
    fp.insert(std::move(v));
  }
  return Subspace(std::move(ctx), base_e, std::move(fp));
}

Subspace Subspace::span(ContextPtr ctx, const Vector& elements, unsigned base_e) {
  ctx->require_divisor(base_e);
  const FieldContext& F = *ctx;
  FpSpace fp(F.p(), F.degree());
  for (auto x : elements) {
    F.from_int(x.code);
    for (auto b : F.subfield_fp_basis(base_e)) fp.insert(F.digits(F.mul(b, x)));
  }
  return Subspace(std::move(ctx), base_e, std::move(fp));
}

Subspace Subspace::from_fp(ContextPtr ctx, FpSpace fp, unsigned base_e) {
  ctx->require_divisor(base_e);
  if (fp.p() != ctx->p() || fp.len() != ctx->degree()) throw ContextMismatch("F_p-space has the wrong ambient length");
  const Element g = ctx->subfield_generator(base_e);
  for (const auto& r : fp.rows())
    if (!fp.contains(ctx->digits(ctx->mul(g, fp_row_element(*ctx, r)))))
      throw DomainError("space is not linear over the requested subfield");
  return Subspace(std::move(ctx), base_e, std::move(fp));
}

void Subspace::require_same(const Subspace& other) const {
  ctx_->require_compatible(*other.ctx_);
  if (base_e_ != other.base_e_) throw ContextMismatch("subspaces are linear over different base fields");
}

bool Subspace::contains(Element x) const { return fp_.contains(ctx_->digits(x)); }

bool Subspace::contains(const Subspace& other) const {
  ctx_->require_compatible(*other.ctx_);
  return fp_.contains(other.fp_);
}

Subspace Subspace::sum(const Subspace& other) const {
  require_same(other);
  return Subspace(ctx_, base_e_, fp_.sum(other.fp_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_same(other);
  return Subspace(ctx_, base_e_, fp_.intersect(other.fp_));
}

Subspace Subspace::restrict_to(unsigned e) const {
  ctx_->require_divisor(e);
  if (base_e_ % e != 0) throw DomainError("restriction needs a subfield of the current base");
  return Subspace(ctx_, e, fp_);
}

Subspace Subspace::extend_to(unsigned e) const {
  ctx_->require_divisor(e);
  if (e % base_e_ != 0) throw DomainError("extension needs a field containing the current base");
  return from_fp(ctx_, fp_, e);
}

std::vector<Element> Subspace::elements(std::uint64_t cap) const {
  const FieldContext& F = *ctx_;
  const std::uint64_t count = checked_count(F.p(), fp_.dim(), cap, "listing subspace elements");
  std::vector<Element> rows;
  for (const auto& r : fp_.rows()) rows.push_back(fp_row_element(F, r));
  std::vector<Element> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Element s = F.zero();
    std::uint64_t c = idx;
    for (auto r : rows) {
      if (c % F.p()) s = F.add(s, F.scale_prime(static_cast<std::uint32_t>(c % F.p()), r));
      c /= F.p();
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Element> Subspace::projective_points(std::uint64_t cap) const {
  const FieldContext& F = *ctx_;
  const std::size_t d = basis_.size();
  if (d == 0) return {};
  const std::uint64_t qe = F.q_pow(base_e_);
  checked_count(qe, d - 1, cap, "listing projective points");
  const auto scalars = subfield_elements(F, base_e_);
  std::vector<Element> out;
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t tail = d - 1 - i;
    std::vector<std::size_t> digit(tail, 0);
    for (;;) {
      Element x = basis_[i];
      for (std::size_t j = 0; j < tail; ++j)
        if (digit[j]) x = F.add(x, F.mul(scalars[digit[j]], basis_[i + 1 + j]));
      out.push_back(x);
      std::size_t pos = 0;
      while (pos < tail && ++digit[pos] == scalars.size()) digit[pos++] = 0;
      if (pos == tail) break;
    }
  }
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ctx_->compatible(*b.ctx_) && a.base_e_ == b.base_e_ && a.fp_ == b.fp_;
}

Subspace product(const Subspace& U1, const Subspace& U2) {
  U1.context()->require_compatible(*U2.context());
  if (U1.base_e() != 1 || U2.base_e() != 1) throw ContextMismatch("the subspace product is defined over F_q");
  const FieldContext& F = *U1.context();
  FpSpace out(F.p(), F.degree());
  // span of products of F_p-bases is already F_q-linear
  for (const auto& r1 : U1.fp().rows()) {
    const Element a = fp_row_element(F, r1);
    for (const auto& r2 : U2.fp().rows()) {
      out.insert(F.digits(F.mul(a, fp_row_element(F, r2))));
      if (out.dim() == F.degree()) break;
    }
  }
  return Subspace::from_fp(U1.context(), std::move(out), 1);
}

Subspace trace_dual(const Subspace& U) { return trace_dual(U, U.base_e()); }

Subspace trace_dual(const Subspace& U, unsigned e) {
  const FieldContext& F = *U.context();
  F.require_divisor(e);
  if (U.base_e() != e) throw ContextMismatch("trace dual over F_{q^e} needs a subspace over F_{q^e}");
  // For F_{q^e}-linear U the relative and absolute trace duals coincide.
  const auto& T = F.trace_gram();
  const PrimeField& P = F.prime_field();
  std::vector<FpVector> rows;
  for (const auto& a : U.fp().rows()) {
    FpVector r(F.degree(), 0);
    for (unsigned i = 0; i < F.degree(); ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < F.degree(); ++j) r[j] = P.add(r[j], P.mul(a[i], T[i][j]));
    }
    rows.push_back(std::move(r));
  }
  return Subspace::from_fp(U.context(), kernel(F.p(), F.degree(), rows), e);
}

Subspace trace_kernel(const ContextPtr& ctx, unsigned e) {
  const FieldContext& F = *ctx;
  F.require_divisor(e);
  const unsigned n = F.degree();
  std::vector<FpVector> rows(n, FpVector(n, 0));
  Element xj = F.one();
  const Element x = F.root();
  for (unsigned j = 0; j < n; ++j) {
    const FpVector img = F.digits(F.trace_rel(xj, e));
    for (unsigned i = 0; i < n; ++i) rows[i][j] = img[i];
    xj = F.mul(xj, x);
  }
  return Subspace::from_fp(ctx, kernel(F.p(), n, rows), e);
}

Subspace scale(Element c, const Subspace& U) {
  if (c.is_zero()) throw DomainError("scaling by zero");
  return Subspace::from_fp(U.context(), scale_fp(*U.context(), c, U.fp()), U.base_e());
}

Subspace geometric_subspace(const ContextPtr& ctx, Element lambda, unsigned t) {
  const FieldContext& F = *ctx;
  if (t > F.degree_over_q(lambda))
    throw DomainError("t = " + std::to_string(t) + " exceeds the degree of λ over F_q");
  Vector powers;
  Element y = F.one();
  for (unsigned i = 0; i < t; ++i) {
    powers.push_back(y);
    y = F.mul(y, lambda);
  }
  return Subspace::span(ctx, powers, 1);
}

bool is_subfield_linear(const Subspace& U, unsigned e) {
  const FieldContext& F = *U.context();
  F.require_divisor(e);
  const Element g = F.subfield_generator(e);
  for (const auto& r : U.fp().rows())
    if (!U.fp().contains(F.digits(F.mul(g, fp_row_element(F, r))))) return false;
  return true;
}

DualGeometricResult verify_dual_geometric(const ContextPtr& ctx, Element lambda, unsigned t) {
  const FieldContext& F = *ctx;
  if (F.degree_over_q(lambda) != F.m()) throw DomainError("λ does not generate F_{q^m} over F_q");
  if (t < 1 || t + 1 > F.m()) throw DomainError("t must lie in [1, m-1]");
  const Element delta = F.derivative_at(F.minimal_polynomial(lambda), lambda);
  const Subspace lhs = trace_dual(geometric_subspace(ctx, lambda, t));
  const Subspace rhs = scale(F.inv(delta), geometric_subspace(ctx, lambda, F.m() - t));
  return {lhs == rhs, delta};
}

DualSubfieldResult verify_dual_subfield(const ContextPtr& ctx, Element lambda, unsigned t) {
  const FieldContext& F = *ctx;
  const unsigned e = F.degree_over_q(lambda);
  if (e <= 1 || e == F.m()) throw DomainError("λ must generate a proper subfield F_{q^e} with e > 1");
  if (t < 1 || t > e) throw DomainError("t must lie in [1, e]");
  const FpSpace Z = trace_kernel(ctx, e).fp();
  const FpSpace dual = trace_dual(geometric_subspace(ctx, lambda, t)).fp();
  const FpSpace V = geometric_subspace(ctx, lambda, e - t).fp();
  for (std::uint64_t code = 1; code < F.order(); ++code) {
    const Element c{code};
    if (Z.contains(F.digits(c))) continue;
    const FpSpace cV = scale_fp(F, c, V);
    const FpSpace s = Z.sum(cV);
    if (s.dim() == Z.dim() + cV.dim() && s == dual) return {true, c};
  }
  return {false, F.zero()};
}

std::optional<bool> cauchy_davenport_check(const Subspace& U1, const Subspace& U2) {
  const FieldContext& F = *U1.context();
  if (!is_prime(F.m())) return std::nullopt;
  if (U1.is_zero() || U2.is_zero()) return true;
  const std::size_t d = product(U1, U2).dim();
  return d == F.m() || d + 1 >= U1.dim() + U2.dim();
}

namespace {

std::vector<GeometricForm> geometric_search(const Subspace& U, bool first_only) {
  const FieldContext& F = *U.context();
  if (U.base_e() != 1) throw ContextMismatch("geometric form is defined for F_q-subspaces");
  const std::size_t d = U.dim();
  if (d < 2) throw DomainError("geometric form detection needs dim ≥ 2");
  if (F.order() > (1u << 16)) throw CapExceeded("geometric form search over F_{q^m}", F.order(), 1u << 16);
  const auto& beta = F.subfield_fp_basis(1);
  std::vector<GeometricForm> out;
  for (Element c : U.projective_points()) {
    const Element ci = F.inv(c);
    const Subspace W = scale(ci, U);
    for (Element lambda : W.elements()) {
      if (F.in_fq(lambda)) continue;
      FpSpace powers(F.p(), F.degree());
      Element y = F.one();
      bool inside = true;
      for (std::size_t i = 0; i < d && inside; ++i) {
        for (auto b : beta) powers.insert(F.digits(F.mul(b, y)));
        y = F.mul(y, lambda);
        if (i + 1 < d) inside = W.contains(y);
      }
      if (inside && powers == W.fp()) {
        out.push_back({c, lambda});
        if (first_only) return out;
      }
    }
  }
  return out;
}

}  // namespace

std::optional<GeometricForm> detect_geometric_form(const Subspace& U) {
  auto found = geometric_search(U, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<GeometricForm> geometric_form_witnesses(const Subspace& U) { return geometric_search(U, false); }

std::optional<Element> critical_complement_witness(const Subspace& U1, const Subspace& U2) {
  const FieldContext& F = *U1.context();
  if (U1.base_e() != 1 || U2.base_e() != 1) throw ContextMismatch("critical pairs are F_q-subspaces");
  if (U1.dim() + U2.dim() != F.m()) throw DomainError("dim U1 + dim U2 must equal m");
  const Subspace P = product(U1, U2);
  if (P.dim() + 1 != F.m()) throw DomainError("U1 U2 must be a hyperplane");
  // U1 U2 = Ker Tr(b x) for the spanning element b of its trace dual, and b U2 ⊆ U1^{⊥*}
  const Element b = trace_dual(P).basis().at(0);
  const Element c = F.inv(b);
  if (scale(c, trace_dual(U1)) == U2) return c;
  return std::nullopt;
}

}  // namespace rankdec

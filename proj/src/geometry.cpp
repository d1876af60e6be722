#include "rankdec/geometry.hpp"

#include <algorithm>

#include "rankdec/errors.hpp"

namespace rankdec {

FpVector flatten(const FieldContext& F, const Vector& v) {
  FpVector out;
  out.reserve(v.size() * F.degree());
  for (auto x : v) {
    const FpVector d = F.digits(x);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

Vector unflatten(const FieldContext& F, const FpVector& flat, std::size_t k) {
  const unsigned N = F.degree();
  if (flat.size() != k * N) throw DomainError("flat vector has the wrong length");
  Vector v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = F.from_digits(std::span<const std::uint32_t>(flat.data() + i * N, N));
  return v;
}

namespace {

Vector scaled(const FieldContext& F, Element c, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.mul(c, v[i]);
  return out;
}

// F_p-kernel of v -> sum_i x_i v_i as a map F_p^{kN} -> F_p^N.
FpSpace hyperplane_fp(const FieldContext& F, const Vector& x) {
  const unsigned N = F.degree();
  const std::size_t k = x.size();
  std::vector<FpVector> rows(N, FpVector(k * N, 0));
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t xj = 1;
    for (unsigned j = 0; j < N; ++j, xj *= F.p()) {
      const FpVector img = F.digits(F.mul(x[i], Element{xj}));
      for (unsigned r = 0; r < N; ++r) rows[r][i * N + j] = img[r];
    }
  }
  return kernel(F.p(), k * N, rows);
}

FpSpace line_fp(const FieldContext& F, const Vector& x) {
  FpSpace s(F.p(), x.size() * F.degree());
  std::uint64_t xj = 1;
  for (unsigned j = 0; j < F.degree(); ++j, xj *= F.p()) s.insert(flatten(F, scaled(F, Element{xj}, x)));
  return s;
}

}  // namespace

System::System(ContextPtr ctx, std::size_t k, FpSpace fp) : ctx_(std::move(ctx)), k_(k), fp_(std::move(fp)) {
  const FieldContext& F = *ctx_;
  const auto& beta = F.subfield_fp_basis(1);
  FpSpace seen(F.p(), fp_.len());
  for (const auto& r : fp_.rows()) {
    if (seen.dim() == fp_.dim()) break;
    if (seen.contains(r)) continue;
    const Vector v = unflatten(F, r, k_);
    basis_.push_back(v);
    for (auto b : beta) seen.insert(flatten(F, scaled(F, b, v)));
  }
}

System System::span(ContextPtr ctx, std::size_t k, const std::vector<Vector>& vectors) {
  const FieldContext& F = *ctx;
  FpSpace fp(F.p(), k * F.degree());
  for (const auto& v : vectors) {
    if (v.size() != k) throw DomainError("system vector has the wrong length");
    for (auto b : F.subfield_fp_basis(1)) fp.insert(flatten(F, scaled(F, b, v)));
  }
  return System(std::move(ctx), k, std::move(fp));
}

System System::from_fp(ContextPtr ctx, std::size_t k, FpSpace fp) {
  const FieldContext& F = *ctx;
  if (fp.len() != k * F.degree() || fp.p() != F.p()) throw ContextMismatch("F_p-space has the wrong ambient length");
  const Element g = F.subfield_generator(1);
  for (const auto& r : fp.rows())
    if (!fp.contains(flatten(F, scaled(F, g, unflatten(F, r, k))))) throw DomainError("space is not F_q-linear");
  return System(std::move(ctx), k, std::move(fp));
}

bool System::contains(const Vector& v) const { return fp_.contains(flatten(*ctx_, v)); }

bool System::contains(const System& other) const {
  ctx_->require_compatible(*other.ctx_);
  return fp_.contains(other.fp_);
}

bool System::spans_ambient() const {
  if (basis_.empty()) return k_ == 0;
  return rank(*ctx_, transpose(Matrix::from_rows(basis_))) == k_;
}

System System::sum(const System& other) const {
  ctx_->require_compatible(*other.ctx_);
  return System(ctx_, k_, fp_.sum(other.fp_));
}

System System::intersect(const System& other) const {
  ctx_->require_compatible(*other.ctx_);
  return System(ctx_, k_, fp_.intersect(other.fp_));
}

bool operator==(const System& x, const System& y) {
  return x.ctx_->compatible(*y.ctx_) && x.k_ == y.k_ && x.fp_ == y.fp_;
}

System system_from_code(const RankCode& C) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < C.n(); ++j) cols.push_back(C.generator().col(j));
  System U = System::span(C.context(), C.k(), cols);
  if (U.dim() != C.n()) throw DomainError("degenerate code: the generator columns are F_q-dependent");
  return U;
}

RankCode code_from_system(const System& U) {
  if (!U.spans_ambient()) throw DomainError("system does not span F_{q^m}^k, so it defines no [n,k] code");
  return RankCode(U.context(), transpose(Matrix::from_rows(U.basis())));
}

std::size_t weight_via_system(const System& U, const Vector& x) {
  const FieldContext& F = *U.context();
  if (x.size() != U.k()) throw DomainError("message length mismatch");
  if (std::all_of(x.begin(), x.end(), [](Element e) { return e.is_zero(); })) throw DomainError("x must be nonzero");
  return U.dim() - U.fp().intersect(hyperplane_fp(F, x)).dim() / F.a();
}

System perp_prime(const System& U) {
  const FieldContext& F = *U.context();
  const unsigned N = F.degree();
  const auto& T = F.trace_gram();
  const PrimeField& P = F.prime_field();
  std::vector<FpVector> rows;
  for (const auto& a : U.fp().rows()) {
    FpVector r(a.size(), 0);
    for (std::size_t i = 0; i < U.k(); ++i)
      for (unsigned s = 0; s < N; ++s) {
        const std::uint32_t c = a[i * N + s];
        if (!c) continue;
        for (unsigned t = 0; t < N; ++t) r[i * N + t] = P.add(r[i * N + t], P.mul(c, T[s][t]));
      }
    rows.push_back(std::move(r));
  }
  return System::from_fp(U.context(), U.k(), kernel(F.p(), U.k() * N, rows));
}

System product_system(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw DomainError("product of no subspaces");
  const ContextPtr& ctx = parts[0].context();
  const FieldContext& F = *ctx;
  const std::size_t k = parts.size();
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < k; ++i) {
    F.require_compatible(*parts[i].context());
    if (parts[i].base_e() != 1) throw ContextMismatch("product systems take F_q-subspaces");
    if (parts[i].is_zero() || parts[i].dim() == F.m()) throw DomainError("each part must be nonzero and proper");
    for (auto b : parts[i].basis()) {
      Vector v(k, F.zero());
      v[i] = b;
      vecs.push_back(std::move(v));
    }
  }
  return System::span(ctx, k, vecs);
}

std::size_t max_hyperplane_intersection(const System& U, std::uint64_t projective_cap) {
  const FieldContext& F = *U.context();
  const std::uint64_t count = projective_count(F, U.k());
  if (count > projective_cap) throw CapExceeded("hyperplane scan", count, projective_cap);
  std::size_t best = 0;
  for_each_projective_message(F, U.k(), [&](const Vector& x) {
    best = std::max(best, U.fp().intersect(hyperplane_fp(F, x)).dim() / F.a());
  });
  return best;
}

System apply_gl_k(const System& U, const Matrix& B) {
  const FieldContext& F = *U.context();
  if (B.rows() != U.k() || B.cols() != U.k()) throw DomainError("matrix has the wrong size");
  if (rank(F, B) != U.k()) throw DomainError("matrix is singular");
  std::vector<Vector> vecs;
  for (const auto& r : U.fp().rows()) vecs.push_back(vec_mul(F, unflatten(F, r, U.k()), B));
  return System::span(U.context(), U.k(), vecs);
}

System fqm_span(const ContextPtr& ctx, std::size_t k, const std::vector<Vector>& gens) {
  const FieldContext& F = *ctx;
  FpSpace fp(F.p(), k * F.degree());
  for (const auto& g : gens) {
    if (g.size() != k) throw DomainError("vector has the wrong length");
    fp = fp.sum(line_fp(F, g));
  }
  return System::from_fp(ctx, k, std::move(fp));
}

System standard_perp(const ContextPtr& ctx, std::size_t k, const std::vector<Vector>& gens) {
  const FieldContext& F = *ctx;
  FpSpace fp(F.p(), k * F.degree());
  for (std::size_t j = 0; j < F.degree() * k; ++j) {
    FpVector v(k * F.degree(), 0);
    v[j] = 1;
    fp.insert(std::move(v));
  }
  for (const auto& g : gens) {
    if (g.size() != k) throw DomainError("vector has the wrong length");
    if (std::all_of(g.begin(), g.end(), [](Element e) { return e.is_zero(); })) continue;
    fp = fp.intersect(hyperplane_fp(F, g));
  }
  return System::from_fp(ctx, k, std::move(fp));
}

std::size_t point_weight(const System& U, const Vector& x) {
  const FieldContext& F = *U.context();
  if (x.size() != U.k()) throw DomainError("vector has the wrong length");
  return U.fp().intersect(line_fp(F, x)).dim() / F.a();
}

}  // namespace rankdec

#include "rankdec/field.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "rankdec/errors.hpp"

namespace rankdec {

namespace {

// Polynomials over F_p, low to high, trimmed (no leading zeros; zero polynomial is empty).
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_sub(const PrimeField& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

// Returns (quotient, remainder); b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const PrimeField& F, Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly quot(a.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = F.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const std::uint32_t c = F.mul(a[i], lead_inv);
    if (c == 0) continue;
    const std::size_t shift = i + 1 - b.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

Poly poly_mod(const PrimeField& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

Poly poly_gcd(const PrimeField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(const PrimeField& F, Poly base, std::uint64_t e, const Poly& f) {
  Poly result{1};
  base = poly_mod(F, base, f);
  while (e) {
    if (e & 1) result = poly_mod(F, poly_mul(F, result, base), f);
    base = poly_mod(F, poly_mul(F, base, base), f);
    e >>= 1;
  }
  return result;
}

// Ben-Or: f of degree N is irreducible iff gcd(x^{p^i} - x, f) = 1 for 1 <= i <= N/2.
bool is_irreducible(const PrimeField& F, const Poly& f) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = poly_powmod(F, h, F.p(), f);
    const Poly g = poly_gcd(F, poly_sub(F, h, x), f);
    if (g.size() != 1) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 62) / base) throw DomainError("field too large: p^(a*m) must stay below 2^62");
    r *= base;
  }
  return r;
}

}  // namespace

std::shared_ptr<const FieldContext> FieldContext::create(std::uint32_t p, unsigned a, unsigned m,
                                                         std::optional<std::vector<std::uint32_t>> modulus) {
  const PrimeField F(p);
  if (a == 0 || m == 0) throw DomainError("a and m must be positive");
  const unsigned n = a * m;
  if (n > 32) throw DomainError("a*m must be at most 32");
  const std::uint64_t order = checked_pow(p, n);
  std::vector<std::uint32_t> f;
  if (modulus) {
    f = *modulus;
    if (f.size() != n + 1 || f.back() != 1) throw DomainError("modulus must be monic of degree a*m");
    for (auto c : f)
      if (c >= p) throw DomainError("modulus coefficients must lie in [0, p)");
    if (!is_irreducible(F, f)) throw DomainError("modulus is reducible over F_p");
  } else {
    for (std::uint64_t code = 0; code < order; ++code) {
      Poly cand(n + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < n; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      cand[n] = 1;
      if (is_irreducible(F, cand)) {
        f = std::move(cand);
        break;
      }
    }
  }
  return std::shared_ptr<const FieldContext>(new FieldContext(p, a, m, std::move(f)));
}

FieldContext::FieldContext(std::uint32_t p, unsigned a, unsigned m, std::vector<std::uint32_t> modulus)
    : field_(p), a_(a), m_(m), n_(a * m), q_(checked_pow(p, a)), order_(checked_pow(p, a * m)),
      modulus_(std::move(modulus)) {
  if (p == 2)
    for (unsigned i = 0; i <= n_; ++i)
      if (modulus_[i]) modulus_mask_ |= std::uint64_t{1} << i;

  // x^j for j < 2N, used for Frobenius columns and traces
  std::vector<Element> powers(2 * n_);
  powers[0] = one();
  const Element x = n_ == 1 ? from_int((p - modulus_[0]) % p) : Element{p};
  for (unsigned j = 1; j < 2 * n_; ++j) powers[j] = mul(powers[j - 1], x);
  frob_cols_.resize(n_);
  for (unsigned j = 0; j < n_; ++j) frob_cols_[j] = pow(powers[j], p);

  trace_coeffs_.resize(n_);
  for (unsigned j = 0; j < n_; ++j) {
    Element s = zero(), y = powers[j];
    for (unsigned i = 0; i < n_; ++i) {
      s = add(s, y);
      y = frobenius_p(y);
    }
    if (s.code >= p) throw Error("internal: absolute trace left the prime field");
    trace_coeffs_[j] = static_cast<std::uint32_t>(s.code);
  }
  trace_gram_.assign(n_, FpVector(n_, 0));
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) trace_gram_[i][j] = trace_abs(powers[i + j]);

  // F_p-bases of the subfields F_{q^e}
  for (unsigned e : divisors_of_m()) {
    const unsigned target = a_ * e;
    std::vector<Element> basis{one()};
    if (target > 1) {
      for (std::uint64_t y = 1;; ++y) {
        if (y >= order_) throw Error("internal: no generator found for a subfield");
        const Element g = trace_rel(Element{y}, e);
        unsigned deg = 0;
        Element z = g;
        for (unsigned d = 1; d <= n_; ++d) {
          z = frobenius_p(z);
          if (z == g) {
            deg = d;
            break;
          }
        }
        if (deg != target) continue;
        for (unsigned i = 1; i < target; ++i) basis.push_back(mul(basis.back(), g));
        break;
      }
    }
    subfield_bases_[e] = std::move(basis);
  }
  {
    const auto& beta = subfield_bases_.at(1);
    std::vector<FpVector> gens;
    for (auto b : beta) gens.push_back(digits(b));
    fq_solver_ = std::make_shared<const FpSolver>(p, n_, gens);
  }
  if (q_ <= (1u << 16)) {
    const auto& beta = subfield_bases_.at(1);
    fq_elements_.reserve(q_);
    for (std::uint64_t idx = 0; idx < q_; ++idx) {
      Element s = zero();
      std::uint64_t c = idx;
      for (unsigned l = 0; l < a_; ++l) {
        s = add(s, scale_prime(static_cast<std::uint32_t>(c % p), beta[l]));
        c /= p;
      }
      fq_elements_.push_back(s);
    }
  }
  std::vector<Element> gamma(m_);
  // the root of the modulus has degree m over F_q, so its first m powers form an F_q-basis
  for (unsigned j = 0; j < m_; ++j) gamma[j] = powers[j];
  init_fq_basis(std::move(gamma));
}

void FieldContext::init_fq_basis(std::vector<Element> gamma) {
  if (gamma.size() != m_) throw DomainError("an F_q-basis of F_{q^m} needs exactly m elements");
  const auto& beta = subfield_bases_.at(1);
  std::vector<FpVector> gens;
  gens.reserve(n_);
  for (auto g : gamma)
    for (auto b : beta) gens.push_back(digits(mul(b, g)));
  try {
    gamma_solver_ = std::make_shared<const FpSolver>(p(), n_, gens);
  } catch (const DomainError&) {
    throw DomainError("Γ is not F_q-linearly independent");
  }
  gamma_ = std::move(gamma);
}

std::shared_ptr<const FieldContext> FieldContext::with_fq_basis(std::vector<Element> gamma) const {
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext(*this));
  for (auto g : gamma) from_int(g.code);
  ctx->init_fq_basis(std::move(gamma));
  return ctx;
}

std::uint64_t FieldContext::q_pow(unsigned e) const { return checked_pow(q_, e); }

bool FieldContext::compatible(const FieldContext& other) const noexcept {
  return p() == other.p() && a_ == other.a_ && m_ == other.m_ && modulus_ == other.modulus_;
}

void FieldContext::require_compatible(const FieldContext& other) const {
  if (!compatible(other)) throw ContextMismatch("operands belong to different fields");
}

Element FieldContext::root() const { return n_ == 1 ? from_int((p() - modulus_[0]) % p()) : Element{p()}; }

Element FieldContext::from_int(std::uint64_t code) const {
  if (code >= order_) throw DomainError("element code " + std::to_string(code) + " out of range");
  return Element{code};
}

Element FieldContext::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() > n_) throw DomainError("too many coordinates for this field");
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p()) throw DomainError("coordinate not reduced mod p");
    code = code * p() + d[i];
  }
  return Element{code};
}

FpVector FieldContext::digits(Element x) const {
  FpVector d(n_, 0);
  std::uint64_t c = x.code;
  if (p() == 2) {
    for (unsigned i = 0; i < n_; ++i) d[i] = (c >> i) & 1u;
  } else {
    for (unsigned i = 0; i < n_ && c; ++i) {
      d[i] = static_cast<std::uint32_t>(c % p());
      c /= p();
    }
  }
  return d;
}

Element FieldContext::add(Element x, Element y) const {
  if (p() == 2) return Element{x.code ^ y.code};
  std::uint64_t a = x.code, b = y.code, out = 0, place = 1;
  const std::uint64_t P = p();
  while (a || b) {
    std::uint64_t s = a % P + b % P;
    if (s >= P) s -= P;
    out += s * place;
    a /= P;
    b /= P;
    place *= P;
  }
  return Element{out};
}

Element FieldContext::neg(Element x) const {
  if (p() == 2) return x;
  std::uint64_t a = x.code, out = 0, place = 1;
  const std::uint64_t P = p();
  while (a) {
    const std::uint64_t d = a % P;
    out += (d ? P - d : 0) * place;
    a /= P;
    place *= P;
  }
  return Element{out};
}

Element FieldContext::sub(Element x, Element y) const { return add(x, neg(y)); }

Element FieldContext::scale_prime(std::uint32_t c, Element x) const {
  c %= p();
  if (c == 0) return zero();
  if (c == 1) return x;
  std::uint64_t a = x.code, out = 0, place = 1;
  const std::uint64_t P = p();
  while (a) {
    out += (a % P) * c % P * place;
    a /= P;
    place *= P;
  }
  return Element{out};
}

Element FieldContext::mul(Element x, Element y) const {
  if (p() != 2) return mul_generic(x, y);
  std::uint64_t a = x.code, b = y.code, r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  for (unsigned bit = 2 * n_; bit-- > n_;)
    if ((r >> bit) & 1) r ^= modulus_mask_ << (bit - n_);
  return Element{r};
}

Element FieldContext::mul_generic(Element x, Element y) const {
  std::array<std::uint64_t, 64> prod{};
  const FpVector dx = digits(x), dy = digits(y);
  const std::uint64_t P = p();
  for (unsigned i = 0; i < n_; ++i) {
    if (!dx[i]) continue;
    for (unsigned j = 0; j < n_; ++j)
      if (dy[j]) prod[i + j] = (prod[i + j] + std::uint64_t{dx[i]} * dy[j]) % P;
  }
  for (unsigned i = 2 * n_ - 1; i-- > n_;) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    // x^N = -sum f_j x^j
    for (unsigned j = 0; j < n_; ++j)
      if (modulus_[j]) prod[i - n_ + j] = (prod[i - n_ + j] + (P - c) * modulus_[j]) % P;
    prod[i] = 0;
  }
  std::uint64_t code = 0;
  for (unsigned i = n_; i-- > 0;) code = code * P + prod[i];
  return Element{code};
}

Element FieldContext::inv(Element x) const {
  if (x.is_zero()) throw DomainError("inverse of zero");
  const PrimeField& F = field_;
  Poly f(modulus_.begin(), modulus_.end());
  Poly g = digits(x);
  trim(g);
  Poly r0 = f, r1 = g, s0{}, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = poly_sub(F, s0, poly_mul(F, quot, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since f is irreducible
  const std::uint32_t c = F.inv(r0.at(0));
  for (auto& v : s0) v = F.mul(v, c);
  s0 = poly_mod(F, s0, f);
  s0.resize(n_, 0);
  return from_digits(s0);
}

Element FieldContext::pow(Element x, std::uint64_t e) const {
  Element result = one();
  while (e) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

Element FieldContext::frobenius_p(Element x) const {
  if (p() == 2) {
    std::uint64_t r = 0, c = x.code;
    for (unsigned j = 0; c; ++j, c >>= 1)
      if (c & 1) r ^= frob_cols_[j].code;
    return Element{r};
  }
  const FpVector d = digits(x);
  Element r = zero();
  for (unsigned j = 0; j < n_; ++j)
    if (d[j]) r = add(r, scale_prime(d[j], frob_cols_[j]));
  return r;
}

Element FieldContext::frobenius_p_pow(Element x, unsigned times) const {
  times %= n_;
  for (unsigned i = 0; i < times; ++i) x = frobenius_p(x);
  return x;
}

Element FieldContext::frobenius(Element x, unsigned e) const {
  return frobenius_p_pow(x, static_cast<unsigned>((std::uint64_t{a_} * e) % n_));
}

void FieldContext::require_divisor(unsigned e) const {
  if (e == 0 || m_ % e != 0)
    throw DomainError(std::to_string(e) + " does not divide m = " + std::to_string(m_));
}

Element FieldContext::trace_rel(Element x, unsigned e) const {
  require_divisor(e);
  Element s = x, y = x;
  for (unsigned i = 1; i < m_ / e; ++i) {
    y = frobenius(y, e);
    s = add(s, y);
  }
  return s;
}

Element FieldContext::norm_rel(Element x, unsigned e) const {
  require_divisor(e);
  Element s = x, y = x;
  for (unsigned i = 1; i < m_ / e; ++i) {
    y = frobenius(y, e);
    s = mul(s, y);
  }
  return s;
}

std::uint32_t FieldContext::trace_abs(Element x) const {
  const FpVector d = digits(x);
  std::uint32_t s = 0;
  for (unsigned j = 0; j < n_; ++j) s = field_.add(s, field_.mul(d[j], trace_coeffs_[j]));
  return s;
}

std::vector<unsigned> FieldContext::divisors_of_m() const {
  std::vector<unsigned> out;
  for (unsigned e = 1; e <= m_; ++e)
    if (m_ % e == 0) out.push_back(e);
  return out;
}

unsigned FieldContext::degree_over_q(Element x) const {
  for (unsigned e : divisors_of_m())
    if (frobenius(x, e) == x) return e;
  return m_;
}

Polynomial FieldContext::minimal_polynomial(Element x) const {
  const unsigned d = degree_over_q(x);
  Polynomial f{one()};
  Element conj = x;
  for (unsigned i = 0; i < d; ++i) {
    // f <- f * (X - conj)
    Polynomial g(f.size() + 1, zero());
    const Element nc = neg(conj);
    for (std::size_t j = 0; j < f.size(); ++j) {
      g[j + 1] = add(g[j + 1], f[j]);
      g[j] = add(g[j], mul(nc, f[j]));
    }
    f = std::move(g);
    conj = frobenius(conj, 1);
  }
  return f;
}

Element FieldContext::evaluate(const Polynomial& f, Element x) const {
  Element r = zero();
  for (std::size_t i = f.size(); i-- > 0;) r = add(mul(r, x), f[i]);
  return r;
}

Element FieldContext::derivative_at(const Polynomial& f, Element x) const {
  Element r = zero();
  for (std::size_t i = f.size(); i-- > 1;)
    r = add(mul(r, x), scale_prime(static_cast<std::uint32_t>(i % p()), f[i]));
  return r;
}

Element FieldContext::find_element_of_degree(unsigned e, std::uint64_t seed) const {
  require_divisor(e);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, order_ - 1);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const Element y = trace_rel(Element{dist(rng)}, e);
    if (degree_over_q(y) == e) return y;
  }
  const auto all = elements_of_degree(e);
  return all.at(seed % all.size());
}

std::vector<Element> FieldContext::elements_of_degree(unsigned e) const {
  require_divisor(e);
  const auto& basis = subfield_fp_basis(e);
  const std::uint64_t size = q_pow(e);
  if (size > (std::uint64_t{1} << 24)) throw CapExceeded("listing elements of a subfield", size, 1u << 24);
  std::vector<Element> out;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    Element s = zero();
    std::uint64_t c = idx;
    for (auto b : basis) {
      s = add(s, scale_prime(static_cast<std::uint32_t>(c % p()), b));
      c /= p();
    }
    if (degree_over_q(s) == e) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vector FieldContext::fq_coordinates(Element x) const {
  const auto c = gamma_solver_->solve(digits(x));
  if (!c) throw Error("internal: Γ does not span the field");
  const auto& beta = subfield_bases_.at(1);
  Vector out(m_, zero());
  for (unsigned j = 0; j < m_; ++j)
    for (unsigned l = 0; l < a_; ++l) out[j] = add(out[j], scale_prime((*c)[j * a_ + l], beta[l]));
  return out;
}

const std::vector<Element>& FieldContext::subfield_fp_basis(unsigned e) const {
  require_divisor(e);
  return subfield_bases_.at(e);
}

FpVector FieldContext::fq_to_prime(Element s) const {
  auto c = fq_solver_->solve(digits(s));
  if (!c) throw DomainError("element is not in F_q");
  return *c;
}

Element FieldContext::fq_from_prime(std::span<const std::uint32_t> c) const {
  const auto& beta = subfield_bases_.at(1);
  if (c.size() != a_) throw DomainError("F_q element needs a prime coordinates");
  Element s = zero();
  for (unsigned l = 0; l < a_; ++l) s = add(s, scale_prime(c[l], beta[l]));
  return s;
}

const std::vector<Element>& FieldContext::fq_elements() const {
  if (fq_elements_.size() != q_) throw CapExceeded("listing F_q", q_, 1u << 16);
  return fq_elements_;
}

}  // namespace rankdec

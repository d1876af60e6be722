#include "rankdec/code.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "rankdec/errors.hpp"
#include "rankdec/geometry.hpp"

namespace rankdec {

namespace {

FpVector expand_fq(const FieldContext& F, const Vector& v) {
  FpVector out;
  out.reserve(v.size() * F.a());
  for (auto x : v) {
    const FpVector c = F.fq_to_prime(x);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

// Sorts blocks by decreasing length and rewrites G = B_u D_u A_u as B D_sorted A.
Decomposition sorted_decomposition(const FieldContext& F, const std::vector<Vector>& blocks, const Matrix& B_u,
                                   const Matrix& A_u) {
  const std::size_t k = blocks.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t x, std::size_t y) { return blocks[x].size() > blocks[y].size(); });
  std::vector<std::size_t> uoff(k, 0);
  for (std::size_t i = 1; i < k; ++i) uoff[i] = uoff[i - 1] + blocks[i - 1].size();
  const std::size_t n = k ? uoff[k - 1] + blocks[k - 1].size() : 0;
  Matrix R(k, k), Q(n, n);
  Decomposition d;
  std::size_t off = 0;
  for (std::size_t s = 0; s < k; ++s) {
    const auto& u = blocks[perm[s]];
    R(perm[s], s) = F.one();
    for (std::size_t t = 0; t < u.size(); ++t) Q(off + t, uoff[perm[s]] + t) = F.one();
    off += u.size();
    d.type.push_back(u.size());
    d.blocks.push_back(u);
  }
  d.B = mul(F, B_u, R);
  d.A = mul(F, Q, A_u);
  d.sort_map = EquivalenceMap{transpose(Q)};
  return d;
}

void check_block(const FieldContext& F, const Vector& u) {
  if (u.empty()) throw DomainError("empty block");
  if (u.size() >= F.m())
    throw DomainError("block length " + std::to_string(u.size()) + " must be below m = " + std::to_string(F.m()));
  if (rank_weight(F, u) != u.size())
    throw DomainError("block entries are F_q-dependent (rank weight " + std::to_string(rank_weight(F, u)) +
                      " < length " + std::to_string(u.size()) + "), so the block is not a 1-dimensional MRD code");
}

}  // namespace

Matrix Decomposition::block_matrix() const {
  std::vector<Matrix> parts;
  for (const auto& u : blocks) parts.push_back(Matrix::from_rows({u}));
  return block_diagonal(parts);
}

std::uint64_t WeightDistribution::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

std::size_t WeightDistribution::min_distance() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w]) return w;
  return 0;
}

RankCode::RankCode(ContextPtr ctx, Matrix generator, std::optional<Decomposition> decomposition)
    : ctx_(std::move(ctx)), G_(std::move(generator)), dec_(std::move(decomposition)) {
  const FieldContext& F = *ctx_;
  if (G_.rows() == 0) throw DomainError("a code needs at least one generator row");
  for (std::size_t i = 0; i < G_.rows(); ++i)
    for (std::size_t j = 0; j < G_.cols(); ++j) F.from_int(G_(i, j).code);
  if (rank(F, G_) != G_.rows()) throw DomainError("generator rows are not F_{q^m}-linearly independent");
  if (dec_) {
    const auto& d = *dec_;
    if (d.type.size() != k() || d.blocks.size() != k()) throw DomainError("decomposition has the wrong number of blocks");
    std::size_t total = 0;
    for (std::size_t i = 0; i < k(); ++i) {
      if (d.blocks[i].size() != d.type[i]) throw DomainError("block length differs from its type entry");
      if (i && d.type[i] > d.type[i - 1]) throw DomainError("decomposition type is not sorted");
      check_block(F, d.blocks[i]);
      total += d.type[i];
    }
    if (total != n()) throw DomainError("block lengths do not add up to n");
    if (!is_over_fq(F, d.A)) throw DomainError("equivalence matrix is not over F_q");
    if (mul(F, mul(F, d.B, d.block_matrix()), d.A) != G_)
      throw DomainError("generator does not match its decomposition record");
  }
}

const Decomposition& RankCode::require_decomposition() const {
  if (!dec_) throw DomainError("code has no decomposition record");
  return *dec_;
}

Vector RankCode::encode(const Vector& message) const { return vec_mul(*ctx_, message, G_); }

std::size_t rank_weight(const FieldContext& F, const Vector& v) {
  const auto& beta = F.subfield_fp_basis(1);
  if (F.p() == 2) {
    std::uint32_t basis[32];
    std::uint32_t occupied = 0;
    std::size_t r = 0;
    for (auto x : v)
      for (auto b : beta) {
        std::uint32_t y = static_cast<std::uint32_t>(F.mul(b, x).code);
        while (y) {
          const unsigned h = 31u - static_cast<unsigned>(std::countl_zero(y));
          if (!(occupied >> h & 1u)) {
            basis[h] = y;
            occupied |= 1u << h;
            ++r;
            break;
          }
          y ^= basis[h];
        }
      }
    return r / F.a();
  }
  FpSpace s(F.p(), F.degree());
  for (auto x : v)
    for (auto b : beta) s.insert(F.digits(F.mul(b, x)));
  return s.dim() / F.a();
}

FqSpace support(const FieldContext& F, const Vector& v) {
  const unsigned a = F.a(), m = F.m();
  const auto& beta = F.subfield_fp_basis(1);
  std::vector<Vector> coords;
  for (auto x : v) coords.push_back(F.fq_coordinates(x));
  FqSpace S{v.size(), a, FpSpace(F.p(), a * v.size())};
  for (unsigned j = 0; j < m; ++j)
    for (auto b : beta) {
      Vector col(v.size());
      for (std::size_t t = 0; t < v.size(); ++t) col[t] = F.mul(b, coords[t][j]);
      S.fp.insert(expand_fq(F, col));
    }
  return S;
}

std::vector<Vector> fq_basis(const FieldContext& F, const FqSpace& S) {
  const auto& beta = F.subfield_fp_basis(1);
  FpSpace seen(F.p(), S.fp.len());
  std::vector<Vector> out;
  for (const auto& r : S.fp.rows()) {
    if (seen.contains(r)) continue;
    Vector v(S.n);
    for (std::size_t t = 0; t < S.n; ++t)
      v[t] = F.fq_from_prime(std::span<const std::uint32_t>(r.data() + t * S.a, S.a));
    for (auto b : beta) {
      Vector w(S.n);
      for (std::size_t t = 0; t < S.n; ++t) w[t] = F.mul(b, v[t]);
      seen.insert(expand_fq(F, w));
    }
    out.push_back(std::move(v));
  }
  return out;
}

FqSpace code_support(const RankCode& C) {
  const FieldContext& F = *C.context();
  FqSpace S{C.n(), F.a(), FpSpace(F.p(), F.a() * C.n())};
  for (std::size_t i = 0; i < C.k(); ++i) S.fp = S.fp.sum(support(F, C.generator().row(i)).fp);
  return S;
}

bool is_nondegenerate(const RankCode& C) { return code_support(C).dim() == C.n(); }

WeightDistribution weight_distribution(const RankCode& C, const EnumOptions& opt) {
  const FieldContext& F = *C.context();
  const std::uint64_t total = message_count(F, C.k());
  if (total > opt.cap) throw CapExceeded("weight distribution enumeration", total, opt.cap);
  const auto gens = prime_generators(F, C.generator().row_list());
  return {affine_weight_histogram(F, C.n(), Vector(C.n(), F.zero()), gens, opt.threads)};
}

WeightDistribution projective_weight_distribution(const RankCode& C, const EnumOptions& opt) {
  const FieldContext& F = *C.context();
  const std::uint64_t total = projective_count(F, C.k());
  if (total > opt.projective_cap) throw CapExceeded("projective enumeration", total, opt.projective_cap);
  const auto rows = C.generator().row_list();
  std::vector<std::uint64_t> counts(C.n() + 1, 0);
  for (std::size_t lead = 0; lead < C.k(); ++lead) {
    const std::vector<Vector> tail(rows.begin() + static_cast<std::ptrdiff_t>(lead + 1), rows.end());
    const auto h = affine_weight_histogram(F, C.n(), rows[lead], prime_generators(F, tail), opt.threads);
    for (std::size_t w = 0; w <= C.n(); ++w) counts[w] += h[w];
  }
  return {counts};
}

std::size_t min_distance(const RankCode& C, const EnumOptions& opt) {
  // one message per line; the enumeration cap bounds the work
  const std::uint64_t total = projective_count(*C.context(), C.k());
  if (total > opt.cap) throw CapExceeded("minimum distance enumeration", total, opt.cap);
  EnumOptions o = opt;
  o.projective_cap = total;
  return projective_weight_distribution(C, o).min_distance();
}

bool is_mrd(const RankCode& C, const EnumOptions& opt) {
  const std::size_t m = C.context()->m(), n = C.n(), k = C.k();
  const std::size_t d = min_distance(C, opt);
  return m * k == std::max(m, n) * (std::min(m, n) + 1 - d);
}

RankCode direct_sum(const std::vector<RankCode>& codes) {
  if (codes.empty()) throw DomainError("direct sum of no codes");
  const ContextPtr& ctx = codes[0].context();
  const FieldContext& F = *ctx;
  std::vector<Matrix> gens, Bs, As;
  std::vector<Vector> blocks;
  bool all_dec = true;
  for (const auto& c : codes) {
    F.require_compatible(*c.context());
    gens.push_back(c.generator());
    if (c.decomposition()) {
      Bs.push_back(c.decomposition()->B);
      As.push_back(c.decomposition()->A);
      for (const auto& u : c.decomposition()->blocks) blocks.push_back(u);
    } else {
      all_dec = false;
    }
  }
  Matrix G = block_diagonal(gens);
  if (!all_dec) return RankCode(ctx, std::move(G));
  return RankCode(ctx, G, sorted_decomposition(F, blocks, block_diagonal(Bs), block_diagonal(As)));
}

RankCode apply_equivalence(const RankCode& C, const EquivalenceMap& map) {
  const FieldContext& F = *C.context();
  const Matrix& A = map.A;
  if (A.rows() != C.n() || A.cols() != C.n()) throw DomainError("equivalence matrix has the wrong size");
  if (!is_over_fq(F, A)) throw DomainError("equivalence matrix is not over F_q");
  if (rank(F, A) != C.n()) throw DomainError("equivalence matrix is singular");
  std::optional<Decomposition> dec = C.decomposition();
  if (dec) dec->A = mul(F, dec->A, A);
  return RankCode(C.context(), mul(F, C.generator(), A), std::move(dec));
}

RankCode change_basis(const RankCode& C, const Matrix& B) {
  const FieldContext& F = *C.context();
  if (B.rows() != C.k() || B.cols() != C.k()) throw DomainError("basis change matrix has the wrong size");
  if (rank(F, B) != C.k()) throw DomainError("basis change matrix is singular");
  std::optional<Decomposition> dec = C.decomposition();
  if (dec) dec->B = mul(F, B, dec->B);
  return RankCode(C.context(), mul(F, B, C.generator()), std::move(dec));
}

EquivalenceMap random_gl(const FieldContext& F, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return {random_gl_q(F, n, rng)};
}

Matrix random_gl_qm(const FieldContext& F, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_gl_qm(F, k, rng);
}

RankCode build_completely_decomposable(const ContextPtr& ctx, const std::vector<Vector>& blocks) {
  const FieldContext& F = *ctx;
  if (blocks.empty()) throw DomainError("no blocks given");
  for (const auto& u : blocks) {
    for (auto x : u) F.from_int(x.code);
    check_block(F, u);
  }
  std::size_t n = 0;
  for (const auto& u : blocks) n += u.size();
  Decomposition d = sorted_decomposition(F, blocks, Matrix::identity(blocks.size()), Matrix::identity(n));
  d.B = Matrix::identity(blocks.size());
  d.A = Matrix::identity(n);
  Matrix G = d.block_matrix();
  return RankCode(ctx, std::move(G), std::move(d));
}

std::optional<DetectedDecomposition> detect_complete_decomposability(const RankCode& C, const EnumOptions& opt) {
  const FieldContext& F = *C.context();
  const std::size_t k = C.k(), n = C.n();
  const std::uint64_t points = projective_count(F, k);
  if (points > opt.projective_cap) throw CapExceeded("projective point scan", points, opt.projective_cap);
  if (!is_nondegenerate(C)) return std::nullopt;

  // point weights w(xG) = m - dim(U^{⊥'} ∩ ⟨x⟩)
  const System dual = perp_prime(system_from_code(C));
  std::vector<std::pair<std::size_t, Vector>> weighted;
  weighted.reserve(points);
  for_each_projective_message(F, k, [&](const Vector& x) { weighted.emplace_back(F.m() - point_weight(dual, x), x); });
  std::stable_sort(weighted.begin(), weighted.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  // greedy minimum-weight basis; independence over F_{q^m} forms a matroid, so greedy is optimal
  std::vector<std::pair<std::size_t, Vector>> chosen;
  std::vector<Vector> rows;
  std::size_t sum = 0;
  for (const auto& [w, x] : weighted) {
    rows.push_back(x);
    if (rank(F, Matrix::from_rows(rows)) < rows.size()) {
      rows.pop_back();
      continue;
    }
    chosen.emplace_back(w, x);
    sum += w;
    if (chosen.size() == k) break;
  }
  if (sum != n) return std::nullopt;
  for (const auto& [w, x] : chosen)
    if (w >= F.m()) return std::nullopt;

  std::stable_sort(chosen.begin(), chosen.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  Matrix X(k, k), M(n, n), Cw(k, n);
  std::size_t r = 0;
  std::vector<std::size_t> type;
  for (std::size_t i = 0; i < k; ++i) {
    X.set_row(i, chosen[i].second);
    const Vector c = C.encode(chosen[i].second);
    Cw.set_row(i, c);
    type.push_back(chosen[i].first);
    for (const auto& b : fq_basis(F, support(F, c))) M.set_row(r++, b);
  }
  if (r != n) throw Error("internal: supports of the decomposing basis do not fill F_q^n");
  const auto Minv = inverse(F, M);
  if (!Minv) throw Error("internal: supports of the decomposing basis are not in direct sum");
  const Matrix D = mul(F, Cw, *Minv);
  std::size_t off = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if ((j < off || j >= off + type[i]) && !D(i, j).is_zero()) throw Error("internal: decomposed generator is not block diagonal");
    off += type[i];
  }
  const auto Xinv = inverse(F, X);
  return DetectedDecomposition{type, D, EquivalenceMap{M}, *Xinv};
}

RankCode with_decomposition(const RankCode& C, const EnumOptions& opt) {
  if (C.decomposition()) return C;
  const auto det = detect_complete_decomposability(C, opt);
  if (!det) throw DomainError("code is not completely decomposable");
  Decomposition d;
  d.type = det->type;
  std::size_t off = 0;
  for (std::size_t i = 0; i < C.k(); ++i) {
    Vector u(det->type[i]);
    for (std::size_t t = 0; t < u.size(); ++t) u[t] = det->weight_complementary(i, off + t);
    off += u.size();
    d.blocks.push_back(std::move(u));
  }
  d.B = det->B;
  d.A = det->A.A;
  d.sort_map = EquivalenceMap{Matrix::identity(C.n())};
  return RankCode(C.context(), C.generator(), std::move(d));
}

std::vector<std::size_t> type_of(const RankCode& C, const EnumOptions& opt) {
  return with_decomposition(C, opt).require_decomposition().type;
}

RankCode shortened(const RankCode& C, std::size_t t) {
  const auto& d = C.require_decomposition();
  if (t < 1 || t > C.k()) throw DomainError("t must lie in [1, k]");
  const FieldContext& F = *C.context();
  const Matrix DA = mul(F, d.block_matrix(), d.A);
  std::vector<Vector> rows;
  for (std::size_t i = t - 1; i < C.k(); ++i) rows.push_back(DA.row(i));
  return RankCode(C.context(), Matrix::from_rows(rows));
}

RankCode punctured(const RankCode& C, std::size_t t) {
  const auto& d = C.require_decomposition();
  if (t < 1 || t > C.k()) throw DomainError("t must lie in [1, k]");
  return build_completely_decomposable(C.context(), std::vector<Vector>(d.blocks.begin() + static_cast<std::ptrdiff_t>(t - 1), d.blocks.end()));
}

std::vector<CodewordFamily> minimal_codewords(const RankCode& C) {
  const auto& d = C.require_decomposition();
  const Matrix DA = mul(*C.context(), d.block_matrix(), d.A);
  std::vector<CodewordFamily> out;
  for (std::size_t i = 0; i < C.k(); ++i) out.push_back({DA.row(i)});
  return out;
}

std::vector<Vector> family_members(const FieldContext& F, const CodewordFamily& f) {
  std::vector<Vector> out;
  for (std::uint64_t a = 1; a < F.order(); ++a) {
    Vector w(f.word.size());
    for (std::size_t t = 0; t < w.size(); ++t) w[t] = F.mul(Element{a}, f.word[t]);
    out.push_back(std::move(w));
  }
  return out;
}

bool proportional(const FieldContext& F, const Vector& x, const Vector& y) {
  if (x.size() != y.size()) return false;
  std::size_t t = 0;
  while (t < x.size() && x[t].is_zero()) ++t;
  if (t == x.size()) return std::all_of(y.begin(), y.end(), [](Element e) { return e.is_zero(); });
  const Element alpha = F.mul(y[t], F.inv(x[t]));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (F.mul(alpha, x[i]) != y[i]) return false;
  return !alpha.is_zero();
}

bool is_minimal_codeword_oracle(const RankCode& C, const Vector& c, const EnumOptions& opt) {
  const FieldContext& F = *C.context();
  const std::uint64_t total = message_count(F, C.k());
  if (total > opt.cap) throw CapExceeded("minimal codeword oracle", total, opt.cap);
  if (std::all_of(c.begin(), c.end(), [](Element e) { return e.is_zero(); }))
    throw DomainError("the zero word is not a candidate minimal codeword");
  const FqSpace sc = support(F, c);
  bool minimal = true;
  for_each_message(F, C.k(), [&](const Vector& x) {
    if (!minimal) return;
    const Vector other = C.encode(x);
    if (std::all_of(other.begin(), other.end(), [](Element e) { return e.is_zero(); })) return;
    if (rank_weight(F, other) > sc.dim()) return;
    if (sc.fp.contains(support(F, other).fp) && !proportional(F, c, other)) minimal = false;
  });
  return minimal;
}

std::vector<Vector> minimal_codewords_bruteforce(const RankCode& C, const EnumOptions& opt) {
  const FieldContext& F = *C.context();
  const std::uint64_t total = message_count(F, C.k());
  if (total > opt.cap) throw CapExceeded("minimal codeword enumeration", total, opt.cap);
  struct Group {
    FqSpace support;
    std::vector<Vector> words;
  };
  std::map<std::vector<FpVector>, Group> groups;
  for_each_message(F, C.k(), [&](const Vector& x) {
    Vector c = C.encode(x);
    if (std::all_of(c.begin(), c.end(), [](Element e) { return e.is_zero(); })) return;
    FqSpace s = support(F, c);
    auto key = s.fp.rows();
    auto [it, fresh] = groups.try_emplace(std::move(key), Group{std::move(s), {}});
    it->second.words.push_back(std::move(c));
  });
  std::vector<const Group*> list;
  for (const auto& [key, g] : groups) list.push_back(&g);
  std::vector<Vector> out;
  for (const Group* g : list) {
    // same support, different line: not minimal
    if (g->words.size() != F.order() - 1) continue;
    bool strict_sub = false;
    for (const Group* h : list) {
      if (h == g || h->support.dim() >= g->support.dim()) continue;
      if (g->support.fp.contains(h->support.fp)) {
        strict_sub = true;
        break;
      }
    }
    if (!strict_sub) out.insert(out.end(), g->words.begin(), g->words.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rankdec

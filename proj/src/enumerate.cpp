#include "rankdec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "rankdec/errors.hpp"

namespace rankdec {

std::uint64_t EnumOptions::default_enumeration_cap() {
  if (const char* env = std::getenv("RANKDEC_CAP")) {
    try {
      std::size_t used = 0;
      const std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("RANKDEC_CAP must be a positive integer, got '") + env + "'");
  }
  return std::uint64_t{1} << 24;
}

std::uint64_t message_count(const FieldContext& F, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > UINT64_MAX / F.order()) return UINT64_MAX;
    r *= F.order();
  }
  return r;
}

std::uint64_t projective_count(const FieldContext& F, std::size_t k) {
  // 1 + Q + ... + Q^{k-1}, Q = q^m
  std::uint64_t r = 0, term = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > UINT64_MAX - term) return UINT64_MAX;
    r += term;
    if (i + 1 < k) {
      if (term > UINT64_MAX / F.order()) return UINT64_MAX;
      term *= F.order();
    }
  }
  return r;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Vector> prime_generators(const FieldContext& F, const std::vector<Vector>& rows) {
  std::vector<Vector> out;
  std::uint64_t xj = 1;
  std::vector<Element> powers;
  for (unsigned j = 0; j < F.degree(); ++j, xj *= F.p()) powers.push_back(Element{xj});
  for (const auto& r : rows)
    for (auto x : powers) {
      Vector g(r.size());
      for (std::size_t t = 0; t < r.size(); ++t) g[t] = F.mul(x, r[t]);
      out.push_back(std::move(g));
    }
  return out;
}

namespace {

// β_l v_t for t < n, l < a: the F_p-span of these has dimension a * w(v).
std::vector<Element> expand(const FieldContext& F, const Vector& v) {
  const auto& beta = F.subfield_fp_basis(1);
  std::vector<Element> out;
  out.reserve(v.size() * beta.size());
  for (auto x : v)
    for (auto b : beta) out.push_back(F.mul(b, x));
  return out;
}

// Rank of L bit-vectors of width ≤ 32, stopping at `full`.
inline unsigned rank_gf2(const std::uint32_t* v, std::size_t L, unsigned full) {
  std::uint32_t basis[32];
  std::uint32_t occupied = 0;
  unsigned r = 0;
  for (std::size_t i = 0; i < L; ++i) {
    std::uint32_t x = v[i];
    while (x) {
      const unsigned h = 31u - static_cast<unsigned>(std::countl_zero(x));
      if (!(occupied >> h & 1u)) {
        basis[h] = x;
        occupied |= 1u << h;
        if (++r == full) return r;
        break;
      }
      x ^= basis[h];
    }
  }
  return r;
}

void run_gf2(std::size_t L, unsigned N, unsigned a, const std::vector<std::uint32_t>& offset,
             const std::vector<std::vector<std::uint32_t>>& gens, std::uint64_t lo, std::uint64_t hi,
             std::vector<std::uint64_t>& counts) {
  std::vector<std::uint32_t> state = offset;
  const std::uint64_t g0 = lo ^ (lo >> 1);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (g0 >> i & 1u)
      for (std::size_t t = 0; t < L; ++t) state[t] ^= gens[i][t];
  const unsigned full = static_cast<unsigned>(std::min<std::size_t>(L, N));
  for (std::uint64_t i = lo; i < hi; ++i) {
    ++counts[rank_gf2(state.data(), L, full) / a];
    if (i + 1 < hi) {
      const auto& g = gens[static_cast<std::size_t>(std::countr_zero(i + 1))];
      for (std::size_t t = 0; t < L; ++t) state[t] ^= g[t];
    }
  }
}

struct PrimeKernel {
  PrimeField F;
  std::size_t L;
  unsigned N;
  std::vector<std::uint32_t> inv;  // inverse table for small p

  explicit PrimeKernel(std::uint32_t p, std::size_t L_, unsigned N_) : F(p), L(L_), N(N_) {
    if (p < (1u << 16)) {
      inv.assign(p, 0);
      for (std::uint32_t x = 1; x < p; ++x) inv[x] = F.inv(x);
    }
  }

  unsigned rank(std::vector<std::uint32_t>& M, unsigned full) const {
    // M is L x N row-major, destroyed
    unsigned r = 0;
    for (unsigned c = 0; c < N && r < L; ++c) {
      std::size_t piv = r;
      while (piv < L && M[piv * N + c] == 0) ++piv;
      if (piv == L) continue;
      if (piv != r)
        for (unsigned j = c; j < N; ++j) std::swap(M[piv * N + j], M[r * N + j]);
      const std::uint32_t s = inv.empty() ? F.inv(M[r * N + c]) : inv[M[r * N + c]];
      for (unsigned j = c; j < N; ++j) M[r * N + j] = F.mul(M[r * N + j], s);
      for (std::size_t i = r + 1; i < L; ++i) {
        const std::uint32_t f = M[i * N + c];
        if (!f) continue;
        const std::uint32_t nf = F.neg(f);
        for (unsigned j = c; j < N; ++j)
          if (M[r * N + j]) M[i * N + j] = F.add(M[i * N + j], F.mul(nf, M[r * N + j]));
      }
      if (++r == full) return r;
    }
    return r;
  }
};

void run_general(const FieldContext& Fc, std::size_t L, unsigned a, const std::vector<std::uint32_t>& offset,
                 const std::vector<std::vector<std::uint32_t>>& gens, std::uint64_t lo, std::uint64_t hi,
                 std::vector<std::uint64_t>& counts) {
  const unsigned N = Fc.degree();
  const std::uint32_t p = Fc.p();
  const PrimeKernel K(p, L, N);
  const std::size_t G = gens.size();
  std::vector<std::uint32_t> digit(G, 0), state = offset, scratch;
  std::uint64_t c = lo;
  for (std::size_t i = 0; i < G && c; ++i) {
    digit[i] = static_cast<std::uint32_t>(c % p);
    c /= p;
    for (std::uint32_t rep = 0; rep < digit[i]; ++rep)
      for (std::size_t t = 0; t < state.size(); ++t) state[t] = K.F.add(state[t], gens[i][t]);
  }
  const unsigned full = static_cast<unsigned>(std::min<std::size_t>(L, N));
  for (std::uint64_t i = lo; i < hi; ++i) {
    scratch = state;
    ++counts[K.rank(scratch, full) / a];
    if (i + 1 == hi) break;
    // odometer step: each touched digit adds its generator once (p copies wrap to zero)
    for (std::size_t pos = 0; pos < G; ++pos) {
      const auto& g = gens[pos];
      for (std::size_t t = 0; t < state.size(); ++t) state[t] = K.F.add(state[t], g[t]);
      if (++digit[pos] < p) break;
      digit[pos] = 0;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> affine_weight_histogram(const FieldContext& F, std::size_t n, const Vector& offset,
                                                   const std::vector<Vector>& gens, unsigned threads) {
  if (offset.size() != n) throw DomainError("offset length mismatch");
  const unsigned a = F.a(), N = F.degree();
  const std::size_t L = n * a;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (total > UINT64_MAX / F.p()) throw CapExceeded("enumeration", UINT64_MAX, UINT64_MAX);
    total *= F.p();
  }
  std::vector<std::uint64_t> counts(n + 1, 0);
  if (n == 0) {
    counts[0] = total;
    return counts;
  }
  unsigned T = resolve_threads(threads);
  if (total < 4096) T = 1;
  T = static_cast<unsigned>(std::min<std::uint64_t>(T, total));
  std::vector<std::vector<std::uint64_t>> partial(T, std::vector<std::uint64_t>(n + 1, 0));

  if (F.p() == 2) {
    auto pack = [&](const Vector& v) {
      std::vector<std::uint32_t> out;
      for (auto x : expand(F, v)) out.push_back(static_cast<std::uint32_t>(x.code));
      return out;
    };
    const auto off = pack(offset);
    std::vector<std::vector<std::uint32_t>> g;
    for (const auto& v : gens) g.push_back(pack(v));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T; ++t) {
      const std::uint64_t lo = total / T * t + std::min<std::uint64_t>(t, total % T);
      const std::uint64_t hi = lo + total / T + (t < total % T ? 1 : 0);
      if (T == 1)
        run_gf2(L, N, a, off, g, lo, hi, partial[t]);
      else
        pool.emplace_back([&, t, lo, hi] { run_gf2(L, N, a, off, g, lo, hi, partial[t]); });
    }
    for (auto& th : pool) th.join();
  } else {
    auto pack = [&](const Vector& v) {
      std::vector<std::uint32_t> out;
      for (auto x : expand(F, v)) {
        const auto d = F.digits(x);
        out.insert(out.end(), d.begin(), d.end());
      }
      return out;
    };
    const auto off = pack(offset);
    std::vector<std::vector<std::uint32_t>> g;
    for (const auto& v : gens) g.push_back(pack(v));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T; ++t) {
      const std::uint64_t lo = total / T * t + std::min<std::uint64_t>(t, total % T);
      const std::uint64_t hi = lo + total / T + (t < total % T ? 1 : 0);
      if (T == 1)
        run_general(F, L, a, off, g, lo, hi, partial[t]);
      else
        pool.emplace_back([&, t, lo, hi] { run_general(F, L, a, off, g, lo, hi, partial[t]); });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& part : partial)
    for (std::size_t w = 0; w <= n; ++w) counts[w] += part[w];
  return counts;
}

void for_each_message(const FieldContext& F, std::size_t k, const std::function<void(const Vector&)>& f) {
  Vector x(k, F.zero());
  for (;;) {
    f(x);
    std::size_t pos = 0;
    while (pos < k && ++x[pos].code == F.order()) x[pos++].code = 0;
    if (pos == k) return;
  }
}

void for_each_projective_message(const FieldContext& F, std::size_t k, const std::function<void(const Vector&)>& f) {
  for (std::size_t lead = 0; lead < k; ++lead) {
    Vector x(k, F.zero());
    x[lead] = F.one();
    for (;;) {
      f(x);
      std::size_t pos = lead + 1;
      while (pos < k && ++x[pos].code == F.order()) x[pos++].code = 0;
      if (pos == k) break;
    }
  }
}

}  // namespace rankdec

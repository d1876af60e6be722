#pragma once
// Random instances shared by the test suites.

#include <random>
#include <vector>

#include "rankdec/code.hpp"

namespace testing_helpers {

using namespace rankdec;

/// Random vector of length n with rank weight n (n ≤ m).
inline Vector random_block(const FieldContext& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(1, F.order() - 1);
  for (;;) {
    Vector u(n);
    for (auto& x : u) x = Element{d(rng)};
    if (rank_weight(F, u) == n) return u;
  }
}

/// Random type with k parts in [1, m-1] and total length n_max at most.
inline std::vector<std::size_t> random_type(unsigned m, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(1, m - 1);
  std::vector<std::size_t> t(k);
  for (auto& x : t) x = d(rng);
  return t;
}

inline RankCode random_decomposable(const ContextPtr& F, const std::vector<std::size_t>& type, std::mt19937_64& rng) {
  std::vector<Vector> blocks;
  for (auto n : type) blocks.push_back(random_block(*F, n, rng));
  return build_completely_decomposable(F, blocks);
}

/// Same code up to equivalence: random B ∈ GL(k, q^m), A ∈ GL(n, q).
inline RankCode scramble(const RankCode& C, std::mt19937_64& rng) {
  const FieldContext& F = *C.context();
  const RankCode D = change_basis(C, random_gl_qm(F, C.k(), rng()));
  return apply_equivalence(D, random_gl(F, C.n(), rng()));
}

}  // namespace testing_helpers

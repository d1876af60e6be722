#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "rankdec/field.hpp"

namespace rankdec {

/// Enumeration budgets and parallelism shared by every exhaustive routine.
struct EnumOptions {
  /// Maximum number of messages for a full enumeration.
  std::uint64_t cap = default_enumeration_cap();
  /// Maximum number of projective points (lines of F_{q^m}^k).
  std::uint64_t projective_cap = std::uint64_t{1} << 16;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;

  /// 2^24, or the value of RANKDEC_CAP when set.
  static std::uint64_t default_enumeration_cap();
};

/// q^{mk} if it fits in 64 bits, otherwise UINT64_MAX.
std::uint64_t message_count(const FieldContext& F, std::size_t k);
/// (q^{mk} - 1)/(q^m - 1), saturating.
std::uint64_t projective_count(const FieldContext& F, std::size_t k);

/// Rank-weight histogram of offset + sum_i d_i gens[i] over all d ∈ F_p^{gens.size()}.
///
/// The combinations are split into contiguous index ranges, one per worker, each with its own
/// histogram; the histograms are summed at the end.
std::vector<std::uint64_t> affine_weight_histogram(const FieldContext& F, std::size_t n, const Vector& offset,
                                                   const std::vector<Vector>& gens, unsigned threads);

/// F_p-generators of the code: X^j G_i for row i and power-basis index j, in message digit order i*N + j.
std::vector<Vector> prime_generators(const FieldContext& F, const std::vector<Vector>& rows);

/// Calls f(x) for every x ∈ F_{q^m}^k with first nonzero coordinate 1, in a fixed order.
void for_each_projective_message(const FieldContext& F, std::size_t k, const std::function<void(const Vector&)>& f);
/// Calls f(x) for every x ∈ F_{q^m}^k, coordinates counted in integer order (first coordinate fastest).
void for_each_message(const FieldContext& F, std::size_t k, const std::function<void(const Vector&)>& f);

unsigned resolve_threads(unsigned requested);

}  // namespace rankdec

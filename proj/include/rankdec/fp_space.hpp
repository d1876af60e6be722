#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rankdec {

/// Arithmetic modulo a prime p < 2^32.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
    std::uint64_t s = std::uint64_t{x} + y;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept {
    return x >= y ? x - y : static_cast<std::uint32_t>(std::uint64_t{x} + p_ - y);
  }
  std::uint32_t neg(std::uint32_t x) const noexcept { return x == 0 ? 0 : p_ - x; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{x} * y) % p_);
  }
  std::uint32_t inv(std::uint32_t x) const;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

using FpVector = std::vector<std::uint32_t>;

/// Subspace of F_p^len kept in reduced row echelon form.
///
/// Rows are ordered by pivot column and every pivot column is zero outside its
/// row, so two spaces are equal exactly when their row lists are equal.
class FpSpace {
 public:
  FpSpace(std::uint32_t p, std::size_t len);

  static FpSpace span(std::uint32_t p, std::size_t len, std::span<const FpVector> rows);

  std::uint32_t p() const noexcept { return field_.p(); }
  std::size_t len() const noexcept { return len_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<FpVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Adds v to the space; returns false when v was already contained.
  bool insert(FpVector v);
  bool contains(const FpVector& v) const;
  bool contains(const FpSpace& other) const;
  /// Residue of v after elimination against the basis (zero iff v is contained).
  FpVector reduce(FpVector v) const;

  FpSpace sum(const FpSpace& other) const;
  FpSpace intersect(const FpSpace& other) const;

  friend bool operator==(const FpSpace& a, const FpSpace& b) {
    return a.len_ == b.len_ && a.p() == b.p() && a.rows_ == b.rows_;
  }

 private:
  PrimeField field_;
  std::size_t len_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel {x : M x = 0} of an r x c matrix over F_p.
FpSpace kernel(std::uint32_t p, std::size_t cols, std::span<const FpVector> rows);

/// Rank of a list of vectors over F_p.
std::size_t rank(std::uint32_t p, std::size_t len, std::span<const FpVector> rows);

/// Expresses vectors in a fixed, linearly independent list of generators.
class FpSolver {
 public:
  FpSolver(std::uint32_t p, std::size_t len, std::span<const FpVector> generators);

  std::size_t size() const noexcept { return count_; }
  /// Coefficients c with sum c_i g_i = v, or nullopt if v is outside the span.
  std::optional<FpVector> solve(const FpVector& v) const;

 private:
  PrimeField field_;
  std::size_t len_;
  std::size_t count_;
  std::vector<FpVector> rows_;  // augmented [g | e_i] in echelon form
  std::vector<std::size_t> pivots_;
};

}  // namespace rankdec

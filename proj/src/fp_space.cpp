#include "rankdec/fp_space.hpp"

#include <algorithm>

#include "rankdec/errors.hpp"

namespace rankdec {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t x) const {
  if (x % p_ == 0) throw DomainError("inverse of zero in F_p");
  // Fermat: x^(p-2)
  std::uint64_t base = x % p_, result = 1, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::size_t leading_index(const FpVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

// v -= c * row
void axpy(const PrimeField& f, FpVector& v, std::uint32_t c, const FpVector& row) {
  if (c == 0) return;
  const std::uint32_t nc = f.neg(c);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (row[i] != 0) v[i] = f.add(v[i], f.mul(nc, row[i]));
}

}  // namespace

FpSpace::FpSpace(std::uint32_t p, std::size_t len) : field_(p), len_(len) {}

FpSpace FpSpace::span(std::uint32_t p, std::size_t len, std::span<const FpVector> rows) {
  FpSpace s(p, len);
  for (const auto& r : rows) s.insert(r);
  return s;
}

FpVector FpSpace::reduce(FpVector v) const {
  if (v.size() != len_) throw DomainError("vector length does not match subspace ambient length");
  for (std::size_t i = 0; i < rows_.size(); ++i) axpy(field_, v, v[pivots_[i]], rows_[i]);
  return v;
}

bool FpSpace::contains(const FpVector& v) const {
  const FpVector r = reduce(v);
  return leading_index(r) == len_;
}

bool FpSpace::contains(const FpSpace& other) const {
  if (other.len_ != len_ || other.p() != p()) throw ContextMismatch("subspaces live in different ambient spaces");
  if (other.dim() > dim()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const FpVector& r) { return contains(r); });
}

bool FpSpace::insert(FpVector v) {
  v = reduce(std::move(v));
  const std::size_t lead = leading_index(v);
  if (lead == len_) return false;
  const std::uint32_t s = field_.inv(v[lead]);
  for (auto& x : v) x = field_.mul(x, s);
  for (auto& row : rows_) axpy(field_, row, row[lead], v);
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

FpSpace FpSpace::sum(const FpSpace& other) const {
  if (other.len_ != len_ || other.p() != p()) throw ContextMismatch("subspaces live in different ambient spaces");
  FpSpace s = *this;
  for (const auto& r : other.rows_) s.insert(r);
  return s;
}

FpSpace FpSpace::intersect(const FpSpace& other) const {
  if (other.len_ != len_ || other.p() != p()) throw ContextMismatch("subspaces live in different ambient spaces");
  // Zassenhaus: rows (u|u) and (w|0); echelon rows with zero left half span the intersection.
  FpSpace big(p(), 2 * len_);
  for (const auto& u : rows_) {
    FpVector r(2 * len_);
    std::copy(u.begin(), u.end(), r.begin());
    std::copy(u.begin(), u.end(), r.begin() + static_cast<std::ptrdiff_t>(len_));
    big.insert(std::move(r));
  }
  for (const auto& w : other.rows_) {
    FpVector r(2 * len_, 0);
    std::copy(w.begin(), w.end(), r.begin());
    big.insert(std::move(r));
  }
  FpSpace out(p(), len_);
  for (std::size_t i = 0; i < big.rows_.size(); ++i) {
    if (big.pivots_[i] < len_) continue;
    out.insert(FpVector(big.rows_[i].begin() + static_cast<std::ptrdiff_t>(len_), big.rows_[i].end()));
  }
  return out;
}

FpSpace kernel(std::uint32_t p, std::size_t cols, std::span<const FpVector> rows) {
  const FpSpace echelon = FpSpace::span(p, cols, rows);
  const PrimeField f(p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : echelon.pivots()) is_pivot[c] = true;
  FpSpace out(p, cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FpVector x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < echelon.dim(); ++i) x[echelon.pivots()[i]] = f.neg(echelon.rows()[i][free]);
    out.insert(std::move(x));
  }
  return out;
}

std::size_t rank(std::uint32_t p, std::size_t len, std::span<const FpVector> rows) {
  return FpSpace::span(p, len, rows).dim();
}

FpSolver::FpSolver(std::uint32_t p, std::size_t len, std::span<const FpVector> generators)
    : field_(p), len_(len), count_(generators.size()) {
  FpSpace aug(p, len + count_);
  for (std::size_t i = 0; i < count_; ++i) {
    if (generators[i].size() != len) throw DomainError("generator length mismatch");
    FpVector r(len + count_, 0);
    std::copy(generators[i].begin(), generators[i].end(), r.begin());
    r[len + i] = 1;
    aug.insert(std::move(r));
  }
  for (std::size_t i = 0; i < aug.dim(); ++i) {
    if (aug.pivots()[i] >= len) throw DomainError("generators are linearly dependent");
    rows_.push_back(aug.rows()[i]);
    pivots_.push_back(aug.pivots()[i]);
  }
}

std::optional<FpVector> FpSolver::solve(const FpVector& v) const {
  if (v.size() != len_) throw DomainError("vector length mismatch");
  FpVector ext(len_ + count_, 0);
  std::copy(v.begin(), v.end(), ext.begin());
  for (std::size_t i = 0; i < rows_.size(); ++i) axpy(field_, ext, ext[pivots_[i]], rows_[i]);
  for (std::size_t i = 0; i < len_; ++i)
    if (ext[i] != 0) return std::nullopt;
  FpVector c(count_);
  for (std::size_t i = 0; i < count_; ++i) c[i] = field_.neg(ext[len_ + i]);
  return c;
}

}  // namespace rankdec

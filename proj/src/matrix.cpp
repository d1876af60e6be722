#include "rankdec/matrix.hpp"

#include "rankdec/errors.hpp"

namespace rankdec {

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = Element{1};
  return I;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix M(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) M.set_row(i, rows[i]);
  return M;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != cols_) throw DomainError("row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix mul(const FieldContext& F, const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw DomainError("matrix dimensions do not match");
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t l = 0; l < A.cols(); ++l) {
      const Element a = A(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) = F.add(C(i, j), F.mul(a, B(l, j)));
    }
  return C;
}

Vector vec_mul(const FieldContext& F, const Vector& x, const Matrix& M) {
  if (x.size() != M.rows()) throw DomainError("vector length does not match matrix");
  Vector out(M.cols(), F.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < M.cols(); ++j) out[j] = F.add(out[j], F.mul(x[i], M(i, j)));
  }
  return out;
}

Matrix transpose(const Matrix& M) {
  Matrix T(M.cols(), M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) T(j, i) = M(i, j);
  return T;
}

Matrix rref(const FieldContext& F, Matrix M, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t piv = r;
    while (piv < M.rows() && M(piv, c).is_zero()) ++piv;
    if (piv == M.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(piv, j), M(r, j));
    const Element s = F.inv(M(r, c));
    for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) = F.mul(M(r, j), s);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c).is_zero()) continue;
      const Element f = F.neg(M(i, c));
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (!M(r, j).is_zero()) M(i, j) = F.add(M(i, j), F.mul(f, M(r, j)));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return M;
}

std::size_t rank(const FieldContext& F, const Matrix& M) {
  std::vector<std::size_t> piv;
  rref(F, M, &piv);
  return piv.size();
}

std::optional<Matrix> inverse(const FieldContext& F, const Matrix& M) {
  if (M.rows() != M.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = M.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = M(i, j);
    aug(i, n + i) = F.one();
  }
  std::vector<std::size_t> piv;
  aug = rref(F, std::move(aug), &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix right_kernel(const FieldContext& F, const Matrix& M) {
  std::vector<std::size_t> piv;
  const Matrix R = rref(F, M, &piv);
  std::vector<bool> is_pivot(M.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < M.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(M.cols(), F.zero());
    x[free] = F.one();
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = F.neg(R(i, free));
    out.push_back(std::move(x));
  }
  if (out.empty()) return Matrix(0, M.cols());
  return Matrix::from_rows(out);
}

Matrix left_kernel(const FieldContext& F, const Matrix& M) { return right_kernel(F, transpose(M)); }

Matrix permutation_matrix(const FieldContext& F, const std::vector<std::size_t>& perm) {
  Matrix P(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) P(i, perm.at(i)) = F.one();
  return P;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix M(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) M(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return M;
}

bool is_over_fq(const FieldContext& F, const Matrix& M) {
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!F.in_fq(M(i, j))) return false;
  return true;
}

Element random_fq(const FieldContext& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> digit(0, F.p() - 1);
  FpVector c(F.a());
  for (auto& x : c) x = digit(rng);
  return F.fq_from_prime(c);
}

Element random_element(const FieldContext& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
  return Element{dist(rng)};
}

Matrix random_gl_q(const FieldContext& F, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = random_fq(F, rng);
    if (rank(F, M) == n) return M;
  }
}

Matrix random_gl_qm(const FieldContext& F, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = random_element(F, rng);
    if (rank(F, M) == n) return M;
  }
}

}  // namespace rankdec

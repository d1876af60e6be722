#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "rankdec/field.hpp"

namespace rankdec {

/// Dense row-major matrix over F_{q^m}. Matrices over F_q use the same type with entries in the subfield.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Element operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  void set_row(std::size_t i, const Vector& v);
  std::vector<Vector> row_list() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Element> data_;
};

Matrix mul(const FieldContext& F, const Matrix& A, const Matrix& B);
/// Row vector times matrix.
Vector vec_mul(const FieldContext& F, const Vector& x, const Matrix& M);
Matrix transpose(const Matrix& M);

/// Reduced row echelon form; pivot columns are written to `pivots` when given.
Matrix rref(const FieldContext& F, Matrix M, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const FieldContext& F, const Matrix& M);
std::optional<Matrix> inverse(const FieldContext& F, const Matrix& M);
/// Basis (as rows) of the left kernel {x : x M = 0}.
Matrix left_kernel(const FieldContext& F, const Matrix& M);
/// Basis (as rows) of the right kernel {y : M y^T = 0}.
Matrix right_kernel(const FieldContext& F, const Matrix& M);
/// Permutation matrix P with (x P)_{perm[i]} = x_i.
Matrix permutation_matrix(const FieldContext& F, const std::vector<std::size_t>& perm);
/// Block-diagonal matrix diag(blocks).
Matrix block_diagonal(const std::vector<Matrix>& blocks);
/// Every entry lies in F_q.
bool is_over_fq(const FieldContext& F, const Matrix& M);

/// Uniformly random invertible matrix with entries in F_q (rejection sampling).
Matrix random_gl_q(const FieldContext& F, std::size_t n, std::mt19937_64& rng);
/// Uniformly random invertible matrix over F_{q^m}.
Matrix random_gl_qm(const FieldContext& F, std::size_t n, std::mt19937_64& rng);
/// Uniformly random element of F_q.
Element random_fq(const FieldContext& F, std::mt19937_64& rng);
Element random_element(const FieldContext& F, std::mt19937_64& rng);

}  // namespace rankdec

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deq/scalar.hpp"

namespace deq {

/// Dense vector over one field.
class Vector {
 public:
  Vector(Field field, std::size_t size);
  Vector(Field field, std::vector<Scalar> entries);
  static Vector unit(const Field& field, std::size_t size, std::size_t index);

  const Field& field() const { return field_; }
  std::size_t size() const { return data_.size(); }
  Scalar& operator[](std::size_t i) { return data_[i]; }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  Vector scaled(const Scalar& s) const;
  /// a += s * b
  void add_scaled(const Scalar& s, const Vector& b);

  friend bool operator==(const Vector& a, const Vector& b) { return a.data_ == b.data_; }

 private:
  Field field_;
  std::vector<Scalar> data_;
};

/// Kronecker product of vectors: (a ⊗ b)[i * |b| + j] = a[i] b[j].
Vector kronecker(const Vector& a, const Vector& b);

/// Dense row-major matrix over one field; both dimensions are positive.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  /// Builds from rows of literals; all rows must have equal length.
  static Matrix from_rows(const Field& field, const std::vector<std::vector<std::string>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  bool is_zero() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// (a ⊗ b)(i*rb + k, j*cb + l) = a(i,j) b(k,l).
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Reduced row echelon form. Pivots are chosen leftmost column first and,
/// within a column, the topmost remaining row with a nonzero entry.
struct EchelonForm {
  std::vector<Vector> rows;          // nonzero rows only, pivot entry 1
  std::vector<std::size_t> pivots;   // pivot column of each row, increasing
};

EchelonForm row_reduce(const std::vector<Vector>& rows, std::size_t width);
EchelonForm row_reduce(const Matrix& a);
/// Reduced echelon form in which columns are tried as pivots in the given
/// order (a permutation of 0..width-1). Pivots are reported in that order.
EchelonForm row_reduce_ordered(const std::vector<Vector>& rows, std::size_t width,
                               const std::vector<std::size_t>& pivot_order);
std::size_t rank(const Matrix& a);

/// Some x with a x = b, or nullopt if the system is inconsistent.
/// Free variables are set to zero. Throws std::invalid_argument when
/// a.rows() != b.size().
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Basis of the null space, one vector per free column (free entry 1).
std::vector<Vector> kernel_basis(const Matrix& a);

/// Inverse of a square matrix, or nullopt when singular. Throws
/// std::invalid_argument for a non-square input.
std::optional<Matrix> matrix_inverse(const Matrix& a);

/// Span of a family of vectors with an exact membership test.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim);
  Subspace(Field field, std::size_t ambient_dim, const std::vector<Vector>& spanning);
  /// Same span, echelon basis built with row_reduce_ordered.
  Subspace(Field field, std::size_t ambient_dim, const std::vector<Vector>& spanning,
           const std::vector<std::size_t>& pivot_order);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dimension() const { return echelon_.rows.size(); }
  /// Reduced echelon basis; basis()[i] has entry 1 at pivots()[i] and 0 at
  /// every other pivot.
  const std::vector<Vector>& basis() const { return echelon_.rows; }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }

  /// v minus its projection along the echelon basis; zero iff v is inside.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }

 private:
  Field field_;
  std::size_t ambient_;
  EchelonForm echelon_;
};

}  // namespace deq

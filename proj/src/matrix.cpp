#include "deq/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace deq {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw std::invalid_argument("operands live in different fields");
}

}  // namespace

Vector::Vector(Field field, std::size_t size) : field_(std::move(field)), data_(size, field_.zero()) {}

Vector::Vector(Field field, std::vector<Scalar> entries) : field_(std::move(field)), data_(std::move(entries)) {
  for (const auto& s : data_) {
    if (!field_.owns(s)) throw std::invalid_argument("vector entry outside the declared field");
  }
}

Vector Vector::unit(const Field& field, std::size_t size, std::size_t index) {
  Vector v(field, size);
  v[index] = field.one();
  return v;
}

bool Vector::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

Vector Vector::scaled(const Scalar& s) const {
  Vector out = *this;
  for (auto& x : out.data_) {
    if (!x.is_zero()) x *= s;
  }
  return out;
}

void Vector::add_scaled(const Scalar& s, const Vector& b) {
  if (b.size() != size()) throw std::invalid_argument("vector size mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!b.data_[i].is_zero()) data_[i] += s * b.data_[i];
  }
}

Vector kronecker(const Vector& a, const Vector& b) {
  require_same_field(a.field(), b.field());
  Vector out(a.field(), a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  data_.assign(rows * cols, field_.zero());
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix");
  Matrix m(field, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = field.parse(rows[r][c]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  require_same_field(a.field_, b.field_);
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) {
    if (!x.is_zero()) x *= s;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
      }
    }
  }
  return out;
}

EchelonForm row_reduce(const std::vector<Vector>& input, std::size_t width) {
  std::vector<Vector> rows = input;
  EchelonForm out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    const Scalar inv = rows[next][col].inverse();
    rows[next] = rows[next].scaled(inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      const Scalar f = -rows[r][col];
      rows[r].add_scaled(f, rows[next]);
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next, Vector(input.empty() ? Field::rationals() : input.front().field(), width));
  out.rows = std::move(rows);
  return out;
}

EchelonForm row_reduce(const Matrix& a) {
  std::vector<Vector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return row_reduce(rows, a.cols());
}

EchelonForm row_reduce_ordered(const std::vector<Vector>& input, std::size_t width,
                               const std::vector<std::size_t>& pivot_order) {
  if (pivot_order.size() != width) throw std::invalid_argument("pivot order has the wrong length");
  std::vector<bool> seen(width, false);
  for (auto c : pivot_order) {
    if (c >= width || seen[c]) throw std::invalid_argument("pivot order is not a permutation");
    seen[c] = true;
  }
  std::vector<Vector> permuted;
  permuted.reserve(input.size());
  for (const auto& v : input) {
    if (v.size() != width) throw std::invalid_argument("row has the wrong width");
    Vector p(v.field(), width);
    for (std::size_t k = 0; k < width; ++k) p[k] = v[pivot_order[k]];
    permuted.push_back(std::move(p));
  }
  EchelonForm e = row_reduce(permuted, width);
  for (auto& row : e.rows) {
    Vector back(row.field(), width);
    for (std::size_t k = 0; k < width; ++k) back[pivot_order[k]] = row[k];
    row = std::move(back);
  }
  for (auto& p : e.pivots) p = pivot_order[p];
  return e;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: A has " + std::to_string(a.rows()) +
                                                        " rows but b has " + std::to_string(b.size()));
  require_same_field(a.field(), b.field());
  std::vector<Vector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector aug(a.field(), a.cols() + 1);
    for (std::size_t c = 0; c < a.cols(); ++c) aug[c] = a(r, c);
    aug[a.cols()] = b[r];
    rows.push_back(std::move(aug));
  }
  const EchelonForm e = row_reduce(rows, a.cols() + 1);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.field(), a.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = e.rows[i][a.cols()];
  return x;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  const EchelonForm e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.field(), a.cols());
    v[free] = a.field().one();
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> matrix_inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("matrix_inverse: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Vector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector aug(a.field(), 2 * n);
    for (std::size_t c = 0; c < n; ++c) aug[c] = a(r, c);
    aug[n + r] = a.field().one();
    rows.push_back(std::move(aug));
  }
  const EchelonForm e = row_reduce(rows, 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rows[r][n + c];
  }
  return inv;
}

Subspace::Subspace(Field field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

Subspace::Subspace(Field field, std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : field_(std::move(field)), ambient_(ambient_dim) {
  for (const auto& v : spanning) {
    if (v.size() != ambient_) throw std::invalid_argument("spanning vector has wrong dimension");
    require_same_field(field_, v.field());
  }
  echelon_ = row_reduce(spanning, ambient_);
}

Subspace::Subspace(Field field, std::size_t ambient_dim, const std::vector<Vector>& spanning,
                   const std::vector<std::size_t>& pivot_order)
    : field_(std::move(field)), ambient_(ambient_dim) {
  for (const auto& v : spanning) require_same_field(field_, v.field());
  echelon_ = row_reduce_ordered(spanning, ambient_, pivot_order);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector has wrong dimension for subspace");
  Vector r = v;
  for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
    const Scalar& x = r[echelon_.pivots[i]];
    if (!x.is_zero()) r.add_scaled(-x, echelon_.rows[i]);
  }
  return r;
}

}  // namespace deq

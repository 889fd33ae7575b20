#include "homleib/matrix.hpp"

#include <sstream>

namespace homleib {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::from_ints(const Field& f, std::size_t rows, std::size_t cols,
                         const std::vector<std::int64_t>& entries) {
  if (entries.size() != rows * cols) throw DimensionError("entry count mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i)
    m.data_[i] = Scalar::from_int(f, entries[i]);
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.field() != field_) throw FieldMismatchError("matrix entry field mismatch");
  data_[i * cols_ + j] = v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatchError("matrix product field mismatch");
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c.set(i, j, c.at(i, j) + aik * b.at(k, j));
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  return a + b.scaled(-Scalar::one(b.field()));
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& v : m.data_) v = v * c;
  return m;
}

Matrix Matrix::power(unsigned long e) const {
  if (rows_ != cols_) throw DimensionError("power of a non-square matrix");
  Matrix acc = identity(field_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1UL;
  }
  return acc;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

Matrix Matrix::unflatten(const Field& f, std::size_t rows, std::size_t cols,
                         const std::vector<Scalar>& flat) {
  if (flat.size() != rows * cols) throw DimensionError("unflatten size mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, flat[i * cols + j]);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  const Field& f = a.field();
  Scalar prev_pivot = Scalar::one(f);
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) {
        Scalar tmp = a.at(r, j);
        a.set(r, j, a.at(p, j));
        a.set(p, j, tmp);
      }
    const Scalar pivot = a.at(r, c);
    // Bareiss step: a[i][j] <- (pivot*a[i][j] - a[i][c]*a[r][j]) / prev_pivot
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar f_ic = a.at(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        Scalar v = pivot * a.at(i, j) - f_ic * a.at(r, j);
        a.set(i, j, v / prev_pivot);
      }
    }
    prev_pivot = pivot;
    pivot_cols.push_back(c);
    ++r;
  }
  // Normalize to leading-1 rows and eliminate above the pivots.
  for (std::size_t k = pivot_cols.size(); k-- > 0;) {
    const std::size_t c = pivot_cols[k];
    const Scalar inv = a.at(k, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) a.set(k, j, a.at(k, j) * inv);
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar f_ic = a.at(i, c);
      if (f_ic.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) a.set(i, j, a.at(i, j) - f_ic * a.at(k, j));
    }
  }
  return {a, r};
}

std::size_t rank(const Matrix& m) { return rref(m).second; }

Matrix nullspace_basis(const Matrix& m) {
  auto [r, rk] = rref(m);
  const std::size_t cols = m.cols();
  const Field& f = m.field();
  std::vector<std::size_t> pivot_col(rk);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < rk; ++i) {
    std::size_t c = 0;
    while (c < cols && r.at(i, c).is_zero()) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Matrix basis(f, cols - rk, cols);
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    basis.set(row, c, Scalar::one(f));
    for (std::size_t i = 0; i < rk; ++i) basis.set(row, pivot_col[i], -r.at(i, c));
    ++row;
  }
  return rref(basis).first;
}

}  // namespace homleib

#ifndef HOMLEIB_MATRIX_HPP
#define HOMLEIB_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "homleib/scalar.hpp"

namespace homleib {

/// Dense matrix over one exact field. All entries share the field.
class Matrix {
public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  /// Row-major list of integer entries, for terse test/catalog literals.
  static Matrix from_ints(const Field& f, std::size_t rows, std::size_t cols,
                          const std::vector<std::int64_t>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v);

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& c) const;
  Matrix power(unsigned long e) const;  // square matrices; e = 0 gives identity
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  /// Row-major flattening, the convention used for operator subspaces.
  std::vector<Scalar> flatten() const { return data_; }
  static Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols,
                          const std::vector<Scalar>& flat);

  std::string to_string() const;

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form. Elimination is fraction-free (Bareiss) to bound
/// intermediate growth over Q, followed by normalization to leading-1 rref.
/// Pivoting is deterministic: first row with a nonzero entry in column order.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical basis of {x : m x = 0}, rows of the returned matrix, themselves
/// in rref. Row count = cols(m) - rank(m).
Matrix nullspace_basis(const Matrix& m);

}  // namespace homleib

#endif

#ifndef HOMLEIB_SUBSPACE_HPP
#define HOMLEIB_SUBSPACE_HPP

#include <vector>

#include "homleib/matrix.hpp"

namespace homleib {

/// A linear subspace of F^n in canonical form: the basis rows are in reduced
/// row echelon form, so equal subspaces have identical representations.
class Subspace {
public:
  /// The zero subspace of F^n.
  Subspace(const Field& f, std::size_t ambient_dim);
  /// Span of the rows of `generators` (rref-canonicalized, zero rows dropped).
  static Subspace span_of_rows(const Matrix& generators);
  static Subspace span(const Field& f, std::size_t ambient_dim,
                       const std::vector<std::vector<Scalar>>& generators);
  static Subspace full(const Field& f, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Field& field() const { return basis_.field(); }
  /// dim x ambient matrix whose rows are the canonical basis.
  const Matrix& basis() const { return basis_; }
  std::vector<Scalar> basis_vector(std::size_t i) const;

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;

  friend Subspace subspace_sum(const Subspace& a, const Subspace& b);
  friend Subspace subspace_intersect(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  static void require_compatible(const Subspace& a, const Subspace& b);
  std::size_t ambient_;
  Matrix basis_;
};

/// All u in the n x n matrix space with u*alpha = alpha*u, as a subspace of
/// F^(n^2) under row-major flattening.
Subspace commutant(const Matrix& alpha);

}  // namespace homleib

#endif

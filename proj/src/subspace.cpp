#include "homleib/subspace.hpp"

namespace homleib {

Subspace::Subspace(const Field& f, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(f, 0, ambient_dim) {}

Subspace Subspace::span_of_rows(const Matrix& generators) {
  auto [r, rk] = rref(generators);
  Matrix basis(r.field(), rk, r.cols());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) basis.set(i, j, r.at(i, j));
  Subspace s(r.field(), r.cols());
  s.basis_ = basis;
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t ambient_dim,
                        const std::vector<std::vector<Scalar>>& generators) {
  Matrix g(f, generators.size(), ambient_dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient_dim) throw DimensionError("generator length mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) g.set(i, j, generators[i][j]);
  }
  return span_of_rows(g);
}

Subspace Subspace::full(const Field& f, std::size_t ambient_dim) {
  return span_of_rows(Matrix::identity(f, ambient_dim));
}

std::vector<Scalar> Subspace::basis_vector(std::size_t i) const {
  std::vector<Scalar> v(ambient_, Scalar::zero(field()));
  for (std::size_t j = 0; j < ambient_; ++j) v[j] = basis_.at(i, j);
  return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw DimensionError("vector/ambient mismatch");
  // reduce v against the rref basis; membership iff the residue vanishes
  std::vector<Scalar> w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t c = 0;
    while (c < ambient_ && basis_.at(i, c).is_zero()) ++c;
    if (c == ambient_) continue;
    const Scalar coef = w[c];  // pivot entries are 1
    if (coef.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= coef * basis_.at(i, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

void Subspace::require_compatible(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field()) throw FieldMismatchError("subspace field mismatch");
  if (a.ambient_ != b.ambient_) throw DimensionError("subspace ambient dimension mismatch");
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  Subspace::require_compatible(a, b);
  Matrix stacked(a.field(), a.dim() + b.dim(), a.ambient_);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_; ++j) stacked.set(i, j, a.basis_.at(i, j));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_; ++j) stacked.set(a.dim() + i, j, b.basis_.at(i, j));
  return Subspace::span_of_rows(stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  // Zassenhaus: rref of [[A A],[B 0]]; rows with zero left block carry a basis
  // of the intersection in the right block.
  Subspace::require_compatible(a, b);
  const std::size_t n = a.ambient_;
  Matrix big(a.field(), a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      big.set(i, j, a.basis_.at(i, j));
      big.set(i, n + j, a.basis_.at(i, j));
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) big.set(a.dim() + i, j, b.basis_.at(i, j));
  auto [r, rk] = rref(big);
  std::vector<std::vector<Scalar>> gens;
  for (std::size_t i = 0; i < rk; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (!r.at(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    std::vector<Scalar> v(n, Scalar::zero(a.field()));
    for (std::size_t j = 0; j < n; ++j) v[j] = r.at(i, n + j);
    gens.push_back(std::move(v));
  }
  return Subspace::span(a.field(), n, gens);
}

bool operator==(const Subspace& a, const Subspace& b) {
  Subspace::require_compatible(a, b);
  return a.basis_ == b.basis_;
}

Subspace commutant(const Matrix& alpha) {
  if (alpha.rows() != alpha.cols()) throw DimensionError("commutant of a non-square matrix");
  const std::size_t n = alpha.rows();
  const Field& f = alpha.field();
  // rows: (u*alpha - alpha*u)_{ij} = sum_k u_{ik} a_{kj} - a_{ik} u_{kj}
  Matrix sys(f, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        sys.set(row, i * n + k, sys.at(row, i * n + k) + alpha.at(k, j));
        sys.set(row, k * n + j, sys.at(row, k * n + j) - alpha.at(i, k));
      }
    }
  return Subspace::span_of_rows(nullspace_basis(sys));
}

}  // namespace homleib

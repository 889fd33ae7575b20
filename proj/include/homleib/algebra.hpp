#ifndef HOMLEIB_ALGEBRA_HPP
#define HOMLEIB_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "homleib/matrix.hpp"

namespace homleib {

/// Coordinate vector of an algebra element in the chosen basis.
struct Element {
  std::vector<Scalar> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
  std::string to_string(const std::vector<std::string>& names) const;
};

/// Outcome of an identity check. `holds` iff no witness; the witness is the
/// lexicographically first basis tuple violating the identity, together with
/// the two evaluated sides.
struct CheckReport {
  std::string identity;
  bool holds = true;
  struct Witness {
    std::vector<std::size_t> indices;  // 1-based basis indices
    Element lhs, rhs;
  };
  std::optional<Witness> first_witness;

  std::string to_string() const;
};

/// A finite-dimensional algebra with structure constants c_{ij}^k, a twisting
/// map alpha and an optional Z2 grading (absent = all basis vectors even).
class HomAlgebra {
public:
  /// brackets: list of (i, j, value) with 1-based basis indices; unlisted
  /// pairs are zero. Construction validates field consistency and, when a
  /// parity vector is given, evenness of alpha and of the bracket.
  HomAlgebra(const Field& field, std::size_t dim,
             const std::vector<std::tuple<std::size_t, std::size_t, std::vector<Scalar>>>& brackets,
             Matrix alpha, std::optional<std::vector<int>> parity = std::nullopt,
             std::optional<std::vector<std::string>> basis_names = std::nullopt);

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  const Matrix& alpha() const { return alpha_; }
  bool graded() const { return parity_.has_value(); }
  /// Parity of basis vector i (0-based); 0 when ungraded.
  int parity_of(std::size_t i) const { return parity_ ? (*parity_)[i] : 0; }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }

  Element zero() const { return Element{std::vector<Scalar>(dim_, Scalar::zero(field_))}; }
  Element basis_element(std::size_t i) const;
  Element element(const std::vector<Scalar>& coords) const;
  Element element_from_ints(const std::vector<std::int64_t>& coords) const;

  Element bracket(const Element& x, const Element& y) const;
  Element apply_alpha(const Element& x, unsigned long r = 1) const;
  /// alpha^r as a matrix (r = 0 gives the identity).
  Matrix alpha_power(unsigned long r) const { return alpha_.power(r); }

private:
  Field field_;
  std::size_t dim_;
  std::vector<Scalar> sc_;
  Matrix alpha_;
  std::optional<std::vector<int>> parity_;
  std::vector<std::string> names_;
};

CheckReport is_multiplicative(const HomAlgebra& a);
CheckReport check_left_hom_leibniz(const HomAlgebra& a);
CheckReport check_right_hom_leibniz(const HomAlgebra& a);
/// Left and right together; for left algebras also cross-validated against
/// the one-line symmetry criterion (disagreement would be a solver bug and
/// throws).
CheckReport check_symmetric(const HomAlgebra& a);
CheckReport check_hom_lie(const HomAlgebra& a);

/// [[x,y], alpha(z)] - [alpha(x), [y,z]]
Element hom_associator(const HomAlgebra& a, const Element& x, const Element& y, const Element& z);

/// Twist of an untwisted algebra (alpha = id) by an endomorphism beta:
/// new bracket [x,y]' = [beta x, beta y], new twisting map beta. The
/// endomorphism property is validated on all basis pairs.
HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& beta);

/// The tensor-square algebra on basis e_i (x) e_j, index (i-1)*n + j, with
/// bracket [x(x)y, a(x)b] = [ax,[aa,ab]](x)ay + ax(x)[ay,[aa,ab]] (a = alpha)
/// and twisting map alpha (x) alpha. Requires a Hom-Lie input whose alpha is
/// a bracket endomorphism; the output satisfies the right identity.
HomAlgebra tensor_square_leibniz(const HomAlgebra& g);

}  // namespace homleib

#endif

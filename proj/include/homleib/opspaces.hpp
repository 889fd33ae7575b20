#ifndef HOMLEIB_OPSPACES_HPP
#define HOMLEIB_OPSPACES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "homleib/algebra.hpp"
#include "homleib/subspace.hpp"

namespace homleib {

enum class OperatorKind { generalized, derivation, left_centroid, centroid, central_derivation };

/// A solved space of n x n operator matrices (flattened row-major into F^(n^2)).
/// Every basis matrix commutes with alpha and satisfies the defining identity
/// of its kind on all basis pairs; this is re-verified after solving.
struct OperatorSpace {
  OperatorKind kind;
  unsigned long r = 0;
  std::optional<std::array<Scalar, 3>> params;  // lambda, mu, gamma
  std::optional<int> parity;                    // set for a single-parity graded block
  std::size_t n = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  std::vector<Matrix> basis_matrices() const;
};

/// Solutions d of  lambda d([x,y]) = mu [d(x), a^r(y)] + gamma sign [a^r(x), d(y)]
/// inside the commutant of alpha, on all basis pairs. In the graded case the
/// space is solved per parity of d (sign = (-1)^{|d||x|}) and the two blocks
/// are summed; pass `parity` to get a single homogeneous block.
OperatorSpace generalized_derivation_space(const HomAlgebra& a, unsigned long r,
                                           const Scalar& lambda, const Scalar& mu,
                                           const Scalar& gamma,
                                           std::optional<int> parity = std::nullopt);

/// The stacked constraint matrix the generalized solver row-reduces: n^2
/// commutation rows, then one row per basis pair and output coordinate,
/// assembled by direct evaluation of the defining identity at matrix units.
Matrix generalized_system_matrix(const HomAlgebra& a, unsigned long r, const Scalar& lambda,
                                 const Scalar& mu, const Scalar& gamma,
                                 std::optional<int> parity = std::nullopt);

/// (1,1,1): twisted derivations.
OperatorSpace derivation_space(const HomAlgebra& a, unsigned long r,
                               std::optional<int> parity = std::nullopt);

/// Per-power spaces Der_{alpha^0}, ..., Der_{alpha^kmax}; the unbounded direct
/// sum is never materialized.
std::vector<OperatorSpace> derivation_spaces_up_to(const HomAlgebra& a, unsigned long kmax = 3);

/// (1,1,0): maps with d([x,y]) = [d(x), a^r(y)]. This one-sided space is what
/// the bundled reference tables list under Gamma.
OperatorSpace left_centroid_space(const HomAlgebra& a, unsigned long r,
                                  std::optional<int> parity = std::nullopt);

/// Both one-sided families at once: d([x,y]) = [d(x), a^r(y)] = sign [a^r(x), d(y)].
OperatorSpace centroid_space(const HomAlgebra& a, unsigned long r,
                             std::optional<int> parity = std::nullopt);

/// All three expressions vanish: d([x,y]) = [d(x),a^r(y)] = [a^r(x),d(y)] = 0.
OperatorSpace central_derivation_space(const HomAlgebra& a, unsigned long r,
                                       std::optional<int> parity = std::nullopt);

/// Matrix of x -> [a, alpha^k(x)]. Requires alpha(a) = a (checked exactly).
Matrix inner_derivation_ad(const HomAlgebra& alg, const Element& a, unsigned long k);
/// Matrix of x -> (-1)^{|a||x|} [alpha^k(x), a]. Requires alpha(a) = a and,
/// in the graded case, homogeneous a.
Matrix inner_derivation_Ad(const HomAlgebra& alg, const Element& a, unsigned long k);

/// Super-commutator u v - (-1)^{|u||v|} v u.
Matrix operator_bracket(const Matrix& u, const Matrix& v, int parity_u = 0, int parity_v = 0);
/// Composition with the twisting map: u -> alpha o u.
Matrix alpha_tilde(const HomAlgebra& alg, const Matrix& u);

/// A finite set of operator matrices with parities, viewed as generating a
/// Lie (super)algebra under the super-commutator.
struct OperatorLieAlgebra {
  std::size_t n = 0;
  std::vector<Matrix> basis;
  std::vector<int> parities;  // empty = all even

  int parity_of(std::size_t i) const { return parities.empty() ? 0 : parities[i]; }
  Subspace span() const;
};

bool is_closed_under_bracket(const OperatorLieAlgebra& ops);
/// L^1 = span(ops), L^{m+1} = span{[x,y]' : x in ops, y in L^m}, until stable.
/// Throws PreconditionError when ops is not closed.
std::vector<Subspace> lower_central_series(const OperatorLieAlgebra& ops);
bool is_nilpotent(const OperatorLieAlgebra& ops);

/// Der_{alpha^0}(L) is a nilpotent Lie algebra.
bool is_characteristically_nilpotent(const HomAlgebra& a);

/// Gamma_{alpha^0}(L) = ZDer_{alpha^0}(L) + scalars, with Gamma taken as the
/// one-sided space the reference tables use.
bool is_small_centroid(const HomAlgebra& a);

/// Structure checks run for all k, l <= kmax:
///  (i)   Phi o d is an alpha^{k+l}-derivation for Phi in C_{alpha^l}, d in Der_{alpha^k}
///  (ii)  [Phi, d]' lies in C_{alpha^{k+l}}
///  (iii) ZDer_{alpha^k} = Der_{alpha^k} ∩ C_{alpha^k}
///  (iv)  ad_0(a) lies in Der_{alpha^1} for every alpha-fixed a (left algebras)
struct StructureReport {
  bool all_passed = true;
  std::vector<std::string> failures;
};
StructureReport verify_structure_theorems(const HomAlgebra& a, unsigned long kmax);

/// Basis of the fixed space {x : alpha(x) = x}.
std::vector<Element> alpha_fixed_basis(const HomAlgebra& a);

}  // namespace homleib

#endif

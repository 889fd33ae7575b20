#include "homleib/opspaces.hpp"

#include <sstream>

namespace homleib {

namespace {

// E_{uv} applied to a coordinate vector: picks coordinate v into slot u.
Element apply_unit(const HomAlgebra& a, std::size_t u, std::size_t v, const Element& x) {
  Element y = a.zero();
  y.coords[u] = x.coords[v];
  return y;
}

int unit_parity(const HomAlgebra& a, std::size_t u, std::size_t v) {
  return (a.parity_of(u) + a.parity_of(v)) % 2;
}

struct IdentityRows {
  Scalar lambda, mu, gamma;
};

// Stacked exact system over the n^2 unknowns d_{uv} (row-major columns):
// commutation with alpha, one block of identity rows per entry of `families`,
// and, for homogeneous graded d, the parity-pattern rows. Columns are built by
// direct evaluation of each expression at the matrix units E_{uv}.
Matrix build_system(const HomAlgebra& a, unsigned long r, const std::vector<IdentityRows>& families,
                    std::optional<int> dparity) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  const Matrix ar = a.alpha_power(r);
  const std::size_t ncols = n * n;
  const std::size_t nrows = ncols + families.size() * n * n * n +
                            (dparity && a.graded() ? ncols : 0);
  Matrix sys(f, nrows, ncols);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t col = u * n + v;
      // commutation rows: entries of E_{uv} alpha - alpha E_{uv}
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Scalar val = Scalar::zero(f);
          if (i == u) val += a.alpha().at(v, j);
          val -= a.alpha().at(i, u) * (v == j ? Scalar::one(f) : Scalar::zero(f));
          sys.set(i * n + j, col, val);
        }
      std::size_t row = ncols;
      for (const auto& fam : families) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const Element ei = a.basis_element(i), ej = a.basis_element(j);
            Element value = a.zero();
            if (!fam.lambda.is_zero()) {
              Element t = apply_unit(a, u, v, a.bracket(ei, ej));
              for (std::size_t s = 0; s < n; ++s) value.coords[s] += fam.lambda * t.coords[s];
            }
            if (!fam.mu.is_zero()) {
              Element t = a.bracket(apply_unit(a, u, v, ei), Element{ar.apply(ej.coords)});
              for (std::size_t s = 0; s < n; ++s) value.coords[s] -= fam.mu * t.coords[s];
            }
            if (!fam.gamma.is_zero()) {
              Element t = a.bracket(Element{ar.apply(ei.coords)}, apply_unit(a, u, v, ej));
              Scalar sign = Scalar::one(f);
              if (dparity && *dparity == 1 && a.parity_of(i) == 1) sign = -sign;
              for (std::size_t s = 0; s < n; ++s) value.coords[s] -= fam.gamma * sign * t.coords[s];
            }
            for (std::size_t s = 0; s < n; ++s) sys.set(row + (i * n + j) * n + s, col, value.coords[s]);
          }
        row += n * n * n;
      }
      if (dparity && a.graded() && unit_parity(a, u, v) != *dparity)
        sys.set(row + col, col, Scalar::one(f));
    }
  return sys;
}

Subspace solve(const HomAlgebra& a, unsigned long r, const std::vector<IdentityRows>& families,
               std::optional<int> dparity) {
  return Subspace::span_of_rows(nullspace_basis(build_system(a, r, families, dparity)));
}

void verify_member(const HomAlgebra& a, unsigned long r, const std::vector<IdentityRows>& families,
                   int dparity, const Matrix& m) {
  const std::size_t n = a.dim();
  const Matrix ar = a.alpha_power(r);
  if (m * a.alpha() != a.alpha() * m) throw Error("internal: solved operator leaves the commutant");
  for (const auto& fam : families)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Element ei = a.basis_element(i), ej = a.basis_element(j);
        std::vector<Scalar> lhs(n, Scalar::zero(a.field()));
        Element t1{m.apply(a.bracket(ei, ej).coords)};
        Element t2 = a.bracket(Element{m.apply(ei.coords)}, Element{ar.apply(ej.coords)});
        Element t3 = a.bracket(Element{ar.apply(ei.coords)}, Element{m.apply(ej.coords)});
        Scalar sign = Scalar::one(a.field());
        if (dparity == 1 && a.parity_of(i) == 1) sign = -sign;
        for (std::size_t s = 0; s < n; ++s) {
          Scalar v = fam.lambda * t1.coords[s] - fam.mu * t2.coords[s] - fam.gamma * sign * t3.coords[s];
          if (!v.is_zero()) throw Error("internal: solved operator violates its defining identity");
        }
      }
}

OperatorSpace make_space(const HomAlgebra& a, OperatorKind kind, unsigned long r,
                         const std::vector<IdentityRows>& families,
                         std::optional<std::array<Scalar, 3>> params, std::optional<int> parity) {
  OperatorSpace out{kind, r, std::move(params), parity, a.dim(), Subspace(a.field(), a.dim() * a.dim())};
  if (!a.graded() || parity.has_value()) {
    const int dp = parity.value_or(0);
    out.space = solve(a, r, families, a.graded() ? parity : std::nullopt);
    for (const auto& m : out.basis_matrices()) verify_member(a, r, families, a.graded() ? dp : 0, m);
    return out;
  }
  // graded: solve homogeneous blocks and sum; re-verify blocks separately
  Subspace even = solve(a, r, families, 0);
  Subspace odd = solve(a, r, families, 1);
  for (std::size_t i = 0; i < even.dim(); ++i)
    verify_member(a, r, families, 0, Matrix::unflatten(a.field(), a.dim(), a.dim(), even.basis_vector(i)));
  for (std::size_t i = 0; i < odd.dim(); ++i)
    verify_member(a, r, families, 1, Matrix::unflatten(a.field(), a.dim(), a.dim(), odd.basis_vector(i)));
  out.space = subspace_sum(even, odd);
  return out;
}

}  // namespace

std::vector<Matrix> OperatorSpace::basis_matrices() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < space.dim(); ++i)
    out.push_back(Matrix::unflatten(space.field(), n, n, space.basis_vector(i)));
  return out;
}

Matrix generalized_system_matrix(const HomAlgebra& a, unsigned long r, const Scalar& lambda,
                                 const Scalar& mu, const Scalar& gamma,
                                 std::optional<int> parity) {
  std::vector<IdentityRows> fams{{lambda, mu, gamma}};
  return build_system(a, r, fams, a.graded() ? parity : std::nullopt);
}

OperatorSpace generalized_derivation_space(const HomAlgebra& a, unsigned long r,
                                           const Scalar& lambda, const Scalar& mu,
                                           const Scalar& gamma, std::optional<int> parity) {
  std::vector<IdentityRows> fams{{lambda, mu, gamma}};
  return make_space(a, OperatorKind::generalized, r, fams,
                    std::array<Scalar, 3>{lambda, mu, gamma}, parity);
}

OperatorSpace derivation_space(const HomAlgebra& a, unsigned long r, std::optional<int> parity) {
  const Scalar one = Scalar::one(a.field());
  std::vector<IdentityRows> fams{{one, one, one}};
  OperatorSpace s = make_space(a, OperatorKind::derivation, r, fams, std::nullopt, parity);
  return s;
}

std::vector<OperatorSpace> derivation_spaces_up_to(const HomAlgebra& a, unsigned long kmax) {
  std::vector<OperatorSpace> out;
  for (unsigned long k = 0; k <= kmax; ++k) out.push_back(derivation_space(a, k));
  return out;
}

OperatorSpace left_centroid_space(const HomAlgebra& a, unsigned long r, std::optional<int> parity) {
  const Scalar one = Scalar::one(a.field()), zero = Scalar::zero(a.field());
  std::vector<IdentityRows> fams{{one, one, zero}};
  return make_space(a, OperatorKind::left_centroid, r, fams, std::nullopt, parity);
}

OperatorSpace centroid_space(const HomAlgebra& a, unsigned long r, std::optional<int> parity) {
  const Scalar one = Scalar::one(a.field()), zero = Scalar::zero(a.field());
  std::vector<IdentityRows> fams{{one, one, zero}, {one, zero, one}};
  return make_space(a, OperatorKind::centroid, r, fams, std::nullopt, parity);
}

OperatorSpace central_derivation_space(const HomAlgebra& a, unsigned long r,
                                       std::optional<int> parity) {
  const Scalar one = Scalar::one(a.field()), zero = Scalar::zero(a.field());
  std::vector<IdentityRows> fams{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}};
  return make_space(a, OperatorKind::central_derivation, r, fams, std::nullopt, parity);
}

namespace {
void require_alpha_fixed(const HomAlgebra& alg, const Element& a) {
  Element img = alg.apply_alpha(a);
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (img.coords[i] != a.coords[i])
      throw PreconditionError("inner derivation requires alpha(a) = a");
}

int homogeneous_parity(const HomAlgebra& alg, const Element& a) {
  if (!alg.graded()) return 0;
  std::optional<int> p;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (a.coords[i].is_zero()) continue;
    if (!p)
      p = alg.parity_of(i);
    else if (*p != alg.parity_of(i))
      throw PreconditionError("inner derivation requires a homogeneous element");
  }
  return p.value_or(0);
}
}  // namespace

Matrix inner_derivation_ad(const HomAlgebra& alg, const Element& a, unsigned long k) {
  require_alpha_fixed(alg, a);
  homogeneous_parity(alg, a);
  Matrix m(alg.field(), alg.dim(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    Element col = alg.bracket(a, alg.apply_alpha(alg.basis_element(j), k));
    for (std::size_t i = 0; i < alg.dim(); ++i) m.set(i, j, col.coords[i]);
  }
  return m;
}

Matrix inner_derivation_Ad(const HomAlgebra& alg, const Element& a, unsigned long k) {
  require_alpha_fixed(alg, a);
  const int pa = homogeneous_parity(alg, a);
  Matrix m(alg.field(), alg.dim(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    Element col = alg.bracket(alg.apply_alpha(alg.basis_element(j), k), a);
    Scalar sign = (pa == 1 && alg.parity_of(j) == 1) ? -Scalar::one(alg.field())
                                                     : Scalar::one(alg.field());
    for (std::size_t i = 0; i < alg.dim(); ++i) m.set(i, j, sign * col.coords[i]);
  }
  return m;
}

Matrix operator_bracket(const Matrix& u, const Matrix& v, int parity_u, int parity_v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw DimensionError("operator bracket needs equal square matrices");
  Matrix vu = v * u;
  if (parity_u == 1 && parity_v == 1) return u * v + vu;
  return u * v - vu;
}

Matrix alpha_tilde(const HomAlgebra& alg, const Matrix& u) { return alg.alpha() * u; }

Subspace OperatorLieAlgebra::span() const {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& m : basis) rows.push_back(m.flatten());
  if (basis.empty()) return Subspace(Field::rationals(), n * n);
  return Subspace::span(basis.front().field(), n * n, rows);
}

bool is_closed_under_bracket(const OperatorLieAlgebra& ops) {
  Subspace sp = ops.span();
  for (std::size_t i = 0; i < ops.basis.size(); ++i)
    for (std::size_t j = 0; j < ops.basis.size(); ++j) {
      Matrix b = operator_bracket(ops.basis[i], ops.basis[j], ops.parity_of(i), ops.parity_of(j));
      if (!sp.contains(b.flatten())) return false;
    }
  return true;
}

std::vector<Subspace> lower_central_series(const OperatorLieAlgebra& ops) {
  if (!is_closed_under_bracket(ops))
    throw PreconditionError("operator set is not closed under the bracket");
  std::vector<Subspace> series{ops.span()};
  std::vector<Matrix> cur = ops.basis;
  std::vector<int> cur_par = ops.parities;
  while (true) {
    std::vector<Matrix> next;
    std::vector<int> next_par;
    for (std::size_t i = 0; i < ops.basis.size(); ++i)
      for (std::size_t j = 0; j < cur.size(); ++j) {
        int pj = cur_par.empty() ? 0 : cur_par[j];
        next.push_back(operator_bracket(ops.basis[i], cur[j], ops.parity_of(i), pj));
        next_par.push_back((ops.parity_of(i) + pj) % 2);
      }
    std::vector<std::vector<Scalar>> rows;
    for (const auto& m : next) rows.push_back(m.flatten());
    Subspace nxt = ops.basis.empty() ? series.back()
                                     : Subspace::span(ops.basis.front().field(), ops.n * ops.n, rows);
    if (nxt == series.back()) break;
    series.push_back(nxt);
    cur = std::move(next);
    cur_par = std::move(next_par);
    if (nxt.dim() == 0) break;
  }
  return series;
}

bool is_nilpotent(const OperatorLieAlgebra& ops) {
  return lower_central_series(ops).back().dim() == 0;
}

bool is_characteristically_nilpotent(const HomAlgebra& a) {
  OperatorSpace der = derivation_space(a, 0);
  OperatorLieAlgebra ops{a.dim(), der.basis_matrices(), {}};
  if (a.graded()) {
    // use homogeneous generators so the super-commutator signs are defined
    OperatorSpace even = derivation_space(a, 0, 0), odd = derivation_space(a, 0, 1);
    ops.basis.clear();
    ops.parities.clear();
    for (const auto& m : even.basis_matrices()) {
      ops.basis.push_back(m);
      ops.parities.push_back(0);
    }
    for (const auto& m : odd.basis_matrices()) {
      ops.basis.push_back(m);
      ops.parities.push_back(1);
    }
  }
  return is_nilpotent(ops);
}

bool is_small_centroid(const HomAlgebra& a) {
  OperatorSpace gamma = left_centroid_space(a, 0);
  OperatorSpace zder = central_derivation_space(a, 0);
  Subspace idspan = Subspace::span(a.field(), a.dim() * a.dim(),
                                   {Matrix::identity(a.field(), a.dim()).flatten()});
  return gamma.space == subspace_sum(zder.space, idspan);
}

std::vector<Element> alpha_fixed_basis(const HomAlgebra& a) {
  Matrix m = a.alpha() - Matrix::identity(a.field(), a.dim());
  Matrix ns = nullspace_basis(m);
  std::vector<Element> out;
  for (std::size_t i = 0; i < ns.rows(); ++i) {
    std::vector<Scalar> v;
    for (std::size_t j = 0; j < a.dim(); ++j) v.push_back(ns.at(i, j));
    out.push_back(Element{v});
  }
  return out;
}

namespace {
// Homogeneous generators of a solved space: one all-even block when ungraded,
// the per-parity blocks otherwise (the super-commutator needs parities).
template <typename Solver>
std::vector<std::pair<Matrix, int>> homogeneous_basis(const HomAlgebra& a, Solver solver,
                                                      unsigned long k) {
  std::vector<std::pair<Matrix, int>> out;
  if (!a.graded()) {
    for (const auto& m : solver(a, k, std::nullopt).basis_matrices()) out.emplace_back(m, 0);
    return out;
  }
  for (int p : {0, 1})
    for (const auto& m : solver(a, k, p).basis_matrices()) out.emplace_back(m, p);
  return out;
}
}  // namespace

StructureReport verify_structure_theorems(const HomAlgebra& a, unsigned long kmax) {
  StructureReport rep;
  auto fail = [&](const std::string& msg) {
    rep.all_passed = false;
    rep.failures.push_back(msg);
  };
  auto der_solver = [](const HomAlgebra& alg, unsigned long k, std::optional<int> p) {
    return derivation_space(alg, k, p);
  };
  auto cen_solver = [](const HomAlgebra& alg, unsigned long k, std::optional<int> p) {
    return centroid_space(alg, k, p);
  };
  std::vector<OperatorSpace> der, cen, zder;
  std::vector<std::vector<std::pair<Matrix, int>>> der_h, cen_h;
  for (unsigned long k = 0; k <= 2 * kmax; ++k) {
    der.push_back(derivation_space(a, k));
    cen.push_back(centroid_space(a, k));
    zder.push_back(central_derivation_space(a, k));
    der_h.push_back(homogeneous_basis(a, der_solver, k));
    cen_h.push_back(homogeneous_basis(a, cen_solver, k));
  }
  const Field& f = a.field();
  for (unsigned long k = 0; k <= kmax; ++k)
    for (unsigned long l = 0; l <= kmax; ++l) {
      for (const auto& [phi, pphi] : cen_h[l])
        for (const auto& [d, pd] : der_h[k]) {
          // (i) Phi o d in Der_{alpha^{k+l}}
          if (!der[k + l].space.contains((phi * d).flatten()))
            fail("Phi o d not a derivation at k=" + std::to_string(k) + " l=" + std::to_string(l));
          // (ii) [Phi, d]' in C_{alpha^{k+l}}
          if (!cen[k + l].space.contains(operator_bracket(phi, d, pphi, pd).flatten()))
            fail("[Phi,d]' not in the centroid at k=" + std::to_string(k) +
                 " l=" + std::to_string(l));
        }
    }
  // (iii) ZDer = Der ∩ C at each power
  for (unsigned long k = 0; k <= kmax; ++k) {
    if (subspace_intersect(der[k].space, cen[k].space) != zder[k].space)
      fail("ZDer != Der ∩ C at k=" + std::to_string(k));
  }
  // (iv) inner derivations of alpha-fixed elements land in Der_{alpha^1}.
  // Needs multiplicativity: alpha(ad_a(x)) = alpha([a,x]) = [a, alpha(x)] is what
  // puts ad_a inside the commutant in the first place.
  if (check_left_hom_leibniz(a).holds && is_multiplicative(a).holds) {
    std::vector<Element> fixed = alpha_fixed_basis(a);
    if (!a.graded()) {
      Element combo = a.zero();
      for (const auto& e : fixed)
        for (std::size_t i = 0; i < a.dim(); ++i) combo.coords[i] += e.coords[i];
      if (!fixed.empty()) fixed.push_back(combo);
    }
    for (const auto& e : fixed) {
      bool homogeneous = true;
      if (a.graded()) {
        std::optional<int> p;
        for (std::size_t i = 0; i < a.dim(); ++i) {
          if (e.coords[i].is_zero()) continue;
          if (!p) p = a.parity_of(i);
          homogeneous = homogeneous && *p == a.parity_of(i);
        }
      }
      if (!homogeneous) continue;
      Matrix ad = inner_derivation_ad(a, e, 0);
      if (!der[1].space.contains(ad.flatten())) fail("ad_0(a) not in Der_{alpha^1}");
    }
  }
  // the identity map always lies in Gamma_{alpha^0}
  if (!left_centroid_space(a, 0).space.contains(Matrix::identity(f, a.dim()).flatten()))
    fail("identity map missing from Gamma_{alpha^0}");
  return rep;
}

}  // namespace homleib

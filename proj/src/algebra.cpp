#include "homleib/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace homleib {

std::string Element::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    if (any) os << " + ";
    std::string name = i < names.size() ? names[i] : "e" + std::to_string(i + 1);
    if (coords[i].is_one())
      os << name;
    else if ((-coords[i]).is_one())
      os << "-" << name;
    else
      os << "(" << coords[i].to_string() << ")*" << name;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

std::string CheckReport::to_string() const {
  std::ostringstream os;
  os << identity << ": " << (holds ? "holds" : "fails");
  if (first_witness) {
    os << " at (";
    for (std::size_t i = 0; i < first_witness->indices.size(); ++i)
      os << (i ? "," : "") << "e" << first_witness->indices[i];
    os << ")";
  }
  return os.str();
}

HomAlgebra::HomAlgebra(
    const Field& field, std::size_t dim,
    const std::vector<std::tuple<std::size_t, std::size_t, std::vector<Scalar>>>& brackets,
    Matrix alpha, std::optional<std::vector<int>> parity,
    std::optional<std::vector<std::string>> basis_names)
    : field_(field),
      dim_(dim),
      sc_(dim * dim * dim, Scalar::zero(field)),
      alpha_(std::move(alpha)),
      parity_(std::move(parity)) {
  if (alpha_.rows() != dim_ || alpha_.cols() != dim_)
    throw DimensionError("alpha must be dim x dim");
  if (alpha_.field() != field_) throw FieldMismatchError("alpha field mismatch");
  for (const auto& [i, j, value] : brackets) {
    if (i < 1 || i > dim_ || j < 1 || j > dim_) throw DimensionError("bracket index out of range");
    if (value.size() != dim_) throw DimensionError("bracket value length mismatch");
    for (std::size_t k = 0; k < dim_; ++k) {
      if (value[k].field() != field_) throw FieldMismatchError("structure constant field mismatch");
      sc_[((i - 1) * dim_ + (j - 1)) * dim_ + k] = value[k];
    }
  }
  if (parity_) {
    if (parity_->size() != dim_) throw DimensionError("parity vector length mismatch");
    for (int p : *parity_)
      if (p != 0 && p != 1) throw PreconditionError("parity entries must be 0 or 1");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        if ((*parity_)[i] != (*parity_)[j] && !alpha_.at(i, j).is_zero())
          throw PreconditionError("twisting map must be even");
        for (std::size_t k = 0; k < dim_; ++k)
          if (((*parity_)[i] + (*parity_)[j]) % 2 != (*parity_)[k] && !sc(i, j, k).is_zero())
            throw PreconditionError("bracket must be even with respect to the grading");
      }
  }
  if (basis_names) {
    if (basis_names->size() != dim_) throw DimensionError("basis name count mismatch");
    names_ = std::move(*basis_names);
  } else {
    for (std::size_t i = 1; i <= dim_; ++i) names_.push_back("e" + std::to_string(i));
  }
}

Element HomAlgebra::basis_element(std::size_t i) const {
  Element e = zero();
  e.coords[i] = Scalar::one(field_);
  return e;
}

Element HomAlgebra::element(const std::vector<Scalar>& coords) const {
  if (coords.size() != dim_) throw DimensionError("element coordinate length mismatch");
  for (const auto& c : coords)
    if (c.field() != field_) throw FieldMismatchError("element field mismatch");
  return Element{coords};
}

Element HomAlgebra::element_from_ints(const std::vector<std::int64_t>& coords) const {
  std::vector<Scalar> v;
  for (auto c : coords) v.push_back(Scalar::from_int(field_, c));
  return element(v);
}

Element HomAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.coords.size() != dim_ || y.coords.size() != dim_)
    throw DimensionError("bracket operand dimension mismatch");
  Element z = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y.coords[j].is_zero()) continue;
      const Scalar xy = x.coords[i] * y.coords[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!sc(i, j, k).is_zero()) z.coords[k] += xy * sc(i, j, k);
    }
  }
  return z;
}

Element HomAlgebra::apply_alpha(const Element& x, unsigned long r) const {
  if (r == 0) return x;
  Element y{alpha_power(r).apply(x.coords)};
  return y;
}

namespace {

Scalar koszul(const HomAlgebra& a, std::size_t i, std::size_t j) {
  const bool odd = a.parity_of(i) == 1 && a.parity_of(j) == 1;
  return odd ? -Scalar::one(a.field()) : Scalar::one(a.field());
}

Element sub(const HomAlgebra& a, const Element& x, const Element& y) {
  Element z = a.zero();
  for (std::size_t k = 0; k < a.dim(); ++k) z.coords[k] = x.coords[k] - y.coords[k];
  return z;
}

Element scale(const Element& x, const Scalar& c) {
  Element z = x;
  for (auto& v : z.coords) v = v * c;
  return z;
}

Element add(const HomAlgebra& a, const Element& x, const Element& y) {
  Element z = a.zero();
  for (std::size_t k = 0; k < a.dim(); ++k) z.coords[k] = x.coords[k] + y.coords[k];
  return z;
}

CheckReport report_pairs(const HomAlgebra& a, const std::string& name,
                         const std::function<std::pair<Element, Element>(std::size_t, std::size_t)>& sides) {
  CheckReport rep{name};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto [lhs, rhs] = sides(i, j);
      if (!sub(a, lhs, rhs).is_zero()) {
        rep.holds = false;
        rep.first_witness = CheckReport::Witness{{i + 1, j + 1}, lhs, rhs};
        return rep;
      }
    }
  return rep;
}

CheckReport report_triples(const HomAlgebra& a, const std::string& name,
                           const std::function<std::pair<Element, Element>(std::size_t, std::size_t,
                                                                           std::size_t)>& sides) {
  CheckReport rep{name};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        auto [lhs, rhs] = sides(i, j, k);
        if (!sub(a, lhs, rhs).is_zero()) {
          rep.holds = false;
          rep.first_witness = CheckReport::Witness{{i + 1, j + 1, k + 1}, lhs, rhs};
          return rep;
        }
      }
  return rep;
}

}  // namespace

CheckReport is_multiplicative(const HomAlgebra& a) {
  return report_pairs(a, "multiplicative", [&](std::size_t i, std::size_t j) {
    Element lhs = a.apply_alpha(a.bracket(a.basis_element(i), a.basis_element(j)));
    Element rhs = a.bracket(a.apply_alpha(a.basis_element(i)), a.apply_alpha(a.basis_element(j)));
    return std::make_pair(lhs, rhs);
  });
}

CheckReport check_left_hom_leibniz(const HomAlgebra& a) {
  // [a(x),[y,z]] = [[x,y],a(z)] + (-1)^{|x||y|} [a(y),[x,z]]
  return report_triples(a, "left Hom-Leibniz", [&](std::size_t x, std::size_t y, std::size_t z) {
    Element ex = a.basis_element(x), ey = a.basis_element(y), ez = a.basis_element(z);
    Element lhs = a.bracket(a.apply_alpha(ex), a.bracket(ey, ez));
    Element rhs = add(a, a.bracket(a.bracket(ex, ey), a.apply_alpha(ez)),
                      scale(a.bracket(a.apply_alpha(ey), a.bracket(ex, ez)), koszul(a, x, y)));
    return std::make_pair(lhs, rhs);
  });
}

CheckReport check_right_hom_leibniz(const HomAlgebra& a) {
  // [a(x),[y,z]] = [[x,y],a(z)] - (-1)^{|y||z|} [[x,z],a(y)]
  return report_triples(a, "right Hom-Leibniz", [&](std::size_t x, std::size_t y, std::size_t z) {
    Element ex = a.basis_element(x), ey = a.basis_element(y), ez = a.basis_element(z);
    Element lhs = a.bracket(a.apply_alpha(ex), a.bracket(ey, ez));
    Element rhs = sub(a, a.bracket(a.bracket(ex, ey), a.apply_alpha(ez)),
                      scale(a.bracket(a.bracket(ex, ez), a.apply_alpha(ey)), koszul(a, y, z)));
    return std::make_pair(lhs, rhs);
  });
}

CheckReport check_symmetric(const HomAlgebra& a) {
  CheckReport left = check_left_hom_leibniz(a);
  CheckReport right = check_right_hom_leibniz(a);
  CheckReport rep{"symmetric Hom-Leibniz"};
  rep.holds = left.holds && right.holds;
  rep.first_witness = left.holds ? right.first_witness : left.first_witness;
  if (left.holds) {
    // criterion for left algebras: [a(y),[x,z]] = -(-1)^{(|x|+|z|)|y|} [[x,z],a(y)]
    CheckReport crit = report_triples(a, "symmetry criterion",
                                      [&](std::size_t x, std::size_t y, std::size_t z) {
      Element ex = a.basis_element(x), ey = a.basis_element(y), ez = a.basis_element(z);
      Element lhs = a.bracket(a.apply_alpha(ey), a.bracket(ex, ez));
      const bool odd = ((a.parity_of(x) + a.parity_of(z)) % 2 == 1) && a.parity_of(y) == 1;
      Scalar sign = odd ? Scalar::one(a.field()) : -Scalar::one(a.field());
      Element rhs = scale(a.bracket(a.bracket(ex, ez), a.apply_alpha(ey)), sign);
      return std::make_pair(lhs, rhs);
    });
    if (crit.holds != rep.holds)
      throw Error("internal: symmetry criterion disagrees with left+right evaluation");
  }
  return rep;
}

CheckReport check_hom_lie(const HomAlgebra& a) {
  CheckReport skew = report_pairs(a, "super skew-symmetry", [&](std::size_t i, std::size_t j) {
    Element lhs = a.bracket(a.basis_element(i), a.basis_element(j));
    Element rhs = scale(a.bracket(a.basis_element(j), a.basis_element(i)), -koszul(a, i, j));
    return std::make_pair(lhs, rhs);
  });
  if (!skew.holds) {
    skew.identity = "Hom-Lie";
    return skew;
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.parity_of(i) == 1) continue;
    Element sq = a.bracket(a.basis_element(i), a.basis_element(i));
    if (!sq.is_zero()) {
      CheckReport rep{"Hom-Lie"};
      rep.holds = false;
      rep.first_witness = CheckReport::Witness{{i + 1, i + 1}, sq, a.zero()};
      return rep;
    }
  }
  // (-1)^{|x||z|}[a(x),[y,z]] + (-1)^{|y||x|}[a(y),[z,x]] + (-1)^{|z||y|}[a(z),[x,y]] = 0
  CheckReport jac = report_triples(a, "Hom-Lie", [&](std::size_t x, std::size_t y, std::size_t z) {
    Element ex = a.basis_element(x), ey = a.basis_element(y), ez = a.basis_element(z);
    Element t1 = scale(a.bracket(a.apply_alpha(ex), a.bracket(ey, ez)), koszul(a, x, z));
    Element t2 = scale(a.bracket(a.apply_alpha(ey), a.bracket(ez, ex)), koszul(a, y, x));
    Element t3 = scale(a.bracket(a.apply_alpha(ez), a.bracket(ex, ey)), koszul(a, z, y));
    return std::make_pair(add(a, add(a, t1, t2), t3), a.zero());
  });
  return jac;
}

Element hom_associator(const HomAlgebra& a, const Element& x, const Element& y, const Element& z) {
  return sub(a, a.bracket(a.bracket(x, y), a.apply_alpha(z)),
             a.bracket(a.apply_alpha(x), a.bracket(y, z)));
}

HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& beta) {
  if (a.alpha() != Matrix::identity(a.field(), a.dim()))
    throw PreconditionError("twist input must have identity twisting map");
  if (beta.rows() != a.dim() || beta.cols() != a.dim() || beta.field() != a.field())
    throw PreconditionError("beta must be a dim x dim matrix over the same field");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Element lhs{beta.apply(a.bracket(a.basis_element(i), a.basis_element(j)).coords)};
      Element rhs = a.bracket(Element{beta.apply(a.basis_element(i).coords)},
                              Element{beta.apply(a.basis_element(j).coords)});
      if (!std::equal(lhs.coords.begin(), lhs.coords.end(), rhs.coords.begin(),
                      [](const Scalar& u, const Scalar& v) { return u == v; }))
        throw PreconditionError("beta is not a bracket endomorphism (witness pair e" +
                                std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")");
    }
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<Scalar>>> brackets;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Element v = a.bracket(Element{beta.apply(a.basis_element(i).coords)},
                            Element{beta.apply(a.basis_element(j).coords)});
      if (!v.is_zero()) brackets.emplace_back(i + 1, j + 1, v.coords);
    }
  std::optional<std::vector<int>> parity;
  if (a.graded()) {
    std::vector<int> p;
    for (std::size_t i = 0; i < a.dim(); ++i) p.push_back(a.parity_of(i));
    parity = p;
  }
  return HomAlgebra(a.field(), a.dim(), brackets, beta, parity,
                    std::vector<std::string>(a.basis_names()));
}

HomAlgebra tensor_square_leibniz(const HomAlgebra& g) {
  CheckReport lie = check_hom_lie(g);
  if (!lie.holds) throw PreconditionError("tensor square input is not Hom-Lie: " + lie.to_string());
  CheckReport mult = is_multiplicative(g);
  if (!mult.holds)
    throw PreconditionError("tensor square input's twisting map is not an endomorphism: " +
                            mult.to_string());
  const std::size_t n = g.dim();
  const std::size_t N = n * n;
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<Scalar>>> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Element inner = g.bracket(g.apply_alpha(g.basis_element(p)), g.apply_alpha(g.basis_element(q)));
          Element t1 = g.bracket(g.apply_alpha(g.basis_element(i)), inner);  // pairs with alpha(e_j)
          Element ax = g.apply_alpha(g.basis_element(i));
          Element t2 = g.bracket(g.apply_alpha(g.basis_element(j)), inner);  // pairs with alpha(e_i)
          Element aj = g.apply_alpha(g.basis_element(j));
          std::vector<Scalar> value(N, Scalar::zero(g.field()));
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
              value[k * n + l] = t1.coords[k] * aj.coords[l] + ax.coords[k] * t2.coords[l];
          bool nonzero = false;
          for (const auto& v : value) nonzero = nonzero || !v.is_zero();
          if (nonzero) brackets.emplace_back(i * n + j + 1, p * n + q + 1, value);
        }
  Matrix big_alpha(g.field(), N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          big_alpha.set(i * n + j, k * n + l, g.alpha().at(i, k) * g.alpha().at(j, l));
  std::optional<std::vector<int>> parity;
  if (g.graded()) {
    std::vector<int> p;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p.push_back((g.parity_of(i) + g.parity_of(j)) % 2);
    parity = p;
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      names.push_back(g.basis_names()[i] + "(x)" + g.basis_names()[j]);
  return HomAlgebra(g.field(), N, brackets, big_alpha, parity, names);
}

}  // namespace homleib

#include "homleib/catalog.hpp"

#include <cctype>
#include <sstream>

namespace homleib {

namespace {

Scalar getp(const Field& f, const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw PreconditionError("missing parameter '" + name + "'");
  if (it->second.field() != f) throw FieldMismatchError("parameter field mismatch");
  return it->second;
}

std::vector<Scalar> row2(const Scalar& a, const Scalar& b) { return {a, b}; }

Matrix m2(const Field& f, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Matrix m(f, 2, 2);
  m.set(0, 0, a);
  m.set(0, 1, b);
  m.set(1, 0, c);
  m.set(1, 1, d);
  return m;
}

Matrix m2i(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return Matrix::from_ints(f, 2, 2, {a, b, c, d});
}

using Gen = std::function<Matrix(const Field&, const Params&, unsigned long)>;

PatternBuilder pat(std::string display, std::vector<Gen> gens) {
  return [display = std::move(display), gens = std::move(gens)](
             const Field& f, const Params& p, unsigned long r) {
    Pattern out{display, {}, };
    for (const auto& g : gens) out.generators.push_back(g(f, p, r));
    return out;
  };
}

Gen lit(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return [=](const Field& f, const Params&, unsigned long) { return m2i(f, a, b, c, d); };
}

// the recurring cell shapes
PatternBuilder upper_unit_pair() {  // [[c1,c2],[0,c1]]
  return pat("[c1 c2; 0 c1]", {lit(1, 0, 0, 1), lit(0, 1, 0, 0)});
}
PatternBuilder scalars_only() { return pat("[c 0; 0 c]", {lit(1, 0, 0, 1)}); }
PatternBuilder second_diag(const char* sym) {
  return pat(std::string("[0 0; 0 ") + sym + "]", {lit(0, 0, 0, 1)});
}
PatternBuilder first_diag(const char* sym) {
  return pat(std::string("[") + sym + " 0; 0 0]", {lit(1, 0, 0, 0)});
}
PatternBuilder strict_upper(const char* sym) {
  return pat(std::string("[0 ") + sym + "; 0 0]", {lit(0, 1, 0, 0)});
}
PatternBuilder zero_pattern() { return pat("[0 0; 0 0]", {}); }
PatternBuilder full_diagonal() {
  return pat("[c1 0; 0 c2]", {lit(1, 0, 0, 0), lit(0, 0, 0, 1)});
}
// [[c1,0],[0,c1/q^r]] for parameter `q`
PatternBuilder scaled_diag(const std::string& q) {
  return pat("[c1 0; 0 c1/" + q + "^r]", {[q](const Field& f, const Params& p, unsigned long r) {
               Scalar base = getp(f, p, q);
               return m2(f, Scalar::one(f), Scalar::zero(f), Scalar::zero(f),
                         base.pow(static_cast<long>(r)).inverse());
             }});
}

TableRow all_r(PatternBuilder gamma, PatternBuilder der) {
  TableRow row;
  row.r_label = "r >= 0";
  row.r_lo = 0;
  row.gamma = std::move(gamma);
  row.der = std::move(der);
  return row;
}

TableRow from_r1(PatternBuilder gamma, PatternBuilder der) {
  TableRow row;
  row.r_label = "r >= 1";
  row.r_lo = 1;
  row.gamma = std::move(gamma);
  row.der = std::move(der);
  return row;
}

TableRow derived_r0(PatternBuilder gamma, PatternBuilder der) {
  TableRow row;
  row.r_label = "r = 0";
  row.r_lo = 0;
  row.r_hi = 0;
  row.gamma = std::move(gamma);
  row.der = std::move(der);
  row.derived = true;
  return row;
}

using Brackets = std::vector<std::tuple<std::size_t, std::size_t, std::vector<Scalar>>>;

HomAlgebra make2(const Field& f, const Brackets& br, const Matrix& alpha) {
  return HomAlgebra(f, 2, br, alpha);
}

FlagSpec flag(bool recorded) { return FlagSpec{recorded, std::nullopt}; }
FlagSpec flag_err(bool recorded, bool corrected) { return FlagSpec{recorded, corrected}; }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;

  auto add = [&](CatalogEntry e) { cat.push_back(std::move(e)); };

  // ---- family 1: alpha = id -------------------------------------------------
  {
    CatalogEntry e;
    e.id = {1, 1};
    e.symmetric = flag(false);
    e.small = flag(false);
    e.cn = flag(true);
    e.rows = {all_r(upper_unit_pair(), pat("[d1 d1; 0 0]", {lit(1, 1, 0, 0)}))};
    e.param_samples = {{}};
    e.build = [](const Field& f, ClassVariant, const Params&) {
      const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
      return make2(f, {{2, 1, row2(one, zero)}, {2, 2, row2(one, zero)}}, Matrix::identity(f, 2));
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {2, 1};
    e.symmetric = flag(true);
    e.small = flag(true);
    // recorded CN disagrees with recomputation: Der_{alpha^0} is the
    // non-abelian two-dimensional algebra, which is not nilpotent
    e.cn = flag_err(true, false);
    e.rows = {all_r(upper_unit_pair(),
                    pat("[d1 d2; 0 d1/2]", {[](const Field& f, const Params&, unsigned long) {
                           Scalar half = Scalar::one(f) / Scalar::from_int(f, 2);
                           return m2(f, Scalar::one(f), Scalar::zero(f), Scalar::zero(f), half);
                         },
                         lit(0, 1, 0, 0)}))};
    e.param_samples = {{}};
    e.build = [](const Field& f, ClassVariant, const Params&) {
      return make2(f, {{2, 2, row2(Scalar::one(f), Scalar::zero(f))}}, Matrix::identity(f, 2));
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {3, 1};
    // recorded "symmetric" disagrees with recomputation: the right identity
    // fails at (e2,e2,e1), exactly as for the same bracket in family 2/3/4
    e.symmetric = flag_err(true, false);
    e.small = flag(false);
    e.cn = flag(true);
    e.rows = {all_r(upper_unit_pair(), first_diag("d1"))};
    e.param_samples = {{}};
    e.build = [](const Field& f, ClassVariant, const Params&) {
      return make2(f, {{2, 1, row2(Scalar::one(f), Scalar::zero(f))}}, Matrix::identity(f, 2));
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {4, 1};
    e.symmetric = flag(true);
    e.small = flag(true);
    e.cn = flag(false);
    e.rows = {all_r(scalars_only(), pat("[d1 d2; 0 0]", {lit(1, 0, 0, 0), lit(0, 1, 0, 0)}))};
    e.param_samples = {{}};
    e.build = [](const Field& f, ClassVariant, const Params&) {
      const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
      return make2(f, {{1, 2, row2(one, zero)}, {2, 1, row2(-one, zero)}}, Matrix::identity(f, 2));
    };
    add(e);
  }

  // ---- family 2: alpha = diag(0,1) ------------------------------------------
  {
    CatalogEntry e;
    e.id = {1, 2};
    e.symmetric = flag(false);
    // recorded "not small" disagrees: Gamma_{alpha^0} = scalars = ZDer + scalars
    e.small = flag_err(false, true);
    e.cn = flag(true);
    e.rows = {from_r1(second_diag("c2"), full_diagonal()),
              derived_r0(scalars_only(), first_diag("d1"))};
    e.param_samples = {{}};
    e.build = [](const Field& f, ClassVariant, const Params&) {
      return make2(f, {{2, 1, row2(Scalar::one(f), Scalar::zero(f))}}, m2i(f, 0, 0, 0, 1));
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {2, 2};
    e.symmetric = flag(true);
    e.small = flag(true);
    e.cn = flag(true);
    e.rows = {from_r1(second_diag("c2"), second_diag("d2")),
              derived_r0(full_diagonal(), second_diag("d2"))};
    e.param_samples = {{}};
    e.build = [](const Field& f, ClassVariant, const Params&) {
      return make2(f, {{1, 1, row2(Scalar::one(f), Scalar::zero(f))}}, m2i(f, 0, 0, 0, 1));
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {3, 2};
    e.symmetric = flag(true);  // the classification-list data is symmetric
    e.distinct_variants = true;
    e.verify_variant = ClassVariant::classification;
    e.variant_note =
        "classification lists [e1,e2]=e1, [e2,e1]=-e1 with alpha(e2)=e1; the tables "
        "section prints a duplicate of L_2^2 instead";
    e.disputed_tables = true;
    e.dispute_note =
        "tables header duplicates L_2^2 while the printed row duplicates L_1^2's; "
        "no consistent reading reproduces it, so the row is skipped";
    e.param_samples = {{}};
    e.build = [](const Field& f, ClassVariant v, const Params&) {
      const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
      if (v == ClassVariant::classification)
        return make2(f, {{1, 2, row2(one, zero)}, {2, 1, row2(-one, zero)}}, m2i(f, 0, 1, 0, 0));
      return make2(f, {{1, 1, row2(one, zero)}}, m2i(f, 0, 0, 0, 1));
    };
    add(e);
  }

  // ---- family 3: alpha = diag(0,b) ------------------------------------------
  {
    CatalogEntry e;
    e.id = {1, 3};
    e.param_names = {"b"};
    e.symmetric = flag(true);
    e.small = flag(true);
    e.cn = flag(true);
    e.rows = {from_r1(second_diag("c2"), second_diag("d2")),
              derived_r0(full_diagonal(), second_diag("d2"))};
    e.param_samples = {{{"b", 2}}, {{"b", 3}}, {{"b", 5}}};
    e.build = [](const Field& f, ClassVariant, const Params& p) {
      return make2(f, {{1, 1, row2(Scalar::one(f), Scalar::zero(f))}},
                   m2(f, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), getp(f, p, "b")));
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {2, 3};
    e.param_names = {"b"};
    e.excluded_values = {{"b", {1}}};
    e.symmetric = flag(false);
    e.small = flag_err(false, true);
    e.cn = flag(true);
    e.rows = {from_r1(second_diag("c2"), second_diag("d2")),
              derived_r0(scalars_only(), first_diag("d1"))};
    e.param_samples = {{{"b", 2}}, {{"b", 3}}, {{"b", 5}}};
    e.build = [](const Field& f, ClassVariant, const Params& p) {
      return make2(f, {{2, 1, row2(Scalar::one(f), Scalar::zero(f))}},
                   m2(f, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), getp(f, p, "b")));
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {3, 3};
    e.param_names = {"b"};
    e.excluded_values = {{"b", {1}}};
    e.symmetric = flag(true);
    e.small = flag_err(false, true);
    e.cn = flag(true);
    e.rows = {from_r1(second_diag("c2"), second_diag("d2")),
              derived_r0(scalars_only(), first_diag("d1"))};
    e.param_samples = {{{"b", 2}}, {{"b", 3}}, {{"b", 5}}};
    e.build = [](const Field& f, ClassVariant, const Params& p) {
      const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
      return make2(f, {{1, 2, row2(one, zero)}, {2, 1, row2(-one, zero)}},
                   m2(f, zero, zero, zero, getp(f, p, "b")));
    };
    add(e);
  }

  // ---- family 4: alpha = diag(a,1), a not in {0,1} ---------------------------
  {
    CatalogEntry e;
    e.id = {1, 4};
    e.param_names = {"a"};
    e.excluded_values = {{"a", {0, 1}}};
    e.symmetric = flag(false);
    e.small = flag(true);
    e.cn = flag(true);
    TableRow row = all_r(scaled_diag("a"), second_diag("d2"));
    // recorded Der pattern disagrees with recomputation (and with the sibling
    // entry L_2^4): the solved space is [[d1,0],[0,0]] for every r
    row.der_corrected = first_diag("d1");
    e.rows = {row};
    e.param_samples = {{{"a", 2}}, {{"a", 3}}, {{"a", 5}}};
    e.build = [](const Field& f, ClassVariant, const Params& p) {
      return make2(f, {{2, 1, row2(Scalar::one(f), Scalar::zero(f))}},
                   m2(f, getp(f, p, "a"), Scalar::zero(f), Scalar::zero(f), Scalar::one(f)));
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {2, 4};
    e.param_names = {"a"};
    e.excluded_values = {{"a", {0, 1}}};
    // recorded "not symmetric" disagrees: the bracket is skew and satisfies the
    // twisted Jacobi identity, so both sided identities hold
    e.symmetric = flag_err(false, true);
    e.small = flag(true);
    e.cn = flag(true);
    e.rows = {all_r(scaled_diag("a"), first_diag("d1"))};
    e.param_samples = {{{"a", 2}}, {{"a", 3}}, {{"a", 5}}};
    e.build = [](const Field& f, ClassVariant, const Params& p) {
      const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
      return make2(f, {{1, 2, row2(-one, zero)}, {2, 1, row2(one, zero)}},
                   m2(f, getp(f, p, "a"), zero, zero, one));
    };
    add(e);
  }

  // ---- family 5: alpha = diag(b^2, b), b not in {0,1} ------------------------
  {
    CatalogEntry e;
    e.id = {1, 5};
    e.param_names = {"b"};
    e.excluded_values = {{"b", {0, 1}}};
    e.symmetric = flag(true);
    e.small = flag(true);
    e.cn = flag(true);
    TableRow row = all_r(scaled_diag("b"), zero_pattern());
    // recorded Der = 0 disagrees with recomputation: diag(2 b^r, 1) solves the
    // identity exactly as for the untwisted version of this bracket
    row.der_corrected = pat("[2 b^r d; 0 0 d]", {[](const Field& f, const Params& p, unsigned long r) {
                              Scalar b = getp(f, p, "b");
                              return m2(f, Scalar::from_int(f, 2) * b.pow(static_cast<long>(r)),
                                        Scalar::zero(f), Scalar::zero(f), Scalar::one(f));
                            }});
    e.rows = {row};
    e.param_samples = {{{"b", 2}}, {{"b", 3}}, {{"b", 5}}};
    e.build = [](const Field& f, ClassVariant, const Params& p) {
      Scalar b = getp(f, p, "b");
      return make2(f, {{2, 2, row2(Scalar::one(f), Scalar::zero(f))}},
                   m2(f, b * b, Scalar::zero(f), Scalar::zero(f), b));
    };
    add(e);
  }

  // ---- family 6: alpha(e1) = 0, alpha(e2) = e1 -------------------------------
  {
    CatalogEntry e;
    e.id = {1, 6};
    e.param_names = {"z1", "t1"};
    e.symmetric = flag(true);
    e.small = flag(true);
    e.cn = flag(true);
    e.distinct_variants = true;
    e.verify_variant = ClassVariant::classification;
    e.variant_note =
        "the tables header prints alpha(e2)=e2, under which the algebra is not even "
        "multiplicative unless t1 = 0 and whose solution spaces are diagonal; every "
        "printed row reproduces against the classification twisting map alpha(e2)=e1 "
        "(classification parameter names y1,z1 correspond to z1,t1 here)";
    TableRow r0a;
    r0a.r_label = "r = 0, z1 = -1";
    r0a.r_lo = 0;
    r0a.r_hi = 0;
    r0a.condition = RowCondition{"z1", -1, true};
    r0a.gamma = scalars_only();
    r0a.der = strict_upper("d2");
    TableRow r0b;
    r0b.r_label = "r = 0, z1 != -1";
    r0b.r_lo = 0;
    r0b.r_hi = 0;
    r0b.condition = RowCondition{"z1", -1, false};
    r0b.gamma = scalars_only();
    r0b.der = zero_pattern();
    TableRow r1;
    r1.r_label = "r = 1";
    r1.r_lo = 1;
    r1.r_hi = 1;
    r1.gamma = strict_upper("c2");
    r1.der = strict_upper("d2");
    TableRow rbig;
    rbig.r_label = "r > 1";
    rbig.r_lo = 2;
    rbig.gamma = strict_upper("c2");
    rbig.der = strict_upper("d2");
    e.rows = {r0a, r0b, r1, rbig};
    e.param_samples = {{{"z1", -1}, {"t1", 2}}, {{"z1", 2}, {"t1", 3}}, {{"z1", 3}, {"t1", 5}}};
    e.build = [](const Field& f, ClassVariant v, const Params& p) {
      const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
      Brackets br{{1, 2, row2(one, zero)},
                  {2, 1, row2(getp(f, p, "z1"), zero)},
                  {2, 2, row2(getp(f, p, "t1"), zero)}};
      Matrix alpha = v == ClassVariant::classification ? m2i(f, 0, 1, 0, 0) : m2i(f, 0, 0, 0, 1);
      return make2(f, br, alpha);
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {2, 6};
    e.param_names = {"t1"};
    e.symmetric = flag(true);
    e.small = flag(false);
    e.cn = flag(true);
    TableRow r0;
    r0.r_label = "r = 0";
    r0.r_lo = 0;
    r0.r_hi = 0;
    r0.gamma = upper_unit_pair();
    r0.der = zero_pattern();
    e.rows = {r0, from_r1(strict_upper("c2"), strict_upper("d2"))};
    e.param_samples = {{{"t1", 2}}, {{"t1", 3}}, {{"t1", 5}}};
    e.build = [](const Field& f, ClassVariant, const Params& p) {
      const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
      return make2(f, {{2, 1, row2(one, zero)}, {2, 2, row2(getp(f, p, "t1"), zero)}},
                   m2i(f, 0, 1, 0, 0));
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = {3, 6};
    e.symmetric = flag(true);
    e.small = flag(true);
    e.cn = flag(true);
    TableRow r0;
    r0.r_label = "r = 0";
    r0.r_lo = 0;
    r0.r_hi = 0;
    r0.gamma = upper_unit_pair();
    r0.der = strict_upper("d2");
    e.rows = {r0, from_r1(strict_upper("c2"), strict_upper("d2"))};
    e.param_samples = {{}};
    e.build = [](const Field& f, ClassVariant, const Params&) {
      return make2(f, {{2, 2, row2(Scalar::one(f), Scalar::zero(f))}}, m2i(f, 0, 1, 0, 0));
    };
    add(e);
  }

  // ---- family 7: alpha = [[1,1],[0,1]] ---------------------------------------
  {
    CatalogEntry e;
    e.id = {1, 7};
    e.symmetric = flag(true);
    e.small = flag(true);
    e.cn = flag(true);
    TableRow r0;
    r0.r_label = "r = 0";
    r0.r_lo = 0;
    r0.r_hi = 0;
    r0.gamma = upper_unit_pair();
    r0.der = strict_upper("d2");
    e.rows = {r0, from_r1(upper_unit_pair(), strict_upper("d2"))};
    e.param_samples = {{}};
    e.build = [](const Field& f, ClassVariant, const Params&) {
      return make2(f, {{2, 2, row2(Scalar::one(f), Scalar::zero(f))}}, m2i(f, 1, 1, 0, 1));
    };
    add(e);
  }

  return cat;
}

}  // namespace

std::optional<AlgebraId> parse_algebra_id(const std::string& text) {
  // accepted spellings: L_2^1, L2^1, L_2_1
  int item = 0, family = 0;
  std::size_t i = 0;
  if (i >= text.size() || (text[i] != 'L' && text[i] != 'l')) return std::nullopt;
  ++i;
  if (i < text.size() && text[i] == '_') ++i;
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) return std::nullopt;
  item = std::stoi(text.substr(start, i - start));
  if (i >= text.size() || (text[i] != '^' && text[i] != '_')) return std::nullopt;
  ++i;
  start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start || i != text.size()) return std::nullopt;
  family = std::stoi(text.substr(start, i - start));
  return AlgebraId{item, family};
}

Subspace Pattern::to_subspace(const Field& f, std::size_t n) const {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : generators) rows.push_back(g.flatten());
  return Subspace::span(f, n * n, rows);
}

bool RowCondition::matches(const Params& p) const {
  auto it = p.find(param);
  if (it == p.end()) return false;
  bool eq = it->second == Scalar::from_int(it->second.field(), value);
  return equals ? eq : !eq;
}

std::string RowCondition::to_string() const {
  return param + (equals ? " = " : " != ") + std::to_string(value);
}

bool TableRow::covers(unsigned long r, const Params& p) const {
  if (r < r_lo) return false;
  if (r_hi && r > *r_hi) return false;
  if (condition && !condition->matches(p)) return false;
  return true;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry& catalog_entry(const AlgebraId& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw PreconditionError("unknown catalog id " + id.to_string());
}

std::vector<AlgebraId> catalog_ids() {
  std::vector<AlgebraId> out;
  for (const auto& e : catalog()) out.push_back(e.id);
  return out;
}

HomAlgebra instantiate(const AlgebraId& id, ClassVariant variant, const Field& f,
                       const Params& params) {
  const CatalogEntry& e = catalog_entry(id);
  for (const auto& name : e.param_names)
    if (!params.count(name))
      throw PreconditionError(id.to_string() + " needs parameter '" + name + "'");
  for (const auto& [name, excluded] : e.excluded_values) {
    auto it = params.find(name);
    if (it == params.end()) continue;
    for (std::int64_t v : excluded)
      if (it->second == Scalar::from_int(f, v))
        throw PreconditionError(id.to_string() + ": parameter " + name + " = " +
                                std::to_string(v) + " is excluded");
  }
  return e.build(f, variant, params);
}

Params default_params(const AlgebraId& id, const Field& f) {
  const CatalogEntry& e = catalog_entry(id);
  Params out;
  if (e.param_samples.empty()) return out;
  for (const auto& [name, value] : e.param_samples.front())
    out.emplace(name, Scalar::from_int(f, value));
  return out;
}

const TableRow& expected_table(const AlgebraId& id, unsigned long r, const Params& params) {
  const CatalogEntry& e = catalog_entry(id);
  if (e.disputed_tables)
    throw DisputedError(id.to_string() + " reference table is disputed: " + e.dispute_note);
  for (const auto& row : e.rows)
    if (!row.derived && row.covers(r, params)) return row;
  throw UncoveredError(id.to_string() + " has no reference row covering r = " + std::to_string(r));
}

namespace {
const Field& params_field(const Params& p) {
  static const Field q = Field::rationals();
  return p.empty() ? q : p.begin()->second.field();
}

std::string render_space(const Subspace& s) {
  if (s.dim() == 0) return "0";
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) os << ", ";
    Matrix m = Matrix::unflatten(s.field(), 2, 2, s.basis_vector(i));
    os << "[" << m.at(0, 0).to_string() << " " << m.at(0, 1).to_string() << "; "
       << m.at(1, 0).to_string() << " " << m.at(1, 1).to_string() << "]";
  }
  os << "}";
  return os.str();
}

CellReport compare_cell(const Subspace& actual, const Pattern& recorded,
                        const std::optional<Pattern>& corrected, const Field& f, std::size_t n) {
  Subspace rec = recorded.to_subspace(f, n);
  if (!corrected) {
    if (actual == rec) return {CellStatus::verified, recorded.display};
    return {CellStatus::mismatch, "recorded " + recorded.display + " = " + render_space(rec) +
                                      " but computed " + render_space(actual)};
  }
  Subspace cor = corrected->to_subspace(f, n);
  if (actual == cor && actual != rec)
    return {CellStatus::discrepancy_documented,
            "recorded " + recorded.display + " but computed " + render_space(actual) +
                " (documented discrepancy)"};
  return {CellStatus::mismatch, "documented discrepancy did not reproduce: recorded " +
                                    recorded.display + ", computed " + render_space(actual) +
                                    ", annotation says " + corrected->display};
}
}  // namespace

RowReport verify_row(const CatalogEntry& entry, const TableRow& row, unsigned long r,
                     const Params& params) {
  const Field& f = params_field(params);
  HomAlgebra a = instantiate(entry.id, entry.verify_variant, f, params);
  RowReport rep;
  rep.id = entry.id;
  rep.r = r;
  rep.row_label = row.r_label;
  rep.derived = row.derived;
  Subspace gamma = left_centroid_space(a, r).space;
  Subspace der = derivation_space(a, r).space;
  rep.gamma = compare_cell(gamma, row.gamma(f, params, r),
                           row.gamma_corrected ? std::optional<Pattern>((*row.gamma_corrected)(f, params, r))
                                               : std::nullopt,
                           f, a.dim());
  rep.der = compare_cell(der, row.der(f, params, r),
                         row.der_corrected ? std::optional<Pattern>((*row.der_corrected)(f, params, r))
                                           : std::nullopt,
                         f, a.dim());
  return rep;
}

RowReport verify_table(const AlgebraId& id, unsigned long r, const Params& params) {
  const CatalogEntry& e = catalog_entry(id);
  RowReport rep;
  rep.id = id;
  rep.r = r;
  if (e.disputed_tables) {
    rep.disputed = true;
    rep.covered = false;
    rep.row_label = "disputed";
    return rep;
  }
  for (const auto& row : e.rows)
    if (row.covers(r, params)) return verify_row(e, row, r, params);
  rep.covered = false;
  rep.row_label = "uncovered";
  return rep;
}

namespace {
FlagReport verify_flag(const FlagSpec& spec, bool computed) {
  FlagReport rep;
  rep.computed = computed;
  rep.recorded = spec.recorded;
  if (!spec.recorded) {
    rep.status = CellStatus::skipped;
    return rep;
  }
  if (spec.corrected) {
    rep.status = (computed == *spec.corrected && computed != *spec.recorded)
                     ? CellStatus::discrepancy_documented
                     : CellStatus::mismatch;
  } else {
    rep.status = computed == *spec.recorded ? CellStatus::verified : CellStatus::mismatch;
  }
  return rep;
}
}  // namespace

FlagReport verify_small_flag(const AlgebraId& id, const Params& params) {
  const CatalogEntry& e = catalog_entry(id);
  HomAlgebra a = instantiate(id, e.verify_variant, params_field(params), params);
  return verify_flag(e.small, is_small_centroid(a));
}

FlagReport verify_cn_flag(const AlgebraId& id, const Params& params) {
  const CatalogEntry& e = catalog_entry(id);
  HomAlgebra a = instantiate(id, e.verify_variant, params_field(params), params);
  return verify_flag(e.cn, is_characteristically_nilpotent(a));
}

FlagReport verify_symmetric_flag(const AlgebraId& id, const Params& params) {
  const CatalogEntry& e = catalog_entry(id);
  HomAlgebra a = instantiate(id, ClassVariant::classification, params_field(params), params);
  return verify_flag(e.symmetric, check_symmetric(a).holds);
}

HomAlgebra superalgebra_example(const Scalar& a, const Scalar& x, const Scalar& d,
                                const Scalar& mu) {
  if (x.is_zero()) throw PreconditionError("the graded example needs x != 0");
  const Field& f = a.field();
  const Scalar zero = Scalar::zero(f);
  std::vector<Scalar> e11{a, x, zero};               // [e1,e1] = a e1 + x e2
  Scalar q = -(a / x);
  std::vector<Scalar> e12{q * a, q * x, zero};       // [e1,e2] = [e2,e1] = -(a/x)[e1,e1]
  Scalar q2 = (a / x) * (a / x);
  std::vector<Scalar> e22{q2 * a, q2 * x, zero};     // [e2,e2] = (a/x)^2 [e1,e1]
  Scalar q3 = d / x;
  std::vector<Scalar> e33{q3 * a, q3 * x, zero};     // [e3,e3] = (d/x)[e1,e1]
  Matrix alpha(f, 3, 3);
  alpha.set(0, 0, -Scalar::one(f));
  alpha.set(1, 1, Scalar::one(f));
  alpha.set(2, 2, mu);
  return HomAlgebra(f, 3,
                    {{1, 1, e11}, {1, 2, e12}, {2, 1, e12}, {2, 2, e22}, {3, 3, e33}},
                    alpha, std::vector<int>{0, 0, 1});
}

HomAlgebra tensor_square_literal(const Matrix& alpha3) {
  if (alpha3.rows() != 3 || alpha3.cols() != 3)
    throw DimensionError("the literal tensor example lives on a 3-dimensional space");
  const Field& f = alpha3.field();
  auto idx = [](std::size_t i, std::size_t j) { return (i - 1) * 3 + (j - 1); };
  auto unit = [&](std::size_t i, std::size_t j) {
    std::vector<Scalar> v(9, Scalar::zero(f));
    v[idx(i, j)] = Scalar::one(f);
    return v;
  };
  Matrix big(f, 9, 9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          big.set(i * 3 + j, k * 3 + l, alpha3.at(i, k) * alpha3.at(j, l));
  return HomAlgebra(f, 9,
                    {{idx(1, 3) + 1, idx(1, 3) + 1, unit(1, 1)},
                     {idx(2, 3) + 1, idx(1, 3) + 1, unit(2, 1)},
                     {idx(2, 3) + 1, idx(2, 3) + 1, unit(2, 2)}},
                    big);
}

}  // namespace homleib

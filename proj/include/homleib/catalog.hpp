#ifndef HOMLEIB_CATALOG_HPP
#define HOMLEIB_CATALOG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homleib/opspaces.hpp"

namespace homleib {

/// Catalog label L_item^family: subscript = item number, superscript = the
/// twisting-map family.
struct AlgebraId {
  int item = 0;
  int family = 0;
  friend bool operator==(const AlgebraId& a, const AlgebraId& b) {
    return a.item == b.item && a.family == b.family;
  }
  friend auto operator<=>(const AlgebraId& a, const AlgebraId& b) = default;
  std::string to_string() const {
    return "L_" + std::to_string(item) + "^" + std::to_string(family);
  }
};
std::optional<AlgebraId> parse_algebra_id(const std::string& text);

/// The two printed data variants of an entry: the classification list and the
/// headers of the computational tables. They coincide for most entries.
enum class ClassVariant { classification, tables };

using Params = std::map<std::string, Scalar>;

/// Span-with-rendering for one table cell: the generators instantiate the
/// free-symbol pattern at concrete parameters and twist power.
struct Pattern {
  std::string display;
  std::vector<Matrix> generators;
  Subspace to_subspace(const Field& f, std::size_t n) const;
};

using PatternBuilder = std::function<Pattern(const Field&, const Params&, unsigned long)>;

struct RowCondition {
  std::string param;
  std::int64_t value;
  bool equals;  // true: param == value row, false: param != value row
  bool matches(const Params& p) const;
  std::string to_string() const;
};

/// One row of an entry's Gamma/Der table with its r-validity domain.
/// `derived` rows are not part of the recorded reference tables: they carry
/// independently computed values for (id, r) combinations the reference rows
/// do not faithfully cover (singular twisting maps at r = 0).
struct TableRow {
  std::string r_label;
  unsigned long r_lo = 0;
  std::optional<unsigned long> r_hi;  // inclusive; empty = unbounded
  std::optional<RowCondition> condition;
  PatternBuilder gamma;
  PatternBuilder der;
  /// set when the recorded pattern provably disagrees with exact recomputation
  std::optional<PatternBuilder> gamma_corrected, der_corrected;
  bool derived = false;
  bool covers(unsigned long r, const Params& p) const;
};

/// recorded value as printed; corrected set when exact recomputation provably
/// disagrees (the catalog keeps both).
struct FlagSpec {
  std::optional<bool> recorded;
  std::optional<bool> corrected;
};

struct CatalogEntry {
  AlgebraId id;
  std::vector<std::string> param_names;
  std::map<std::string, std::vector<std::int64_t>> excluded_values;
  bool distinct_variants = false;  // classification vs tables data differ
  ClassVariant verify_variant = ClassVariant::tables;
  std::string variant_note;
  bool disputed_tables = false;  // reference table rows are self-contradictory
  std::string dispute_note;
  FlagSpec symmetric, small, cn;
  std::vector<TableRow> rows;
  /// admissible sample sets (>= 3 for parametric entries), materialized into
  /// any field by default_params
  std::vector<std::map<std::string, std::int64_t>> param_samples;
  std::function<HomAlgebra(const Field&, ClassVariant, const Params&)> build;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const AlgebraId& id);  // throws on unknown id
std::vector<AlgebraId> catalog_ids();

/// Concrete algebra at admissible parameters; excluded values raise.
HomAlgebra instantiate(const AlgebraId& id, ClassVariant variant, const Field& f,
                       const Params& params);

/// Fills missing parameters from the entry's first sample set.
Params default_params(const AlgebraId& id, const Field& f);

struct UncoveredError : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct DisputedError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// The reference row covering (id, r); UncoveredError when only a derived row
/// (or nothing) covers it, DisputedError for the disputed entry.
const TableRow& expected_table(const AlgebraId& id, unsigned long r, const Params& params);

enum class CellStatus { verified, discrepancy_documented, mismatch, skipped };

struct CellReport {
  CellStatus status = CellStatus::skipped;
  std::string detail;
};

struct RowReport {
  AlgebraId id;
  unsigned long r = 0;
  std::string row_label;
  bool derived = false;
  bool disputed = false;
  bool covered = true;
  CellReport gamma, der;
  bool ok() const {
    return gamma.status != CellStatus::mismatch && der.status != CellStatus::mismatch;
  }
};

/// Computes Gamma_{alpha^r} (one-sided) and Der_{alpha^r} for the entry at the
/// given parameters and compares them with the covering row. Documented
/// discrepancies additionally re-verify the corrected value.
RowReport verify_table(const AlgebraId& id, unsigned long r, const Params& params);
/// Same comparison against an explicit entry/row (used for negative controls).
RowReport verify_row(const CatalogEntry& entry, const TableRow& row, unsigned long r,
                     const Params& params);

struct FlagReport {
  CellStatus status = CellStatus::skipped;
  bool computed = false;
  std::optional<bool> recorded;
};
FlagReport verify_small_flag(const AlgebraId& id, const Params& params);
FlagReport verify_cn_flag(const AlgebraId& id, const Params& params);
FlagReport verify_symmetric_flag(const AlgebraId& id, const Params& params);

/// The three-dimensional graded example: e1, e2 even, e3 odd,
/// products built from [e1,e1] = a e1 + x e2, twisting map diag(-1, 1, mu).
/// Requires x != 0.
HomAlgebra superalgebra_example(const Scalar& a, const Scalar& x, const Scalar& d,
                                const Scalar& mu);

/// The nine-dimensional literal tensor-square algebra ([u1(x)u3, u1(x)u3] =
/// u1(x)u1 and friends) with twisting map alpha (x) alpha.
HomAlgebra tensor_square_literal(const Matrix& alpha3);

}  // namespace homleib

#endif

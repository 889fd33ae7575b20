#include "homleib/cli.hpp"

#include <json.hpp>

#include <iostream>
#include <sstream>

namespace homleib {

namespace {
using nlohmann::json;

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string describe_brackets(const HomAlgebra& a) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Element v = a.bracket(a.basis_element(i), a.basis_element(j));
      if (v.is_zero()) continue;
      if (any) os << ", ";
      os << "[" << a.basis_names()[i] << "," << a.basis_names()[j]
         << "]=" << v.to_string(a.basis_names());
      any = true;
    }
  if (!any) os << "zero bracket";
  return os.str();
}

std::string status_name(CellStatus s) {
  switch (s) {
    case CellStatus::verified:
      return "VERIFIED";
    case CellStatus::discrepancy_documented:
      return "DISCREPANCY";
    case CellStatus::mismatch:
      return "MISMATCH";
    case CellStatus::skipped:
      return "SKIPPED";
  }
  return "?";
}

Params parse_param_overrides(const std::vector<std::string>& overrides, const Field& f) {
  Params out;
  for (const auto& kv : overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("parameter override must be name=value");
    out.insert_or_assign(kv.substr(0, eq), Scalar::parse(f, kv.substr(eq + 1)));
  }
  return out;
}
}  // namespace

int cmd_check(const std::string& document_text, const std::string& identity, std::ostream& out) {
  ParsedDocument doc = parse_document(document_text);
  const HomAlgebra& a = doc.algebra;
  std::vector<std::pair<std::string, CheckReport>> reports;
  auto want = [&](const char* name) { return identity == name || identity == "all"; };
  if (want("multiplicative")) reports.emplace_back("multiplicative", is_multiplicative(a));
  if (want("left")) reports.emplace_back("left", check_left_hom_leibniz(a));
  if (want("right")) reports.emplace_back("right", check_right_hom_leibniz(a));
  if (want("symmetric")) reports.emplace_back("symmetric", check_symmetric(a));
  if (identity == "hom-lie") reports.emplace_back("hom-lie", check_hom_lie(a));
  if (reports.empty()) throw ParseError("unknown identity '" + identity + "'");
  bool all_hold = true;
  for (const auto& [name, rep] : reports) {
    out << name << ": " << (rep.holds ? "holds" : "FAILS");
    if (rep.first_witness) {
      out << " at (";
      for (std::size_t i = 0; i < rep.first_witness->indices.size(); ++i)
        out << (i ? "," : "") << a.basis_names()[rep.first_witness->indices[i] - 1];
      out << "): lhs = " << rep.first_witness->lhs.to_string(a.basis_names())
          << ", rhs = " << rep.first_witness->rhs.to_string(a.basis_names());
    }
    out << "\n";
    all_hold = all_hold && rep.holds;
  }
  return all_hold ? kExitOk : kExitCheckFailed;
}

int cmd_solve(const std::string& document_text, const SolveOptions& opt, std::ostream& out) {
  ParsedDocument doc = parse_document(document_text);
  const HomAlgebra& a = doc.algebra;
  const Field& f = a.field();
  OperatorSpace space{OperatorKind::generalized, opt.r, std::nullopt, std::nullopt, a.dim(),
                      Subspace(f, a.dim() * a.dim())};
  if (opt.kind == "der") {
    space = derivation_space(a, opt.r, opt.parity);
  } else if (opt.kind == "centroid") {
    space = left_centroid_space(a, opt.r, opt.parity);
  } else if (opt.kind == "zder") {
    space = central_derivation_space(a, opt.r, opt.parity);
  } else if (opt.kind == "gen") {
    if (!opt.lambda || !opt.mu || !opt.gamma)
      throw ParseError("kind gen needs --lambda, --mu and --gamma");
    space = generalized_derivation_space(a, opt.r, Scalar::parse(f, *opt.lambda),
                                         Scalar::parse(f, *opt.mu), Scalar::parse(f, *opt.gamma),
                                         opt.parity);
  } else {
    throw ParseError("unknown kind '" + opt.kind + "'");
  }
  json j;
  j["kind"] = opt.kind;
  j["r"] = opt.r;
  j["dim"] = space.dim();
  json basis = json::array();
  for (const auto& m : space.basis_matrices()) basis.push_back(matrix_json(m));
  j["basis"] = basis;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_tables(const TablesOptions& opt, std::ostream& out) {
  std::vector<AlgebraId> ids;
  if (opt.id) {
    auto parsed = parse_algebra_id(*opt.id);
    if (!parsed) throw ParseError("unknown id '" + *opt.id + "'");
    catalog_entry(*parsed);  // throws for ids outside the catalog
    ids.push_back(*parsed);
  } else {
    ids = catalog_ids();
  }
  const Field q = Field::rationals();
  bool any_mismatch = false;
  json report = json::array();
  for (const AlgebraId& id : ids) {
    const CatalogEntry& entry = catalog_entry(id);
    Params params = default_params(id, q);
    for (const auto& [k, v] : parse_param_overrides(opt.params, q)) params.insert_or_assign(k, v);
    json jentry;
    jentry["id"] = id.to_string();
    if (entry.disputed_tables) {
      jentry["status"] = "SKIPPED-DISPUTED";
      jentry["note"] = entry.dispute_note;
      if (!opt.json) {
        out << "## " << id.to_string() << "\nSKIPPED-DISPUTED: " << entry.dispute_note << "\n\n";
      }
      report.push_back(jentry);
      continue;
    }
    HomAlgebra a = instantiate(id, entry.verify_variant, q, params);
    FlagReport small = verify_small_flag(id, params);
    FlagReport cn = verify_cn_flag(id, params);
    FlagReport sym = verify_symmetric_flag(id, params);
    if (!opt.json) {
      out << "## " << id.to_string() << "  (" << describe_brackets(a) << "; alpha = "
          << matrix_json(a.alpha()).dump() << ")\n";
      if (!entry.variant_note.empty()) out << "note: " << entry.variant_note << "\n";
      out << "| alpha^r | Gamma | type | Der | CN | status |\n";
      out << "|---|---|---|---|---|---|\n";
    }
    json jrows = json::array();
    for (unsigned long r = 0; r <= opt.rmax; ++r) {
      RowReport row = verify_table(id, r, params);
      any_mismatch = any_mismatch || !row.ok();
      json jr;
      jr["r"] = r;
      jr["row"] = row.row_label;
      jr["covered"] = row.covered;
      jr["derived"] = row.derived;
      if (row.covered) {
        jr["gamma"] = status_name(row.gamma.status);
        jr["der"] = status_name(row.der.status);
        jr["gamma_detail"] = row.gamma.detail;
        jr["der_detail"] = row.der.detail;
      }
      jrows.push_back(jr);
      if (!opt.json) {
        std::string type_cell =
            small.recorded ? (*small.recorded ? "small" : "not small") : "";
        std::string cn_cell = cn.recorded ? (*cn.recorded ? "Yes" : "No") : "";
        std::string status;
        if (!row.covered)
          status = "UNCOVERED";
        else if (row.derived)
          status = "derived: gamma " + status_name(row.gamma.status) + ", der " +
                   status_name(row.der.status);
        else
          status = "gamma " + status_name(row.gamma.status) + ", der " +
                   status_name(row.der.status);
        out << "| r=" << r << " (" << row.row_label << ") | "
            << (row.covered ? row.gamma.detail : std::string("-")) << " | " << type_cell << " | "
            << (row.covered ? row.der.detail : std::string("-")) << " | " << cn_cell << " | "
            << status << " |\n";
      }
    }
    jentry["rows"] = jrows;
    jentry["small"] = status_name(small.status);
    jentry["cn"] = status_name(cn.status);
    jentry["symmetric"] = status_name(sym.status);
    any_mismatch = any_mismatch || small.status == CellStatus::mismatch ||
                   cn.status == CellStatus::mismatch || sym.status == CellStatus::mismatch;
    if (!opt.json) {
      auto flag_text = [](const FlagReport& fr, const char* yes, const char* no) {
        if (!fr.recorded) return std::string("(no entry)");
        return std::string(fr.computed ? yes : no) + " [" + status_name(fr.status) + "]";
      };
      out << "flags: " << flag_text(small, "small", "not small") << "; CN="
          << flag_text(cn, "Yes", "No") << "; symmetric=" << flag_text(sym, "yes", "no")
          << "\n\n";
    }
    report.push_back(jentry);
  }
  if (opt.json) out << report.dump(2) << "\n";
  return any_mismatch ? kExitCheckFailed : kExitOk;
}

int cmd_export(const std::string& id, const std::string& variant,
               const std::vector<std::string>& params, std::ostream& out) {
  auto parsed = parse_algebra_id(id);
  if (!parsed) throw ParseError("unknown id '" + id + "'");
  ClassVariant v;
  if (variant == "classification")
    v = ClassVariant::classification;
  else if (variant == "tables")
    v = ClassVariant::tables;
  else
    throw ParseError("variant must be classification or tables");
  const Field q = Field::rationals();
  Params p = default_params(*parsed, q);
  for (const auto& [k, val] : parse_param_overrides(params, q)) p.insert_or_assign(k, val);
  HomAlgebra a = instantiate(*parsed, v, q, p);
  out << serialize_document(a, p);
  return kExitOk;
}

int cmd_twist(const std::string& document_text, const std::string& beta_json, std::ostream& out) {
  ParsedDocument doc = parse_document(document_text);
  const Field& f = doc.algebra.field();
  json jb;
  try {
    jb = json::parse(beta_json);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid beta matrix: ") + e.what());
  }
  if (!jb.is_array() || jb.size() != doc.algebra.dim())
    throw ParseError("beta must be a dim x dim matrix of scalar strings");
  Matrix beta(f, doc.algebra.dim(), doc.algebra.dim());
  for (std::size_t i = 0; i < doc.algebra.dim(); ++i) {
    if (!jb[i].is_array() || jb[i].size() != doc.algebra.dim())
      throw ParseError("beta must be a dim x dim matrix of scalar strings");
    for (std::size_t k = 0; k < doc.algebra.dim(); ++k)
      beta.set(i, k, Scalar::parse(f, jb[i][k].get<std::string>()));
  }
  try {
    HomAlgebra twisted = yau_twist(doc.algebra, beta);
    out << serialize_document(twisted, doc.params);
    return kExitOk;
  } catch (const PreconditionError& e) {
    out << "twist rejected: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int cmd_tensor(const std::string& document_text, std::ostream& out) {
  ParsedDocument doc = parse_document(document_text);
  try {
    HomAlgebra t = tensor_square_leibniz(doc.algebra);
    out << serialize_document(t, doc.params);
    return kExitOk;
  } catch (const PreconditionError& e) {
    out << "tensor square rejected: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out) {
  SearchConfig cfg;
  cfg.p = opt.p;
  cfg.require_multiplicative = opt.require_multiplicative;
  if (opt.sidedness == "left")
    cfg.sidedness = Sidedness::left;
  else if (opt.sidedness == "right")
    cfg.sidedness = Sidedness::right;
  else if (opt.sidedness == "symmetric")
    cfg.sidedness = Sidedness::symmetric;
  else
    throw ParseError("unknown sidedness '" + opt.sidedness + "'");
  try {
    cfg.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());  // config problems are usage errors
  }
  json j;
  j["p"] = cfg.p;
  j["sidedness"] = opt.sidedness;
  if (!opt.classify) {
    auto found = enumerate_all(cfg);
    j["count"] = found.size();
    json items = json::array();
    // full listings get large; cap the echoed structures, the count is exact
    const std::size_t cap = 200;
    for (std::size_t i = 0; i < found.size() && i < cap; ++i) {
      HomAlgebra a = found[i].to_algebra(cfg.p);
      items.push_back(json{{"brackets", describe_brackets(a)},
                           {"alpha", matrix_json(a.alpha())}});
    }
    j["structures"] = items;
    j["truncated"] = found.size() > cap;
  } else {
    auto classes = classify(cfg);
    j["count"] = classes.size();
    std::uint64_t total = 0;
    json items = json::array();
    for (const auto& c : classes) {
      HomAlgebra a = c.representative.to_algebra(cfg.p);
      items.push_back(json{{"brackets", describe_brackets(a)},
                           {"alpha", matrix_json(a.alpha())},
                           {"orbit_size", c.orbit_size},
                           {"fingerprint",
                            json{{"dim_der0", c.fp.dim_der0},
                                 {"dim_gamma0", c.fp.dim_gamma0},
                                 {"dim_zder0", c.fp.dim_zder0},
                                 {"symmetric", c.fp.symmetric},
                                 {"alpha_rank", c.fp.alpha_rank}}}});
      total += c.orbit_size;
    }
    j["classes"] = items;
    j["orbit_total"] = total;
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace homleib

#include "homleib/document.hpp"

#include <json.hpp>

#include <algorithm>

namespace homleib {

namespace {
using nlohmann::json;

Field parse_field(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
  }
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer())
    return Field::prime(j["Fp"].get<std::int64_t>());
  throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

std::size_t name_index(const std::vector<std::string>& basis, const std::string& name) {
  auto it = std::find(basis.begin(), basis.end(), name);
  if (it == basis.end()) throw ParseError("unknown basis name '" + name + "'");
  return static_cast<std::size_t>(it - basis.begin());
}
}  // namespace

ParsedDocument parse_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (j.contains("schema") && j["schema"] != 1) throw ParseError("unsupported schema version");
    Field field = parse_field(j.at("field"));
    std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim == 0) throw ParseError("dim must be positive");
    std::vector<std::string> basis;
    if (j.contains("basis")) {
      basis = j["basis"].get<std::vector<std::string>>();
      if (basis.size() != dim) throw ParseError("basis name count != dim");
    } else {
      for (std::size_t i = 1; i <= dim; ++i) basis.push_back("e" + std::to_string(i));
    }
    std::vector<std::tuple<std::size_t, std::size_t, std::vector<Scalar>>> brackets;
    for (const auto& b : j.value("brackets", json::array())) {
      std::size_t left = name_index(basis, b.at("left").get<std::string>());
      std::size_t right = name_index(basis, b.at("right").get<std::string>());
      std::vector<Scalar> value(dim, Scalar::zero(field));
      for (const auto& [name, coef] : b.at("value").items())
        value[name_index(basis, name)] = Scalar::parse(field, coef.get<std::string>());
      brackets.emplace_back(left + 1, right + 1, value);
    }
    const auto& alpha_rows = j.at("alpha");
    if (!alpha_rows.is_array() || alpha_rows.size() != dim)
      throw ParseError("alpha must be a dim x dim matrix of scalar strings");
    Matrix alpha(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!alpha_rows[i].is_array() || alpha_rows[i].size() != dim)
        throw ParseError("alpha must be a dim x dim matrix of scalar strings");
      for (std::size_t k = 0; k < dim; ++k)
        alpha.set(i, k, Scalar::parse(field, alpha_rows[i][k].get<std::string>()));
    }
    std::optional<std::vector<int>> parity;
    if (j.contains("parity")) parity = j["parity"].get<std::vector<int>>();
    Params params;
    if (j.contains("params"))
      for (const auto& [name, value] : j["params"].items())
        params.emplace(name, Scalar::parse(field, value.get<std::string>()));
    return ParsedDocument{HomAlgebra(field, dim, brackets, alpha, parity, basis),
                          std::move(params)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

std::string serialize_document(const HomAlgebra& algebra, const Params& params) {
  json j;
  j["schema"] = 1;
  if (algebra.field().is_rational())
    j["field"] = "Q";
  else
    j["field"] = json{{"Fp", algebra.field().characteristic()}};
  j["dim"] = algebra.dim();
  j["basis"] = algebra.basis_names();
  json brackets = json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t k = 0; k < algebra.dim(); ++k) {
      json value = json::object();
      for (std::size_t s = 0; s < algebra.dim(); ++s)
        if (!algebra.sc(i, k, s).is_zero())
          value[algebra.basis_names()[s]] = algebra.sc(i, k, s).to_string();
      if (!value.empty())
        brackets.push_back(json{{"left", algebra.basis_names()[i]},
                                {"right", algebra.basis_names()[k]},
                                {"value", value}});
    }
  j["brackets"] = brackets;
  json alpha = json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < algebra.dim(); ++k)
      row.push_back(algebra.alpha().at(i, k).to_string());
    alpha.push_back(row);
  }
  j["alpha"] = alpha;
  if (algebra.graded()) {
    std::vector<int> parity;
    for (std::size_t i = 0; i < algebra.dim(); ++i) parity.push_back(algebra.parity_of(i));
    j["parity"] = parity;
  }
  if (!params.empty()) {
    json p = json::object();
    for (const auto& [name, value] : params) p[name] = value.to_string();
    j["params"] = p;
  }
  return j.dump(2) + "\n";
}

}  // namespace homleib

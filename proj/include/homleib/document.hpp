#ifndef HOMLEIB_DOCUMENT_HPP
#define HOMLEIB_DOCUMENT_HPP

#include <string>

#include "homleib/algebra.hpp"
#include "homleib/catalog.hpp"

namespace homleib {

/// Parsed JSON algebra document (schema 1): field, dim, basis names, sparse
/// bracket list, alpha matrix, optional parity and named parameters. Scalars
/// travel as exact strings ("3/4", "-2").
struct ParsedDocument {
  HomAlgebra algebra;
  Params params;
};

ParsedDocument parse_document(const std::string& json_text);

/// Canonical serialization: sorted object keys, brackets in basis order with
/// zero brackets omitted, exact scalar strings. parse o serialize is the
/// identity on parsed documents.
std::string serialize_document(const HomAlgebra& algebra, const Params& params = {});

}  // namespace homleib

#endif

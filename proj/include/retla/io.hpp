// JSON encoding of algebras and verification reports.
//
// Algebra documents:
//   {"name": str, "p": 2|3|5|7, "dim": n, "basis": [n labels],
//    "brackets": [[i, j, k, c], ...] with i < j,
//    "pmap": {label: [[k, c], ...]}}
// Omitted brackets and p-map entries are zero.

#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "retla/algebra.hpp"
#include "retla/verify.hpp"

namespace retla {

struct SchemaError : std::runtime_error {
  SchemaError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field(std::move(field)) {}
  std::string field;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(ValidationReport r)
      : std::runtime_error("algebra fails validation: " + r.summary()), report(std::move(r)) {}
  ValidationReport report;
};

nlohmann::ordered_json to_json(const RestrictedLieAlgebra& g);
/// Schema checks only; the result is not validated.
RestrictedLieAlgebra from_json(const nlohmann::json& doc);
/// Parses text; syntax errors are reported as SchemaError with line and column.
RestrictedLieAlgebra parse_algebra(const std::string& text);

/// Reads, parses and (optionally) validates. Throws std::runtime_error when
/// the file cannot be read, SchemaError, or ValidationError.
RestrictedLieAlgebra load(const std::string& path, bool validate_axioms = true);
void save(const RestrictedLieAlgebra& g, const std::string& path);

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing);

}  // namespace retla

#pragma once

#include <stdexcept>
#include <string>

#include "liecx/algebra.hpp"
#include "liecx/casimir.hpp"
#include "liecx/extension.hpp"
#include "liecx/groups.hpp"

namespace liecx {

/// Raised on malformed algebra documents; `path` points at the offending
/// JSON node, e.g. "$.brackets[2].rhs[0].coef".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path_in, const std::string& message)
      : std::runtime_error(path_in + ": " + message), path(std::move(path_in)) {}
  std::string path;
};

/// Algebra document schema:
///   {"name": str, "basis": [str...],
///    "brackets": [{"a": str, "b": str,
///                  "rhs": [{"gen": str, "coef": "p/q"}...]}...]}
LieAlgebra parse_algebra(const std::string& json_text);
LieAlgebra parse_algebra_file(const std::string& path);

/// Byte-deterministic rendering: basis in stored order, brackets sorted by
/// (a, b) index, rhs terms sorted by generator index, rationals as strings.
std::string serialize_algebra(const LieAlgebra& alg);

std::string extension_to_json(const ExtensionResult& result);
std::string extension_to_text(const ExtensionResult& result);

std::string casimirs_to_json(Enveloping& env, const CasimirSet& set);
std::string casimirs_to_text(Enveloping& env, const CasimirSet& set);

std::string group_element_to_json(const GroupElement& g);

std::string poly_to_text(const LieAlgebra& alg, const EnvelopingPoly& p);

}  // namespace liecx

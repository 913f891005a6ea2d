#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catgeo/category.hpp"
#include "catgeo/presentation.hpp"

namespace catgeo {

/// JSON category document:
///
///   {
///     "mode": "thin" | "free" | "explicit",
///     "objects": ["a", "b", ...],
///     "arrows": [{"id": "f", "dom": "a", "cod": "b"}, ...],
///     "compositions": [{"f": "f", "g": "g", "result": "h"}, ...]
///   }
///
/// For thin and free documents the arrows are generators; "compositions"
/// (result = g∘f) belongs to explicit documents only.
using CategoryDocument = Presentation;

/// Structural checks only: JSON syntax, field types, recognized mode, unique
/// ids, resolvable references. Throws ParseError with the offending line or
/// field path.
CategoryDocument parse_document(std::string_view text);

/// Pretty-printed JSON with keys in canonical order.
std::string write_document(const CategoryDocument& document);

/// Builds the category a document describes. Explicit categories are run
/// through validate_axioms unless `validate` is false; failures throw
/// AxiomViolation listing the violations.
FiniteCategory load_category(std::string_view text, bool validate = true);

/// Names of the shipped example documents.
std::vector<std::string> builtin_example_names();
std::optional<std::string> builtin_example(std::string_view name);

}  // namespace catgeo

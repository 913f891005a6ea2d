#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "catgeo/category.hpp"
#include "catgeo/geometry.hpp"
#include "catgeo/vector_space.hpp"

namespace catgeo {

enum class OutputFormat { Text, Json };

/// A category with its atomic basis and, when the basis generates every
/// arrow, its norm table.
class CategoryAnalysis {
 public:
  explicit CategoryAnalysis(FiniteCategory category);

  const FiniteCategory& category() const noexcept { return category_; }
  const Basis& basis() const noexcept { return basis_; }
  bool has_norms() const noexcept { return norms_.has_value(); }
  const std::optional<NormTable>& maybe_norms() const noexcept { return norms_; }
  /// Throws NotGenerated with the original diagnostic.
  const NormTable& norms() const;

 private:
  FiniteCategory category_;
  Basis basis_;
  std::optional<NormTable> norms_;
  std::string norm_error_;
};

/// Rendered report plus whether everything it checks holds.
struct Rendered {
  std::string text;
  bool ok = true;
};

Rendered report_validation(const FiniteCategory& c, OutputFormat format);
std::string report_basis(const CategoryAnalysis& a, OutputFormat format);
std::string report_norms(const CategoryAnalysis& a, OutputFormat format);
/// Inner, outer, geometric products both ways, the anticommutator and the
/// orthogonal/parallel predicates for two vectors named by id ("O" = zero).
std::string report_product(const CategoryAnalysis& a, std::string_view f, std::string_view g,
                           OutputFormat format);
/// fg + gf for every ordered pair of non-identity arrows.
std::string report_table(const CategoryAnalysis& a, OutputFormat format);
Rendered report_clifford(const CategoryAnalysis& a, OutputFormat format);
std::string report_embedding(const FiniteCategory& c, OutputFormat format);
std::string report_dot(const CategoryAnalysis& a, bool basis_only);

std::string report_interval_norm(std::string_view f, OutputFormat format);
std::string report_interval_add(std::string_view f, std::string_view g, OutputFormat format);
std::string report_interval_product(std::string_view f, std::string_view g, OutputFormat format);

}  // namespace catgeo

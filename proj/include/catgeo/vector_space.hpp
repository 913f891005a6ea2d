#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catgeo/category.hpp"

namespace catgeo {

/// Element of the Cat-vector space of a category: the zero vector O or a
/// non-identity arrow.
class Vector {
 public:
  static Vector zero() noexcept { return Vector{}; }
  static Vector of(ArrowIndex a) noexcept { return Vector{a}; }

  bool is_zero() const noexcept { return !arrow_.has_value(); }
  /// Precondition: !is_zero().
  ArrowIndex arrow() const { return *arrow_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  Vector() = default;
  explicit Vector(ArrowIndex a) : arrow_(a) {}
  std::optional<ArrowIndex> arrow_;
};

/// Resolves "O" to the zero vector and anything else to an arrow of c.
/// Throws UnknownArrow, or InvalidArgument for identities (not vectors).
Vector vector_by_id(const FiniteCategory& c, std::string_view id);
std::string vector_id(const FiniteCategory& c, Vector v);

/// f ⊕ g: g∘f when cod(f) = dom(g), with O as two-sided unit.
/// Throws Undefined for non-composable arrows and CompositeIsIdentity when
/// the composite leaves the vector space.
Vector vec_add(const FiniteCategory& c, Vector f, Vector g);

struct Basis {
  std::vector<ArrowIndex> members;  // canonical order
  bool contains(ArrowIndex a) const;
};

/// Non-identity arrows that are not the composite of two non-identity arrows
/// both different from them.
Basis atomic_basis(const FiniteCategory& c);

/// Minimal number of basis arrows whose composite is each arrow; ||O|| = 0.
class NormTable {
 public:
  NormTable() = default;
  explicit NormTable(std::vector<std::uint64_t> lengths) : lengths_(std::move(lengths)) {}

  std::uint64_t operator()(Vector v) const { return v.is_zero() ? 0 : length(v.arrow()); }
  std::uint64_t length(ArrowIndex a) const { return lengths_.at(a.value); }
  static constexpr std::uint64_t zero_norm() noexcept { return 0; }

  /// Indexed by arrow; identities hold 0.
  const std::vector<std::uint64_t>& lengths() const noexcept { return lengths_; }

 private:
  std::vector<std::uint64_t> lengths_;
};

/// Breadth-first search from the basis, composing a basis arrow on the left at
/// each step. Throws NotGenerated naming every unreachable arrow.
NormTable compute_norms(const FiniteCategory& c, const Basis& basis);

/// min ||l|| over vectors l (O included) with f = g ⊕ l. Throws NoDifference.
std::uint64_t distance(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g);

}  // namespace catgeo

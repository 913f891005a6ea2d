#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "catgeo/category.hpp"
#include "catgeo/multivector.hpp"
#include "catgeo/product_rules.hpp"
#include "catgeo/vector_space.hpp"

namespace catgeo {

/// Canonical carrier of a bivector: first precedes second in arrow order.
struct Blade2 {
  ArrowIndex first;
  ArrowIndex second;
  auto operator<=>(const Blade2&) const = default;
};

using CatMultivector = Multivector<Blade2, std::int64_t>;

/// Adapts a category and its norms to rules::ProductSpace.
class CatSpace {
 public:
  using vector_type = Vector;
  using scalar_type = std::int64_t;
  using blade_type = Blade2;

  CatSpace(const FiniteCategory& c, const NormTable& norms) : c_(c), norms_(norms) {}

  bool is_zero(Vector v) const noexcept { return v.is_zero(); }
  bool chains(Vector f, Vector g) const {
    return !f.is_zero() && !g.is_zero() && c_.cod(f.arrow()) == c_.dom(g.arrow());
  }
  std::int64_t norm(Vector v) const { return static_cast<std::int64_t>(norms_(v)); }
  bool precedes(Vector f, Vector g) const { return f.arrow() < g.arrow(); }
  Blade2 make_blade(Vector f, Vector g) const { return Blade2{f.arrow(), g.arrow()}; }

  const FiniteCategory& category() const noexcept { return c_; }
  const NormTable& norms() const noexcept { return norms_; }

 private:
  const FiniteCategory& c_;
  const NormTable& norms_;
};

/// ||first|| x ||second||.
std::uint64_t blade_area(const NormTable& norms, const Blade2& blade);

/// f·g = ||f||·||g|| when g = f or cod(f) = dom(g), else 0. Not symmetric.
std::uint64_t inner(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g);
bool is_orthogonal(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g);
/// f = g, or both g∘f and f∘g exist. False when either is the zero vector.
bool is_parallel(const FiniteCategory& c, Vector f, Vector g);
CatMultivector outer(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g);
CatMultivector geometric(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g);
CatMultivector anticommutator(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g);
/// Same value as anticommutator, computed from the four-case closed form.
CatMultivector anticommutator_by_cases(const FiniteCategory& c, const NormTable& norms, Vector f,
                                       Vector g);

enum class CliffordCondition { UnitSquare, OrthogonalAnticommute };

struct CliffordCounterexample {
  CliffordCondition condition;
  Vector f;
  Vector g;
  std::string detail;
};

struct CliffordReport {
  std::size_t basis_checked = 0;
  std::size_t orthogonal_pairs_checked = 0;
  std::vector<CliffordCounterexample> counterexamples;

  bool unit_squares_hold() const;
  bool anticommutation_holds() const;
  bool ok() const { return counterexamples.empty(); }
};

/// Checks e^2 = 1 for every basis arrow and fg = -gf for every orthogonal pair
/// of vectors (zero vector included).
CliffordReport clifford_report(const FiniteCategory& c, const NormTable& norms, const Basis& basis);

std::string format_multivector(const FiniteCategory& c, const CatMultivector& m);

}  // namespace catgeo

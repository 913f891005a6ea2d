#pragma once

#include <span>
#include <string>
#include <vector>

#include "catgeo/category.hpp"

namespace catgeo {

/// Edge of a generator graph; in explicit mode, a declared non-identity arrow.
struct Generator {
  std::string id;
  std::string dom;
  std::string cod;
};

/// Explicit-mode table row: result = g∘f. The result may name an identity
/// ("id:<object>").
struct ExplicitComposition {
  std::string f;
  std::string g;
  std::string result;
};

struct Presentation {
  PresentationMode mode = PresentationMode::Thin;
  std::vector<std::string> objects;
  std::vector<Generator> generators;
  std::vector<ExplicitComposition> compositions;
};

/// Upper bound on the arrows a free presentation may expand to.
inline constexpr std::size_t kMaxFreeArrows = 100000;

/// Preorder closure of a generator graph. One arrow per reachable ordered pair
/// of distinct objects, named by the generator joining them when there is one
/// and "<dom>-><cod>" otherwise.
/// Throws NontrivialCycle on mutual reachability, InvalidPresentation on loops
/// or repeated generator endpoints.
FiniteCategory build_thin(std::span<const std::string> objects,
                          std::span<const Generator> generators);

/// Free category on an acyclic multigraph: arrows are nonempty paths, and a
/// path g1, ..., gk is named "gk.....g1" (composition order).
/// Throws CyclicGraph.
FiniteCategory build_free(std::span<const std::string> objects,
                          std::span<const Generator> generators);

/// Assembles an explicit category verbatim. The composition list must cover
/// exactly the composable pairs of non-identity arrows (ParseError otherwise);
/// the axioms are not checked here.
FiniteCategory build_explicit(std::span<const std::string> objects,
                              std::span<const Generator> arrows,
                              std::span<const ExplicitComposition> compositions);

/// Dispatches on presentation.mode. Explicit categories are not validated.
FiniteCategory build(const Presentation& presentation);

/// Explicit presentation listing every non-identity arrow and composite of c.
Presentation to_explicit_presentation(const FiniteCategory& c);

}  // namespace catgeo

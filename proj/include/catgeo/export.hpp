#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catgeo/category.hpp"
#include "catgeo/vector_space.hpp"

namespace catgeo {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Objects as distinct points of the z = 0 plane, non-identity arrows as arcs
/// that leave the plane between their endpoints.
struct Embedding {
  std::vector<std::pair<std::string, Point3>> points;             // object order
  std::vector<std::pair<std::string, std::vector<Point3>>> arcs;  // canonical arrow order
};

inline constexpr std::size_t kArcSamples = 17;

/// Objects sit evenly on a circle of radius equal to the object count. Arc k
/// between the same two objects rises to height 1 + k/2 along a half sine.
Embedding export_embedding(const FiniteCategory& c, std::size_t samples = kArcSamples);

struct DotOptions {
  bool basis_only = false;
  std::string graph_name = "category";
};

/// DOT digraph: one node per object, one edge per non-identity arrow (or per
/// basis arrow). Edges carry the arrow id and, when given, its norm.
std::string export_dot(const FiniteCategory& c, const DotOptions& options,
                       const std::optional<NormTable>& norms = std::nullopt);

}  // namespace catgeo

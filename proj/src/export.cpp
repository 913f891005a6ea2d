#include "catgeo/export.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace catgeo {

Embedding export_embedding(const FiniteCategory& c, std::size_t samples) {
  if (samples < 3) samples = 3;
  Embedding e;
  const std::size_t n = c.object_count();
  const double radius = static_cast<double>(n);
  std::vector<Point3> at(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    at[i] = Point3{radius * std::cos(angle), radius * std::sin(angle), 0.0};
    e.points.emplace_back(c.objects()[i], at[i]);
  }

  // Arcs sharing an unordered pair of endpoints get increasing heights.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> seen;
  for (ArrowIndex a : c.non_identity_arrows()) {
    const Point3 from = at[c.dom(a).value];
    const Point3 to = at[c.cod(a).value];
    const auto key = std::minmax(c.dom(a).value, c.cod(a).value);
    const double height = 1.0 + 0.5 * static_cast<double>(seen[key]++);

    std::vector<Point3> arc(samples);
    arc.front() = from;
    arc.back() = to;
    for (std::size_t j = 1; j + 1 < samples; ++j) {
      const double s = static_cast<double>(j) / static_cast<double>(samples - 1);
      arc[j] = Point3{from.x + s * (to.x - from.x), from.y + s * (to.y - from.y),
                      height * std::sin(std::numbers::pi * s)};
    }
    e.arcs.emplace_back(c.arrow_id(a), std::move(arc));
  }
  return e;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const FiniteCategory& c, const DotOptions& options,
                       const std::optional<NormTable>& norms) {
  std::ostringstream os;
  os << "digraph " << quoted(options.graph_name) << " {\n";
  for (const std::string& object : c.objects()) os << "  " << quoted(object) << ";\n";

  std::vector<ArrowIndex> edges;
  if (options.basis_only) {
    edges = atomic_basis(c).members;
  } else {
    edges = c.non_identity_arrows();
  }
  for (ArrowIndex a : edges) {
    std::string label = c.arrow_id(a);
    if (norms) label += " (" + std::to_string(norms->length(a)) + ")";
    os << "  " << quoted(c.object_id(c.dom(a))) << " -> " << quoted(c.object_id(c.cod(a)))
       << " [label=" << quoted(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace catgeo

#include "catgeo/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "catgeo/error.hpp"

namespace catgeo {

namespace {

struct Edge {
  std::uint32_t dom;
  std::uint32_t cod;
};

std::unordered_map<std::string, std::uint32_t> index_objects(std::span<const std::string> objects) {
  std::unordered_map<std::string, std::uint32_t> lookup;
  for (std::uint32_t i = 0; i < objects.size(); ++i) {
    if (!lookup.emplace(objects[i], i).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate object id '" + objects[i] + "'");
    }
  }
  return lookup;
}

std::vector<Edge> resolve_edges(const std::unordered_map<std::string, std::uint32_t>& lookup,
                                std::span<const Generator> generators) {
  std::vector<Edge> edges;
  edges.reserve(generators.size());
  std::unordered_set<std::string> seen;
  for (const Generator& g : generators) {
    if (!seen.insert(g.id).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate arrow id '" + g.id + "'");
    }
    auto d = lookup.find(g.dom);
    auto c = lookup.find(g.cod);
    if (d == lookup.end() || c == lookup.end()) {
      throw Error(ErrorCode::InvalidPresentation,
                  "generator '" + g.id + "' names an undeclared object");
    }
    edges.push_back(Edge{d->second, c->second});
  }
  return edges;
}

std::vector<std::string> to_vector(std::span<const std::string> objects) {
  return {objects.begin(), objects.end()};
}

}  // namespace

FiniteCategory build_thin(std::span<const std::string> objects,
                          std::span<const Generator> generators) {
  const auto lookup = index_objects(objects);
  const auto edges = resolve_edges(lookup, generators);
  const std::size_t n = objects.size();

  std::vector<std::vector<std::uint32_t>> adjacent(n);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> named;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    if (edge.dom == edge.cod) {
      throw Error(ErrorCode::InvalidPresentation,
                  "generator '" + generators[e].id + "' is a loop; a thin category has only the identity there");
    }
    if (!named.emplace(std::pair{edge.dom, edge.cod}, e).second) {
      throw Error(ErrorCode::InvalidPresentation,
                  "generators '" + generators[named.at({edge.dom, edge.cod})].id + "' and '" +
                      generators[e].id + "' join the same ordered pair of objects");
    }
    adjacent[edge.dom].push_back(edge.cod);
  }

  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::uint32_t start = 0; start < n; ++start) {
    std::deque<std::uint32_t> queue(adjacent[start].begin(), adjacent[start].end());
    while (!queue.empty()) {
      const std::uint32_t v = queue.front();
      queue.pop_front();
      if (reach[start][v]) continue;
      reach[start][v] = 1;
      for (std::uint32_t w : adjacent[v]) {
        if (!reach[start][w]) queue.push_back(w);
      }
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a; b < n; ++b) {
      if (reach[a][b] && reach[b][a]) {
        throw Error(ErrorCode::NontrivialCycle,
                    "objects '" + objects[a] + "' and '" + objects[b] +
                        "' reach each other; composites would be identities");
      }
    }
  }

  std::vector<Arrow> arrows;
  std::vector<std::vector<std::int64_t>> raw(n, std::vector<std::int64_t>(n, -1));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a == b || !reach[a][b]) continue;
      raw[a][b] = static_cast<std::int64_t>(arrows.size());
      auto it = named.find({a, b});
      if (it != named.end()) {
        arrows.push_back(Arrow{generators[it->second].id, ObjectIndex{a}, ObjectIndex{b}});
      } else {
        arrows.push_back(
            Arrow{objects[a] + "->" + objects[b], ObjectIndex{a}, ObjectIndex{b}, false, true});
      }
    }
  }

  std::vector<RawComposition> compositions;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (raw[a][b] < 0) continue;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (raw[b][c] < 0) continue;
        compositions.push_back(RawComposition{static_cast<std::size_t>(raw[a][b]),
                                              static_cast<std::size_t>(raw[b][c]),
                                              static_cast<std::size_t>(raw[a][c])});
      }
    }
  }
  return FiniteCategory::assemble(to_vector(objects), std::move(arrows), compositions,
                                  PresentationMode::Thin);
}

FiniteCategory build_free(std::span<const std::string> objects,
                          std::span<const Generator> generators) {
  const auto lookup = index_objects(objects);
  const auto edges = resolve_edges(lookup, generators);
  const std::size_t n = objects.size();

  std::vector<std::vector<std::uint32_t>> out_edges(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    out_edges[edges[e].dom].push_back(e);
    ++indegree[edges[e].cod];
  }
  std::vector<std::uint32_t> ready;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::uint32_t v = ready.back();
    ready.pop_back();
    ++visited;
    for (std::uint32_t e : out_edges[v]) {
      if (--indegree[edges[e].cod] == 0) ready.push_back(edges[e].cod);
    }
  }
  if (visited != n) {
    throw Error(ErrorCode::CyclicGraph,
                "generator graph has a directed cycle; its free category is infinite");
  }

  // Every nonempty path, grown one generator at a time.
  using Path = std::vector<std::uint32_t>;
  std::vector<Path> paths;
  for (std::uint32_t e = 0; e < edges.size(); ++e) paths.push_back({e});
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::uint32_t end = edges[paths[i].back()].cod;
    for (std::uint32_t e : out_edges[end]) {
      if (paths.size() >= kMaxFreeArrows) {
        throw Error(ErrorCode::InvalidPresentation,
                    "free category exceeds " + std::to_string(kMaxFreeArrows) + " arrows");
      }
      Path next = paths[i];
      next.push_back(e);
      paths.push_back(std::move(next));
    }
  }

  std::map<Path, std::size_t> path_index;
  std::vector<std::vector<std::size_t>> paths_from(n);
  std::vector<Arrow> arrows;
  arrows.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    std::string id;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      if (!id.empty()) id += '.';
      id += generators[*it].id;
    }
    const ObjectIndex dom{edges[p.front()].dom};
    arrows.push_back(Arrow{std::move(id), dom, ObjectIndex{edges[p.back()].cod}, false, p.size() > 1});
    path_index.emplace(p, i);
    paths_from[dom.value].push_back(i);
  }

  std::vector<RawComposition> compositions;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j : paths_from[arrows[i].cod.value]) {
      Path joined = paths[i];
      joined.insert(joined.end(), paths[j].begin(), paths[j].end());
      compositions.push_back(RawComposition{i, j, path_index.at(joined)});
    }
  }
  return FiniteCategory::assemble(to_vector(objects), std::move(arrows), compositions,
                                  PresentationMode::Free);
}

FiniteCategory build_explicit(std::span<const std::string> objects,
                              std::span<const Generator> arrow_records,
                              std::span<const ExplicitComposition> compositions) {
  const auto lookup = index_objects(objects);
  const auto edges = resolve_edges(lookup, arrow_records);

  std::unordered_map<std::string, std::size_t> arrow_lookup;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < arrow_records.size(); ++i) {
    arrow_lookup.emplace(arrow_records[i].id, i);
    arrows.push_back(Arrow{arrow_records[i].id, ObjectIndex{edges[i].dom}, ObjectIndex{edges[i].cod}});
  }
  auto resolve_result = [&](const std::string& id) -> std::size_t {
    if (auto it = arrow_lookup.find(id); it != arrow_lookup.end()) return it->second;
    if (id.starts_with(kIdentityPrefix)) {
      if (auto o = lookup.find(id.substr(kIdentityPrefix.size())); o != lookup.end()) {
        return arrows.size() + o->second;
      }
    }
    throw Error(ErrorCode::ParseError, "composition result '" + id + "' is not an arrow");
  };
  auto resolve_operand = [&](const std::string& id) -> std::size_t {
    if (auto it = arrow_lookup.find(id); it != arrow_lookup.end()) return it->second;
    throw Error(ErrorCode::ParseError,
                "composition operand '" + id + "' is not a non-identity arrow");
  };

  std::set<std::pair<std::size_t, std::size_t>> covered;
  std::vector<RawComposition> raw;
  for (const ExplicitComposition& comp : compositions) {
    const std::size_t f = resolve_operand(comp.f);
    const std::size_t g = resolve_operand(comp.g);
    if (edges[f].cod != edges[g].dom) {
      throw Error(ErrorCode::ParseError,
                  "composition " + comp.g + " o " + comp.f + " listed for a non-composable pair");
    }
    if (!covered.emplace(f, g).second) {
      throw Error(ErrorCode::ParseError, "composition " + comp.g + " o " + comp.f + " listed twice");
    }
    raw.push_back(RawComposition{f, g, resolve_result(comp.result)});
  }
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    for (std::size_t g = 0; g < arrows.size(); ++g) {
      if (edges[f].cod == edges[g].dom && !covered.contains({f, g})) {
        throw Error(ErrorCode::ParseError, "incomplete composition table: no entry for " +
                                               arrows[g].id + " o " + arrows[f].id);
      }
    }
  }
  return FiniteCategory::assemble(to_vector(objects), std::move(arrows), raw,
                                  PresentationMode::Explicit);
}

FiniteCategory build(const Presentation& p) {
  switch (p.mode) {
    case PresentationMode::Thin:
    case PresentationMode::Free:
      if (!p.compositions.empty()) {
        throw Error(ErrorCode::ParseError,
                    std::string(to_string(p.mode)) + " presentations take no composition list");
      }
      return p.mode == PresentationMode::Thin ? build_thin(p.objects, p.generators)
                                              : build_free(p.objects, p.generators);
    case PresentationMode::Explicit:
      return build_explicit(p.objects, p.generators, p.compositions);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown presentation mode");
}

Presentation to_explicit_presentation(const FiniteCategory& c) {
  Presentation p;
  p.mode = PresentationMode::Explicit;
  p.objects.assign(c.objects().begin(), c.objects().end());
  for (ArrowIndex a : c.non_identity_arrows()) {
    p.generators.push_back(Generator{c.arrow_id(a), c.object_id(c.dom(a)), c.object_id(c.cod(a))});
  }
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> rows;
  c.table().for_each([&](ArrowIndex f, ArrowIndex g, ArrowIndex r) {
    if (!c.is_identity(f) && !c.is_identity(g)) rows.emplace_back(f.value, g.value, r.value);
  });
  std::sort(rows.begin(), rows.end());
  for (const auto& [f, g, r] : rows) {
    p.compositions.push_back(ExplicitComposition{c.arrow_id(ArrowIndex{f}), c.arrow_id(ArrowIndex{g}),
                                                 c.arrow_id(ArrowIndex{r})});
  }
  return p;
}

}  // namespace catgeo

#pragma once

// Random presentations and brute-force oracles shared by the unit and
// acceptance suites. Nothing here calls into the code paths it checks.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catgeo/category.hpp"
#include "catgeo/geometry.hpp"
#include "catgeo/presentation.hpp"
#include "catgeo/vector_space.hpp"

namespace catgeo::testing {

inline std::vector<std::string> object_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

/// Random DAG without repeated ordered pairs: up to max_objects objects and
/// max_edges edges oriented along a random topological order.
inline Presentation random_thin(std::mt19937_64& rng, std::size_t max_objects = 8,
                                std::size_t max_edges = 14) {
  std::uniform_int_distribution<std::size_t> count(1, max_objects);
  const std::size_t n = count(rng);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) candidates.emplace_back(order[i], order[j]);
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::uniform_int_distribution<std::size_t> edges(0, std::min(max_edges, candidates.size()));
  candidates.resize(edges(rng));

  Presentation p;
  p.mode = PresentationMode::Thin;
  p.objects = object_names(n);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    p.generators.push_back(Generator{"g" + std::to_string(k), p.objects[candidates[k].first],
                                     p.objects[candidates[k].second]});
  }
  return p;
}

/// Random acyclic multigraph (parallel edges allowed).
inline Presentation random_free(std::mt19937_64& rng, std::size_t max_objects = 6,
                                std::size_t max_edges = 9) {
  std::uniform_int_distribution<std::size_t> count(1, max_objects);
  const std::size_t n = count(rng);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  Presentation p;
  p.mode = PresentationMode::Free;
  p.objects = object_names(n);
  if (n < 2) return p;
  std::uniform_int_distribution<std::size_t> edges(0, max_edges);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t m = edges(rng);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    if (i > j) std::swap(i, j);
    p.generators.push_back(
        Generator{"g" + std::to_string(k), p.objects[order[i]], p.objects[order[j]]});
  }
  return p;
}

/// Floyd-Warshall reachability over the generator graph.
inline std::vector<std::vector<bool>> reachability(const Presentation& p) {
  const std::size_t n = p.objects.size();
  auto index = [&](const std::string& id) {
    return static_cast<std::size_t>(std::find(p.objects.begin(), p.objects.end(), id) - p.objects.begin());
  };
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const Generator& g : p.generators) reach[index(g.dom)][index(g.cod)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

/// Number of nonempty directed paths, by depth-first enumeration.
inline std::size_t count_paths(const Presentation& p) {
  std::size_t total = 0;
  auto walk = [&](auto&& self, const std::string& at) -> void {
    for (const Generator& g : p.generators) {
      if (g.dom != at) continue;
      ++total;
      self(self, g.cod);
    }
  };
  for (const std::string& o : p.objects) walk(walk, o);
  return total;
}

/// Minimal basis-factorization length of every arrow, by exhaustive search
/// over every composable sequence of basis arrows up to max_length.
/// Entries stay 0 for arrows no sequence reaches.
inline std::vector<std::uint64_t> brute_force_norms(const FiniteCategory& c, const Basis& basis,
                                                    std::size_t max_length) {
  std::vector<std::uint64_t> best(c.arrow_count(), 0);
  auto record = [&](ArrowIndex a, std::uint64_t len) {
    if (c.is_identity(a)) return;
    if (best[a.value] == 0 || len < best[a.value]) best[a.value] = len;
  };
  auto extend = [&](auto&& self, ArrowIndex composite, std::uint64_t len) -> void {
    record(composite, len);
    if (len == max_length) return;
    for (ArrowIndex e : basis.members) {
      if (c.cod(composite) != c.dom(e)) continue;
      auto next = c.table().get(composite, e);
      if (next) self(self, *next, len + 1);
    }
  };
  for (ArrowIndex e : basis.members) extend(extend, e, 1);
  return best;
}

/// fg + gf read off the four-case table from endpoints and norms alone.
inline CatMultivector closed_form_anticommutator(const FiniteCategory& c, const NormTable& norms,
                                                 ArrowIndex f, ArrowIndex g) {
  const auto area = static_cast<std::int64_t>(norms.length(f) * norms.length(g));
  if (f == g) return CatMultivector::scalar(2 * area);
  const bool cod_f_is_dom_g = c.cod(f) == c.dom(g);
  const bool dom_f_is_cod_g = c.dom(f) == c.cod(g);
  // Wedge x∧y as a canonical blade with orientation sign.
  auto wedge = [](ArrowIndex x, ArrowIndex y) {
    return x < y ? CatMultivector::blade(Blade2{x, y}, 1) : CatMultivector::blade(Blade2{y, x}, -1);
  };
  if (cod_f_is_dom_g && !dom_f_is_cod_g) return CatMultivector::scalar(area) + wedge(g, f);
  if (cod_f_is_dom_g && dom_f_is_cod_g) return CatMultivector::scalar(2 * area);
  if (!cod_f_is_dom_g && dom_f_is_cod_g) return CatMultivector::scalar(area) + wedge(f, g);
  return CatMultivector{};
}

}  // namespace catgeo::testing

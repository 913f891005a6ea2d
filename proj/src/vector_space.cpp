#include "catgeo/vector_space.hpp"

#include <algorithm>
#include <limits>

#include "catgeo/error.hpp"

namespace catgeo {

Vector vector_by_id(const FiniteCategory& c, std::string_view id) {
  if (id == kZeroToken) return Vector::zero();
  const ArrowIndex a = c.arrow_by_id(id);
  if (c.is_identity(a)) {
    throw Error(ErrorCode::InvalidArgument,
                "identity arrow '" + std::string(id) + "' is not a vector");
  }
  return Vector::of(a);
}

std::string vector_id(const FiniteCategory& c, Vector v) {
  return v.is_zero() ? std::string(kZeroToken) : c.arrow_id(v.arrow());
}

Vector vec_add(const FiniteCategory& c, Vector f, Vector g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (c.cod(f.arrow()) != c.dom(g.arrow())) {
    throw Error(ErrorCode::Undefined, c.arrow_id(f.arrow()) + " (+) " + c.arrow_id(g.arrow()) +
                                          " is undefined: the arrows do not compose");
  }
  const ArrowIndex r = c.compose(f.arrow(), g.arrow());
  if (c.is_identity(r)) {
    throw Error(ErrorCode::CompositeIsIdentity,
                c.arrow_id(g.arrow()) + " o " + c.arrow_id(f.arrow()) + " = " + c.arrow_id(r) +
                    " is an identity, which is not a vector");
  }
  return Vector::of(r);
}

bool Basis::contains(ArrowIndex a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

Basis atomic_basis(const FiniteCategory& c) {
  std::vector<char> composite(c.arrow_count(), 0);
  c.table().for_each([&](ArrowIndex f, ArrowIndex g, ArrowIndex r) {
    if (c.is_identity(f) || c.is_identity(g) || c.is_identity(r)) return;
    if (f != r && g != r) composite[r.value] = 1;
  });
  Basis basis;
  for (ArrowIndex a : c.non_identity_arrows()) {
    if (!composite[a.value]) basis.members.push_back(a);
  }
  return basis;
}

NormTable compute_norms(const FiniteCategory& c, const Basis& basis) {
  std::vector<std::uint64_t> lengths(c.arrow_count(), 0);
  std::vector<std::vector<ArrowIndex>> basis_from(c.object_count());
  std::vector<ArrowIndex> frontier;
  for (ArrowIndex e : basis.members) {
    basis_from[c.dom(e).value].push_back(e);
    lengths[e.value] = 1;
    frontier.push_back(e);
  }

  std::uint64_t depth = 1;
  while (!frontier.empty()) {
    std::vector<ArrowIndex> next;
    for (ArrowIndex reached : frontier) {
      for (ArrowIndex e : basis_from[c.cod(reached).value]) {
        auto r = c.table().get(reached, e);
        if (!r || c.is_identity(*r) || lengths[r->value] != 0) continue;
        lengths[r->value] = depth + 1;
        next.push_back(*r);
      }
    }
    frontier = std::move(next);
    ++depth;
  }

  std::string missing;
  for (ArrowIndex a : c.non_identity_arrows()) {
    if (lengths[a.value] == 0) {
      if (!missing.empty()) missing += ", ";
      missing += c.arrow_id(a);
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::NotGenerated, "arrows not generated by the atomic basis: " + missing);
  }
  return NormTable(std::move(lengths));
}

std::uint64_t distance(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  if (f == g) best = 0;  // l = O
  if (g.is_zero()) {
    best = std::min(best, norms(f));  // O ⊕ l = l
  } else if (!f.is_zero()) {
    const ArrowIndex fa = f.arrow();
    const ArrowIndex ga = g.arrow();
    if (c.dom(fa) == c.dom(ga)) {
      for (ArrowIndex l : c.non_identity_arrows()) {
        if (c.dom(l) != c.cod(ga) || c.cod(l) != c.cod(fa)) continue;
        if (c.table().get(ga, l) == fa) best = std::min(best, norms.length(l));
      }
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::NoDifference, "no vector l satisfies " + vector_id(c, f) + " = " +
                                             vector_id(c, g) + " (+) l");
  }
  return best;
}

}  // namespace catgeo

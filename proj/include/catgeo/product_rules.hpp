#pragma once

#include <concepts>
#include <utility>

#include "catgeo/multivector.hpp"

namespace catgeo::rules {

/// A vector space whose vectors compose partially. Implementations expose:
///   is_zero(v)        v is the zero vector
///   chains(f, g)      both non-zero and cod(f) = dom(g)
///   norm(v)           length, 0 for the zero vector
///   precedes(f, g)    canonical strict order on non-zero vectors
///   make_blade(f, g)  blade key for f before g (precondition: precedes(f, g))
template <class S>
concept ProductSpace = requires(const S& s, const typename S::vector_type& v) {
  typename S::scalar_type;
  typename S::blade_type;
  { s.is_zero(v) } -> std::convertible_to<bool>;
  { s.chains(v, v) } -> std::convertible_to<bool>;
  { s.norm(v) } -> std::convertible_to<typename S::scalar_type>;
  { s.precedes(v, v) } -> std::convertible_to<bool>;
  { s.make_blade(v, v) } -> std::convertible_to<typename S::blade_type>;
};

template <ProductSpace S>
using MultivectorOf = Multivector<typename S::blade_type, typename S::scalar_type>;

template <ProductSpace S>
typename S::scalar_type inner(const S& s, const typename S::vector_type& f,
                              const typename S::vector_type& g) {
  using Scalar = typename S::scalar_type;
  if (s.is_zero(f) || s.is_zero(g)) return Scalar{};
  if (f == g || s.chains(f, g)) return s.norm(f) * s.norm(g);
  return Scalar{};
}

/// Oriented unit wedge f∧g: +1 on the canonical blade when f precedes g,
/// -1 on the reversed blade otherwise.
template <ProductSpace S>
MultivectorOf<S> oriented_blade(const S& s, const typename S::vector_type& f,
                                const typename S::vector_type& g) {
  using Scalar = typename S::scalar_type;
  if (s.precedes(f, g)) return MultivectorOf<S>::blade(s.make_blade(f, g), Scalar{1});
  return MultivectorOf<S>::blade(s.make_blade(g, f), Scalar{-1});
}

template <ProductSpace S>
MultivectorOf<S> outer(const S& s, const typename S::vector_type& f,
                       const typename S::vector_type& g) {
  if (s.is_zero(f) || s.is_zero(g) || f == g || s.chains(f, g)) return {};
  return oriented_blade(s, f, g);
}

template <ProductSpace S>
bool is_orthogonal(const S& s, const typename S::vector_type& f, const typename S::vector_type& g) {
  using Scalar = typename S::scalar_type;
  return inner(s, f, g) == Scalar{} && inner(s, g, f) == Scalar{};
}

template <ProductSpace S>
bool is_parallel(const S& s, const typename S::vector_type& f, const typename S::vector_type& g) {
  if (s.is_zero(f) || s.is_zero(g)) return false;
  return f == g || (s.chains(f, g) && s.chains(g, f));
}

/// fg = f·g + f∧g.
template <ProductSpace S>
MultivectorOf<S> geometric(const S& s, const typename S::vector_type& f,
                           const typename S::vector_type& g) {
  return MultivectorOf<S>::scalar(inner(s, f, g)) + outer(s, f, g);
}

/// fg + gf from the two geometric products.
template <ProductSpace S>
MultivectorOf<S> anticommutator(const S& s, const typename S::vector_type& f,
                                const typename S::vector_type& g) {
  return geometric(s, f, g) + geometric(s, g, f);
}

/// fg + gf from the four-case table on whether cod(f) = dom(g) and
/// dom(f) = cod(g), without forming either geometric product. For f = g the
/// result is 2||f||^2; with a zero operand it is zero.
template <ProductSpace S>
MultivectorOf<S> anticommutator_by_cases(const S& s, const typename S::vector_type& f,
                                         const typename S::vector_type& g) {
  using M = MultivectorOf<S>;
  using Scalar = typename S::scalar_type;
  if (s.is_zero(f) || s.is_zero(g)) return {};
  const Scalar area = s.norm(f) * s.norm(g);
  if (f == g) return M::scalar(area + area);
  const bool forward = s.chains(f, g);
  const bool backward = s.chains(g, f);
  if (forward && !backward) return M::scalar(area) + oriented_blade(s, g, f);
  if (forward && backward) return M::scalar(area + area);
  if (backward) return M::scalar(area) + oriented_blade(s, f, g);
  return {};
}

}  // namespace catgeo::rules

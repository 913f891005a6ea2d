#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "catgeo/multivector.hpp"
#include "catgeo/product_rules.hpp"

namespace catgeo {

/// Exact rational in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts integers, decimals ("3.141", "-.5") and fractions ("22/7").
/// Throws ParseError.
Rational parse_rational(std::string_view text);
/// "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& value);

/// Arrow lo < hi of the real line viewed as a partial order.
class IntervalArrow {
 public:
  /// Throws InvalidArgument unless lo < hi.
  IntervalArrow(Rational lo, Rational hi);

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }

  friend bool operator==(const IntervalArrow& a, const IntervalArrow& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator<(const IntervalArrow& a, const IntervalArrow& b) {
    if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
    return a.hi_ < b.hi_;
  }

 private:
  Rational lo_;
  Rational hi_;
};

/// Zero vector or an interval arrow.
class IntervalVector {
 public:
  static IntervalVector zero() { return IntervalVector{}; }
  static IntervalVector of(IntervalArrow a) { return IntervalVector{std::move(a)}; }

  bool is_zero() const noexcept { return !arrow_.has_value(); }
  const IntervalArrow& arrow() const { return *arrow_; }

  friend bool operator==(const IntervalVector&, const IntervalVector&) = default;

 private:
  IntervalVector() = default;
  explicit IntervalVector(IntervalArrow a) : arrow_(std::move(a)) {}
  std::optional<IntervalArrow> arrow_;
};

/// "O" or "<lo>:<hi>". Throws ParseError / InvalidArgument.
IntervalVector parse_interval_vector(std::string_view text);
std::string format_interval_vector(const IntervalVector& v);

/// hi - lo.
Rational interval_norm(const IntervalArrow& f);
Rational interval_norm(const IntervalVector& v);

/// (lo(f), hi(g)) when hi(f) = lo(g); the zero vector is a two-sided unit.
/// Throws Undefined otherwise.
IntervalVector interval_add(const IntervalVector& f, const IntervalVector& g);

/// Two arrows whose sum is f, split at the midpoint.
std::pair<IntervalArrow, IntervalArrow> split_at_midpoint(const IntervalArrow& f);

struct IntervalBlade {
  IntervalArrow first;
  IntervalArrow second;
  friend bool operator<(const IntervalBlade& a, const IntervalBlade& b) {
    if (!(a.first == b.first)) return a.first < b.first;
    return a.second < b.second;
  }
  friend bool operator==(const IntervalBlade& a, const IntervalBlade& b) {
    return a.first == b.first && a.second == b.second;
  }
};

using IntervalMultivector = Multivector<IntervalBlade, Rational>;

struct IntervalSpace {
  using vector_type = IntervalVector;
  using scalar_type = Rational;
  using blade_type = IntervalBlade;

  bool is_zero(const IntervalVector& v) const noexcept { return v.is_zero(); }
  bool chains(const IntervalVector& f, const IntervalVector& g) const {
    return !f.is_zero() && !g.is_zero() && f.arrow().hi() == g.arrow().lo();
  }
  Rational norm(const IntervalVector& v) const { return interval_norm(v); }
  bool precedes(const IntervalVector& f, const IntervalVector& g) const {
    return f.arrow() < g.arrow();
  }
  IntervalBlade make_blade(const IntervalVector& f, const IntervalVector& g) const {
    return IntervalBlade{f.arrow(), g.arrow()};
  }
};

struct IntervalProducts {
  Rational inner_fg;
  Rational inner_gf;
  IntervalMultivector outer_fg;
  IntervalMultivector outer_gf;
  IntervalMultivector geometric_fg;
  IntervalMultivector geometric_gf;
  IntervalMultivector anticommutator;
  bool orthogonal = false;
  bool parallel = false;
};

IntervalProducts interval_products(const IntervalVector& f, const IntervalVector& g);

std::string format_interval_multivector(const IntervalMultivector& m);

}  // namespace catgeo

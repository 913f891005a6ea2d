#include "catgeo/real_line.hpp"

#include <cctype>
#include <sstream>

#include "catgeo/error.hpp"

namespace catgeo {

namespace {

using boost::multiprecision::cpp_int;

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_number(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) bad_number(text);
    const cpp_int d{std::string(den)};
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(cpp_int{std::string(num)}, d);
  } else {
    const auto dot = s.find('.');
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)) bad_number(text);
    std::string digits = std::string(whole) + std::string(frac);
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(cpp_int{digits}, scale);
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

IntervalArrow::IntervalArrow(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) {
    throw Error(ErrorCode::InvalidArgument, "interval arrow needs lo < hi, got " +
                                                format_rational(lo_) + " and " + format_rational(hi_));
  }
}

IntervalVector parse_interval_vector(std::string_view text) {
  if (text == "O") return IntervalVector::zero();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError,
                "interval vector must be 'O' or '<lo>:<hi>', got '" + std::string(text) + "'");
  }
  return IntervalVector::of(
      IntervalArrow(parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))));
}

std::string format_interval_vector(const IntervalVector& v) {
  if (v.is_zero()) return "O";
  return format_rational(v.arrow().lo()) + ":" + format_rational(v.arrow().hi());
}

Rational interval_norm(const IntervalArrow& f) { return f.hi() - f.lo(); }

Rational interval_norm(const IntervalVector& v) {
  return v.is_zero() ? Rational(0) : interval_norm(v.arrow());
}

IntervalVector interval_add(const IntervalVector& f, const IntervalVector& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.arrow().hi() != g.arrow().lo()) {
    throw Error(ErrorCode::Undefined, format_interval_vector(f) + " (+) " +
                                          format_interval_vector(g) +
                                          " is undefined: endpoints do not meet");
  }
  return IntervalVector::of(IntervalArrow(f.arrow().lo(), g.arrow().hi()));
}

std::pair<IntervalArrow, IntervalArrow> split_at_midpoint(const IntervalArrow& f) {
  const Rational mid = (f.lo() + f.hi()) / 2;
  return {IntervalArrow(f.lo(), mid), IntervalArrow(mid, f.hi())};
}

IntervalProducts interval_products(const IntervalVector& f, const IntervalVector& g) {
  const IntervalSpace s;
  IntervalProducts p;
  p.inner_fg = rules::inner(s, f, g);
  p.inner_gf = rules::inner(s, g, f);
  p.outer_fg = rules::outer(s, f, g);
  p.outer_gf = rules::outer(s, g, f);
  p.geometric_fg = rules::geometric(s, f, g);
  p.geometric_gf = rules::geometric(s, g, f);
  p.anticommutator = rules::anticommutator(s, f, g);
  p.orthogonal = rules::is_orthogonal(s, f, g);
  p.parallel = rules::is_parallel(s, f, g);
  return p;
}

std::string format_interval_multivector(const IntervalMultivector& m) {
  std::ostringstream os;
  bool first = true;
  if (m.scalar_part() != 0 || m.blades().empty()) {
    os << format_rational(m.scalar_part());
    first = false;
  }
  for (const auto& [blade, coef] : m.blades()) {
    const Rational magnitude = coef < 0 ? Rational(-coef) : coef;
    if (first) {
      if (coef < 0) os << "-";
    } else {
      os << (coef < 0 ? " - " : " + ");
    }
    if (magnitude != 1) os << format_rational(magnitude) << "*";
    os << "(" << format_interval_vector(IntervalVector::of(blade.first)) << "^"
       << format_interval_vector(IntervalVector::of(blade.second)) << ")";
    first = false;
  }
  return os.str();
}

}  // namespace catgeo

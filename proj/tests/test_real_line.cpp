#include <doctest.h>

#include <random>

#include "catgeo/error.hpp"
#include "catgeo/real_line.hpp"

using namespace catgeo;

namespace {

Rational q(const char* text) { return parse_rational(text); }

IntervalVector iv(const char* lo, const char* hi) {
  return IntervalVector::of(IntervalArrow(q(lo), q(hi)));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-100000, 100000);
  std::uniform_int_distribution<long long> den(1, 9999);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("parse_rational and format_rational") {
  CHECK(q("3.141") == Rational(3141, 1000));
  CHECK(q("22/7") == Rational(22, 7));
  CHECK(q("-0.5") == Rational(-1, 2));
  CHECK(q(".25") == Rational(1, 4));
  CHECK(q("7") == Rational(7));
  CHECK(q("4/8") == Rational(1, 2));
  CHECK(format_rational(q("0.001")) == "1/1000");
  CHECK(format_rational(q("10/5")) == "2");
  CHECK(format_rational(q("-3/9")) == "-1/3");
  for (const char* bad : {"", "-", "1.2.3", "abc", "1/0", "1/", "/2", "1e3", "."}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("IntervalArrow requires lo < hi") {
  CHECK_THROWS_AS(IntervalArrow(q("1"), q("1")), Error);
  CHECK_THROWS_AS(IntervalArrow(q("2"), q("1")), Error);
  CHECK(parse_interval_vector("O").is_zero());
  CHECK(parse_interval_vector("3.14:3.141") == iv("3.14", "3.141"));
  CHECK_THROWS_AS(parse_interval_vector("3.14"), Error);
}

TEST_CASE("interval_norm") {
  CHECK(interval_norm(iv("3.14", "3.141")) == Rational(1, 1000));
  CHECK(interval_norm(iv("0", "1")) == Rational(1));
  CHECK(interval_norm(iv("3.14", "3.1405")) == Rational(5, 10000));
  CHECK(interval_norm(IntervalVector::zero()) == 0);
}

TEST_CASE("interval_add") {
  CHECK(interval_add(iv("3.14", "3.1405"), iv("3.1405", "3.141")) == iv("3.14", "3.141"));
  CHECK(interval_add(IntervalVector::zero(), iv("0", "1")) == iv("0", "1"));
  CHECK(interval_add(iv("0", "1"), IntervalVector::zero()) == iv("0", "1"));
  CHECK(interval_add(IntervalVector::zero(), IntervalVector::zero()).is_zero());
  try {
    interval_add(iv("0", "1"), iv("2", "3"));
    FAIL("expected Undefined");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Undefined);
  }
}

TEST_CASE("interval_products") {
  SUBCASE("chained pair") {
    const IntervalProducts p = interval_products(iv("0", "1"), iv("1", "3"));
    CHECK(p.inner_fg == 2);
    CHECK(p.inner_gf == 0);
    CHECK(p.outer_fg.is_zero());
    CHECK(p.geometric_fg == IntervalMultivector::scalar(Rational(2)));
    CHECK_FALSE(p.orthogonal);
  }
  SUBCASE("orthogonal pair") {
    const IntervalProducts p = interval_products(iv("0", "1"), iv("2", "3"));
    CHECK(p.inner_fg == 0);
    CHECK(p.inner_gf == 0);
    CHECK(p.orthogonal);
    CHECK(p.anticommutator.is_zero());
    CHECK(p.geometric_fg == -p.geometric_gf);
  }
  SUBCASE("square") {
    const IntervalProducts p = interval_products(iv("0", "2"), iv("0", "2"));
    CHECK(p.geometric_fg == IntervalMultivector::scalar(Rational(4)));
    CHECK(p.parallel);
  }
  SUBCASE("zero vector annihilates") {
    const IntervalProducts p = interval_products(IntervalVector::zero(), iv("0", "2"));
    CHECK(p.inner_fg == 0);
    CHECK(p.inner_gf == 0);
    CHECK(p.geometric_fg.is_zero());
    CHECK(p.geometric_gf.is_zero());
  }
}

TEST_CASE("properties: additivity and splitting") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    while (a == b) b = random_rational(rng);
    if (b < a) std::swap(a, b);
    const IntervalArrow f(a, b);
    const auto [g, h] = split_at_midpoint(f);
    const IntervalVector sum = interval_add(IntervalVector::of(g), IntervalVector::of(h));
    REQUIRE(sum == IntervalVector::of(f));
    CHECK(interval_norm(sum) == interval_norm(g) + interval_norm(h));
    CHECK(interval_norm(g) > 0);
    CHECK(interval_norm(h) > 0);
  }
}

TEST_CASE("properties: case agreement with rational norms") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> endpoint(0, 6);
  const IntervalSpace s;
  for (int trial = 0; trial < 400; ++trial) {
    int a = endpoint(rng), b = endpoint(rng), c = endpoint(rng), d = endpoint(rng);
    if (a == b || c == d) continue;
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    const IntervalVector f = IntervalVector::of(IntervalArrow(Rational(a, 3), Rational(b, 3)));
    const IntervalVector g = IntervalVector::of(IntervalArrow(Rational(c, 3), Rational(d, 3)));
    CHECK(rules::anticommutator(s, f, g) == rules::anticommutator_by_cases(s, f, g));
    if (rules::is_orthogonal(s, f, g)) {
      CHECK(rules::geometric(s, f, g) == -rules::geometric(s, g, f));
    }
    const Rational n = interval_norm(f);
    CHECK(rules::geometric(s, f, f) == IntervalMultivector::scalar(n * n));
  }
}

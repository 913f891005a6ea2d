// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catgeo/document.hpp"
#include "catgeo/error.hpp"
#include "catgeo/geometry.hpp"
#include "catgeo/real_line.hpp"
#include "support/random_categories.hpp"

using namespace catgeo;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) notes << " first failure: " << what;
    pass = false;
  }
};

struct Generated {
  FiniteCategory c;
  Basis basis;
  NormTable norms;
};

std::vector<Generated> generated;  // 100 thin + 50 free, shared by 3, 4, 5, 6, 8

void generate() {
  std::mt19937_64 rng(0xC0FFEE);
  auto add = [](const Presentation& p) {
    FiniteCategory c = build(p);
    Basis b = atomic_basis(c);
    NormTable n = compute_norms(c, b);
    generated.push_back({std::move(c), std::move(b), std::move(n)});
  };
  for (int i = 0; i < 100; ++i) add(testing::random_thin(rng, 8, 14));
  for (int i = 0; i < 50; ++i) add(testing::random_free(rng, 6, 9));
}

std::vector<Vector> vectors_of(const FiniteCategory& c) {
  std::vector<Vector> vs{Vector::zero()};
  for (ArrowIndex a : c.non_identity_arrows()) vs.push_back(Vector::of(a));
  return vs;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome criterion_po6_norms() {
  Outcome o;
  const auto start = Clock::now();
  const FiniteCategory c = load_category(*builtin_example("po6"));
  const Basis b = atomic_basis(c);
  const NormTable n = compute_norms(c, b);
  std::vector<std::string> ids;
  for (ArrowIndex e : b.members) ids.push_back(c.arrow_id(e));
  o.expect(ids == std::vector<std::string>{"e1", "e2", "e3", "e4", "e5", "e6"}, "basis");
  const auto norm = [&](const char* id) { return n.length(c.arrow_by_id(id)); };
  o.expect(norm("a0->a3") == 2, "||a0->a3|| = 2");
  o.expect(norm("a0->a4") == 2, "||a0->a4|| = 2");
  o.expect(norm("a1->a4") == 2, "||a1->a4|| = 2");
  o.expect(norm("a0->a5") == 3, "||a0->a5|| = 3");
  const ArrowIndex sum = c.compose(c.arrow_by_id("a0->a4"), c.arrow_by_id("e6"));
  o.expect(sum == c.arrow_by_id("a0->a5"), "a0->a4 + e6 = a0->a5");
  o.expect(n.length(sum) == 3 && norm("e6") == 1 && n.length(sum) <= norm("e6") + norm("a0->a4"),
           "3 <= 1 + 2");
  const double t = seconds_since(start);
  o.expect(t < 1.0, "runtime < 1 s");
  o.notes << " (" << t << " s)";
  return o;
}

Outcome criterion_po6_products() {
  Outcome o;
  const FiniteCategory c = load_category(*builtin_example("po6"));
  const NormTable n = compute_norms(c, atomic_basis(c));
  const auto v = [&](const char* id) { return vector_by_id(c, id); };
  const auto blade_term = [&](const CatMultivector& m, std::int64_t coef, std::uint64_t area) {
    if (m.blades().size() != 1) return false;
    const auto& [blade, k] = *m.blades().begin();
    return (k == coef || k == -coef) && blade_area(n, blade) == area;
  };

  o.expect(anticommutator(c, n, v("a0->a4"), v("a0->a4")) == CatMultivector::scalar(8), "ff = 8");
  o.expect(anticommutator(c, n, v("e4"), v("a1->a4")).is_zero(), "e4 m = 0");
  const CatMultivector e1m = anticommutator(c, n, v("e1"), v("a1->a4"));
  o.expect(e1m.scalar_part() == 2 && blade_term(e1m, 1, 2), "e1 m = 2 + blade of area 2");
  const CatMultivector e5h = anticommutator(c, n, v("e5"), v("a0->a3"));
  o.expect(e5h.scalar_part() == 2 && blade_term(e5h, 1, 2), "e5 h = 2 + blade of area 2");
  return o;
}

Outcome criterion_clifford() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t thin = 0, free = 0, basis = 0, pairs = 0, counterexamples = 0;
  for (const Generated& g : generated) {
    (g.c.mode() == PresentationMode::Thin ? thin : free) += 1;
    for (ArrowIndex e : g.basis.members) {
      ++basis;
      if (!(geometric(g.c, g.norms, Vector::of(e), Vector::of(e)) == CatMultivector::scalar(1))) {
        ++counterexamples;
      }
    }
    const auto vs = vectors_of(g.c);
    for (const Vector& f : vs) {
      for (const Vector& h : vs) {
        if (!is_orthogonal(g.c, g.norms, f, h)) continue;
        ++pairs;
        if (!(geometric(g.c, g.norms, f, h) == -geometric(g.c, g.norms, h, f))) ++counterexamples;
      }
    }
  }
  const double t = seconds_since(start);
  o.expect(thin >= 100 && free >= 50, "category counts");
  o.expect(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
  o.expect(t < 30.0, "runtime < 30 s");
  o.notes << " (" << thin << " thin, " << free << " free, " << basis << " basis squares, " << pairs
          << " orthogonal pairs, " << t << " s)";
  return o;
}

Outcome criterion_norm_oracle() {
  Outcome o;
  std::size_t checked = 0, mismatches = 0;
  for (const Generated& g : generated) {
    const std::size_t m = g.c.non_identity_count();
    if (m > 12) continue;
    ++checked;
    const auto oracle = testing::brute_force_norms(g.c, g.basis, m);
    for (ArrowIndex a : g.c.non_identity_arrows()) {
      if (oracle[a.value] != g.norms.length(a)) ++mismatches;
    }
  }
  o.expect(checked > 0, "no category with <= 12 arrows");
  o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.notes << " (" << checked << " categories)";
  return o;
}

Outcome criterion_case_agreement() {
  Outcome o;
  std::size_t pairs = 0, mismatches = 0;
  for (const Generated& g : generated) {
    for (ArrowIndex f : g.c.non_identity_arrows()) {
      for (ArrowIndex h : g.c.non_identity_arrows()) {
        if (f == h) continue;
        ++pairs;
        const CatMultivector got = anticommutator(g.c, g.norms, Vector::of(f), Vector::of(h));
        if (!(got == testing::closed_form_anticommutator(g.c, g.norms, f, h))) ++mismatches;
      }
    }
  }
  o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.notes << " (" << pairs << " ordered pairs)";
  return o;
}

// Corrupts one entry of an explicit copy of a seeded thin category.
FiniteCategory corrupt(std::mt19937_64& rng, bool redirect) {
  for (;;) {
    const FiniteCategory c = build(to_explicit_presentation(build(testing::random_thin(rng, 6, 10))));
    const auto arrows = c.non_identity_arrows();
    if (arrows.empty()) continue;
    CompositionTable t = c.table();
    std::uniform_int_distribution<std::size_t> pick(0, arrows.size() - 1);
    const ArrowIndex f = arrows[pick(rng)];
    if (!redirect) {
      // Drop id∘f or f∘id.
      if (rng() % 2) {
        t.erase(c.identity(c.dom(f)), f);
      } else {
        t.erase(f, c.identity(c.cod(f)));
      }
      return c.with_table(t);
    }
    // Send a composable pair (or a unit entry) to an arrow with other endpoints.
    std::vector<std::pair<ArrowIndex, ArrowIndex>> entries;
    t.for_each([&](ArrowIndex x, ArrowIndex y, ArrowIndex) { entries.emplace_back(x, y); });
    std::uniform_int_distribution<std::size_t> pick_entry(0, entries.size() - 1);
    const auto [x, y] = entries[pick_entry(rng)];
    const ArrowIndex r = *t.get(x, y);
    std::vector<ArrowIndex> wrong;
    for (ArrowIndex a : arrows) {
      if (c.dom(a) != c.dom(r) || c.cod(a) != c.cod(r)) wrong.push_back(a);
    }
    if (wrong.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_wrong(0, wrong.size() - 1);
    t.set(x, y, wrong[pick_wrong(rng)]);
    return c.with_table(t);
  }
}

Outcome criterion_validator() {
  Outcome o;
  std::size_t accepted = 0;
  for (const Generated& g : generated) {
    if (validate_axioms(g.c).ok()) ++accepted;
  }
  o.expect(accepted == generated.size(), "constructed category rejected");

  std::mt19937_64 rng(20);
  std::size_t flagged = 0;
  for (int k = 0; k < 20; ++k) {
    const FiniteCategory bad = corrupt(rng, k < 10);
    if (!validate_axioms(bad).violations.empty()) ++flagged;
  }
  o.expect(flagged == 20, std::to_string(20 - flagged) + " corrupted tables missed");
  o.notes << " (" << accepted << " accepted, " << flagged << "/20 corrupted flagged)";
  return o;
}

Outcome criterion_real_line() {
  Outcome o;
  const auto arrow = [](const char* lo, const char* hi) {
    return IntervalArrow(parse_rational(lo), parse_rational(hi));
  };
  o.expect(interval_norm(arrow("3.14", "3.141")) == Rational(1, 1000), "||(3.14, 3.141)|| = 1/1000");
  o.expect(interval_add(IntervalVector::of(arrow("3.14", "3.1405")),
                        IntervalVector::of(arrow("3.1405", "3.141"))) ==
               IntervalVector::of(arrow("3.14", "3.141")),
           "decomposition");

  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 100000);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    while (a == b) b = Rational(num(rng), den(rng));
    if (b < a) std::swap(a, b);
    // Random split point strictly inside (a, b).
    const Rational t(1 + static_cast<long long>(rng() % 998), 999);
    const Rational m = a + (b - a) * t;
    const IntervalVector g = IntervalVector::of(IntervalArrow(a, m));
    const IntervalVector h = IntervalVector::of(IntervalArrow(m, b));
    const IntervalVector sum = interval_add(g, h);
    if (!(sum == IntervalVector::of(IntervalArrow(a, b))) ||
        interval_norm(sum) != interval_norm(g) + interval_norm(h)) {
      ++failures;
    }
  }
  o.expect(failures == 0, std::to_string(failures) + " additivity failures");
  o.notes << " (1000 splits)";
  return o;
}

Outcome criterion_zero_laws() {
  Outcome o;
  std::size_t checked = 0;
  const Vector z = Vector::zero();
  for (const Generated& g : generated) {
    o.expect(g.norms(z) == 0, "||O|| = 0");
    for (const Vector& f : vectors_of(g.c)) {
      ++checked;
      o.expect(vec_add(g.c, z, f) == f && vec_add(g.c, f, z) == f, "O + f = f + O = f");
      o.expect(inner(g.c, g.norms, f, z) == 0 && inner(g.c, g.norms, z, f) == 0, "f.O = O.f = 0");
      o.expect(outer(g.c, g.norms, f, z).is_zero() && outer(g.c, g.norms, z, f).is_zero(),
               "f^O = O^f = 0");
    }
  }
  o.notes << " (" << checked << " vectors)";
  return o;
}

}  // namespace

int main() {
  try {
    generate();
  } catch (const std::exception& e) {
    std::printf("FAIL generation: %s\n", e.what());
    return 1;
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 po6 basis and norms (exact, < 1 s)", criterion_po6_norms},
      {"2 po6 anticommutators (exact)", criterion_po6_products},
      {"3 e^2 = 1 and fg = -gf on random categories (< 30 s)", criterion_clifford},
      {"4 BFS norms match brute-force oracle", criterion_norm_oracle},
      {"5 anticommutator matches four-case closed form", criterion_case_agreement},
      {"6 axiom validator", criterion_validator},
      {"7 real-line backend", criterion_real_line},
      {"8 zero-vector laws", criterion_zero_laws},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << " exception: " << e.what();
    }
    std::printf("%s criterion %s%s\n", o.pass ? "PASS" : "FAIL", name, o.notes.str().c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

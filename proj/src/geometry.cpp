#include "catgeo/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace catgeo {

std::uint64_t blade_area(const NormTable& norms, const Blade2& blade) {
  return norms.length(blade.first) * norms.length(blade.second);
}

std::uint64_t inner(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g) {
  return static_cast<std::uint64_t>(rules::inner(CatSpace(c, norms), f, g));
}

bool is_orthogonal(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g) {
  return rules::is_orthogonal(CatSpace(c, norms), f, g);
}

bool is_parallel(const FiniteCategory& c, Vector f, Vector g) {
  const NormTable unused;
  return rules::is_parallel(CatSpace(c, unused), f, g);
}

CatMultivector outer(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g) {
  return rules::outer(CatSpace(c, norms), f, g);
}

CatMultivector geometric(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g) {
  return rules::geometric(CatSpace(c, norms), f, g);
}

CatMultivector anticommutator(const FiniteCategory& c, const NormTable& norms, Vector f, Vector g) {
  return rules::anticommutator(CatSpace(c, norms), f, g);
}

CatMultivector anticommutator_by_cases(const FiniteCategory& c, const NormTable& norms, Vector f,
                                       Vector g) {
  return rules::anticommutator_by_cases(CatSpace(c, norms), f, g);
}

bool CliffordReport::unit_squares_hold() const {
  return std::none_of(counterexamples.begin(), counterexamples.end(), [](const auto& x) {
    return x.condition == CliffordCondition::UnitSquare;
  });
}

bool CliffordReport::anticommutation_holds() const {
  return std::none_of(counterexamples.begin(), counterexamples.end(), [](const auto& x) {
    return x.condition == CliffordCondition::OrthogonalAnticommute;
  });
}

CliffordReport clifford_report(const FiniteCategory& c, const NormTable& norms, const Basis& basis) {
  CliffordReport report;
  const CatSpace space(c, norms);

  for (ArrowIndex e : basis.members) {
    const Vector v = Vector::of(e);
    const CatMultivector square = rules::geometric(space, v, v);
    ++report.basis_checked;
    if (!(square == CatMultivector::scalar(1))) {
      report.counterexamples.push_back(
          {CliffordCondition::UnitSquare, v, v,
           c.arrow_id(e) + "^2 = " + format_multivector(c, square) + ", expected 1"});
    }
  }

  std::vector<Vector> vectors{Vector::zero()};
  for (ArrowIndex a : c.non_identity_arrows()) vectors.push_back(Vector::of(a));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const Vector f = vectors[i];
      const Vector g = vectors[j];
      if (!rules::is_orthogonal(space, f, g)) continue;
      ++report.orthogonal_pairs_checked;
      const CatMultivector fg = rules::geometric(space, f, g);
      const CatMultivector gf = rules::geometric(space, g, f);
      if (!(fg == -gf)) {
        report.counterexamples.push_back(
            {CliffordCondition::OrthogonalAnticommute, f, g,
             vector_id(c, f) + " " + vector_id(c, g) + " = " + format_multivector(c, fg) +
                 " but " + vector_id(c, g) + " " + vector_id(c, f) + " = " +
                 format_multivector(c, gf)});
      }
    }
  }
  return report;
}

std::string format_multivector(const FiniteCategory& c, const CatMultivector& m) {
  std::ostringstream os;
  bool first = true;
  if (m.scalar_part() != 0 || m.blades().empty()) {
    os << m.scalar_part();
    first = false;
  }
  for (const auto& [blade, coef] : m.blades()) {
    const std::int64_t magnitude = coef < 0 ? -coef : coef;
    if (first) {
      if (coef < 0) os << "-";
    } else {
      os << (coef < 0 ? " - " : " + ");
    }
    if (magnitude != 1) os << magnitude << "*";
    os << "(" << c.arrow_id(blade.first) << "^" << c.arrow_id(blade.second) << ")";
    first = false;
  }
  return os.str();
}

}  // namespace catgeo

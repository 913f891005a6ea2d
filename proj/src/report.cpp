#include "catgeo/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "catgeo/error.hpp"
#include "catgeo/export.hpp"
#include "catgeo/real_line.hpp"

namespace catgeo {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json multivector_json(const CategoryAnalysis& a, const CatMultivector& m) {
  json blades = json::array();
  for (const auto& [blade, coef] : m.blades()) {
    json b{{"first", a.category().arrow_id(blade.first)},
           {"second", a.category().arrow_id(blade.second)},
           {"coefficient", coef}};
    if (a.has_norms()) b["area"] = blade_area(a.norms(), blade);
    blades.push_back(std::move(b));
  }
  return json{{"scalar", m.scalar_part()}, {"blades", std::move(blades)}};
}

std::string multivector_text(const CategoryAnalysis& a, const CatMultivector& m) {
  std::string out = format_multivector(a.category(), m);
  if (!m.blades().empty() && a.has_norms()) {
    out += "  [area";
    for (const auto& [blade, coef] : m.blades()) {
      out += " " + std::to_string(blade_area(a.norms(), blade));
    }
    out += "]";
  }
  return out;
}

json interval_multivector_json(const IntervalMultivector& m) {
  json blades = json::array();
  for (const auto& [blade, coef] : m.blades()) {
    blades.push_back({{"first", format_interval_vector(IntervalVector::of(blade.first))},
                      {"second", format_interval_vector(IntervalVector::of(blade.second))},
                      {"coefficient", format_rational(coef)},
                      {"area", format_rational(interval_norm(blade.first) * interval_norm(blade.second))}});
  }
  return json{{"scalar", format_rational(m.scalar_part())}, {"blades", std::move(blades)}};
}

std::string endpoints(const FiniteCategory& c, ArrowIndex a) {
  return c.object_id(c.dom(a)) + " -> " + c.object_id(c.cod(a));
}

}  // namespace

CategoryAnalysis::CategoryAnalysis(FiniteCategory category)
    : category_(std::move(category)), basis_(atomic_basis(category_)) {
  try {
    norms_ = compute_norms(category_, basis_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGenerated) throw;
    norm_error_ = e.what();
  }
}

const NormTable& CategoryAnalysis::norms() const {
  if (!norms_) throw Error(ErrorCode::NotGenerated, norm_error_);
  return *norms_;
}

Rendered report_validation(const FiniteCategory& c, OutputFormat format) {
  const ValidationReport report = validate_axioms(c);
  if (format == OutputFormat::Json) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
      violations.push_back({{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}});
    }
    return {dump(json{{"valid", report.ok()}, {"violations", std::move(violations)}}), report.ok()};
  }
  std::ostringstream os;
  os << (report.ok() ? "valid" : "invalid") << ": " << report.violations.size() << " violation"
     << (report.violations.size() == 1 ? "" : "s") << "\n";
  for (const Violation& v : report.violations) {
    os << "  [" << to_string(v.kind) << "] " << v.detail << "\n";
  }
  return {os.str(), report.ok()};
}

std::string report_basis(const CategoryAnalysis& a, OutputFormat format) {
  const FiniteCategory& c = a.category();
  if (format == OutputFormat::Json) {
    json members = json::array();
    for (ArrowIndex e : a.basis().members) {
      members.push_back({{"id", c.arrow_id(e)},
                         {"dom", c.object_id(c.dom(e))},
                         {"cod", c.object_id(c.cod(e))}});
    }
    return dump(json{{"basis", std::move(members)}});
  }
  std::ostringstream os;
  os << "basis (" << a.basis().members.size() << "):\n";
  for (ArrowIndex e : a.basis().members) os << "  " << c.arrow_id(e) << " : " << endpoints(c, e) << "\n";
  return os.str();
}

std::string report_norms(const CategoryAnalysis& a, OutputFormat format) {
  const FiniteCategory& c = a.category();
  const NormTable& norms = a.norms();
  if (format == OutputFormat::Json) {
    json entries = json::array();
    for (ArrowIndex f : c.non_identity_arrows()) {
      entries.push_back({{"id", c.arrow_id(f)},
                         {"dom", c.object_id(c.dom(f))},
                         {"cod", c.object_id(c.cod(f))},
                         {"norm", norms.length(f)}});
    }
    return dump(json{{"norms", std::move(entries)}, {"zero", NormTable::zero_norm()}});
  }
  std::ostringstream os;
  for (ArrowIndex f : c.non_identity_arrows()) {
    os << c.arrow_id(f) << " = " << norms.length(f) << "\n";
  }
  os << kZeroToken << " = " << NormTable::zero_norm() << "\n";
  return os.str();
}

std::string report_product(const CategoryAnalysis& a, std::string_view f_id, std::string_view g_id,
                           OutputFormat format) {
  const FiniteCategory& c = a.category();
  const Vector f = vector_by_id(c, f_id);
  const Vector g = vector_by_id(c, g_id);
  const NormTable& n = a.norms();

  const std::uint64_t fg_inner = inner(c, n, f, g);
  const std::uint64_t gf_inner = inner(c, n, g, f);
  const CatMultivector fg_outer = outer(c, n, f, g);
  const CatMultivector gf_outer = outer(c, n, g, f);
  const CatMultivector fg = geometric(c, n, f, g);
  const CatMultivector gf = geometric(c, n, g, f);
  const CatMultivector anti = anticommutator(c, n, f, g);
  const bool orthogonal = is_orthogonal(c, n, f, g);
  const bool parallel = is_parallel(c, f, g);

  if (format == OutputFormat::Json) {
    return dump(json{{"f", std::string(f_id)},
                     {"g", std::string(g_id)},
                     {"norm", {{"f", n(f)}, {"g", n(g)}}},
                     {"inner", {{"fg", fg_inner}, {"gf", gf_inner}}},
                     {"outer", {{"fg", multivector_json(a, fg_outer)}, {"gf", multivector_json(a, gf_outer)}}},
                     {"geometric", {{"fg", multivector_json(a, fg)}, {"gf", multivector_json(a, gf)}}},
                     {"anticommutator", multivector_json(a, anti)},
                     {"orthogonal", orthogonal},
                     {"parallel", parallel}});
  }
  std::ostringstream os;
  os << "f = " << f_id << " (norm " << n(f) << ")\n";
  os << "g = " << g_id << " (norm " << n(g) << ")\n";
  os << "inner f.g = " << fg_inner << "\n";
  os << "inner g.f = " << gf_inner << "\n";
  os << "outer f^g = " << multivector_text(a, fg_outer) << "\n";
  os << "outer g^f = " << multivector_text(a, gf_outer) << "\n";
  os << "geometric fg = " << multivector_text(a, fg) << "\n";
  os << "geometric gf = " << multivector_text(a, gf) << "\n";
  os << "anticommutator fg+gf = " << multivector_text(a, anti) << "\n";
  os << "orthogonal: " << (orthogonal ? "true" : "false") << "\n";
  os << "parallel: " << (parallel ? "true" : "false") << "\n";
  return os.str();
}

std::string report_table(const CategoryAnalysis& a, OutputFormat format) {
  const FiniteCategory& c = a.category();
  const NormTable& n = a.norms();
  const auto arrows = c.non_identity_arrows();
  if (format == OutputFormat::Json) {
    json ids = json::array();
    json rows = json::array();
    for (ArrowIndex f : arrows) {
      ids.push_back(c.arrow_id(f));
      json row = json::array();
      for (ArrowIndex g : arrows) {
        row.push_back(multivector_json(a, anticommutator(c, n, Vector::of(f), Vector::of(g))));
      }
      rows.push_back(std::move(row));
    }
    return dump(json{{"arrows", std::move(ids)}, {"anticommutator", std::move(rows)}});
  }
  std::ostringstream os;
  for (ArrowIndex f : arrows) {
    for (ArrowIndex g : arrows) {
      os << c.arrow_id(f) << " " << c.arrow_id(g) << " : "
         << multivector_text(a, anticommutator(c, n, Vector::of(f), Vector::of(g))) << "\n";
    }
  }
  return os.str();
}

Rendered report_clifford(const CategoryAnalysis& a, OutputFormat format) {
  const CliffordReport r = clifford_report(a.category(), a.norms(), a.basis());
  if (format == OutputFormat::Json) {
    json examples = json::array();
    for (const auto& x : r.counterexamples) {
      examples.push_back({{"condition", x.condition == CliffordCondition::UnitSquare
                                            ? "unit-square"
                                            : "orthogonal-anticommute"},
                          {"f", vector_id(a.category(), x.f)},
                          {"g", vector_id(a.category(), x.g)},
                          {"detail", x.detail}});
    }
    return {dump(json{{"unit_squares", r.unit_squares_hold()},
                      {"orthogonal_anticommute", r.anticommutation_holds()},
                      {"basis_checked", r.basis_checked},
                      {"orthogonal_pairs_checked", r.orthogonal_pairs_checked},
                      {"counterexamples", std::move(examples)}}),
            r.ok()};
  }
  std::ostringstream os;
  os << "e^2 = 1 for every basis vector: " << (r.unit_squares_hold() ? "holds" : "FAILS") << " ("
     << r.basis_checked << " checked)\n";
  os << "fg = -gf for orthogonal pairs: " << (r.anticommutation_holds() ? "holds" : "FAILS") << " ("
     << r.orthogonal_pairs_checked << " checked)\n";
  os << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& x : r.counterexamples) os << "  " << x.detail << "\n";
  return {os.str(), r.ok()};
}

std::string report_embedding(const FiniteCategory& c, OutputFormat format) {
  const Embedding e = export_embedding(c);
  if (format == OutputFormat::Json) {
    json points = json::object();
    for (const auto& [id, p] : e.points) points[id] = {p.x, p.y, p.z};
    json arcs = json::object();
    for (const auto& [id, samples] : e.arcs) {
      json line = json::array();
      for (const Point3& p : samples) line.push_back({p.x, p.y, p.z});
      arcs[id] = std::move(line);
    }
    return dump(json{{"points", std::move(points)}, {"arcs", std::move(arcs)}});
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  for (const auto& [id, p] : e.points) {
    os << "point " << id << " " << p.x << " " << p.y << " " << p.z << "\n";
  }
  for (const auto& [id, samples] : e.arcs) {
    os << "arc " << id;
    for (const Point3& p : samples) os << " " << p.x << "," << p.y << "," << p.z;
    os << "\n";
  }
  return os.str();
}

std::string report_dot(const CategoryAnalysis& a, bool basis_only) {
  DotOptions options;
  options.basis_only = basis_only;
  return export_dot(a.category(), options, a.maybe_norms());
}

std::string report_interval_norm(std::string_view f_text, OutputFormat format) {
  const IntervalVector f = parse_interval_vector(f_text);
  const Rational norm = interval_norm(f);
  if (format == OutputFormat::Json) {
    return dump(json{{"f", format_interval_vector(f)}, {"norm", format_rational(norm)}});
  }
  return format_rational(norm) + "\n";
}

std::string report_interval_add(std::string_view f_text, std::string_view g_text,
                                OutputFormat format) {
  const IntervalVector sum = interval_add(parse_interval_vector(f_text), parse_interval_vector(g_text));
  if (format == OutputFormat::Json) {
    return dump(json{{"sum", format_interval_vector(sum)}, {"norm", format_rational(interval_norm(sum))}});
  }
  return format_interval_vector(sum) + "\n";
}

std::string report_interval_product(std::string_view f_text, std::string_view g_text,
                                    OutputFormat format) {
  const IntervalVector f = parse_interval_vector(f_text);
  const IntervalVector g = parse_interval_vector(g_text);
  const IntervalProducts p = interval_products(f, g);
  if (format == OutputFormat::Json) {
    return dump(json{{"f", format_interval_vector(f)},
                     {"g", format_interval_vector(g)},
                     {"inner", {{"fg", format_rational(p.inner_fg)}, {"gf", format_rational(p.inner_gf)}}},
                     {"outer", {{"fg", interval_multivector_json(p.outer_fg)},
                                {"gf", interval_multivector_json(p.outer_gf)}}},
                     {"geometric", {{"fg", interval_multivector_json(p.geometric_fg)},
                                    {"gf", interval_multivector_json(p.geometric_gf)}}},
                     {"anticommutator", interval_multivector_json(p.anticommutator)},
                     {"orthogonal", p.orthogonal},
                     {"parallel", p.parallel}});
  }
  std::ostringstream os;
  os << "inner f.g = " << format_rational(p.inner_fg) << "\n";
  os << "inner g.f = " << format_rational(p.inner_gf) << "\n";
  os << "outer f^g = " << format_interval_multivector(p.outer_fg) << "\n";
  os << "outer g^f = " << format_interval_multivector(p.outer_gf) << "\n";
  os << "geometric fg = " << format_interval_multivector(p.geometric_fg) << "\n";
  os << "geometric gf = " << format_interval_multivector(p.geometric_gf) << "\n";
  os << "anticommutator fg+gf = " << format_interval_multivector(p.anticommutator) << "\n";
  os << "orthogonal: " << (p.orthogonal ? "true" : "false") << "\n";
  os << "parallel: " << (p.parallel ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace catgeo

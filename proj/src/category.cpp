#include "catgeo/category.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "catgeo/error.hpp"

namespace catgeo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NontrivialCycle: return "NontrivialCycle";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::UnknownArrow: return "UnknownArrow";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::CompositeIsIdentity: return "CompositeIsIdentity";
    case ErrorCode::NotGenerated: return "NotGenerated";
    case ErrorCode::NoDifference: return "NoDifference";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(PresentationMode mode) noexcept {
  switch (mode) {
    case PresentationMode::Explicit: return "explicit";
    case PresentationMode::Thin: return "thin";
    case PresentationMode::Free: return "free";
  }
  return "explicit";
}

std::optional<PresentationMode> parse_mode(std::string_view text) noexcept {
  if (text == "explicit") return PresentationMode::Explicit;
  if (text == "thin") return PresentationMode::Thin;
  if (text == "free") return PresentationMode::Free;
  return std::nullopt;
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::MissingComposite: return "missing-composite";
    case ViolationKind::SpuriousComposite: return "spurious-composite";
    case ViolationKind::EndpointMismatch: return "endpoint-mismatch";
    case ViolationKind::Associativity: return "associativity";
    case ViolationKind::UnitLaw: return "unit-law";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// CompositionTable

std::optional<ArrowIndex> CompositionTable::get(ArrowIndex f, ArrowIndex g) const {
  if (f.value >= arrow_count_ || g.value >= arrow_count_) return std::nullopt;
  auto it = cells_.find(key(f, g));
  if (it == cells_.end()) return std::nullopt;
  return ArrowIndex{it->second};
}

void CompositionTable::set(ArrowIndex f, ArrowIndex g, ArrowIndex result) {
  if (f.value >= arrow_count_ || g.value >= arrow_count_ || result.value >= arrow_count_) {
    throw Error(ErrorCode::InvalidArgument, "composition table index out of range");
  }
  cells_[key(f, g)] = result.value;
}

bool CompositionTable::erase(ArrowIndex f, ArrowIndex g) {
  if (f.value >= arrow_count_ || g.value >= arrow_count_) return false;
  return cells_.erase(key(f, g)) > 0;
}

// ---------------------------------------------------------------------------
// FiniteCategory

namespace {

bool has_reserved_prefix(std::string_view id) {
  return id.substr(0, kIdentityPrefix.size()) == kIdentityPrefix;
}

void check_token(std::string_view what, const std::string& id) {
  if (id.empty()) {
    throw Error(ErrorCode::InvalidPresentation, std::string(what) + " id must be nonempty");
  }
  if (has_reserved_prefix(id)) {
    throw Error(ErrorCode::InvalidPresentation,
                std::string(what) + " id '" + id + "' uses the reserved prefix 'id:'");
  }
  if (id == kZeroToken) {
    throw Error(ErrorCode::InvalidPresentation,
                std::string(what) + " id 'O' is reserved for the zero vector");
  }
}

}  // namespace

FiniteCategory FiniteCategory::assemble(std::vector<std::string> objects,
                                        std::vector<Arrow> arrows,
                                        std::span<const RawComposition> compositions,
                                        PresentationMode mode) {
  FiniteCategory c;
  c.mode_ = mode;

  for (std::uint32_t i = 0; i < objects.size(); ++i) {
    check_token("object", objects[i]);
    if (!c.object_lookup_.emplace(objects[i], i).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate object id '" + objects[i] + "'");
    }
  }
  c.objects_ = std::move(objects);

  const std::size_t raw_count = arrows.size();
  for (const Arrow& a : arrows) {
    check_token("arrow", a.id);
    if (a.is_identity) {
      throw Error(ErrorCode::InvalidPresentation, "identity arrows are added automatically");
    }
    if (a.dom.value >= c.objects_.size() || a.cod.value >= c.objects_.size()) {
      throw Error(ErrorCode::InvalidPresentation, "arrow '" + a.id + "' has an unknown endpoint");
    }
  }

  // Canonical order: declared before derived, lexicographic on id within each.
  std::vector<std::size_t> order(raw_count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (arrows[x].derived != arrows[y].derived) return !arrows[x].derived;
    return arrows[x].id < arrows[y].id;
  });
  std::vector<std::uint32_t> position(raw_count);
  c.arrows_.reserve(raw_count + c.objects_.size());
  for (std::size_t k = 0; k < raw_count; ++k) {
    position[order[k]] = static_cast<std::uint32_t>(k);
    c.arrows_.push_back(std::move(arrows[order[k]]));
  }
  c.non_identity_count_ = raw_count;
  for (std::uint32_t o = 0; o < c.objects_.size(); ++o) {
    c.arrows_.push_back(Arrow{std::string(kIdentityPrefix) + c.objects_[o], ObjectIndex{o},
                              ObjectIndex{o}, true, false});
  }
  for (std::uint32_t i = 0; i < c.arrows_.size(); ++i) {
    if (!c.arrow_lookup_.emplace(c.arrows_[i].id, i).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate arrow id '" + c.arrows_[i].id + "'");
    }
  }

  c.table_ = CompositionTable(c.arrows_.size());
  for (std::uint32_t o = 0; o < c.objects_.size(); ++o) {
    const ArrowIndex id = c.identity(ObjectIndex{o});
    c.table_.set(id, id, id);
  }
  for (std::uint32_t i = 0; i < raw_count; ++i) {
    const ArrowIndex f{i};
    c.table_.set(c.identity(c.dom(f)), f, f);
    c.table_.set(f, c.identity(c.cod(f)), f);
  }

  auto resolve = [&](std::size_t raw) -> ArrowIndex {
    if (raw < raw_count) return ArrowIndex{position[raw]};
    const std::size_t object = raw - raw_count;
    if (object >= c.objects_.size()) {
      throw Error(ErrorCode::InvalidPresentation, "composition refers to an unknown arrow");
    }
    return c.identity(ObjectIndex{static_cast<std::uint32_t>(object)});
  };
  for (const RawComposition& comp : compositions) {
    if (comp.f >= raw_count || comp.g >= raw_count) {
      throw Error(ErrorCode::InvalidPresentation,
                  "explicit compositions must pair non-identity arrows");
    }
    c.table_.set(resolve(comp.f), resolve(comp.g), resolve(comp.result));
  }
  return c;
}

FiniteCategory FiniteCategory::with_table(CompositionTable table) const {
  if (table.arrow_count() != arrows_.size()) {
    throw Error(ErrorCode::InvalidArgument, "replacement table has the wrong arrow count");
  }
  FiniteCategory copy = *this;
  copy.table_ = std::move(table);
  return copy;
}

std::optional<ObjectIndex> FiniteCategory::find_object(std::string_view id) const {
  auto it = object_lookup_.find(std::string(id));
  if (it == object_lookup_.end()) return std::nullopt;
  return ObjectIndex{it->second};
}

std::vector<ArrowIndex> FiniteCategory::non_identity_arrows() const {
  std::vector<ArrowIndex> out(non_identity_count_);
  for (std::uint32_t i = 0; i < non_identity_count_; ++i) out[i] = ArrowIndex{i};
  return out;
}

ArrowIndex FiniteCategory::identity(ObjectIndex o) const {
  if (o.value >= objects_.size()) throw Error(ErrorCode::InvalidArgument, "unknown object");
  return ArrowIndex{static_cast<std::uint32_t>(non_identity_count_ + o.value)};
}

std::optional<ArrowIndex> FiniteCategory::find_arrow(std::string_view id) const {
  auto it = arrow_lookup_.find(std::string(id));
  if (it == arrow_lookup_.end()) return std::nullopt;
  return ArrowIndex{it->second};
}

ArrowIndex FiniteCategory::arrow_by_id(std::string_view id) const {
  if (auto a = find_arrow(id)) return *a;
  throw Error(ErrorCode::UnknownArrow, "unknown arrow '" + std::string(id) + "'");
}

ArrowIndex FiniteCategory::compose(ArrowIndex f, ArrowIndex g) const {
  if (cod(f) != dom(g)) {
    throw Error(ErrorCode::NotComposable, "cannot compose " + arrow_id(g) + " after " +
                                              arrow_id(f) + ": cod(" + arrow_id(f) + ") = " +
                                              object_id(cod(f)) + " but dom(" + arrow_id(g) +
                                              ") = " + object_id(dom(g)));
  }
  if (auto r = table_.get(f, g)) return *r;
  throw Error(ErrorCode::AxiomViolation,
              "composition table has no entry for " + arrow_id(g) + " o " + arrow_id(f));
}

// ---------------------------------------------------------------------------
// validate_axioms

ValidationReport validate_axioms(const FiniteCategory& c) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string detail) {
    report.violations.push_back(Violation{kind, std::move(detail)});
  };
  auto name = [&](ArrowIndex a) -> const std::string& { return c.arrow_id(a); };

  const std::uint32_t n = static_cast<std::uint32_t>(c.arrow_count());

  // Arrows grouped by domain for triple enumeration.
  std::vector<std::vector<ArrowIndex>> out_of(c.object_count());
  for (std::uint32_t i = 0; i < n; ++i) out_of[c.dom(ArrowIndex{i}).value].push_back(ArrowIndex{i});

  for (std::uint32_t i = 0; i < n; ++i) {
    const ArrowIndex f{i};
    for (ArrowIndex g : out_of[c.cod(f).value]) {
      auto r = c.table().get(f, g);
      if (!r) {
        add(ViolationKind::MissingComposite, "no entry for " + name(g) + " o " + name(f));
        continue;
      }
      if (c.dom(*r) != c.dom(f) || c.cod(*r) != c.cod(g)) {
        std::ostringstream os;
        os << name(g) << " o " << name(f) << " = " << name(*r) << " has endpoints "
           << c.object_id(c.dom(*r)) << " -> " << c.object_id(c.cod(*r)) << ", expected "
           << c.object_id(c.dom(f)) << " -> " << c.object_id(c.cod(g));
        add(ViolationKind::EndpointMismatch, os.str());
      }
    }
  }

  c.table().for_each([&](ArrowIndex f, ArrowIndex g, ArrowIndex) {
    if (c.cod(f) != c.dom(g)) {
      add(ViolationKind::SpuriousComposite,
          "entry for non-composable pair " + name(g) + " o " + name(f));
    }
  });

  for (std::uint32_t i = 0; i < n; ++i) {
    const ArrowIndex f{i};
    auto left = c.table().get(c.identity(c.dom(f)), f);
    if (left != f) {
      add(ViolationKind::UnitLaw, name(f) + " o id:" + c.object_id(c.dom(f)) + " != " + name(f));
    }
    auto right = c.table().get(f, c.identity(c.cod(f)));
    if (right != f) {
      add(ViolationKind::UnitLaw, "id:" + c.object_id(c.cod(f)) + " o " + name(f) + " != " + name(f));
    }
  }

  // k∘(g∘f) = (k∘g)∘f over every composable triple whose pieces exist.
  for (std::uint32_t i = 0; i < n; ++i) {
    const ArrowIndex f{i};
    for (ArrowIndex g : out_of[c.cod(f).value]) {
      auto gf = c.table().get(f, g);
      for (ArrowIndex k : out_of[c.cod(g).value]) {
        auto kg = c.table().get(g, k);
        if (!gf || !kg) continue;
        auto lhs = c.table().get(*gf, k);
        auto rhs = c.table().get(f, *kg);
        if (!lhs || !rhs || *lhs != *rhs) {
          std::string detail = "(" + name(k) + " o " + name(g) + ") o " + name(f) + " vs " +
                               name(k) + " o (" + name(g) + " o " + name(f) + ")";
          if (lhs && rhs) detail += ": " + name(*rhs) + " != " + name(*lhs);
          add(ViolationKind::Associativity, std::move(detail));
        }
      }
    }
  }
  return report;
}

}  // namespace catgeo

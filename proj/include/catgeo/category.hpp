#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace catgeo {

struct ObjectIndex {
  std::uint32_t value = 0;
  auto operator<=>(const ObjectIndex&) const = default;
};

/// Position of an arrow in its category. Indices follow the canonical arrow
/// order, so comparing indices compares arrows canonically.
struct ArrowIndex {
  std::uint32_t value = 0;
  auto operator<=>(const ArrowIndex&) const = default;
};

enum class PresentationMode { Explicit, Thin, Free };

std::string_view to_string(PresentationMode mode) noexcept;
std::optional<PresentationMode> parse_mode(std::string_view text) noexcept;

inline constexpr std::string_view kIdentityPrefix = "id:";
/// Token reserved for the zero vector; never a valid object or arrow id.
inline constexpr std::string_view kZeroToken = "O";

struct Arrow {
  std::string id;
  ObjectIndex dom;
  ObjectIndex cod;
  bool is_identity = false;
  /// Named by a builder ("a->b", "q.p") rather than declared by the user.
  bool derived = false;
};

/// Sparse table of composites: entry (f, g) holds g∘f.
class CompositionTable {
 public:
  CompositionTable() = default;
  explicit CompositionTable(std::size_t arrow_count) : arrow_count_(arrow_count) {}

  std::optional<ArrowIndex> get(ArrowIndex f, ArrowIndex g) const;
  void set(ArrowIndex f, ArrowIndex g, ArrowIndex result);
  bool erase(ArrowIndex f, ArrowIndex g);

  std::size_t arrow_count() const noexcept { return arrow_count_; }
  std::size_t size() const noexcept { return cells_.size(); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [key, result] : cells_) {
      fn(ArrowIndex{static_cast<std::uint32_t>(key / arrow_count_)},
         ArrowIndex{static_cast<std::uint32_t>(key % arrow_count_)},
         ArrowIndex{result});
    }
  }

 private:
  std::uint64_t key(ArrowIndex f, ArrowIndex g) const noexcept {
    return static_cast<std::uint64_t>(f.value) * arrow_count_ + g.value;
  }

  std::size_t arrow_count_ = 0;
  std::unordered_map<std::uint64_t, std::uint32_t> cells_;
};

/// Non-identity composite given by indices into the raw arrow list passed to
/// FiniteCategory::assemble. A result index >= raw arrow count denotes the
/// identity of object (result - raw arrow count).
struct RawComposition {
  std::size_t f = 0;
  std::size_t g = 0;
  std::size_t result = 0;
};

/// A finite category: objects, arrows (identities included) and the table of
/// composites. Arrows are stored in canonical order: declared arrows sorted by
/// id, then derived arrows sorted by id, then identities in object order.
/// Values are immutable once assembled.
class FiniteCategory {
 public:
  /// Checks ids and endpoints, sorts arrows canonically, appends one identity
  /// per object and fills the unit-law entries of the table. Does not check
  /// the category axioms; see validate_axioms.
  static FiniteCategory assemble(std::vector<std::string> objects,
                                 std::vector<Arrow> arrows,
                                 std::span<const RawComposition> compositions,
                                 PresentationMode mode);

  /// Copy of this category with its composition table replaced.
  FiniteCategory with_table(CompositionTable table) const;

  PresentationMode mode() const noexcept { return mode_; }

  std::span<const std::string> objects() const noexcept { return objects_; }
  std::size_t object_count() const noexcept { return objects_.size(); }
  const std::string& object_id(ObjectIndex o) const { return objects_.at(o.value); }
  std::optional<ObjectIndex> find_object(std::string_view id) const;

  std::span<const Arrow> arrows() const noexcept { return arrows_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  std::size_t non_identity_count() const noexcept { return non_identity_count_; }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a.value); }
  const std::string& arrow_id(ArrowIndex a) const { return arrow(a).id; }
  ObjectIndex dom(ArrowIndex a) const { return arrow(a).dom; }
  ObjectIndex cod(ArrowIndex a) const { return arrow(a).cod; }
  bool is_identity(ArrowIndex a) const { return arrow(a).is_identity; }

  /// Non-identity arrows in canonical order.
  std::vector<ArrowIndex> non_identity_arrows() const;
  ArrowIndex identity(ObjectIndex o) const;

  std::optional<ArrowIndex> find_arrow(std::string_view id) const;
  /// Throws UnknownArrow.
  ArrowIndex arrow_by_id(std::string_view id) const;

  const CompositionTable& table() const noexcept { return table_; }

  /// g∘f. Throws NotComposable when cod(f) != dom(g), and AxiomViolation when
  /// the table lacks an entry for a composable pair.
  ArrowIndex compose(ArrowIndex f, ArrowIndex g) const;

 private:
  FiniteCategory() = default;

  PresentationMode mode_ = PresentationMode::Explicit;
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::size_t non_identity_count_ = 0;
  CompositionTable table_;
  std::unordered_map<std::string, std::uint32_t> object_lookup_;
  std::unordered_map<std::string, std::uint32_t> arrow_lookup_;
};

enum class ViolationKind {
  MissingComposite,
  SpuriousComposite,
  EndpointMismatch,
  Associativity,
  UnitLaw,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks table closure on composable pairs, dom/cod of composites,
/// associativity over all composable triples and the unit law. Violations are
/// reported, never thrown.
ValidationReport validate_axioms(const FiniteCategory& category);

}  // namespace catgeo

#include "catgeo/document.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include <json.hpp>

#include "catgeo/error.hpp"

namespace catgeo {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const std::string& require_string(const json& node, const std::string& where) {
  if (!node.is_string()) fail(where, "expected a string");
  const auto& s = node.get_ref<const std::string&>();
  if (s.empty()) fail(where, "must be nonempty");
  return s;
}

const json& require_field(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

void reject_unknown_keys(const json& object, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(where, "unknown field '" + key + "'");
    }
  }
}

}  // namespace

CategoryDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                "malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!root.is_object()) fail("document", "expected a JSON object");
  reject_unknown_keys(root, {"mode", "objects", "arrows", "compositions"}, "document");

  CategoryDocument doc;
  const std::string& mode_text = require_string(require_field(root, "mode", "document"), "mode");
  auto mode = parse_mode(mode_text);
  if (!mode) fail("mode", "unrecognized mode '" + mode_text + "' (expected thin, free or explicit)");
  doc.mode = *mode;

  const json& objects = require_field(root, "objects", "document");
  if (!objects.is_array()) fail("objects", "expected an array");
  std::unordered_set<std::string> object_ids;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string where = "objects[" + std::to_string(i) + "]";
    const std::string& id = require_string(objects[i], where);
    if (!object_ids.insert(id).second) fail(where, "duplicate object id '" + id + "'");
    doc.objects.push_back(id);
  }

  std::unordered_set<std::string> arrow_ids;
  if (auto it = root.find("arrows"); it != root.end()) {
    if (!it->is_array()) fail("arrows", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "arrows[" + std::to_string(i) + "]";
      const json& rec = (*it)[i];
      if (!rec.is_object()) fail(where, "expected an object");
      reject_unknown_keys(rec, {"id", "dom", "cod"}, where);
      Generator g{require_string(require_field(rec, "id", where), where + ".id"),
                  require_string(require_field(rec, "dom", where), where + ".dom"),
                  require_string(require_field(rec, "cod", where), where + ".cod")};
      if (!arrow_ids.insert(g.id).second) fail(where + ".id", "duplicate arrow id '" + g.id + "'");
      if (!object_ids.contains(g.dom)) fail(where + ".dom", "unknown object '" + g.dom + "'");
      if (!object_ids.contains(g.cod)) fail(where + ".cod", "unknown object '" + g.cod + "'");
      doc.generators.push_back(std::move(g));
    }
  }

  if (auto it = root.find("compositions"); it != root.end()) {
    if (!it->is_array()) fail("compositions", "expected an array");
    if (doc.mode != PresentationMode::Explicit && !it->empty()) {
      fail("compositions", "only explicit documents carry a composition list");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "compositions[" + std::to_string(i) + "]";
      const json& rec = (*it)[i];
      if (!rec.is_object()) fail(where, "expected an object");
      reject_unknown_keys(rec, {"f", "g", "result"}, where);
      ExplicitComposition c{require_string(require_field(rec, "f", where), where + ".f"),
                            require_string(require_field(rec, "g", where), where + ".g"),
                            require_string(require_field(rec, "result", where), where + ".result")};
      if (!arrow_ids.contains(c.f)) fail(where + ".f", "unknown arrow '" + c.f + "'");
      if (!arrow_ids.contains(c.g)) fail(where + ".g", "unknown arrow '" + c.g + "'");
      const bool identity_result =
          c.result.starts_with(kIdentityPrefix) &&
          object_ids.contains(c.result.substr(kIdentityPrefix.size()));
      if (!arrow_ids.contains(c.result) && !identity_result) {
        fail(where + ".result", "unknown arrow '" + c.result + "'");
      }
      doc.compositions.push_back(std::move(c));
    }
  }
  return doc;
}

std::string write_document(const CategoryDocument& doc) {
  json root;
  root["mode"] = std::string(to_string(doc.mode));
  root["objects"] = doc.objects;
  root["arrows"] = json::array();
  for (const Generator& g : doc.generators) {
    root["arrows"].push_back({{"id", g.id}, {"dom", g.dom}, {"cod", g.cod}});
  }
  if (doc.mode == PresentationMode::Explicit) {
    root["compositions"] = json::array();
    for (const ExplicitComposition& c : doc.compositions) {
      root["compositions"].push_back({{"f", c.f}, {"g", c.g}, {"result", c.result}});
    }
  }
  return root.dump(2) + "\n";
}

FiniteCategory load_category(std::string_view text, bool validate) {
  FiniteCategory category = build(parse_document(text));
  if (validate && category.mode() == PresentationMode::Explicit) {
    const ValidationReport report = validate_axioms(category);
    if (!report.ok()) {
      std::string message = "category axioms violated:";
      for (const Violation& v : report.violations) {
        message += "\n  [" + std::string(to_string(v.kind)) + "] " + v.detail;
      }
      throw Error(ErrorCode::AxiomViolation, message);
    }
  }
  return category;
}

namespace {

Presentation po6() {
  Presentation p;
  p.mode = PresentationMode::Thin;
  p.objects = {"a0", "a1", "a2", "a3", "a4", "a5"};
  p.generators = {{"e1", "a0", "a1"}, {"e2", "a0", "a2"}, {"e3", "a1", "a3"},
                  {"e4", "a2", "a4"}, {"e5", "a3", "a4"}, {"e6", "a4", "a5"}};
  return p;
}

Presentation path3() {
  Presentation p;
  p.mode = PresentationMode::Free;
  p.objects = {"x", "y", "z"};
  p.generators = {{"p", "x", "y"}, {"q", "y", "z"}};
  return p;
}

Presentation parallel_pair() {
  Presentation p;
  p.mode = PresentationMode::Free;
  p.objects = {"a", "b"};
  p.generators = {{"u", "a", "b"}, {"v", "a", "b"}};
  return p;
}

Presentation isomorphism() {
  Presentation p;
  p.mode = PresentationMode::Explicit;
  p.objects = {"a", "b"};
  p.generators = {{"f", "a", "b"}, {"g", "b", "a"}};
  p.compositions = {{"f", "g", "id:a"}, {"g", "f", "id:b"}};
  return p;
}

const std::map<std::string, Presentation (*)(), std::less<>>& examples() {
  static const std::map<std::string, Presentation (*)(), std::less<>> table{
      {"iso", &isomorphism}, {"parallel", &parallel_pair}, {"path3", &path3}, {"po6", &po6}};
  return table;
}

}  // namespace

std::vector<std::string> builtin_example_names() {
  std::vector<std::string> names;
  for (const auto& [name, make] : examples()) names.push_back(name);
  return names;
}

std::optional<std::string> builtin_example(std::string_view name) {
  auto it = examples().find(name);
  if (it == examples().end()) return std::nullopt;
  return write_document(it->second());
}

}  // namespace catgeo

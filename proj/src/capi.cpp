#include "catgeo/catgeo.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "catgeo/document.hpp"
#include "catgeo/error.hpp"
#include "catgeo/report.hpp"

struct catgeo_category {
  explicit catgeo_category(catgeo::FiniteCategory c) : analysis(std::move(c)) {}
  catgeo::CategoryAnalysis analysis;
};

namespace {

thread_local std::string last_error;

catgeo_status status_for(catgeo::ErrorCode code) {
  using catgeo::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return CATGEO_ERR_PARSE;
    case ErrorCode::InvalidPresentation: return CATGEO_ERR_INVALID_PRESENTATION;
    case ErrorCode::DuplicateId: return CATGEO_ERR_DUPLICATE_ID;
    case ErrorCode::NontrivialCycle: return CATGEO_ERR_NONTRIVIAL_CYCLE;
    case ErrorCode::CyclicGraph: return CATGEO_ERR_CYCLIC_GRAPH;
    case ErrorCode::AxiomViolation: return CATGEO_ERR_AXIOM_VIOLATION;
    case ErrorCode::UnknownArrow: return CATGEO_ERR_UNKNOWN_ARROW;
    case ErrorCode::NotComposable: return CATGEO_ERR_NOT_COMPOSABLE;
    case ErrorCode::Undefined: return CATGEO_ERR_UNDEFINED;
    case ErrorCode::CompositeIsIdentity: return CATGEO_ERR_COMPOSITE_IS_IDENTITY;
    case ErrorCode::NotGenerated: return CATGEO_ERR_NOT_GENERATED;
    case ErrorCode::NoDifference: return CATGEO_ERR_NO_DIFFERENCE;
    case ErrorCode::InvalidArgument: return CATGEO_ERR_USAGE;
  }
  return CATGEO_ERR_INTERNAL;
}

catgeo_status fail(catgeo_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs fn, translating exceptions into status codes and the thread's error.
template <class Fn>
catgeo_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const catgeo::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CATGEO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CATGEO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CATGEO_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

catgeo::OutputFormat format_of(unsigned flags) {
  return (flags & CATGEO_OUTPUT_JSON) ? catgeo::OutputFormat::Json : catgeo::OutputFormat::Text;
}

bool null_args() { return false; }
template <class T, class... Rest>
bool null_args(T* first, Rest*... rest) {
  return first == nullptr || null_args(rest...);
}

}  // namespace

extern "C" {

const char* catgeo_status_name(catgeo_status status) {
  switch (status) {
    case CATGEO_OK: return "ok";
    case CATGEO_ERR_USAGE: return "usage";
    case CATGEO_ERR_PARSE: return "ParseError";
    case CATGEO_ERR_IO: return "IOError";
    case CATGEO_ERR_INVALID_PRESENTATION: return "InvalidPresentation";
    case CATGEO_ERR_DUPLICATE_ID: return "DuplicateId";
    case CATGEO_ERR_NONTRIVIAL_CYCLE: return "NontrivialCycle";
    case CATGEO_ERR_CYCLIC_GRAPH: return "CyclicGraph";
    case CATGEO_ERR_AXIOM_VIOLATION: return "AxiomViolation";
    case CATGEO_ERR_UNKNOWN_ARROW: return "UnknownArrow";
    case CATGEO_ERR_NOT_COMPOSABLE: return "NotComposable";
    case CATGEO_ERR_UNDEFINED: return "Undefined";
    case CATGEO_ERR_COMPOSITE_IS_IDENTITY: return "CompositeIsIdentity";
    case CATGEO_ERR_NOT_GENERATED: return "NotGenerated";
    case CATGEO_ERR_NO_DIFFERENCE: return "NoDifference";
    case CATGEO_ERR_CHECK_FAILED: return "CheckFailed";
    case CATGEO_ERR_INTERNAL: return "InternalError";
  }
  return "unknown";
}

const char* catgeo_last_error(void) { return last_error.c_str(); }

void catgeo_string_free(char* s) { delete[] s; }

catgeo_status catgeo_category_load(const char* document, unsigned flags, catgeo_category** out) {
  if (null_args(document, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto category = catgeo::load_category(document, (flags & CATGEO_LOAD_NO_VALIDATE) == 0);
    *out = new catgeo_category(std::move(category));
    return CATGEO_OK;
  });
}

catgeo_status catgeo_category_load_file(const char* path, unsigned flags, catgeo_category** out) {
  if (null_args(path, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(CATGEO_ERR_IO, std::string("cannot open '") + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return catgeo_category_load(buffer.str().c_str(), flags, out);
}

void catgeo_category_free(catgeo_category* category) { delete category; }

size_t catgeo_arrow_count(const catgeo_category* category) {
  return category ? category->analysis.category().non_identity_count() : 0;
}

catgeo_status catgeo_arrow_id(const catgeo_category* category, size_t index, const char** out) {
  if (null_args(category, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  const auto& c = category->analysis.category();
  if (index >= c.non_identity_count()) return fail(CATGEO_ERR_USAGE, "arrow index out of range");
  *out = c.arrow_id(catgeo::ArrowIndex{static_cast<std::uint32_t>(index)}).c_str();
  return CATGEO_OK;
}

catgeo_status catgeo_norm(const catgeo_category* category, const char* f, uint64_t* out) {
  if (null_args(category, f, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  return guarded([&] {
    const auto& a = category->analysis;
    *out = a.norms()(catgeo::vector_by_id(a.category(), f));
    return CATGEO_OK;
  });
}

catgeo_status catgeo_add(const catgeo_category* category, const char* f, const char* g, char** out) {
  if (null_args(category, f, g, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  return guarded([&] {
    const auto& c = category->analysis.category();
    const auto sum = catgeo::vec_add(c, catgeo::vector_by_id(c, f), catgeo::vector_by_id(c, g));
    *out = copy_out(catgeo::vector_id(c, sum));
    return CATGEO_OK;
  });
}

catgeo_status catgeo_inner(const catgeo_category* category, const char* f, const char* g,
                           uint64_t* out) {
  if (null_args(category, f, g, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  return guarded([&] {
    const auto& a = category->analysis;
    *out = catgeo::inner(a.category(), a.norms(), catgeo::vector_by_id(a.category(), f),
                         catgeo::vector_by_id(a.category(), g));
    return CATGEO_OK;
  });
}

catgeo_status catgeo_distance(const catgeo_category* category, const char* f, const char* g,
                              uint64_t* out) {
  if (null_args(category, f, g, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  return guarded([&] {
    const auto& a = category->analysis;
    *out = catgeo::distance(a.category(), a.norms(), catgeo::vector_by_id(a.category(), f),
                            catgeo::vector_by_id(a.category(), g));
    return CATGEO_OK;
  });
}

catgeo_status catgeo_is_orthogonal(const catgeo_category* category, const char* f, const char* g,
                                   int* out) {
  if (null_args(category, f, g, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  return guarded([&] {
    const auto& a = category->analysis;
    *out = catgeo::is_orthogonal(a.category(), a.norms(), catgeo::vector_by_id(a.category(), f),
                                 catgeo::vector_by_id(a.category(), g))
               ? 1
               : 0;
    return CATGEO_OK;
  });
}

catgeo_status catgeo_is_parallel(const catgeo_category* category, const char* f, const char* g,
                                 int* out) {
  if (null_args(category, f, g, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  return guarded([&] {
    const auto& c = category->analysis.category();
    *out = catgeo::is_parallel(c, catgeo::vector_by_id(c, f), catgeo::vector_by_id(c, g)) ? 1 : 0;
    return CATGEO_OK;
  });
}

catgeo_status catgeo_report(const catgeo_category* category, catgeo_report_kind kind,
                            unsigned flags, char** out) {
  if (null_args(category, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto& a = category->analysis;
    const auto format = format_of(flags);
    catgeo::Rendered r;
    switch (kind) {
      case CATGEO_REPORT_VALIDATE: r = catgeo::report_validation(a.category(), format); break;
      case CATGEO_REPORT_BASIS: r.text = catgeo::report_basis(a, format); break;
      case CATGEO_REPORT_NORMS: r.text = catgeo::report_norms(a, format); break;
      case CATGEO_REPORT_TABLE: r.text = catgeo::report_table(a, format); break;
      case CATGEO_REPORT_CLIFFORD: r = catgeo::report_clifford(a, format); break;
      case CATGEO_REPORT_EMBED: r.text = catgeo::report_embedding(a.category(), format); break;
      case CATGEO_REPORT_DOT: r.text = catgeo::report_dot(a, false); break;
      case CATGEO_REPORT_DOT_BASIS: r.text = catgeo::report_dot(a, true); break;
      default: return fail(CATGEO_ERR_USAGE, "unknown report kind");
    }
    *out = copy_out(r.text);
    if (!r.ok) return fail(CATGEO_ERR_CHECK_FAILED, "check failed");
    return CATGEO_OK;
  });
}

catgeo_status catgeo_product_report(const catgeo_category* category, const char* f, const char* g,
                                    unsigned flags, char** out) {
  if (null_args(category, f, g, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(catgeo::report_product(category->analysis, f, g, format_of(flags)));
    return CATGEO_OK;
  });
}

catgeo_status catgeo_example(const char* name, char** out) {
  if (null_args(name, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto doc = catgeo::builtin_example(name);
    if (!doc) return fail(CATGEO_ERR_USAGE, std::string("unknown example '") + name + "'");
    *out = copy_out(*doc);
    return CATGEO_OK;
  });
}

catgeo_status catgeo_example_names(char** out) {
  if (null_args(out)) return fail(CATGEO_ERR_USAGE, "null argument");
  return guarded([&] {
    std::string names;
    for (const auto& n : catgeo::builtin_example_names()) names += n + "\n";
    *out = copy_out(names);
    return CATGEO_OK;
  });
}

catgeo_status catgeo_interval_norm(const char* f, unsigned flags, char** out) {
  if (null_args(f, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(catgeo::report_interval_norm(f, format_of(flags)));
    return CATGEO_OK;
  });
}

catgeo_status catgeo_interval_add(const char* f, const char* g, unsigned flags, char** out) {
  if (null_args(f, g, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(catgeo::report_interval_add(f, g, format_of(flags)));
    return CATGEO_OK;
  });
}

catgeo_status catgeo_interval_product(const char* f, const char* g, unsigned flags, char** out) {
  if (null_args(f, g, out)) return fail(CATGEO_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(catgeo::report_interval_product(f, g, format_of(flags)));
    return CATGEO_OK;
  });
}

}  // extern "C"

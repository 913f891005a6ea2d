// catgeo: command-line front end over the catgeo C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "catgeo/catgeo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSemantic = 2;

int exit_code(catgeo_status status) {
  switch (status) {
    case CATGEO_OK: return kExitOk;
    case CATGEO_ERR_USAGE:
    case CATGEO_ERR_PARSE:
    case CATGEO_ERR_IO: return kExitUsage;
    default: return kExitSemantic;
  }
}

int report_failure(catgeo_status status) {
  std::cerr << "catgeo: " << catgeo_status_name(status) << ": " << catgeo_last_error() << "\n";
  return exit_code(status);
}

/// Prints and frees *text when set.
void emit(char* text) {
  if (text) {
    std::cout << text;
    catgeo_string_free(text);
  }
}

struct Handle {
  catgeo_category* ptr = nullptr;
  ~Handle() { catgeo_category_free(ptr); }
};

catgeo_status load(const std::string& path, unsigned flags, Handle& handle) {
  if (path == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return catgeo_category_load(text.c_str(), flags, &handle.ptr);
  }
  return catgeo_category_load_file(path.c_str(), flags, &handle.ptr);
}

int run_report(const std::string& path, catgeo_report_kind kind, bool json) {
  Handle handle;
  // Validation reports on explicit tables that would otherwise be rejected.
  const unsigned load_flags = kind == CATGEO_REPORT_VALIDATE ? CATGEO_LOAD_NO_VALIDATE : 0u;
  if (auto s = load(path, load_flags, handle); s != CATGEO_OK) return report_failure(s);
  char* out = nullptr;
  const catgeo_status s = catgeo_report(handle.ptr, kind, json ? CATGEO_OUTPUT_JSON : 0u, &out);
  emit(out);
  if (s == CATGEO_ERR_CHECK_FAILED) return kExitSemantic;
  if (s != CATGEO_OK) return report_failure(s);
  return kExitOk;
}

int run_product(const std::string& path, const std::string& f, const std::string& g, bool json) {
  Handle handle;
  if (auto s = load(path, 0u, handle); s != CATGEO_OK) return report_failure(s);
  char* out = nullptr;
  const catgeo_status s =
      catgeo_product_report(handle.ptr, f.c_str(), g.c_str(), json ? CATGEO_OUTPUT_JSON : 0u, &out);
  if (s != CATGEO_OK) return report_failure(s);
  emit(out);
  return kExitOk;
}

int run_example(const std::string& name, const std::string& out_path) {
  char* doc = nullptr;
  if (auto s = catgeo_example(name.c_str(), &doc); s != CATGEO_OK) {
    char* names = nullptr;
    if (catgeo_example_names(&names) == CATGEO_OK) {
      std::cerr << "available examples:\n" << names;
      catgeo_string_free(names);
    }
    return report_failure(s);
  }
  if (out_path.empty()) {
    emit(doc);
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << doc;
  catgeo_string_free(doc);
  if (!file) {
    std::cerr << "catgeo: cannot write '" << out_path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cat-vector spaces and geometric products of finite categories"};
  app.require_subcommand(1);

  std::string file;
  std::string f;
  std::string g;
  bool json = false;
  bool basis_only = false;
  int status = kExitOk;

  struct ReportCommand {
    const char* name;
    const char* help;
    catgeo_report_kind kind;
  };
  const ReportCommand reports[] = {
      {"validate", "check the category axioms", CATGEO_REPORT_VALIDATE},
      {"basis", "list the atomic basis", CATGEO_REPORT_BASIS},
      {"norms", "list the norm of every vector", CATGEO_REPORT_NORMS},
      {"table", "anticommutator fg+gf for every ordered pair of arrows", CATGEO_REPORT_TABLE},
      {"clifford", "check e^2 = 1 on the basis and fg = -gf on orthogonal pairs",
       CATGEO_REPORT_CLIFFORD},
      {"embed", "place objects in the plane and arrows as arcs above it", CATGEO_REPORT_EMBED},
  };
  for (const ReportCommand& r : reports) {
    auto* sub = app.add_subcommand(r.name, r.help);
    sub->add_option("FILE", file, "category document ('-' for stdin)")->required();
    sub->add_flag("--json", json, "machine-readable output");
    const catgeo_report_kind kind = r.kind;
    sub->callback([&, kind] { status = run_report(file, kind, json); });
  }

  auto* dot = app.add_subcommand("dot", "export the category as a DOT digraph");
  dot->add_option("FILE", file, "category document ('-' for stdin)")->required();
  dot->add_flag("--basis-only", basis_only, "draw only the atomic basis");
  dot->add_flag("--json", json, "accepted for symmetry; DOT is always plain text");
  dot->callback([&] {
    status = run_report(file, basis_only ? CATGEO_REPORT_DOT_BASIS : CATGEO_REPORT_DOT, false);
  });

  auto* product = app.add_subcommand("product", "inner, outer and geometric products of F and G");
  product->add_option("FILE", file, "category document ('-' for stdin)")->required();
  product->add_option("F", f, "arrow id, or O for the zero vector")->required();
  product->add_option("G", g, "arrow id, or O for the zero vector")->required();
  product->add_flag("--json", json, "machine-readable output");
  product->callback([&] { status = run_product(file, f, g, json); });

  std::string name;
  std::string out_path;
  auto* example = app.add_subcommand("example", "print a built-in category document");
  example->add_option("NAME", name, "po6, path3, parallel or iso")->required();
  example->add_option("--out", out_path, "write to FILE instead of stdout");
  example->callback([&] { status = run_example(name, out_path); });

  auto* interval = app.add_subcommand("interval", "real-line backend; vectors are O or LO:HI");
  interval->require_subcommand(1);
  interval->add_flag("--json", json, "machine-readable output");
  auto interval_call = [&](auto&& call) {
    char* out = nullptr;
    const catgeo_status s = call(json ? CATGEO_OUTPUT_JSON : 0u, &out);
    if (s != CATGEO_OK) return report_failure(s);
    emit(out);
    return kExitOk;
  };
  auto* inorm = interval->add_subcommand("norm", "hi - lo");
  inorm->add_option("F", f)->required();
  inorm->add_flag("--json", json);
  inorm->callback([&] {
    status = interval_call([&](unsigned flags, char** out) {
      return catgeo_interval_norm(f.c_str(), flags, out);
    });
  });
  auto* iadd = interval->add_subcommand("add", "F (+) G");
  iadd->add_option("F", f)->required();
  iadd->add_option("G", g)->required();
  iadd->add_flag("--json", json);
  iadd->callback([&] {
    status = interval_call([&](unsigned flags, char** out) {
      return catgeo_interval_add(f.c_str(), g.c_str(), flags, out);
    });
  });
  auto* iproduct = interval->add_subcommand("product", "inner, outer and geometric products");
  iproduct->add_option("F", f)->required();
  iproduct->add_option("G", g)->required();
  iproduct->add_flag("--json", json);
  iproduct->callback([&] {
    status = interval_call([&](unsigned flags, char** out) {
      return catgeo_interval_product(f.c_str(), g.c_str(), flags, out);
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return status;
}

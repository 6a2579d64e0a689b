#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "wallacs/catalog.hpp"
#include "wallacs/report.hpp"
#include "wallacs/version.hpp"

namespace {

using namespace wallacs;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

// Shared by validate and decide: 2 on I/O or parse failure.
int load_document(const std::string& path, ManifoldDocument& doc) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  try {
    doc = parse_document(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_validate(const std::string& path, const std::string& format) {
  ManifoldDocument doc;
  if (int rc = load_document(path, doc)) return rc;
  ValidationReport v = validate(to_wall_invariants(doc));
  if (format == "json") {
    std::cout << validation_to_json(doc, v) << "\n";
  } else {
    std::cout << validation_to_text(doc, v);
  }
  return v.valid ? 0 : 1;
}

int run_decide(const std::string& path, int bound, const std::string& format,
               bool strict, bool with_ktheory) {
  ManifoldDocument doc;
  if (int rc = load_document(path, doc)) return rc;
  DecisionReport r = build_report(doc, bound, with_ktheory);
  if (format == "json") {
    std::cout << report_to_json(r) << "\n";
  } else {
    std::cout << report_to_text(r);
  }
  if (!r.validation.valid) return 1;
  if (!r.error.empty()) return 1;
  if (strict && r.acs && r.acs->admits == Admits::Unknown) return 1;
  return 0;
}

int run_catalog(bool list, const std::string& emit) {
  if (list) {
    for (const auto& name : catalog_names()) std::cout << name << "\n";
    return 0;
  }
  try {
    std::cout << document_to_json(catalog_entry(emit)) << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_ktheory(bool has_n, int n, int k, bool has_spheres, int m,
                const std::string& format) {
  if (!has_n && !has_spheres) {
    std::cerr << "ktheory needs --n or --spheres\n";
    return 2;
  }
  KTheoryRow row;
  if (has_spheres) {
    if (m < 1) {
      std::cerr << "--spheres takes a dimension >= 1\n";
      return 2;
    }
    row = sphere_row(m);
  } else {
    if (n < 3 || k < 0) {
      std::cerr << "ktheory needs n >= 3 and k >= 0\n";
      return 2;
    }
    row = manifold_row(n, k);
  }
  if (format == "json") {
    std::cout << ktheory_to_json(row) << "\n";
  } else {
    std::cout << render_text(row);
  }
  return 0;
}

int run_batch(const std::string& input, int bound) {
  namespace fs = std::filesystem;
  std::vector<std::pair<std::string, std::string>> items;  // label, document text
  std::error_code ec;
  if (fs::is_directory(input, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::string text;
      if (!read_file(f.string(), text)) {
        std::cerr << "cannot read " << f.string() << "\n";
        return 2;
      }
      items.emplace_back(f.filename().string(), std::move(text));
    }
  } else if (fs::is_regular_file(input, ec)) {
    std::string text;
    if (!read_file(input, text)) {
      std::cerr << "cannot read " << input << "\n";
      return 2;
    }
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      items.emplace_back("line " + std::to_string(lineno), line);
    }
  } else {
    std::cerr << "no such file or directory: " << input << "\n";
    return 2;
  }

  bool any_failed = false;
  for (const auto& [label, text] : items) {
    try {
      DecisionReport r = build_report(parse_document(text), bound, false);
      std::cout << report_to_json(r, -1) << "\n";
      if (!r.validation.valid || !r.error.empty()) any_failed = true;
    } catch (const ParseError& e) {
      nlohmann::ordered_json rec;
      rec["name"] = label;
      rec["error"] = e.what();
      std::cout << rec.dump() << "\n";
      any_failed = true;
    }
  }
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable and unstable almost complex structure decisions for "
               "(n-1)-connected 2n-manifolds"};
  app.set_version_flag("--version", wallacs::kVersion);
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  int bound = 32;
  bool strict = false;
  bool with_ktheory = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a document against the invariant rules");
  validate_cmd->add_option("file", path, "ManifoldDocument JSON file")->required();
  validate_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* decide_cmd = app.add_subcommand("decide", "full decision report for one document");
  decide_cmd->add_option("file", path, "ManifoldDocument JSON file")->required();
  decide_cmd->add_option("--bound", bound, "indefinite search bound")
      ->envname("WALLACS_BOUND")
      ->check(CLI::NonNegativeNumber);
  decide_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  decide_cmd->add_flag("--strict", strict, "exit 1 when the verdict is unknown");
  decide_cmd->add_flag("--ktheory", with_ktheory, "include the K-theory presentations");

  bool list = false;
  std::string emit;
  auto* catalog_cmd = app.add_subcommand("catalog", "built-in example systems");
  catalog_cmd->add_flag("--list", list, "print the catalog names");
  catalog_cmd->add_option("--emit", emit, "print one catalog document");

  int kt_n = 0, kt_k = 0, kt_m = 0;
  auto* ktheory_cmd = app.add_subcommand("ktheory", "reduced K-theory presentations");
  auto* opt_n = ktheory_cmd->add_option("--n", kt_n, "half-dimension of the manifold");
  ktheory_cmd->add_option("--k", kt_k, "middle Betti number");
  auto* opt_m = ktheory_cmd->add_option("--spheres", kt_m, "sphere dimension m for S^m");
  ktheory_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string batch_input;
  std::string batch_format = "jsonl";
  auto* batch_cmd = app.add_subcommand("batch", "decide a directory of .json files or a .jsonl file");
  batch_cmd->add_option("input", batch_input, "directory or JSONL file")->required();
  batch_cmd->add_option("--bound", bound, "indefinite search bound")
      ->envname("WALLACS_BOUND")
      ->check(CLI::NonNegativeNumber);
  batch_cmd->add_option("--format", batch_format, "jsonl")
      ->check(CLI::IsMember({"jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*validate_cmd) return run_validate(path, format);
  if (*decide_cmd) return run_decide(path, bound, format, strict, with_ktheory);
  if (*catalog_cmd) {
    if (!list && emit.empty()) {
      std::cerr << "catalog needs --list or --emit\n";
      return 2;
    }
    return run_catalog(list, emit);
  }
  if (*ktheory_cmd)
    return run_ktheory(opt_n->count() > 0, kt_n, kt_k, opt_m->count() > 0, kt_m, format);
  if (*batch_cmd) return run_batch(batch_input, bound);
  return 2;
}

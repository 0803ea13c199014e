// Copyright 2026 The shiftgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Everything goes through the C API in shiftgraph.h.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "shiftgraph/shiftgraph.h"

namespace {

using nlohmann::ordered_json;

struct GraphDeleter {
  void operator()(sg_graph* g) const { sg_graph_free(g); }
};
using GraphPtr = std::unique_ptr<sg_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { sg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Raised for any nonzero status; carries an optional partial payload.
struct DomainError {
  int status;
  std::string message;
  std::string payload;
};

void check(int status) {
  if (status != SG_OK) throw DomainError{status, sg_last_error(), ""};
}

struct Config {
  std::optional<unsigned> n;
  std::string ground;
  std::string type;
  std::string format = "json";
  std::string in;
  std::string out;
  std::optional<unsigned long long> seed;
  unsigned long long budget_vertices = 0;
  double budget_seconds = 0;
  std::string scope;
  bool exact = false;
  bool bounds = false;
  bool compare = false;
  bool detail = false;
  bool infer = false;
  bool quick = false;
  bool corrupt = false;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError{SG_EIO, "cannot read " + path, ""};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const Config& cfg, const std::string& text) {
  const bool newline = text.empty() || text.back() != '\n';
  if (cfg.out.empty()) {
    std::cout << text << (newline ? "\n" : "");
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw DomainError{SG_EIO, "cannot write " + cfg.out, ""};
  f << text << (newline ? "\n" : "");
}

std::string take(char* s) {
  OwnedString owned(s);
  return s ? std::string(s) : std::string();
}

// Graph from --in, or G(--n, --type); then shuffled when --seed is set.
GraphPtr load_graph(const Config& cfg) {
  sg_graph* raw = nullptr;
  if (!cfg.in.empty()) {
    check(sg_graph_from_json(read_file(cfg.in).c_str(), &raw));
  } else {
    if (!cfg.n || cfg.type.empty()) throw CLI::ValidationError("need --in or both --n and --type");
    check(sg_graph_build(*cfg.n, cfg.type.c_str(), cfg.budget_vertices, &raw));
  }
  GraphPtr g(raw);
  if (cfg.seed) {
    sg_graph* shuffled = nullptr;
    check(sg_graph_shuffled(g.get(), *cfg.seed, &shuffled));
    g.reset(shuffled);
  }
  return g;
}

int run_build(const Config& cfg) {
  auto g = load_graph(cfg);
  char* s = nullptr;
  check(sg_graph_export(g.get(), cfg.format.c_str(), &s));
  emit(cfg, take(s));
  return 0;
}

int run_analyze(const Config& cfg) {
  auto g = load_graph(cfg);
  char* s = nullptr;
  check(sg_analyze(g.get(), &s));
  emit(cfg, take(s));
  return 0;
}

int run_census(const Config& cfg) {
  char* s = nullptr;
  if (cfg.infer) {
    check(sg_infer_alpha(cfg.ground.c_str(), cfg.type.c_str(), &s));
  } else {
    check(sg_census(cfg.ground.c_str(), cfg.type.c_str(), cfg.scope.empty() ? nullptr : cfg.scope.c_str(), &s));
  }
  emit(cfg, take(s));
  return 0;
}

int run_reconstruct(const Config& cfg) {
  auto g = load_graph(cfg);
  char* s = nullptr;
  check(sg_reconstruct(g.get(), cfg.type.c_str(), cfg.detail ? 1 : 0, &s));
  emit(cfg, take(s));
  return 0;
}

int run_chromatic(const Config& cfg) {
  if (cfg.exact && cfg.bounds) throw CLI::ValidationError("--exact and --bounds are exclusive");
  auto g = load_graph(cfg);
  char* s = nullptr;
  const int status = sg_chromatic(g.get(), cfg.bounds ? 0 : 1, cfg.budget_seconds, &s);
  // On an exhausted budget the bounds come back alongside the error.
  std::string text = take(s);
  if (status != SG_OK) throw DomainError{status, sg_last_error(), text};
  emit(cfg, text);
  return 0;
}

int run_aut(const Config& cfg) {
  auto g = load_graph(cfg);
  char* s = nullptr;
  check(sg_aut(g.get(), cfg.compare ? 1 : 0, &s));
  emit(cfg, take(s));
  return 0;
}

int run_selftest(const Config& cfg) {
  sg_selftest_set_corruption(cfg.corrupt ? 1 : 0);
  int passed = 0;
  char* s = nullptr;
  check(sg_selftest(cfg.quick ? 1 : 0, &passed, &s));
  emit(cfg, take(s));
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized shift graphs: construction, structure, reconstruction, colouring, automorphisms"};
  app.require_subcommand(1, 1);
  Config cfg;

  auto graph_source = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Ground set size");
    sub->add_option("--type", cfg.type, "Type pattern, e.g. 132");
    sub->add_option("--in", cfg.in, "Graph JSON (edge-list format emitted by build)");
    sub->add_option("--seed", cfg.seed, "Shuffle vertex ids with this seed first");
    sub->add_option("--budget-vertices", cfg.budget_vertices, "Vertex cap for construction");
  };
  auto common = [&](CLI::App* sub, bool graph_formats) {
    auto* fmt = sub->add_option("--format", cfg.format, "Output format");
    fmt->check(graph_formats ? CLI::IsMember({"json", "dot", "text"}) : CLI::IsMember({"json"}));
    sub->add_option("--out", cfg.out, "Write output to this file");
  };

  auto* build = app.add_subcommand("build", "Construct G(n, type) and export it");
  graph_source(build);
  common(build, true);

  auto* analyze = app.add_subcommand("analyze", "Degrees, twin classes, quotient and isolated points");
  graph_source(analyze);
  common(analyze, false);

  auto* census = app.add_subcommand("census", "Symbolic finite-degree census over a finite or ordinal ground");
  census->add_option("--ground", cfg.ground, "Ground: natural number or ordinal such as w+3")->required();
  census->add_option("--type", cfg.type, "Type 1^a 3^b 2^a")->required();
  census->add_option("--scope", cfg.scope, "vertices or classes")->check(CLI::IsMember({"vertices", "classes"}));
  census->add_flag("--infer", cfg.infer, "Also infer k and the ground");
  common(census, false);

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover labelings of an unlabelled shift graph");
  graph_source(reconstruct);
  reconstruct->get_option("--type")->required();
  reconstruct->add_flag("--detail", cfg.detail, "Include assignments and block trace");
  common(reconstruct, false);

  auto* chromatic = app.add_subcommand("chromatic", "Chromatic number with witness colouring");
  graph_source(chromatic);
  chromatic->add_flag("--exact", cfg.exact, "Exact search (default)");
  chromatic->add_flag("--bounds", cfg.bounds, "Greedy and clique bounds only");
  chromatic->add_option("--budget-seconds", cfg.budget_seconds, "Time budget for the exact search");
  common(chromatic, false);

  auto* aut = app.add_subcommand("aut", "Automorphism group order and comparison with closed forms");
  graph_source(aut);
  aut->add_flag("--compare", cfg.compare, "Also run the backtracking oracle");
  common(aut, false);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property suites");
  selftest->add_flag("--quick", cfg.quick, "Reduced caps");
  selftest->add_flag("--corrupt-adjacency", cfg.corrupt, "Test hook: perturb the reconstruction input")->group("");
  common(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) return run_build(cfg);
    if (*analyze) return run_analyze(cfg);
    if (*census) return run_census(cfg);
    if (*reconstruct) return run_reconstruct(cfg);
    if (*chromatic) return run_chromatic(cfg);
    if (*aut) return run_aut(cfg);
    if (*selftest) return run_selftest(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    ordered_json err;
    err["error"] = {{"code", sg_status_name(e.status)}, {"message", e.message}};
    if (!e.payload.empty()) err["partial"] = ordered_json::parse(e.payload);
    std::cout << err.dump() << "\n";
    return 1;
  }
  return 2;
}

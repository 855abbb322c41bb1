// Copyright 2026 The Galaxy Authors.
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

// Command-line front end. run_cli() does all the work and returns what the
// process would print, so the commands can be tested in-process.
//
// Exit codes: 0 success, 1 verification or feasibility negative, 2 usage or
// malformed input, 3 capacity or search budget.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galaxy/galaxy.hpp"
#include "galaxy/json_io.hpp"

namespace galaxy::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kCapacity = 3,
};

struct CommandResult {
  int exit_code = kOk;
  std::string payload;      // stdout: JSON
  std::string diagnostics;  // stderr: human-readable
};

namespace detail {

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(what + ": " + e.what());
  }
}

// "12" names Q_12; anything else is read as graph6.
inline Graph graph_from_arg(const std::string& arg) {
  if (!arg.empty() && std::all_of(arg.begin(), arg.end(),
                                  [](unsigned char c) { return std::isdigit(c); })) {
    return hypercube(std::stoi(arg));
  }
  return parse_graph6(arg);
}

inline std::string summary(const VerificationReport& r) {
  std::ostringstream out;
  out << r.class_count << " classes, " << (r.valid ? "valid" : "INVALID");
  if (!r.valid) {
    out << " (" << r.violations.size() << " violations";
    for (ViolationKind kind : {ViolationKind::kEdgeNotInGraph, ViolationKind::kDuplicateEdge,
                               ViolationKind::kUncoveredEdge, ViolationKind::kNotAStar}) {
      if (std::size_t c = r.count(kind)) out << "; " << to_string(kind) << ": " << c;
    }
    out << ")";
  }
  return out.str();
}

struct DecomposeArgs {
  int n = 0;
  std::string method = "auto";
  std::string out;
};

inline CommandResult cmd_decompose(const DecomposeArgs& args) {
  CommandResult result;
  GalaxyDecomposition d;
  if (args.method == "auto") {
    d = decompose(args.n);
  } else {
    PlanStep step;
    try {
      step = parse_plan(args.method);
    } catch (const ParseError& e) {
      throw UsageError(std::string("bad plan expression: ") + e.what());
    }
    if (step.dimension() != args.n) {
      throw UsageError("plan " + step.to_string() + " builds Q_" + std::to_string(step.dimension()) +
                       ", not Q_" + std::to_string(args.n));
    }
    d = execute(step);
  }
  const VerificationReport report = verify_decomposition(d);
  const std::string doc = to_json(d).dump();
  if (args.out.empty()) {
    result.payload = doc + "\n";
  } else {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + args.out);
    file << doc << "\n";
    Json j{{"n", args.n},
           {"provenance", d.provenance},
           {"class_count", d.class_count()},
           {"valid", report.valid},
           {"out", args.out}};
    result.payload = j.dump() + "\n";
  }
  result.diagnostics = "Q_" + std::to_string(args.n) + " via " + d.provenance + ": " +
                       summary(report) + "\n";
  result.exit_code = report.valid ? kOk : kNegative;
  return result;
}

struct VerifyArgs {
  std::string file;
  std::string graph;
};

inline CommandResult cmd_verify(const VerifyArgs& args) {
  CommandResult result;
  const Json doc = parse_json_text(read_file(args.file), args.file);
  if (!doc.is_object()) throw DocumentError("decomposition must be a JSON object");
  Graph g = args.graph.empty() ? graph_from_json(doc) : graph_from_arg(args.graph);
  const GalaxyDecomposition d = decomposition_from_json(doc, std::make_shared<const Graph>(std::move(g)));
  const VerificationReport report = verify_decomposition(d);
  result.payload = to_json(report).dump() + "\n";
  result.diagnostics = summary(report) + "\n";
  for (std::size_t i = 0; i < report.violations.size() && i < 10; ++i) {
    const Violation& v = report.violations[i];
    result.diagnostics += std::string("  ") + to_string(v.kind) + " class=" +
                          (v.class_index ? std::to_string(*v.class_index) : "-") + " edge=(" +
                          std::to_string(v.edge.u) + "," + std::to_string(v.edge.v) + "): " +
                          v.reason + "\n";
  }
  result.exit_code = report.valid ? kOk : kNegative;
  return result;
}

struct BoundsArgs {
  std::optional<int> n;
  std::string range;
};

inline CommandResult cmd_bounds(const BoundsArgs& args) {
  CommandResult result;
  if (args.n.has_value() == !args.range.empty()) {
    throw UsageError("bounds takes either N or --range A..B");
  }
  auto check = [](int n) {
    if (n < 1) throw UsageError("dimension must be positive");
  };
  if (args.n) {
    check(*args.n);
    const BoundsReport r = status(*args.n);
    result.payload = to_json(r).dump() + "\n";
    result.diagnostics = "sa(Q_" + std::to_string(r.n) + ") in [" + std::to_string(r.lower) + ", " +
                         std::to_string(r.upper) + "]" + (r.exact ? " exact" : "") + "\n";
    return result;
  }
  const auto dots = args.range.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B");
  int lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoi(args.range.substr(0, dots), &used);
    if (used != dots) throw UsageError("bad range start");
    const std::string tail = args.range.substr(dots + 2);
    hi = std::stoi(tail, &used);
    if (used != tail.size()) throw UsageError("bad range end");
  } catch (const std::logic_error&) {
    throw UsageError("range must look like A..B");
  }
  check(lo);
  if (hi < lo) throw UsageError("empty range");
  Json list = Json::array();
  for (int n = lo; n <= hi; ++n) {
    const BoundsReport r = status(n);
    list.push_back(to_json(r));
    result.diagnostics += std::to_string(n) + "\t" + std::to_string(r.lower) + "\t" +
                          std::to_string(r.upper) + (r.exact ? "\texact" : "\topen") + "\n";
  }
  result.payload = list.dump() + "\n";
  return result;
}

struct ExactArgs {
  std::string graph6;
  int max_classes = SearchConfig{}.max_classes;
  std::uint64_t budget = SearchConfig{}.node_budget;
  bool no_symmetry = false;
};

inline CommandResult cmd_exact(const ExactArgs& args) {
  CommandResult result;
  const Graph g = parse_graph6(args.graph6);
  SearchConfig cfg;
  cfg.max_classes = args.max_classes;
  cfg.node_budget = args.budget;
  cfg.symmetry_breaking = !args.no_symmetry;
  if (cfg.max_classes < 1 || cfg.node_budget == 0) {
    throw UsageError("--max-classes and --budget must be positive");
  }
  try {
    ExactResult r = exact_sa_with_witness(g, cfg);
    Json j{{"graph6", write_graph6(g)}, {"sa", r.value}, {"nodes", r.nodes}};
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    result.payload = j.dump() + "\n";
    result.diagnostics = "sa = " + std::to_string(r.value) + " (" + std::to_string(r.nodes) +
                         " search nodes)\n";
  } catch (const ClassLimitError& e) {
    Json j{{"graph6", write_graph6(g)}, {"sa", nullptr}, {"max_classes", cfg.max_classes}};
    result.payload = j.dump() + "\n";
    result.diagnostics = std::string(e.what()) + "\n";
    result.exit_code = kNegative;
  }
  return result;
}

struct SquareArgs {
  std::optional<int> n;
  std::optional<int> t;
  bool hamming = false;
  std::string coloring;
};

inline CommandResult cmd_square(const SquareArgs& args) {
  CommandResult result;
  SquareColoring col;
  if (args.t || args.hamming) {
    int t = 0;
    if (args.t) {
      t = *args.t;
      if (args.n && *args.n != (1 << t) - 1) throw UsageError("N must equal 2^t - 1");
    } else {
      if (!args.n) throw UsageError("--hamming needs N = 2^t - 1 or --t");
      const unsigned m = static_cast<unsigned>(*args.n) + 1;
      if (*args.n < 1 || !std::has_single_bit(m)) throw UsageError("--hamming needs N = 2^t - 1");
      t = std::countr_zero(m);
    }
    if (!args.coloring.empty()) throw UsageError("--coloring conflicts with a Hamming coloring");
    col = hamming_square_coloring(t);
  } else {
    if (!args.n || args.coloring.empty()) {
      throw UsageError("square needs --t T, N --hamming, or N --coloring FILE");
    }
    col.graph = std::make_shared<const Graph>(hypercube(*args.n));
    col.colors = coloring_from_json(parse_json_text(read_file(args.coloring), args.coloring));
    if (col.colors.size() != col.graph->vertex_count()) {
      throw DocumentError("coloring has " + std::to_string(col.colors.size()) +
                          " entries, expected " + std::to_string(col.graph->vertex_count()));
    }
    col.k = col.colors.empty() ? 0 : *std::max_element(col.colors.begin(), col.colors.end()) + 1;
  }
  const int n = *col.graph->dimension();
  try {
    const GalaxyDecomposition d = sa_from_square_coloring(*col.graph, col);
    Json j{{"n", n}, {"colors", col.k}, {"class_count", d.class_count()}};
    j["coloring"] = to_json(col);
    j["decomposition"] = to_json(d);
    result.payload = j.dump() + "\n";
    result.diagnostics = "Q_" + std::to_string(n) + " with " + std::to_string(col.k) +
                         " square colors: " + std::to_string(d.class_count()) + " galaxies\n";
  } catch (const ColoringError& e) {
    Json j{{"n", n}, {"valid", false}, {"conflict", {e.u(), e.v()}}};
    result.payload = j.dump() + "\n";
    result.diagnostics = std::string(e.what()) + "\n";
    result.exit_code = kNegative;
  }
  return result;
}

}  // namespace detail

inline CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Galaxy (star forest) decompositions of hypercubes", "galaxy"};
  app.require_subcommand(1);

  detail::DecomposeArgs decompose_args;
  auto* decompose_cmd = app.add_subcommand("decompose", "Build and verify a decomposition of Q_n");
  decompose_cmd->add_option("n", decompose_args.n, "Hypercube dimension")->required();
  decompose_cmd->add_option("--method", decompose_args.method,
                            "auto, or a plan expression such as PlusOne(PowerMinus2(3))");
  decompose_cmd->add_option("--out", decompose_args.out, "Write the decomposition JSON here");

  detail::VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a decomposition JSON document");
  verify_cmd->add_option("file", verify_args.file, "Decomposition JSON")->required();
  verify_cmd->add_option("--graph", verify_args.graph, "Override the graph: dimension n or graph6");

  detail::BoundsArgs bounds_args;
  int bounds_n = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bounds on sa(Q_n)");
  auto* bounds_n_opt = bounds_cmd->add_option("n", bounds_n, "Hypercube dimension");
  bounds_cmd->add_option("--range", bounds_args.range, "Report every n in A..B");

  detail::ExactArgs exact_args;
  auto* exact_cmd = app.add_subcommand("exact", "Exact star arboricity of a small graph");
  exact_cmd->add_option("graph6", exact_args.graph6, "Graph in graph6")->required();
  exact_cmd->add_option("--max-classes", exact_args.max_classes, "Largest class count to try");
  exact_cmd->add_option("--budget", exact_args.budget, "Search node budget");
  exact_cmd->add_flag("--no-symmetry", exact_args.no_symmetry, "Disable class symmetry breaking");

  detail::SquareArgs square_args;
  int square_n = 0;
  int square_t = 0;
  auto* square_cmd = app.add_subcommand("square", "Galaxies of Q_n from a square coloring");
  auto* square_n_opt = square_cmd->add_option("n", square_n, "Hypercube dimension");
  auto* square_t_opt = square_cmd->add_option("--t", square_t, "Hamming coloring of Q_{2^t-1}");
  square_cmd->add_flag("--hamming", square_args.hamming, "Use the Hamming coloring of Q_n");
  square_cmd->add_option("--coloring", square_args.coloring, "JSON array of colors for Q_n");

  CommandResult result;
  std::vector<const char*> argv{"galaxy"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.payload = out.str();
    result.diagnostics = err.str();
    result.exit_code = code == 0 ? kOk : kUsage;
    return result;
  }

  try {
    if (*decompose_cmd) {
      if (decompose_args.n < 1) throw detail::UsageError("dimension must be positive");
      return detail::cmd_decompose(decompose_args);
    }
    if (*verify_cmd) return detail::cmd_verify(verify_args);
    if (*bounds_cmd) {
      if (*bounds_n_opt) bounds_args.n = bounds_n;
      return detail::cmd_bounds(bounds_args);
    }
    if (*exact_cmd) return detail::cmd_exact(exact_args);
    if (*square_cmd) {
      if (*square_n_opt) square_args.n = square_n;
      if (*square_t_opt) square_args.t = square_t;
      return detail::cmd_square(square_args);
    }
  } catch (const detail::UsageError& e) {
    result = {kUsage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const DocumentError& e) {
    result = {kUsage, "", std::string("malformed input: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    result = {kUsage, "", std::string("malformed input: ") + e.what() + "\n"};
  } catch (const StructureError& e) {
    result = {kUsage, "", std::string("malformed input: ") + e.what() + "\n"};
  } catch (const CapacityError& e) {
    result = {kCapacity, "", std::string("capacity: ") + e.what() + "\n"};
  } catch (const InconclusiveError& e) {
    result = {kCapacity, "", std::string("inconclusive: ") + e.what() + "\n"};
  } catch (const Error& e) {
    result = {kNegative, "", std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace galaxy::cli

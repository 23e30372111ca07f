// Command-line front end: winnable, toggling, maxsize, verify.
// Exit codes: 0 success / winnable / all checks pass, 1 negative answer or
// failed checks, 2 usage or input error. JSON goes to stdout.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lightsout/extremal.hpp"
#include "lightsout/game.hpp"
#include "lightsout/report.hpp"
#include "lightsout/toggling.hpp"
#include "lightsout/verify.hpp"

using namespace lightsout;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph parse_graph(const std::string& text) {
  if (text.rfind("g6:", 0) == 0) return from_graph6(text.substr(3));
  if (text.rfind("edges:", 0) == 0) return parse_edge_list(text.substr(6));
  return named_graph(text);
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("not an integer: " + item);
    }
    out.push_back(v);
  }
  return out;
}

// Whitespace-separated rows, or a JSON array of arrays.
std::vector<std::vector<std::int64_t>> read_matrix_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open matrix file " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return Json::parse(text).get<std::vector<std::vector<std::int64_t>>>();
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
    }
  }
  std::vector<std::vector<std::int64_t>> rows;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::stringstream cells(line);
    std::vector<std::int64_t> row;
    std::string cell;
    while (cells >> cell) {
      std::size_t used = 0;
      row.push_back(std::stoll(cell, &used));
      if (used != cell.size()) throw std::invalid_argument("not an integer: " + cell);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_rows(const ZModMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    rows.push_back(std::vector<Residue>(r.begin(), r.end()));
  }
  return rows;
}

struct GameInput {
  ZModMatrix matrix;
  Json echo;
};

GameInput load_game(const std::optional<std::string>& graph_text, const std::string& game, Modulus modulus) {
  Json echo;
  echo["game"] = game;
  if (game.rfind("matrix:", 0) == 0) {
    if (graph_text) throw UsageError("--graph cannot be combined with --game matrix:FILE");
    const auto rows = read_matrix_file(game.substr(7));
    ZModMatrix m = ZModMatrix::from_rows(rows, modulus);
    if (!m.is_square()) throw std::invalid_argument("matrix must be square");
    echo["matrix"] = matrix_rows(m);
    return {std::move(m), std::move(echo)};
  }
  if (!graph_text) throw UsageError("--graph is required for graph games");
  const Graph g = parse_graph(*graph_text);
  echo["graph"] = {{"graph6", to_graph6(g)}, {"edges", to_edge_list(g)}};
  if (game == "neighborhood") return {neighborhood_matrix(g, modulus), std::move(echo)};
  if (game == "adjacency") return {adjacency_matrix(g, modulus), std::move(echo)};
  throw UsageError("--game must be neighborhood, adjacency or matrix:FILE");
}

void emit(const Json& report, const std::optional<std::string>& out_path) {
  const std::string text = report.dump(2);
  std::cout << text << "\n";
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw std::invalid_argument("cannot write " + *out_path);
    out << text << "\n";
  }
}

unsigned default_jobs() {
  if (const char* env = std::getenv("LIGHTSOUT_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring invalid LIGHTSOUT_JOBS=" << env << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lights Out over Z_ell: winnability, toggling numbers, extremal graphs"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  unsigned jobs = default_jobs();
  std::optional<std::string> out_path;
  app.add_option("--seed", seed, "Seed for sampled sweeps");
  app.add_option("--jobs", jobs, "Worker threads (default: LIGHTSOUT_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Also write the JSON report to this file");

  std::optional<std::string> graph_text;
  std::int64_t ell = 0;
  std::string game = "neighborhood";
  std::optional<std::string> labels_text;

  auto* win = app.add_subcommand("winnable", "Always-winnable test or a winning toggle vector");
  win->add_option("--graph", graph_text, "g6:STRING, edges:N:u-v,... or a named graph");
  win->add_option("--modulus", ell, "ell >= 2")->required();
  win->add_option("--game", game, "neighborhood | adjacency | matrix:FILE");
  win->add_option("--labels", labels_text, "Comma-separated initial labels");

  std::optional<std::string> subset_text;
  std::int64_t r_value = 1;
  auto* tog = app.add_subcommand("toggling", "U-toggling numbers T_U(r)");
  tog->add_option("--graph", graph_text, "g6:STRING, edges:N:u-v,... or a named graph");
  tog->add_option("--modulus", ell, "ell >= 2")->required();
  tog->add_option("--game", game, "neighborhood | adjacency | matrix:FILE");
  tog->add_option("--subset", subset_text, "Comma-separated vertices of U (default: all)");
  tog->add_option("--r", r_value, "Shift applied to U");

  std::size_t order = 0;
  std::optional<std::size_t> cap;
  bool no_prune = false;
  bool timing = false;
  bool csv = false;
  auto* max = app.add_subcommand("maxsize", "Densest N-AW graphs of order n");
  max->add_option("--n", order, "Order")->required();
  max->add_option("--modulus", ell, "ell >= 2")->required();
  max->add_option("--bounded", cap, "Only complements with at most CAP edges");
  max->add_flag("--no-prune", no_prune, "Disable degree pruning");
  max->add_flag("--timing", timing, "Include elapsed_ms in the report");
  max->add_flag("--csv", csv, "Print a CSV table instead of JSON");

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run self-check suites");
  ver->add_option("--suite", suite, "Suite name or 'all'");
  bool list = false;
  ver->add_flag("--list", list, "List suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*win) {
      const Modulus modulus(ell);
      const GameInput in = load_game(graph_text, game, modulus);
      Json inputs = in.echo;
      inputs["modulus"] = ell;
      Json result;
      bool positive = false;
      if (labels_text) {
        const auto labels = parse_list(*labels_text);
        if (labels.size() != in.matrix.rows()) {
          throw std::invalid_argument("--labels needs " + std::to_string(in.matrix.rows()) + " values");
        }
        inputs["labels"] = labels;
        const auto x = winnable(in.matrix, labels);
        positive = x.has_value();
        result["winnable"] = positive;
        result["toggles"] = x ? Json(*x) : Json(nullptr);
      } else {
        positive = is_always_winnable(in.matrix);
        result["always_winnable"] = positive;
        result["determinant"] = det_mod(in.matrix);
        const auto twins = find_twins(in.matrix);
        result["twin"] = twins.empty() ? Json(nullptr) : Json{twins[0].first, twins[0].second};
      }
      emit(make_report("winnable", inputs, result, seed), out_path);
      return positive ? 0 : 1;
    }

    if (*tog) {
      const Modulus modulus(ell);
      const GameInput in = load_game(graph_text, game, modulus);
      VertexSet subset;
      if (subset_text) {
        for (const auto v : parse_list(*subset_text)) {
          if (v < 0 || static_cast<std::size_t>(v) >= in.matrix.rows()) {
            throw std::invalid_argument("subset vertex " + std::to_string(v) + " out of range");
          }
          subset.push_back(static_cast<Vertex>(v));
        }
      } else {
        for (Vertex v = 0; v < in.matrix.rows(); ++v) subset.push_back(v);
      }
      Json inputs = in.echo;
      inputs["modulus"] = ell;
      inputs["subset"] = subset;
      inputs["r"] = r_value;
      const LinearSystem system(in.matrix);
      Json result;
      result["toggling_numbers"] = to_json(toggling_numbers(system, subset, r_value));
      result["minimal_nonempty_r"] = minimal_nonempty_r(system, subset);
      emit(make_report("toggling", inputs, result, seed), out_path);
      return 0;
    }

    if (*max) {
      SearchOptions options;
      options.complement_cap = cap;
      options.prune = !no_prune;
      options.jobs = jobs;
      const ExtremalReport report = max_size_search(order, ell, options);
      if (csv) {
        std::cout << csv_header() << "\n" << csv_row(report) << "\n";
      } else {
        Json inputs;
        inputs["n"] = order;
        inputs["modulus"] = ell;
        inputs["bounded"] = cap ? Json(*cap) : Json(nullptr);
        inputs["prune"] = options.prune;
        emit(make_report("maxsize", inputs, to_json(report, timing), seed,
                         timing ? std::optional<double>(report.elapsed_ms) : std::nullopt),
             out_path);
      }
      return report.max_size ? 0 : 1;
    }

    if (*ver) {
      if (list) {
        for (const auto& name : suite_names()) std::cout << name << "\n";
        return 0;
      }
      if (suite != "all" && !is_suite(suite)) throw UsageError("unknown suite: " + suite);
      VerifyOptions options;
      options.seed = seed;
      options.jobs = jobs;
      Json results = Json::array();
      bool all_passed = true;
      for (const auto& name : suite == "all" ? suite_names() : std::vector<std::string>{suite}) {
        const SuiteResult r = run_suite(name, options);
        std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, "
                  << r.failures << " failures)\n";
        all_passed = all_passed && r.passed();
        results.push_back(to_json(r));
      }
      Json inputs;
      inputs["suite"] = suite;
      Json result;
      result["passed"] = all_passed;
      result["suites"] = std::move(results);
      emit(make_report("verify", inputs, result, seed), out_path);
      return all_passed ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "drgtk/drgtk.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct LoadedGraph {
  drgtk::Graph graph;
  std::string hash;
};

LoadedGraph load(const std::string& path) {
  const std::string text = drgtk::read_file(path);
  return {drgtk::parse_graph_text(text), drgtk::fnv1a64(text)};
}

void emit(drgtk::ReportDocument doc, std::chrono::steady_clock::time_point start, bool timing) {
  if (timing) doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << doc.to_json().dump(2) << '\n';
}

drgtk::Json drg_verdict(const drgtk::Graph& g) {
  const drgtk::DistanceMatrix dist(g);
  drgtk::Json j{{"order", g.order()}, {"edges", g.size()}, {"connected", dist.connected()}};
  if (!dist.connected() || g.order() < 2) {
    j["distance_regular"] = false;
    j["reason"] = g.order() < 2 ? "fewer than two vertices" : "disconnected";
    return j;
  }
  j["diameter"] = dist.diameter();
  const auto array = drgtk::intersection_array(g);
  j["distance_regular"] = array.ok();
  if (array)
    j["intersection_array"] = drgtk::to_json(*array);
  else
    j["witness"] = drgtk::to_json(array.error());
  return j;
}

drgtk::Json terwilliger_verdict(const drgtk::Graph& g) {
  const drgtk::DistanceMatrix dist(g);
  if (g.order() == 0 || !dist.connected() || g.is_complete())
    return drgtk::Json{{"is_terwilliger", false}, {"reason", g.is_complete() ? "complete graph" : "disconnected or empty"}};
  return drgtk::to_json(drgtk::is_terwilliger(g));
}

drgtk::Json kp_verdict(const drgtk::Graph& g) {
  const drgtk::DistanceMatrix dist(g);
  if (g.order() == 0 || !dist.connected() || g.is_complete())
    return drgtk::Json{{"amply_regular", false}, {"reason", g.is_complete() ? "complete graph" : "disconnected or empty"}};
  const auto report = drgtk::kp_check(g);
  if (!report) return drgtk::Json{{"amply_regular", false}, {"reason", report.error().failure.describe()}};
  drgtk::Json j = drgtk::to_json(*report);
  j["amply_regular"] = true;
  return j;
}

int verify_paper(bool timing) {
  const auto start = std::chrono::steady_clock::now();
  const auto lines = drgtk::verify_expectations();
  std::size_t failed = 0;
  for (const auto& line : lines) {
    std::printf("%-4s  %-48s %s\n", line.pass ? "ok" : "FAIL", line.name.c_str(), line.detail.c_str());
    if (!line.pass) ++failed;
  }
  std::printf("%zu checks, %zu failed", lines.size(), failed);
  if (timing)
    std::printf(", %.2f s", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  std::printf("\n");
  return failed == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-regular / Terwilliger graph toolkit"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit the timing block from reports");

  std::string name, output;
  auto* construct = app.add_subcommand("construct", "Write a named graph as an edge list");
  construct->add_option("NAME", name,
                        "pentagon | petersen | icosahedron | hoffman_singleton | doro | conway_smith | "
                        "complete(n) | disjoint_cliques(r,s)")
      ->required();
  construct->add_option("-o,--output", output, "Output file (default: stdout)");

  std::string file;
  auto* check_drg = app.add_subcommand("check-drg", "Intersection array or a witness against distance-regularity");
  check_drg->add_option("FILE", file, "Edge list or graph6 file")->required();
  auto* check_tw = app.add_subcommand("check-terwilliger", "Terwilliger verdict");
  check_tw->add_option("FILE", file, "Edge list or graph6 file")->required();
  auto* kp = app.add_subcommand("kp", "Coclique parameter c and the mu-bound report");
  kp->add_option("FILE", file, "Edge list or graph6 file")->required();

  std::int64_t max_k = 60;
  bool every_level = false, show_rejected = false;
  auto* scan = app.add_subcommand("scan", "Parameter descent scan");
  scan->add_option("--max-k", max_k, "Largest valency to scan")->required()->check(CLI::NonNegativeNumber);
  scan->add_flag("--gap-at-every-level", every_level, "Also require the quotient gap inequality below the top");
  scan->add_flag("--show-rejected", show_rejected, "Include pruned descent chains with their reasons");

  auto* verify = app.add_subcommand("verify-paper", "Recompute the bundled expected-results table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  const bool timing = !no_timing;
  try {
    if (*construct) {
      const auto id = drgtk::NamedGraph::parse(name);
      const auto g = drgtk::build(id);
      if (output.empty())
        std::cout << drgtk::to_edge_list(g, id.name());
      else
        drgtk::write_edge_list_file(output, g, id.name());
      return 0;
    }
    if (*verify) return verify_paper(timing);
    if (*scan) {
      drgtk::ScanOptions options;
      options.gap_at_every_level = every_level;
      const auto result = drgtk::tower_scan(max_k, options);
      drgtk::ReportDocument doc;
      doc.command = "scan";
      doc.input_name = "max_k=" + std::to_string(max_k);
      drgtk::Json towers = drgtk::Json::array();
      for (const auto& t : result.survivors) towers.push_back(drgtk::to_json(t));
      doc.verdicts["candidates"] = result.candidates;
      doc.verdicts["towers"] = towers;
      doc.verdicts["rejected_count"] = result.rejected.size();
      if (show_rejected) {
        drgtk::Json rejected = drgtk::Json::array();
        for (const auto& r : result.rejected) {
          auto j = drgtk::to_json(r.tower);
          j["status"] = "rejected";
          j["reason"] = drgtk::to_string(r.reason);
          rejected.push_back(j);
        }
        doc.verdicts["rejected"] = rejected;
      }
      emit(std::move(doc), start, timing);
      return 0;
    }

    const auto loaded = load(file);
    drgtk::ReportDocument doc;
    doc.input_name = file;
    doc.input_hash = loaded.hash;
    if (*check_drg) {
      doc.command = "check-drg";
      doc.verdicts = drg_verdict(loaded.graph);
    } else if (*check_tw) {
      doc.command = "check-terwilliger";
      doc.verdicts = terwilliger_verdict(loaded.graph);
    } else {
      doc.command = "kp";
      doc.verdicts = kp_verdict(loaded.graph);
    }
    emit(std::move(doc), start, timing);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "drgtk: " << e.what() << '\n';
    return kExitUsage;
  }
}

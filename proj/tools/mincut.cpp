// Copyright 2026 The mincut Authors.
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


// mincut: replays update streams against the dynamic minimum cut, generates
// planted instances and exposes the reference oracles.
//
//   mincut run --graph G --stream S [--decomposer trivial|conductance]
//              [--lambda-cap K] [--audit full|sampled|off] [--report out.json]
//   mincut run --weighted --graph G --stream S --epsilon E --wmin L --wmax U
//   mincut gen-planted --n N --lambda K --seed X --graph G --stream S
//   mincut oracle mincut --graph G
//   mincut oracle cuts --graph G --vertex v --lambda-max K --nu V
//
// run exits 0 iff no audited step disagrees with the oracle.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "mincut/oracle.hpp"
#include "mincut/params.hpp"
#include "mincut/replay.hpp"
#include "mincut/streams.hpp"

namespace {

using namespace mincut;

void print_set(const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << s[i];
  std::cout << '\n';
}

int run(const std::string& graph_path, const std::string& stream_path,
        const std::string& report_path, bool weighted, ReplayConfig config) {
  const std::vector<UpdateBatch> stream =
      stream_path.empty() ? std::vector<UpdateBatch>{} : load_stream_file(stream_path);
  RunReport report;
  if (weighted) {
    int n = 0;
    const std::vector<WeightedEdge> edges = load_weighted_graph_file(graph_path, &n);
    report = replay_weighted(n, edges, stream, config);
  } else {
    report = replay(load_graph_file(graph_path), stream, config);
  }
  const nlohmann::json j = to_json(report);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << j.dump(1) << '\n';
  }
  const StepRecord& last = report.records.back();
  std::cout << "steps " << report.records.size() - 1 << " updates " << report.updates
            << " audited " << report.audited << " disagreements " << report.disagreements
            << " final " << last.kind << ' ' << last.value << " digest "
            << j["summary"]["digest"].get<std::string>() << '\n';
  return report.disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic minimum cut toolkit"};
  app.require_subcommand(1);

  std::string graph_path, stream_path, report_path, decomposer = "trivial", audit = "sampled";
  int64_t lambda_cap = 32;
  int audit_every = 10;
  bool weighted = false, no_timing = false;
  double epsilon = 0.5, wmin = 1.0, wmax = 1.0;
  uint64_t seed = 1;
  auto add_run = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "graph file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--stream", stream_path, "update stream file")->check(CLI::ExistingFile);
    cmd->add_option("--decomposer", decomposer, "expander decomposer")
        ->check(CLI::IsMember({"trivial", "conductance"}));
    cmd->add_option("--lambda-cap", lambda_cap, "largest cut value tracked exactly");
    cmd->add_option("--audit", audit, "oracle audit mode")
        ->check(CLI::IsMember({"full", "sampled", "off"}));
    cmd->add_option("--audit-every", audit_every, "sampled audit period");
    cmd->add_option("--report", report_path, "JSON report path");
    cmd->add_flag("--no-timing", no_timing, "omit wall-clock timings from the report");
    cmd->add_flag("--weighted", weighted, "weighted graph and stream");
    cmd->add_option("--epsilon", epsilon, "approximation parameter (weighted)");
    cmd->add_option("--wmin", wmin, "smallest allowed weight (weighted)");
    cmd->add_option("--wmax", wmax, "largest allowed weight (weighted)");
    cmd->add_option("--seed", seed, "sampling seed (weighted)");
  };
  CLI::App* run_cmd = app.add_subcommand("run", "replay a stream with audits");
  add_run(run_cmd);
  CLI::App* replay_cmd = app.add_subcommand("replay", "alias of run");
  add_run(replay_cmd);

  int n = 20, steps = 200, batch_every = 0;
  int64_t lambda = 3;
  bool monotone = false;
  std::string out_graph, out_stream;
  CLI::App* gen = app.add_subcommand("gen-planted", "planted minimum cut instance");
  gen->add_option("--n", n, "vertices")->check(CLI::Range(4, 1 << 20));
  gen->add_option("--lambda", lambda, "planted cut value")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--steps", steps, "stream length")->check(CLI::NonNegativeNumber);
  gen->add_option("--batch-every", batch_every, "every k-th step is a batch");
  gen->add_flag("--monotone", monotone, "insert-only stream");
  gen->add_option("--graph", out_graph, "graph output")->required();
  gen->add_option("--stream", out_stream, "stream output")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "reference computations");
  oracle->require_subcommand(1);
  CLI::App* omin = oracle->add_subcommand("mincut", "Stoer-Wagner global minimum cut");
  omin->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  int vertex = 0;
  int64_t lambda_max = 1, nu = 1;
  bool any_set = false;
  CLI::App* ocuts = oracle->add_subcommand("cuts", "enumerate local cuts at a vertex");
  ocuts->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  ocuts->add_option("--vertex", vertex)->required();
  ocuts->add_option("--lambda-max", lambda_max)->required();
  ocuts->add_option("--nu", nu)->required();
  ocuts->add_flag("--any", any_set, "include disconnected sets (n <= 24)");

  CLI11_PARSE(app, argc, argv);

  try {
    for (CLI::App* cmd : {run_cmd, replay_cmd}) {
      if (!cmd->parsed()) continue;
      ReplayConfig config;
      config.driver.decomposer = decomposer;
      config.driver.lambda_cap = lambda_cap;
      config.audit = audit == "full"  ? ReplayConfig::Audit::kFull
                     : audit == "off" ? ReplayConfig::Audit::kOff
                                      : ReplayConfig::Audit::kSampled;
      config.audit_every = audit_every;
      config.timing = !no_timing;
      config.weighted.epsilon = epsilon;
      config.weighted.wmin = wmin;
      config.weighted.wmax = wmax;
      config.weighted.seed = seed;
      return run(graph_path, stream_path, report_path, weighted, config);
    }
    if (gen->parsed()) {
      const EdgeList g = planted_graph(n, lambda, seed);
      const auto stream =
          monotone ? monotone_stream(g, steps, seed + 1) : planted_stream(g, steps, seed + 1, batch_every);
      std::ofstream gout(out_graph), sout(out_stream);
      if (!gout || !sout) throw std::runtime_error("cannot write output files");
      write_graph(gout, g);
      write_stream(sout, stream);
      std::cout << "n " << g.n << " m " << g.m() << " lambda " << global_min_cut(g).value << '\n';
      return 0;
    }
    if (omin->parsed()) {
      const OracleResult r = global_min_cut(load_graph_file(graph_path));
      std::cout << r.value << '\n';
      print_set(r.witness);
      return 0;
    }
    if (ocuts->parsed()) {
      const EdgeList g = load_graph_file(graph_path);
      if (vertex < 0 || vertex >= g.n) throw std::runtime_error("vertex out of range");
      for (const VertexSet& s : enumerate_cuts(g, vertex, lambda_max, nu, !any_set)) print_set(s);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "mincut: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

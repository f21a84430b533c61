// Copyright 2026 The Arrival Authors
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

// arrival: command-line front end.
//
// Exit status: 0 decided (or input accepted), 1 invalid input or refusal,
// 2 certificate failure, decider disagreement or internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arrival/bench.h"
#include "arrival/core.h"
#include "arrival/decompose.h"
#include "arrival/errors.h"
#include "arrival/flows.h"
#include "arrival/generate.h"
#include "arrival/report.h"
#include "arrival/simulate.h"
#include "arrival/solver.h"
#include "arrival/tarski.h"

namespace {

using namespace arrival;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInternal = 2;

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ArrivalError("cannot write '" + path + "'");
  out << text;
}

ArrivalInstance load_instance(const std::string& path) { return parse_instance(read_text(path)); }

SwitchGraph load_terminating(const std::string& path) {
  SwitchGraph graph(load_instance(path));
  if (!is_terminating(graph)) throw ValidationError("instance is not terminating");
  return graph;
}

std::string join(std::span<const std::int32_t> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(part);
  return parts;
}

std::vector<std::int32_t> parse_set(const std::string& text) {
  std::vector<std::int32_t> set;
  for (const auto& part : split_csv(text)) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      set.push_back(v);
    } catch (const std::logic_error&) {
      throw ValidationError("bad vertex '" + part + "' in --set");
    }
  }
  return set;
}

std::vector<BigInt> parse_weights(const std::string& text) {
  std::vector<BigInt> weights;
  for (const auto& part : split_csv(text)) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("bad weight '" + part + "' in --weights");
    }
    weights.emplace_back(part);
  }
  return weights;
}

void print_decision(const Decision& d, bool json) {
  if (json) {
    std::cout << to_json(d) << '\n';
    return;
  }
  const auto& s = d.stats;
  std::cout << "method " << to_string(d.method) << ": destination " << to_token(d.destination)
            << '\n';
  if (d.method != Method::kSimulation) {
    std::cout << "  set {" << join(d.set) << "} fixed point " << to_string(d.fixed_point)
              << " via " << to_string(d.tarski) << '\n';
  }
  if (d.method == Method::kSimulation) {
    std::cout << "  traversals " << s.edge_traversals << " <= " << s.traversal_bound;
  } else {
    // The bound applies to each multi-train run's dispatch traversals.
    std::cout << "  traversals " << s.edge_traversals << " (per run <= " << s.traversal_bound
              << ")";
  }
  std::cout << (s.traversal_bound_ok ? " ok" : " VIOLATED") << '\n';
  std::cout << "  iterations " << s.loop_iterations << " (max per evaluation "
            << s.max_iterations_per_evaluation << " <= " << s.iteration_bound
            << (s.iteration_bound_ok ? " ok" : " VIOLATED") << ")\n";
  if (d.method != Method::kSimulation) {
    std::cout << "  D evaluations " << s.d_evaluations << " <= " << s.evaluation_bound
              << (s.evaluation_bound_ok ? " ok" : " VIOLATED") << '\n';
  }
}

struct Options {
  std::string input = "-";
  bool json = false;
  std::string profile_path;
  std::string trace_path;
  std::string set;
  std::string weights;
  std::string scheduler = "greedy";
  std::string method = "sim";
  std::string phi;
  int k_max = 6;
  std::string tarski = "recursive-binary";
  std::string certificate_path;
  bool concurrent = false;
  std::string family = "random";
  int n = 8;
  std::uint64_t seed = 0;
  std::string output = "-";
  std::vector<std::string> bench_inputs;
  bool default_corpus = false;
  std::string methods = "sim,subexp,fvs";
  std::size_t threads = 1;
};

int cmd_validate(const Options& o) {
  const auto instance = load_instance(o.input);
  const SwitchGraph graph(instance);
  const bool terminating = is_terminating(graph);
  std::cout << "n " << instance.num_vertices() << ", origin " << to_token(instance.origin)
            << ", " << graph.num_edges() << " edge slots, "
            << (terminating ? "terminating" : "NOT terminating") << '\n';
  return terminating ? kOk : kInvalid;
}

int cmd_run(const Options& o) {
  const auto graph = load_terminating(o.input);
  std::vector<TraceRow> trace;
  const auto run = run_procedure(graph, std::nullopt, o.trace_path.empty() ? nullptr : &trace);
  if (!o.trace_path.empty()) write_text(o.trace_path, write_trace_csv(trace));
  if (!o.profile_path.empty()) write_text(o.profile_path, write_flow_csv(graph, run.profile));
  if (o.json) {
    std::cout << to_json(run) << '\n';
  } else {
    std::cout << "destination " << to_token(run.destination) << ", " << run.proper_traversals
              << " proper traversals\n";
  }
  return kOk;
}

int cmd_multi_run(const Options& o) {
  const auto graph = load_terminating(o.input);
  const auto set = parse_set(o.set);
  const auto weights = parse_weights(o.weights);
  std::vector<TraceRow> trace;
  MultiRunHooks hooks;
  if (!o.trace_path.empty()) hooks.trace = &trace;
  const auto run = multi_run(graph, set, weights, parse_scheduler(o.scheduler), hooks);
  if (!o.trace_path.empty()) write_text(o.trace_path, write_trace_csv(trace));
  if (!o.profile_path.empty()) write_text(o.profile_path, write_flow_csv(graph, run.profile));
  if (o.json) {
    std::cout << to_json(run, set) << '\n';
  } else {
    std::cout << "arrivals d " << run.arrivals_d << ", dbar " << run.arrivals_dbar
              << ", inflows " << to_string(run.inflows) << ", " << run.iterations
              << " iterations\n";
  }
  return kOk;
}

int cmd_decide(const Options& o) {
  const auto graph = load_terminating(o.input);
  SubexpOptions subexp;
  if (!o.phi.empty()) subexp.phi = Rational::parse(o.phi);
  subexp.tarski = parse_tarski_method(o.tarski);
  FvsOptions fvs;
  fvs.k_max = o.k_max;
  fvs.tarski = subexp.tarski;

  if (o.method == "all") {
    const auto report = decide_all(graph, {subexp, fvs, o.concurrent});
    for (const auto& outcome : report.outcomes) {
      if (outcome.decision) {
        print_decision(*outcome.decision, o.json);
      } else if (o.json) {
        std::cout << to_json(outcome) << '\n';
      } else {
        std::cout << "method " << to_string(outcome.method) << ": refused (" << outcome.refusal
                  << ")\n";
      }
    }
    if (!o.json) std::cout << "agreed on " << to_token(report.destination) << '\n';
    if (!o.certificate_path.empty()) {
      write_text(o.certificate_path,
                 write_flow_csv(graph, report.outcomes.front().decision->certificate));
    }
    return kOk;
  }

  Decision decision;
  switch (parse_method(o.method)) {
    case Method::kSimulation:
      decision = decide_by_simulation(graph);
      break;
    case Method::kSubexponential:
      decision = decide_subexponential(graph, subexp);
      break;
    case Method::kFvs:
      decision = decide_fvs(graph, fvs);
      break;
  }
  print_decision(decision, o.json);
  if (!o.certificate_path.empty()) {
    write_text(o.certificate_path, write_flow_csv(graph, decision.certificate));
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const SwitchGraph graph(load_instance(o.input));
  const auto flow = read_flow_csv(graph, read_text(o.certificate_path));
  const auto verdict = check_switching_flow(graph, flow);
  std::cout << to_string(verdict) << '\n';
  return verdict.valid() ? kOk : kInvalid;
}

int cmd_phi_set(const Options& o) {
  const auto graph = load_terminating(o.input);
  const Rational phi = o.phi.empty() ? default_phi(graph.num_vertices()) : Rational::parse(o.phi);
  const auto s = compute_phi_set(graph, phi);
  if (o.json) {
    std::cout << to_json(s) << '\n';
  } else {
    std::cout << "phi " << to_string(s.phi) << ": S = {" << join(s.vertices) << "}\n"
              << "  |S| " << s.vertices.size() << " <= " << s.size_bound << '\n'
              << "  radius " << s.certified_radius << " <= " << s.radius_bound << '\n';
  }
  return kOk;
}

int cmd_fvs(const Options& o) {
  const SwitchGraph graph(load_instance(o.input));
  const auto fvs = feedback_vertex_set(graph, o.k_max);
  if (!fvs) {
    throw FvsRefusal("no feedback vertex set with at most " + std::to_string(o.k_max) +
                     " vertices");
  }
  if (o.json) {
    std::cout << to_json(*fvs) << '\n';
  } else {
    std::cout << "S = {" << join(fvs->vertices) << "}\n"
              << "  topological order of V \\ S: " << join(fvs->topological_order) << '\n';
  }
  return kOk;
}

int cmd_gen(const Options& o) {
  const auto instance = generate({parse_family(o.family), o.n, o.seed});
  write_text(o.output, serialize_instance(instance));
  return kOk;
}

int cmd_bench(const Options& o) {
  std::vector<BenchItem> corpus;
  if (o.default_corpus) corpus = default_corpus();
  for (const auto& path : o.bench_inputs) corpus.push_back({path, load_instance(path)});
  BenchOptions options;
  options.methods.clear();
  for (const auto& m : split_csv(o.methods)) options.methods.push_back(parse_method(m));
  options.threads = o.threads;
  std::ostringstream csv;
  write_bench_csv(csv, corpus, options);
  write_text(o.output, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide ARRIVAL instances and check switching-flow certificates."};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;

  const auto add = [&](const std::string& name, const std::string& help,
                       int (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&handler, fn]() { handler = fn; });
    return sub;
  };
  const auto with_input = [&](CLI::App* sub) {
    sub->add_option("instance", o.input, "Instance file, '-' for stdin")->required();
    return sub;
  };

  with_input(add("validate", "Parse an instance and check it terminates", cmd_validate));

  auto* run = with_input(add("run", "Simulate the single-train run", cmd_run));
  run->add_option("--profile", o.profile_path, "Write the run profile CSV");
  run->add_option("--trace", o.trace_path, "Write the step trace CSV");
  run->add_flag("--json", o.json, "JSON-lines summary");

  auto* multi = with_input(add("multi-run", "Run the multi-train procedure", cmd_multi_run));
  multi->add_option("--set", o.set, "Comma-separated vertex set S");
  multi->add_option("--weights", o.weights, "Comma-separated train counts for S");
  multi->add_option("--scheduler", o.scheduler,
                    "greedy, round-robin, topological, single-step or random[:seed]");
  multi->add_option("--profile", o.profile_path, "Write the traversal profile CSV");
  multi->add_option("--trace", o.trace_path, "Write the dispatch trace CSV");
  multi->add_flag("--json", o.json, "JSON-lines summary");

  auto* decide = with_input(add("decide", "Decide the destination", cmd_decide));
  decide->add_option("--method", o.method, "sim, subexp, fvs or all")
      ->check(CLI::IsMember({"sim", "subexp", "fvs", "all"}));
  decide->add_option("--phi", o.phi, "phi for the subexponential route (p/q or decimal)");
  decide->add_option("--kmax", o.k_max, "Largest feedback vertex set to accept");
  decide->add_option("--tarski-method", o.tarski, "recursive-binary, kleene or exhaustive");
  decide->add_option("--certificate", o.certificate_path, "Write the certificate CSV");
  decide->add_flag("--concurrent", o.concurrent, "Run the deciders of --method all in parallel");
  decide->add_flag("--json", o.json, "JSON-lines summary");

  auto* verify = with_input(add("verify", "Check a certificate CSV", cmd_verify));
  verify->add_option("certificate", o.certificate_path, "Flow CSV")->required();

  auto* phi = with_input(add("phi-set", "Compute a phi-set", cmd_phi_set));
  phi->add_option("--phi", o.phi, "p/q or decimal in (0, 1)");
  phi->add_flag("--json", o.json, "JSON-lines summary");

  auto* fvs = with_input(add("fvs", "Compute a minimum feedback vertex set", cmd_fvs));
  fvs->add_option("--kmax", o.k_max, "Largest set to search for");
  fvs->add_flag("--json", o.json, "JSON-lines summary");

  auto* gen = add("gen", "Generate an instance", cmd_gen);
  gen->add_option("--family", o.family, "random, chain, counter or grid");
  gen->add_option("--n", o.n, "Number of vertices")->required();
  gen->add_option("--seed", o.seed, "Seed for the random family");
  gen->add_option("-o,--output", o.output, "Output path, '-' for stdout");

  auto* bench = add("bench", "Benchmark deciders and emit CSV", cmd_bench);
  bench->add_option("instances", o.bench_inputs, "Instance files");
  bench->add_flag("--default-corpus", o.default_corpus, "Add every family at n = 1..12");
  bench->add_option("--methods", o.methods, "Comma-separated methods");
  bench->add_option("--threads", o.threads, "Worker threads");
  bench->add_option("-o,--output", o.output, "Output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    return handler(o);
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const FvsRefusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}

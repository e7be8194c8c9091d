// Copyright 2026 The Authors.
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

#include "falk/cli.h"

#include <algorithm>
#include <exception>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "falk/census.h"
#include "falk/error.h"
#include "falk/generator.h"
#include "falk/graph_io.h"
#include "falk/report.h"

namespace falk {

int RunCompute(const std::string& path, bool json, RankBackend backend,
               std::ostream& out, std::ostream& err) {
  FalkReport report;
  try {
    report = BuildReport(LoadGraphFile(path), backend);
  } catch (const FalkError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (json) {
    out << ReportToJson(report).dump(2) << "\n";
  } else {
    out << RenderText(report);
  }
  if (report.agreement.has_value() && !*report.agreement) {
    return kExitDisagreement;
  }
  return kExitOk;
}

int RunCensus(const std::string& path, bool json, std::ostream& out,
              std::ostream& err) {
  Census c;
  try {
    c = ComputeCensus(LoadGraphFile(path));
  } catch (const FalkError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (json) {
    nlohmann::ordered_json j;
    j["census"] = CensusToJson(c);
    j["phi3_formula"] = Phi3Formula(c);
    out << j.dump(2) << "\n";
  } else {
    out << "k3 " << c.k3 << "\nk4 " << c.k4 << "\nd3 " << c.d3 << "\nd21 "
        << c.d21 << "\nk22 " << c.k22 << "\nk33 " << c.k33 << "\ng_circ "
        << c.g_circ << "\nd31 " << c.d31 << "\nphi_3 " << Phi3Formula(c)
        << "\n";
  }
  return kExitOk;
}

namespace {

struct SampleResult {
  std::int64_t oracle = 0;
  std::int64_t formula = 0;
  std::int64_t rank_i32 = 0;
  std::int64_t lemma = 0;
};

SampleResult Evaluate(const SignedGraph& g, RankBackend backend) {
  const FalkReport r = BuildReport(g, backend);
  return {r.phi3_oracle, *r.phi3_formula, r.dim_I3_2,
          DimI32Formula(g, *r.census)};
}

}  // namespace

VerifySummary RunVerify(const VerifyOptions& opts, RankBackend backend,
                        std::ostream& out) {
  std::vector<SignedGraph> graphs;
  if (opts.exhaustive) {
    graphs = EnumerateAll(opts.ell, 2 * opts.ell * opts.ell);
  } else {
    GenConfig cfg;
    cfg.ell = opts.ell;
    cfg.edge_prob_pos = opts.pos;
    cfg.edge_prob_neg = opts.neg;
    cfg.loop_prob = opts.loop;
    cfg.seed = opts.seed;
    cfg.samples = opts.samples;
    graphs = RandomSamples(cfg);
  }

  std::vector<SampleResult> results(graphs.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<size_t>(
      opts.threads > 0 ? opts.threads : hw, std::max<size_t>(graphs.size(), 1));
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t k = w; k < graphs.size(); k += workers) {
          results[k] = Evaluate(graphs[k], backend);
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  VerifySummary summary;
  std::optional<size_t> first_bad;
  for (size_t k = 0; k < graphs.size(); ++k) {
    ++summary.checked;
    if (results[k].oracle == results[k].formula) {
      ++summary.phi3_agree;
    } else if (!first_bad) {
      first_bad = k;
    }
    if (results[k].rank_i32 == results[k].lemma) ++summary.lemma_agree;
  }
  out << "mode        " << (opts.exhaustive ? "exhaustive" : "random")
      << "\nvertices    " << opts.ell;
  if (!opts.exhaustive) {
    out << "\nseed        " << opts.seed << "\nprobs       +" << opts.pos
        << " -" << opts.neg << " o" << opts.loop;
  }
  out << "\nphi_3       " << summary.phi3_agree << "/" << summary.checked
      << " agree\ndim I_2^3   " << summary.lemma_agree << "/"
      << summary.checked << " match the closed form\n";
  if (first_bad) {
    const SampleResult& r = results[*first_bad];
    out << "FAIL: sample " << *first_bad << " oracle=" << r.oracle
        << " formula=" << r.formula << "\n"
        << SerializeGraph(graphs[*first_bad]);
  } else {
    out << "PASS\n";
  }
  return summary;
}

int RunSwitch(const std::string& path, const std::string& sigma,
              std::ostream& out, std::ostream& err) {
  try {
    const SignedGraph g = LoadGraphFile(path);
    const SwitchingFunction s = SwitchingFunction::Parse(sigma);
    out << SerializeGraph(Switch(g, s));
  } catch (const FalkError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Falk invariant phi_3 of signed graphic arrangements"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  auto* compute = app.add_subcommand(
      "compute", "phi_3 by Falk's rank formula and by the subgraph census");
  compute->add_option("file", path, "graph file")->required();
  compute->add_flag("--json", json, "JSON output");

  auto* census = app.add_subcommand("census", "subgraph census only");
  census->add_option("file", path, "graph file")->required();
  census->add_flag("--json", json, "JSON output");

  VerifyOptions vopts;
  auto* verify = app.add_subcommand(
      "verify", "cross-check both phi_3 computations on generated graphs");
  verify->add_option("--vertices", vopts.ell, "vertex count")
      ->required()
      ->check(CLI::Range(1, 64));
  verify->add_option("--samples", vopts.samples, "random samples")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopts.seed, "generator seed");
  verify->add_flag("--exhaustive", vopts.exhaustive,
                   "every graph without B2 instead of random samples");
  verify->add_option("--pos", vopts.pos, "positive edge probability")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("--neg", vopts.neg, "negative edge probability")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("--loop", vopts.loop, "loop probability")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("--threads", vopts.threads, "worker threads (0: all)")
      ->check(CLI::NonNegativeNumber);

  std::string sigma;
  auto* sw = app.add_subcommand("switch", "apply a switching function");
  sw->add_option("file", path, "graph file")->required();
  sw->add_option("--sigma", sigma, "comma separated signs, one per vertex")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const RankBackend backend = RankBackendFromEnv();
    if (compute->parsed()) return RunCompute(path, json, backend, out, err);
    if (census->parsed()) return RunCensus(path, json, out, err);
    if (sw->parsed()) return RunSwitch(path, sigma, out, err);
    if (verify->parsed()) {
      if (vopts.exhaustive && vopts.ell > 4) {
        err << "error: --exhaustive supports at most 4 vertices\n";
        return kExitError;
      }
      const VerifySummary s = RunVerify(vopts, backend, out);
      return s.phi3_agree == s.checked ? kExitOk : kExitDisagreement;
    }
  } catch (const FalkError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace falk

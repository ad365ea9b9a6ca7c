// Copyright 2026 The Nomadic Authors
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

// Command-line front end: generate, verify, roots, search, prime-check,
// obstruction, export.
//
// Exit codes: 0 success/pass, 1 verification failed, 2 usage error,
// 3 budget exceeded, 4 exhausted without a solution.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nomadic/analysis.hpp"
#include "nomadic/constructors.hpp"
#include "nomadic/io.hpp"
#include "nomadic/search.hpp"
#include "nomadic/verifier.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitExhausted = 4;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    nomadic::write_text_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nomadic;

  CLI::App app{"Nomadic near-Hamiltonian decompositions of K*_n"};
  app.require_subcommand(1);

  int n = 0;
  int p = 0;
  std::string in_path;
  std::string out_path;

  auto* gen = app.add_subcommand("generate", "Build the construction for odd n or n = 0 mod 4");
  gen->add_option("--n", n, "Order")->required();
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Check a decomposition file");
  ver->add_option("--in", in_path, "Decomposition file")->required()->check(CLI::ExistingFile);

  auto* roots = app.add_subcommand("roots", "Find a collision-free root assignment");
  roots->add_option("--in", in_path, "Decomposition file")->required()->check(CLI::ExistingFile);
  roots->add_option("--out", out_path, "Output file (default stdout)");

  double budget = 60.0;
  unsigned workers = 1;
  std::string checkpoint_path;
  std::string resume_path;
  std::string order_name = "time-major";
  std::uint64_t node_limit = 0;
  bool verbose = false;
  bool no_time_symmetry = false;
  auto* search = app.add_subcommand("search", "Exhaustive search for a nomadic near-Hamiltonian decomposition");
  search->add_option("--n", n, "Order")->required();
  search->add_option("--budget", budget, "Wall-clock budget in seconds");
  search->add_option("--workers", workers, "Worker threads");
  search->add_option("--checkpoint", checkpoint_path, "Write the open frontier here if the budget runs out");
  search->add_option("--resume", resume_path, "Resume from a frontier file")->check(CLI::ExistingFile);
  search->add_option("--order", order_name, "Fill order")->check(CLI::IsMember({"time-major", "row-major"}));
  search->add_option("--node-limit", node_limit, "Stop after this many nodes");
  search->add_flag("--verbose", verbose, "JSON progress lines on stderr");
  search->add_flag("--no-time-symmetry", no_time_symmetry, "Disable time-shift symmetry breaking");
  search->add_option("--out", out_path, "Certificate output file (default stdout)");

  auto* prime = app.add_subcommand("prime-check", "Show the uniform-length decomposition of K*_p is never nomadic");
  prime->add_option("--p", p, "Prime order")->required();

  auto* obstruction = app.add_subcommand("obstruction", "Even-order closure obstruction");
  obstruction->add_option("--n", n, "Order")->required();

  std::string format_name;
  std::optional<std::size_t> cycle;
  bool counterclockwise = false;
  auto* exp = app.add_subcommand("export", "Export DOT or SVG");
  exp->add_option("--in", in_path, "Decomposition file")->required()->check(CLI::ExistingFile);
  exp->add_option("--format", format_name, "dot or svg")->required();
  exp->add_option("--cycle", cycle, "Cycle to draw (svg)");
  exp->add_option("--out", out_path, "Output file")->required();
  exp->add_flag("--counterclockwise", counterclockwise, "Positive labels counterclockwise");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      if (n >= kMinOrder && n % 4 == 2) {
        std::cerr << "n = " << n
                  << " is 2 mod 4: no construction is known and existence is "
                     "open; use 'search' to explore it\n";
        return kExitUsage;
      }
      emit(out_path, serialize(generate(n)));
      return kExitPass;
    }

    if (*ver) {
      const auto inst = read_instance_file(in_path);
      const auto report = full_verify(inst.decomposition,
                                      inst.schedule.value_or(NomadSchedule{}));
      std::cout << report.summary();
      return report.passed() ? kExitPass : kExitFail;
    }

    if (*roots) {
      auto inst = read_instance_file(in_path);
      const auto found = find_roots(inst.decomposition);
      if (!found) {
        std::cerr << "no collision-free root assignment exists\n";
        return kExitFail;
      }
      inst.schedule = *found;
      emit(out_path, serialize(inst));
      return kExitPass;
    }

    if (*search) {
      SearchOptions opt;
      opt.budget_seconds = budget;
      opt.workers = workers;
      opt.order = order_name == "row-major" ? FillOrder::kRowMajor : FillOrder::kTimeMajor;
      opt.break_time_symmetry = !no_time_symmetry;
      if (node_limit > 0) opt.node_limit = node_limit;
      if (!resume_path.empty()) opt.resume = parse_frontier(read_text_file(resume_path));
      if (verbose) opt.progress = &std::cerr;
      const auto outcome = search_nomadic_decomposition(n, opt);
      std::cerr << "status=" << to_string(outcome.status)
                << " nodes=" << outcome.nodes_explored
                << " elapsed=" << outcome.elapsed.count() << "s\n";
      switch (outcome.status) {
        case SearchStatus::kFound:
          emit(out_path, serialize(*outcome.certificate));
          return kExitPass;
        case SearchStatus::kBudgetExceeded:
          if (!checkpoint_path.empty()) {
            write_text_file(checkpoint_path, serialize_frontier(outcome.frontier));
            std::cerr << "frontier of " << outcome.frontier.prefixes.size()
                      << " subtrees written to " << checkpoint_path << "\n";
          }
          return kExitBudget;
        case SearchStatus::kExhaustedNoSolution:
          return kExitExhausted;
      }
    }

    if (*prime) {
      if (!is_prime(p) || p < kMinOrder) {
        std::cerr << p << " is not a prime >= 3\n";
        return kExitUsage;
      }
      const auto ev = never_nomadic_evidence(p);
      const auto d = prime_uniform_decomposition(p);
      const bool no_roots = !find_roots(d).has_value();
      std::cout << "p=" << p << " pairs=" << ev.pairs_checked
                << " algebraic=" << (ev.algebraic ? "all-collide" : "FAIL")
                << " simulated=" << (ev.simulated ? "all-collide" : "FAIL")
                << " find_roots=" << (no_roots ? "none" : "FOUND") << "\n";
      return ev.algebraic && ev.simulated && no_roots ? kExitPass : kExitFail;
    }

    if (*obstruction) {
      const auto ob = even_closure_obstruction(n);
      std::cout << "n=" << n << " residue=" << ob.residue
                << " holds=" << (ob.holds ? "true" : "false");
      if (n <= 12) {
        const auto c = search_rs_cycle(n, DecompositionKind::kNearHamiltonian);
        std::cout << " rs_cycle=" << (c ? "found" : "none");
      }
      std::cout << "\n";
      return kExitPass;
    }

    if (*exp) {
      const auto inst = read_instance_file(in_path);
      SvgOptions svg;
      svg.clockwise = !counterclockwise;
      write_text_file(out_path, export_figure(inst, parse_figure_format(format_name), cycle, svg));
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::kPrecondition ? kExitFail : kExitUsage;
  }
  return kExitUsage;
}

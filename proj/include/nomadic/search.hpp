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

#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nomadic/core.hpp"

namespace nomadic {

/// Backtracking over per-cycle root indices with forward checking. Two
/// nomads on cycles of lengths a and b collide exactly for the root
/// differences r_i - r_j in a fixed set of residues mod gcd(a, b), so those
/// sets are precomputed per pair. Requires a valid partition and kind,
/// except that a single cycle always gets root 0.
std::optional<NomadSchedule> find_roots(const Decomposition& d);

/// A cycle from vertex 0 whose edge lengths are pairwise distinct and that
/// closes after n-1 (near-Hamiltonian) or n (Hamiltonian) steps.
std::optional<DirectedCycle> search_rs_cycle(int n, DecompositionKind kind);

// Nomad trajectories of a candidate near-Hamiltonian decomposition: row i is
// nomad i's position at times 0..L-1, L = n-1. Placement maintains column
// permutation, row distinctness, and global edge uniqueness incrementally.
class PositionMatrix {
 public:
  static constexpr int kMaxOrder = 32;
  using Mask = std::uint64_t;

  explicit PositionMatrix(int n);

  int order() const noexcept { return n_; }
  int period() const noexcept { return len_; }

  // Unassigned cells hold -1.
  int at(int row, int t) const { return cells_[index(row, t)]; }
  bool assigned(int row, int t) const { return at(row, t) >= 0; }

  // Vertices that may be placed at (row, t) without violating an invariant.
  Mask candidates(int row, int t) const;
  bool place(int row, int t, int v);
  // Must be called in reverse order of place().
  void unplace(int row, int t);

  bool column_complete(int t) const { return col_used_[static_cast<std::size_t>(t)] == full_; }
  bool complete() const;
  std::vector<int> column(int t) const;

  // Requires complete(); roots are all 0.
  Instance to_instance() const;

 private:
  std::size_t index(int row, int t) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(len_) +
           static_cast<std::size_t>(t);
  }
  int prev_time(int t) const { return t == 0 ? len_ - 1 : t - 1; }
  int next_time(int t) const { return t + 1 == len_ ? 0 : t + 1; }

  int n_;
  int len_;
  Mask full_;
  std::vector<int> cells_;
  std::vector<Mask> col_used_;
  std::vector<Mask> row_used_;
  std::vector<Mask> out_used_;  // out_used_[u] bit v: edge u->v taken
  std::vector<Mask> in_used_;   // in_used_[v] bit u: edge u->v taken
};

enum class SearchStatus { kFound, kExhaustedNoSolution, kBudgetExceeded };
enum class FillOrder { kTimeMajor, kRowMajor };

const char* to_string(SearchStatus status);
const char* to_string(FillOrder order);

// Lexicographically least permutation of each derangement cycle type, in
// increasing lexicographic order. These are the column-1 branches.
std::vector<std::vector<int>> canonical_transitions(int n);

// Open subtrees of an interrupted search. Each prefix lists the vertices of
// the cells after column 0 in fill order.
struct Frontier {
  int n = 0;
  FillOrder order = FillOrder::kTimeMajor;
  std::vector<std::vector<int>> prefixes;

  friend bool operator==(const Frontier&, const Frontier&) = default;
};

// Header line "# nomadic-frontier n=<n> order=<order>", then one
// comma-separated prefix per line.
std::string serialize_frontier(const Frontier& f);
Frontier parse_frontier(std::string_view text);

struct SearchOptions {
  double budget_seconds = std::numeric_limits<double>::infinity();
  std::optional<std::uint64_t> node_limit;
  unsigned workers = 1;
  FillOrder order = FillOrder::kTimeMajor;
  // Require the column-1 transition to have the least cycle type among all
  // transitions (time-shift and time-reversal symmetry).
  bool break_time_symmetry = true;
  // Resume these subtrees instead of starting from the root.
  std::optional<Frontier> resume;
  std::ostream* progress = nullptr;
  double progress_interval_seconds = 1.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhaustedNoSolution;
  std::optional<Instance> certificate;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
  Frontier frontier;  // non-empty only for kBudgetExceeded
  std::vector<std::uint64_t> depth_histogram;
};

SearchOutcome search_nomadic_decomposition(int n, const SearchOptions& options = {});

}  // namespace nomadic

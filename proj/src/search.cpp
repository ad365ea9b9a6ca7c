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

#include "nomadic/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "nomadic/verifier.hpp"

namespace nomadic {

// ---------------------------------------------------------------------------
// Root assignment

namespace {

struct RootSearch {
  std::size_t m;
  std::vector<std::size_t> len;
  // forbidden[i * m + j][x]: nomads i and j collide iff (r_i - r_j) mod g = x
  std::vector<std::vector<char>> forbidden;
  std::vector<std::vector<char>> alive;
  std::vector<std::size_t> alive_count;
  std::vector<std::int64_t> root;  // -1 when unassigned
  std::vector<std::pair<std::size_t, std::size_t>> trail;

  bool clashes(std::size_t i, std::size_t ri, std::size_t j, std::size_t rj) const {
    const auto& f = forbidden[i * m + j];
    const auto g = static_cast<std::int64_t>(f.size());
    const auto x = ((static_cast<std::int64_t>(ri) - static_cast<std::int64_t>(rj)) % g + g) % g;
    return f[static_cast<std::size_t>(x)] != 0;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      const auto [j, r] = trail.back();
      trail.pop_back();
      alive[j][r] = 1;
      ++alive_count[j];
    }
  }

  // Assigns var = value and filters the other domains; false on a wipeout.
  bool assign(std::size_t var, std::size_t value) {
    root[var] = static_cast<std::int64_t>(value);
    for (std::size_t j = 0; j < m; ++j) {
      if (root[j] >= 0) continue;
      for (std::size_t r = 0; r < len[j]; ++r) {
        if (alive[j][r] && clashes(var, value, j, r)) {
          alive[j][r] = 0;
          --alive_count[j];
          trail.emplace_back(j, r);
        }
      }
      if (alive_count[j] == 0) return false;
    }
    return true;
  }

  bool solve() {
    std::size_t var = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (root[j] < 0 && (var == m || alive_count[j] < alive_count[var])) var = j;
    }
    if (var == m) return true;
    for (std::size_t r = 0; r < len[var]; ++r) {
      if (!alive[var][r]) continue;
      const std::size_t mark = trail.size();
      if (assign(var, r) && solve()) return true;
      undo_to(mark);
      root[var] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<NomadSchedule> find_roots(const Decomposition& d) {
  // One nomad cannot collide with anything.
  if (d.cycles.size() == 1) return NomadSchedule::zeros(1);
  if (!verify_edge_partition(d).passed() || !verify_cycle_kind(d).passed()) {
    throw Error(ErrorKind::kPrecondition,
                "find_roots needs a valid edge partition of the declared kind");
  }
  RootSearch rs;
  rs.m = d.cycles.size();
  if (rs.m == 0) return NomadSchedule{};
  const auto un = static_cast<std::size_t>(d.n);
  for (const auto& c : d.cycles) rs.len.push_back(c.size());
  rs.forbidden.resize(rs.m * rs.m);
  for (std::size_t i = 0; i < rs.m; ++i) {
    for (std::size_t j = i + 1; j < rs.m; ++j) {
      const std::size_t g = std::gcd(rs.len[i], rs.len[j]);
      std::vector<std::int64_t> pos_j(un, -1);
      for (std::size_t b = 0; b < rs.len[j]; ++b) {
        pos_j[static_cast<std::size_t>(d.cycles[j].values()[b])] =
            static_cast<std::int64_t>(b);
      }
      std::vector<char> fij(g, 0), fji(g, 0);
      for (std::size_t a = 0; a < rs.len[i]; ++a) {
        const auto b = pos_j[static_cast<std::size_t>(d.cycles[i].values()[a])];
        if (b < 0) continue;
        const auto sg = static_cast<std::int64_t>(g);
        const auto x = ((static_cast<std::int64_t>(a) - b) % sg + sg) % sg;
        fij[static_cast<std::size_t>(x)] = 1;
        fji[static_cast<std::size_t>((sg - x) % sg)] = 1;
      }
      rs.forbidden[i * rs.m + j] = std::move(fij);
      rs.forbidden[j * rs.m + i] = std::move(fji);
    }
  }
  for (std::size_t j = 0; j < rs.m; ++j) {
    rs.alive.emplace_back(rs.len[j], 1);
    rs.alive_count.push_back(rs.len[j]);
  }
  rs.root.assign(rs.m, -1);
  // Shifting every root by the same amount shifts time, so cycle 0 is
  // pinned to root 0.
  if (!rs.assign(0, 0) || !rs.solve()) return std::nullopt;
  NomadSchedule s;
  for (auto r : rs.root) s.roots.push_back(static_cast<std::size_t>(r));
  return s;
}

// ---------------------------------------------------------------------------
// Single rotationally symmetric cycle

namespace {

bool rs_dfs(int n, std::size_t target, std::size_t depth, int at,
            std::uint64_t& used_lengths, std::uint64_t& visited,
            std::vector<int>& path) {
  if (depth + 1 == target) {
    const int last = mod(-at, n);
    return last != 0 && ((used_lengths >> last) & 1) == 0;
  }
  for (int l = 1; l < n; ++l) {
    if ((used_lengths >> l) & 1) continue;
    const int next = mod(at + l, n);
    if ((visited >> next) & 1) continue;
    used_lengths |= std::uint64_t{1} << l;
    visited |= std::uint64_t{1} << next;
    path.push_back(next);
    if (rs_dfs(n, target, depth + 1, next, used_lengths, visited, path)) return true;
    path.pop_back();
    visited &= ~(std::uint64_t{1} << next);
    used_lengths &= ~(std::uint64_t{1} << l);
  }
  return false;
}

}  // namespace

std::optional<DirectedCycle> search_rs_cycle(int n, DecompositionKind kind) {
  require_order(n);
  if (n > 63) {
    throw Error(ErrorKind::kArgument, "search_rs_cycle supports n <= 63");
  }
  const auto target = static_cast<std::size_t>(
      kind == DecompositionKind::kNearHamiltonian ? n - 1 : n);
  // Only n-1 distinct nonzero lengths exist.
  if (target > static_cast<std::size_t>(n - 1)) return std::nullopt;
  std::uint64_t used = 0;
  std::uint64_t visited = 1;
  std::vector<int> path{0};
  if (!rs_dfs(n, target, 0, 0, used, visited, path)) return std::nullopt;
  return DirectedCycle(n, std::move(path));
}

// ---------------------------------------------------------------------------
// Position matrix

PositionMatrix::PositionMatrix(int n) : n_(n), len_(n - 1) {
  require_order(n);
  if (n > kMaxOrder) {
    throw Error(ErrorKind::kArgument, "position matrix supports n <= 32");
  }
  full_ = (Mask{1} << n) - 1;
  const auto un = static_cast<std::size_t>(n);
  cells_.assign(un * static_cast<std::size_t>(len_), -1);
  col_used_.assign(static_cast<std::size_t>(len_), 0);
  row_used_.assign(un, 0);
  out_used_.assign(un, 0);
  in_used_.assign(un, 0);
}

PositionMatrix::Mask PositionMatrix::candidates(int row, int t) const {
  Mask m = full_ & ~col_used_[static_cast<std::size_t>(t)] &
           ~row_used_[static_cast<std::size_t>(row)];
  const int p = at(row, prev_time(t));
  if (p >= 0) m &= ~out_used_[static_cast<std::size_t>(p)];
  const int s = at(row, next_time(t));
  if (s >= 0) m &= ~in_used_[static_cast<std::size_t>(s)];
  return m;
}

bool PositionMatrix::place(int row, int t, int v) {
  if (v < 0 || v >= n_ || assigned(row, t) || ((candidates(row, t) >> v) & 1) == 0) {
    return false;
  }
  const Mask bit = Mask{1} << v;
  cells_[index(row, t)] = v;
  col_used_[static_cast<std::size_t>(t)] |= bit;
  row_used_[static_cast<std::size_t>(row)] |= bit;
  const int p = at(row, prev_time(t));
  if (p >= 0) {
    out_used_[static_cast<std::size_t>(p)] |= bit;
    in_used_[static_cast<std::size_t>(v)] |= Mask{1} << p;
  }
  const int s = at(row, next_time(t));
  if (s >= 0) {
    out_used_[static_cast<std::size_t>(v)] |= Mask{1} << s;
    in_used_[static_cast<std::size_t>(s)] |= bit;
  }
  return true;
}

void PositionMatrix::unplace(int row, int t) {
  const int v = at(row, t);
  if (v < 0) return;
  const Mask bit = Mask{1} << v;
  const int p = at(row, prev_time(t));
  if (p >= 0) {
    out_used_[static_cast<std::size_t>(p)] &= ~bit;
    in_used_[static_cast<std::size_t>(v)] &= ~(Mask{1} << p);
  }
  const int s = at(row, next_time(t));
  if (s >= 0) {
    out_used_[static_cast<std::size_t>(v)] &= ~(Mask{1} << s);
    in_used_[static_cast<std::size_t>(s)] &= ~bit;
  }
  col_used_[static_cast<std::size_t>(t)] &= ~bit;
  row_used_[static_cast<std::size_t>(row)] &= ~bit;
  cells_[index(row, t)] = -1;
}

bool PositionMatrix::complete() const {
  return std::all_of(cells_.begin(), cells_.end(), [](int v) { return v >= 0; });
}

std::vector<int> PositionMatrix::column(int t) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) out.push_back(at(r, t));
  return out;
}

Instance PositionMatrix::to_instance() const {
  if (!complete()) {
    throw Error(ErrorKind::kPrecondition, "position matrix is incomplete");
  }
  Instance out;
  out.decomposition.n = n_;
  out.decomposition.kind = DecompositionKind::kNearHamiltonian;
  for (int r = 0; r < n_; ++r) {
    std::vector<int> row(static_cast<std::size_t>(len_));
    for (int t = 0; t < len_; ++t) row[static_cast<std::size_t>(t)] = at(r, t);
    out.decomposition.cycles.emplace_back(n_, std::move(row));
  }
  out.schedule = NomadSchedule::zeros(static_cast<std::size_t>(n_));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kExhaustedNoSolution: return "exhausted-no-solution";
    case SearchStatus::kBudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

const char* to_string(FillOrder order) {
  return order == FillOrder::kTimeMajor ? "time-major" : "row-major";
}

namespace {

// Consecutive blocks of vertices, each an increasing rotation, parts in
// ascending order: the lexicographically least permutation of that type.
std::vector<int> representative(const std::vector<int>& parts) {
  std::vector<int> perm;
  int start = 0;
  for (int p : parts) {
    for (int i = 0; i < p; ++i) perm.push_back(start + (i + 1) % p);
    start += p;
  }
  return perm;
}

void partitions(int remaining, int min_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    current.push_back(p);
    partitions(remaining - p, p, current, out);
    current.pop_back();
  }
}

// Transition permutation col_from[i] -> col_to[i], as a representative.
std::vector<int> transition_type(const std::vector<int>& from,
                                 const std::vector<int>& to) {
  const std::size_t n = from.size();
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[static_cast<std::size_t>(from[i])] = to[i];
  }
  std::vector<char> seen(n, 0);
  std::vector<int> parts;
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int len = 0;
    for (std::size_t w = v; !seen[w]; w = static_cast<std::size_t>(perm[w])) {
      seen[w] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end());
  return representative(parts);
}

}  // namespace

std::vector<std::vector<int>> canonical_transitions(int n) {
  require_order(n);
  std::vector<std::vector<int>> parts_list;
  std::vector<int> current;
  partitions(n, 2, current, parts_list);
  std::vector<std::vector<int>> out;
  out.reserve(parts_list.size());
  for (const auto& parts : parts_list) out.push_back(representative(parts));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Frontier files

std::string serialize_frontier(const Frontier& f) {
  std::ostringstream os;
  os << "# nomadic-frontier n=" << f.n << " order=" << to_string(f.order) << '\n';
  for (const auto& p : f.prefixes) {
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << '\n';
  }
  return os.str();
}

Frontier parse_frontier(std::string_view text) {
  Frontier f;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&line_no](const std::string& what) {
    throw Error(ErrorKind::kFormat,
                "frontier line " + std::to_string(line_no) + ": " + what,
                static_cast<std::int64_t>(line_no));
  };
  bool header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (!header) {
      char order[32] = {};
      int n = 0;
      if (std::sscanf(line.c_str(), "# nomadic-frontier n=%d order=%31s", &n, order) != 2) {
        fail("expected header '# nomadic-frontier n=<n> order=<order>'");
      }
      f.n = n;
      const std::string o = order;
      if (o == "time-major") {
        f.order = FillOrder::kTimeMajor;
      } else if (o == "row-major") {
        f.order = FillOrder::kRowMajor;
      } else {
        fail("unknown order '" + o + "'");
      }
      header = true;
      continue;
    }
    if (line.empty()) fail("empty prefix");
    std::vector<int> prefix;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = std::min(line.find(',', pos), line.size());
      const std::string field = line.substr(pos, comma - pos);
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (field.empty() || used != field.size()) fail("bad vertex '" + field + "'");
      if (v < 0 || v >= f.n) fail("vertex " + field + " outside [0, n)");
      prefix.push_back(v);
      pos = comma + 1;
    }
    f.prefixes.push_back(std::move(prefix));
  }
  if (!header) fail("missing header");
  return f;
}

// ---------------------------------------------------------------------------
// Decomposition search

namespace {

struct Cell {
  int row;
  int t;
};

std::vector<Cell> fill_order(int n, FillOrder order) {
  const int len = n - 1;
  std::vector<Cell> cells;
  for (int r = 0; r < n; ++r) cells.push_back({r, 1 % len});
  if (len == 1) return cells;
  if (order == FillOrder::kTimeMajor) {
    for (int t = 2; t < len; ++t) {
      for (int r = 0; r < n; ++r) cells.push_back({r, t});
    }
  } else {
    for (int r = 0; r < n; ++r) {
      for (int t = 2; t < len; ++t) cells.push_back({r, t});
    }
  }
  return cells;
}

enum class UnitState { kPending, kExhausted, kFound, kStopped, kCancelled };

struct UnitResult {
  UnitState state = UnitState::kPending;
  std::vector<std::vector<int>> frontier;
  std::optional<Instance> certificate;
};

using Clock = std::chrono::steady_clock;

struct Shared {
  const SearchOptions* options;
  Clock::time_point start;
  Clock::time_point deadline;
  bool has_deadline;
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> found_index{SIZE_MAX};
  std::atomic<std::size_t> next_unit{0};
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::atomic<std::uint64_t>> histogram;

  explicit Shared(std::size_t depths) : histogram(depths) {}
};

class Worker {
 public:
  Worker(int n, const std::vector<Cell>& cells, Shared& shared)
      : n_(n), cells_(cells), shared_(shared), pm_(n),
        local_hist_(cells.size() + 1, 0) {
    for (int r = 0; r < n; ++r) pm_.place(r, 0, r);
  }

  // Replays `prefix` and explores its subtree.
  void run(std::size_t unit, const std::vector<int>& prefix, UnitResult& out) {
    unit_ = unit;
    result_ = &out;
    assignment_.clear();
    bool feasible = true;
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      const Cell c = cells_[d];
      if (!pm_.place(c.row, c.t, prefix[d])) {
        undo_all();
        throw Error(ErrorKind::kFormat,
                    "frontier prefix violates the placement rules at cell " +
                        std::to_string(d),
                    static_cast<std::int64_t>(d));
      }
      assignment_.push_back(prefix[d]);
      if (d + 1 == static_cast<std::size_t>(n_)) {
        base_type_ = transition_type(pm_.column(0), pm_.column(cells_[0].t));
      }
      feasible = feasible && (d + 1 < static_cast<std::size_t>(n_) || consistent(d));
    }
    const Outcome r = feasible ? dfs(prefix.size()) : Outcome::kExhausted;
    undo_all();
    flush();
    switch (r) {
      case Outcome::kExhausted: out.state = UnitState::kExhausted; break;
      case Outcome::kFound: out.state = UnitState::kFound; break;
      case Outcome::kStopped:
        out.state = cancelled() ? UnitState::kCancelled : UnitState::kStopped;
        break;
    }
  }

  std::vector<std::vector<int>> children(const std::vector<int>& prefix) {
    std::vector<std::vector<int>> out;
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      pm_.place(cells_[d].row, cells_[d].t, prefix[d]);
      assignment_.push_back(prefix[d]);
    }
    base_type_ = transition_type(pm_.column(0), pm_.column(cells_[0].t));
    const std::size_t depth = prefix.size();
    if (depth < cells_.size()) {
      const Cell c = cells_[depth];
      for (auto mask = pm_.candidates(c.row, c.t); mask; mask &= mask - 1) {
        const int v = std::countr_zero(mask);
        pm_.place(c.row, c.t, v);
        if (consistent(depth)) {
          out.push_back(prefix);
          out.back().push_back(v);
        }
        pm_.unplace(c.row, c.t);
      }
    }
    undo_all();
    return out;
  }

 private:
  enum class Outcome { kExhausted, kFound, kStopped };

  bool cancelled() const {
    return shared_.found_index.load(std::memory_order_relaxed) < unit_;
  }

  void undo_all() {
    for (std::size_t d = assignment_.size(); d-- > 0;) {
      pm_.unplace(cells_[d].row, cells_[d].t);
    }
    assignment_.clear();
  }

  void flush() {
    shared_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed);
    pending_nodes_ = 0;
    for (std::size_t d = 0; d < local_hist_.size(); ++d) {
      if (local_hist_[d]) {
        shared_.histogram[d].fetch_add(local_hist_[d], std::memory_order_relaxed);
        local_hist_[d] = 0;
      }
    }
  }

  bool should_stop() {
    flush();
    const auto* opt = shared_.options;
    if (opt->node_limit &&
        shared_.nodes.load(std::memory_order_relaxed) > *opt->node_limit) {
      shared_.stop.store(true);
    }
    if (shared_.has_deadline && Clock::now() >= shared_.deadline) {
      shared_.stop.store(true);
    }
    return shared_.stop.load() || cancelled();
  }

  // Checks run after placing the cell at `depth`.
  bool consistent(std::size_t depth) const {
    const Cell c = cells_[depth];
    const bool time_major = shared_.options->order == FillOrder::kTimeMajor;
    if (time_major) {
      // Every remaining row of this column still needs a distinct vertex.
      PositionMatrix::Mask uni = 0;
      int rows_left = 0;
      for (int r = c.row + 1; r < n_; ++r) {
        const auto m = pm_.candidates(r, c.t);
        if (m == 0) return false;
        uni |= m;
        ++rows_left;
      }
      if (std::popcount(uni) < rows_left) return false;
    }
    if (!shared_.options->break_time_symmetry) return true;
    const int len = n_ - 1;
    if (time_major) {
      if (c.row != n_ - 1) return true;
      if (c.t >= 2 &&
          transition_type(pm_.column(c.t - 1), pm_.column(c.t)) < base_type_) {
        return false;
      }
      return c.t != len - 1 || wrap_ok();
    }
    if (depth + 1 != cells_.size()) return true;
    for (int t = 1; t + 1 < len; ++t) {
      if (transition_type(pm_.column(t), pm_.column(t + 1)) < base_type_) {
        return false;
      }
    }
    return wrap_ok();
  }

  bool wrap_ok() const {
    return !(transition_type(pm_.column(n_ - 2), pm_.column(0)) < base_type_);
  }

  Outcome dfs(std::size_t depth) {
    ++pending_nodes_;
    const auto* opt = shared_.options;
    const bool limit_hit =
        opt->node_limit &&
        shared_.nodes.load(std::memory_order_relaxed) + pending_nodes_ > *opt->node_limit;
    if ((limit_hit || (pending_nodes_ & 1023) == 0) && should_stop()) {
      ++local_hist_[depth];
      result_->frontier.push_back(assignment_);
      return Outcome::kStopped;
    }
    ++local_hist_[depth];
    if (depth == cells_.size()) {
      result_->certificate = pm_.to_instance();
      std::size_t expected = SIZE_MAX;
      while (unit_ < expected &&
             !shared_.found_index.compare_exchange_weak(expected, unit_)) {
      }
      return Outcome::kFound;
    }
    const Cell c = cells_[depth];
    for (auto mask = pm_.candidates(c.row, c.t); mask; mask &= mask - 1) {
      const int v = std::countr_zero(mask);
      pm_.place(c.row, c.t, v);
      assignment_.push_back(v);
      const Outcome r = consistent(depth) ? dfs(depth + 1) : Outcome::kExhausted;
      assignment_.pop_back();
      pm_.unplace(c.row, c.t);
      if (r == Outcome::kFound) return r;
      if (r == Outcome::kStopped) {
        for (auto rest = mask & (mask - 1); rest; rest &= rest - 1) {
          result_->frontier.push_back(assignment_);
          result_->frontier.back().push_back(std::countr_zero(rest));
        }
        return r;
      }
    }
    return Outcome::kExhausted;
  }

  int n_;
  const std::vector<Cell>& cells_;
  Shared& shared_;
  PositionMatrix pm_;
  std::vector<int> assignment_;
  std::vector<int> base_type_;
  std::vector<std::uint64_t> local_hist_;
  std::uint64_t pending_nodes_ = 0;
  std::size_t unit_ = 0;
  UnitResult* result_ = nullptr;
};

void report(std::ostream& os, const Shared& shared, const char* event) {
  const double secs =
      std::chrono::duration<double>(Clock::now() - shared.start).count();
  const auto nodes = shared.nodes.load(std::memory_order_relaxed);
  os << "{\"event\":\"" << event << "\",\"elapsed\":" << secs
     << ",\"nodes\":" << nodes << ",\"nodes_per_sec\":"
     << (secs > 0 ? static_cast<double>(nodes) / secs : 0.0)
     << ",\"depth_histogram\":[";
  for (std::size_t d = 0; d < shared.histogram.size(); ++d) {
    os << (d ? "," : "") << shared.histogram[d].load(std::memory_order_relaxed);
  }
  os << "]}\n";
  os.flush();
}

}  // namespace

SearchOutcome search_nomadic_decomposition(int n, const SearchOptions& options) {
  require_order(n);
  if (n > PositionMatrix::kMaxOrder) {
    throw Error(ErrorKind::kArgument, "search supports n <= 32");
  }
  if (!(options.budget_seconds > 0)) {
    throw Error(ErrorKind::kArgument, "search budget must be positive");
  }
  if (options.node_limit && *options.node_limit == 0) {
    throw Error(ErrorKind::kArgument, "node limit must be positive");
  }
  const unsigned workers = std::max(1u, options.workers);
  const auto cells = fill_order(n, options.order);

  Shared shared(cells.size() + 1);
  shared.options = &options;
  shared.start = Clock::now();
  shared.has_deadline = options.budget_seconds < 1e9;
  if (shared.has_deadline) {
    shared.deadline = shared.start + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(options.budget_seconds));
  }

  std::vector<std::vector<int>> units;
  const auto canonical = canonical_transitions(n);
  if (options.resume) {
    const Frontier& f = *options.resume;
    if (f.n != n || f.order != options.order) {
      throw Error(ErrorKind::kArgument,
                  "frontier was written for a different order or fill order");
    }
    for (const auto& p : f.prefixes) {
      if (p.size() < static_cast<std::size_t>(n) || p.size() > cells.size() ||
          !std::binary_search(canonical.begin(), canonical.end(),
                              std::vector<int>(p.begin(), p.begin() + n))) {
        throw Error(ErrorKind::kFormat,
                    "frontier prefix does not start with a canonical column");
      }
    }
    units = f.prefixes;
  } else {
    units = canonical;
  }

  // Split shallow subtrees until every worker has several units.
  if (workers > 1) {
    Worker splitter(n, cells, shared);
    for (int round = 0; round < 8 && units.size() < 4 * workers; ++round) {
      std::vector<std::vector<int>> next;
      bool grew = false;
      for (const auto& u : units) {
        if (u.size() >= cells.size()) {
          next.push_back(u);
          continue;
        }
        auto kids = splitter.children(u);
        grew = true;
        next.insert(next.end(), kids.begin(), kids.end());
      }
      units = std::move(next);
      if (!grew) break;
    }
  }

  std::vector<UnitResult> results(units.size());
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&]() {
    try {
      Worker worker(n, cells, shared);
      for (;;) {
        const std::size_t u = shared.next_unit.fetch_add(1);
        if (u >= units.size()) break;
        if (shared.found_index.load() < u) {
          results[u].state = UnitState::kCancelled;
          continue;
        }
        if (shared.stop.load()) {
          results[u].state = UnitState::kStopped;
          results[u].frontier.push_back(units[u]);
          continue;
        }
        worker.run(u, units[u], results[u]);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      shared.stop.store(true);
    }
  };

  std::mutex progress_mutex;
  std::condition_variable progress_cv;
  bool done = false;
  std::thread reporter;
  if (options.progress) {
    reporter = std::thread([&]() {
      std::unique_lock lock(progress_mutex);
      const auto interval = std::chrono::duration<double>(options.progress_interval_seconds);
      while (!progress_cv.wait_for(lock, interval, [&] { return done; })) {
        report(*options.progress, shared, "progress");
      }
    });
  }

  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  if (reporter.joinable()) {
    {
      std::lock_guard lock(progress_mutex);
      done = true;
    }
    progress_cv.notify_all();
    reporter.join();
  }
  if (error) std::rethrow_exception(error);

  SearchOutcome out;
  out.nodes_explored = shared.nodes.load();
  out.elapsed = Clock::now() - shared.start;
  for (const auto& h : shared.histogram) out.depth_histogram.push_back(h.load());
  out.frontier.n = n;
  out.frontier.order = options.order;

  const std::size_t found = shared.found_index.load();
  if (found != SIZE_MAX) {
    out.status = SearchStatus::kFound;
    out.certificate = std::move(results[found].certificate);
    const auto check = full_verify(out.certificate->decomposition,
                                     *out.certificate->schedule);
    if (!check.passed()) {
      throw std::logic_error("search produced an invalid certificate:\n" +
                             check.summary());
    }
  } else {
    bool stopped = false;
    for (auto& r : results) {
      if (r.state == UnitState::kStopped) {
        stopped = true;
        out.frontier.prefixes.insert(out.frontier.prefixes.end(),
                                     r.frontier.begin(), r.frontier.end());
      }
    }
    out.status = stopped ? SearchStatus::kBudgetExceeded
                         : SearchStatus::kExhaustedNoSolution;
  }
  if (options.progress) report(*options.progress, shared, "done");
  return out;
}

}  // namespace nomadic

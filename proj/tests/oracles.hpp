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

// Brute-force reference implementations used only by tests. None of these
// call into the code paths they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline int residue(long a, int n) { return static_cast<int>(((a % n) + n) % n); }

// Vertices visited from `start` by the signed lengths, excluding the return.
inline std::vector<int> walk(int n, int start, const std::vector<int>& lengths) {
  std::vector<int> out{start};
  int at = start;
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    at = residue(at + lengths[i], n);
    out.push_back(at);
  }
  return out;
}

inline bool closes_without_revisit(int n, const std::vector<int>& lengths) {
  std::set<int> seen{0};
  int at = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    at = residue(at + lengths[i], n);
    if (i + 1 == lengths.size()) return at == 0;
    if (!seen.insert(at).second) return false;
  }
  return false;
}

// Any ordering of all n-1 nonzero residues whose walk from 0 is a cycle.
inline bool rs_cycle_exists(int n) {
  std::vector<int> lengths(static_cast<std::size_t>(n - 1));
  std::iota(lengths.begin(), lengths.end(), 1);
  do {
    if (closes_without_revisit(n, lengths)) return true;
  } while (std::next_permutation(lengths.begin(), lengths.end()));
  return false;
}

using Cycle = std::vector<int>;

inline std::vector<std::pair<int, int>> cycle_edges(const Cycle& c) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < c.size(); ++i) e.emplace_back(c[i], c[(i + 1) % c.size()]);
  return e;
}

// All directed cycles of length `len` on 0..n-1, each listed once starting
// at its smallest vertex.
inline std::vector<Cycle> all_cycles(int n, int len) {
  std::vector<Cycle> out;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + len, 1);
  do {
    Cycle s;
    for (int v = 0; v < n; ++v) {
      if (pick[static_cast<std::size_t>(v)]) s.push_back(v);
    }
    do {
      out.push_back(s);
    } while (std::next_permutation(s.begin() + 1, s.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Every set of cycles of length `len` partitioning the edges of K*_n.
inline std::vector<std::vector<Cycle>> all_decompositions(int n, int len) {
  const auto cycles = all_cycles(n, len);
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (const auto& e : cycle_edges(cycles[i])) by_edge[e].push_back(i);
  }
  std::vector<std::vector<Cycle>> out;
  std::set<std::pair<int, int>> used;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self) -> void {
    std::pair<int, int> next{-1, -1};
    for (const auto& [e, _] : by_edge) {
      if (!used.count(e)) {
        next = e;
        break;
      }
    }
    if (next.first < 0) {
      std::vector<Cycle> d;
      for (auto i : chosen) d.push_back(cycles[i]);
      out.push_back(std::move(d));
      return;
    }
    for (auto i : by_edge[next]) {
      const auto es = cycle_edges(cycles[i]);
      if (std::any_of(es.begin(), es.end(), [&](const auto& e) { return used.count(e) > 0; })) {
        continue;
      }
      for (const auto& e : es) used.insert(e);
      chosen.push_back(i);
      self(self);
      chosen.pop_back();
      for (const auto& e : es) used.erase(e);
    }
  };
  rec(rec);
  return out;
}

inline std::uint64_t lcm_of_lengths(const std::vector<Cycle>& d) {
  std::uint64_t p = 1;
  for (const auto& c : d) p = std::lcm(p, static_cast<std::uint64_t>(c.size()));
  return p;
}

inline bool schedule_collides(const std::vector<Cycle>& d, const std::vector<std::size_t>& roots) {
  const auto p = lcm_of_lengths(d);
  for (std::uint64_t t = 0; t < p; ++t) {
    std::set<int> seen;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!seen.insert(d[i][(roots[i] + t) % d[i].size()]).second) return true;
    }
  }
  return false;
}

// Tries every root tuple.
inline bool some_schedule_works(const std::vector<Cycle>& d) {
  std::vector<std::size_t> roots(d.size(), 0);
  for (;;) {
    if (!schedule_collides(d, roots)) return true;
    std::size_t i = 0;
    while (i < d.size() && ++roots[i] == d[i].size()) roots[i++] = 0;
    if (i == d.size()) return false;
  }
}

// Conjugacy-class minima of all derangements of 0..n-1.
inline std::vector<std::vector<int>> derangement_class_minima(int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::set<std::vector<int>> minima;
  std::vector<int> pi(static_cast<std::size_t>(n));
  do {
    bool derangement = true;
    for (int i = 0; i < n; ++i) derangement = derangement && sigma[static_cast<std::size_t>(i)] != i;
    if (!derangement) continue;
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<int> best = sigma;
    do {
      std::vector<int> conj(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        conj[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] =
            pi[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
      }
      best = std::min(best, conj);
    } while (std::next_permutation(pi.begin(), pi.end()));
    minima.insert(best);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return {minima.begin(), minima.end()};
}

}  // namespace oracle

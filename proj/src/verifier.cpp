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

#include "nomadic/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace nomadic {
namespace {

// Simulation is used while period * nomads stays below this; beyond it
// collisions are located pairwise by the Chinese remainder theorem. Both
// routes report the earliest t, then the lowest later nomad, then the
// lowest earlier nomad.
constexpr std::uint64_t kSimulationLimit = std::uint64_t{1} << 26;

std::string edge_str(int u, int v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

Check make_check(const char* name) {
  Check c;
  c.name = name;
  return c;
}

struct Collision {
  std::uint64_t t;
  std::size_t i;
  std::size_t j;
  int vertex;
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// x with a*x = gcd(a, m) mod m.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = floor_mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return floor_mod(old_s, m);
}

// Smallest t >= 0 with t = a mod m1 and t = b mod m2, if any.
std::optional<unsigned __int128> crt(std::int64_t a, std::int64_t m1,
                                     std::int64_t b, std::int64_t m2) {
  a = floor_mod(a, m1);
  const std::int64_t g = std::gcd(m1, m2);
  if (floor_mod(a - b, g) != 0) return std::nullopt;
  const std::int64_t m2g = m2 / g;
  const std::int64_t k = static_cast<std::int64_t>(
      static_cast<__int128>(floor_mod((b - a) / g, m2g)) *
      inverse_mod(m1 / g, m2g) % m2g);
  return static_cast<unsigned __int128>(a) +
         static_cast<unsigned __int128>(m1) * static_cast<unsigned __int128>(k);
}

std::optional<Collision> first_collision_pairwise(const Decomposition& d,
                                                  const NomadSchedule& s) {
  std::optional<Collision> best;
  unsigned __int128 best_t = 0;
  const std::size_t m = d.cycles.size();
  const auto un = static_cast<std::size_t>(d.n);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::vector<std::int64_t>> where(un);
    const auto& ci = d.cycles[i];
    for (std::size_t a = 0; a < ci.size(); ++a) {
      where[static_cast<std::size_t>(ci.values()[a])].push_back(
          static_cast<std::int64_t>(a));
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& cj = d.cycles[j];
      for (std::size_t b = 0; b < cj.size(); ++b) {
        const int v = cj.values()[b];
        for (const std::int64_t a : where[static_cast<std::size_t>(v)]) {
          const auto t = crt(a - static_cast<std::int64_t>(s.roots[i]),
                             static_cast<std::int64_t>(ci.size()),
                             static_cast<std::int64_t>(b) -
                                 static_cast<std::int64_t>(s.roots[j]),
                             static_cast<std::int64_t>(cj.size()));
          if (t && (!best || *t < best_t ||
                    (*t == best_t && std::pair(j, i) < std::pair(best->j, best->i)))) {
            best_t = *t;
            best = Collision{static_cast<std::uint64_t>(*t), i, j, v};
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

VerificationReport verify_edge_partition(const Decomposition& d) {
  const auto un = static_cast<std::size_t>(d.n);
  std::vector<int> count(un * un, 0);
  Check check = make_check(kEdgePartition);
  std::size_t covered = 0;
  for (std::size_t ci = 0; ci < d.cycles.size(); ++ci) {
    for (const auto& [u, v] : d.cycles[ci].edges()) {
      if (u == v) {
        ++check.violations;
        if (check.passed) {
          check.passed = false;
          check.witness = "loop " + edge_str(u, v) + " in cycle " +
                          std::to_string(ci);
        }
        continue;
      }
      int& c = count[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)];
      if (++c == 1) {
        ++covered;
      } else {
        ++check.violations;
        if (check.passed) {
          check.passed = false;
          check.witness = "duplicate edge " + edge_str(u, v) + " in cycle " +
                          std::to_string(ci);
        }
      }
    }
  }
  const std::size_t total = un * (un - 1);
  if (covered < total) {
    std::size_t missing = 0;
    std::string first;
    for (int u = 0; u < d.n; ++u) {
      for (int v = 0; v < d.n; ++v) {
        if (u != v && count[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)] == 0) {
          if (missing++ == 0) first = edge_str(u, v);
        }
      }
    }
    check.violations += missing;
    if (check.passed) {
      check.passed = false;
      check.witness = "missing edge " + first + " (" + std::to_string(missing) +
                      " missing, " + std::to_string(covered) + "/" +
                      std::to_string(total) + " covered)";
    }
  }
  VerificationReport r;
  r.add(std::move(check));
  return r;
}

VerificationReport verify_cycle_kind(const Decomposition& d) {
  Check check = make_check(kCycleKind);
  auto fail = [&check](std::string witness) {
    ++check.violations;
    if (check.passed) {
      check.passed = false;
      check.witness = std::move(witness);
    }
  };
  const std::size_t want_count = d.expected_cycle_count();
  const std::size_t want_len = d.expected_cycle_length();
  if (d.cycles.size() != want_count) {
    fail(std::to_string(d.cycles.size()) + " cycles, " + to_string(d.kind) +
         " needs " + std::to_string(want_count));
  }
  for (std::size_t ci = 0; ci < d.cycles.size(); ++ci) {
    const auto& c = d.cycles[ci];
    if (c.order() != d.n) {
      fail("cycle " + std::to_string(ci) + " has order " +
           std::to_string(c.order()));
      continue;
    }
    if (c.size() != want_len) {
      fail("cycle " + std::to_string(ci) + " has length " +
           std::to_string(c.size()) + ", expected " + std::to_string(want_len));
    }
    std::vector<char> seen(static_cast<std::size_t>(d.n), 0);
    for (int v : c.values()) {
      if (seen[static_cast<std::size_t>(v)]++) {
        fail("cycle " + std::to_string(ci) + " repeats vertex " +
             std::to_string(v));
        break;
      }
    }
  }
  VerificationReport r;
  r.add(std::move(check));
  return r;
}

VerificationReport verify_collision_free(const Decomposition& d,
                                         const NomadSchedule& s) {
  VerificationReport r;
  if (!s.matches(d)) {
    r.add(Check{kScheduleShape, false,
                std::to_string(s.roots.size()) + " roots for " +
                    std::to_string(d.cycles.size()) +
                    " cycles or a root index out of range",
                1});
    return r;
  }
  const bool near = d.kind == DecompositionKind::kNearHamiltonian;
  const std::size_t m = d.cycles.size();
  Check collision = make_check(kCollisionFree);
  Check column = make_check(kColumnPermutation);
  if (near && m != static_cast<std::size_t>(d.n)) {
    column.passed = false;
    column.violations = 1;
    column.witness = std::to_string(m) + " nomads cannot cover " +
                     std::to_string(d.n) + " vertices";
  }

  const std::uint64_t p = period(d, kSimulationLimit);
  if (m == 0 || p * m < kSimulationLimit) {
    const auto un = static_cast<std::size_t>(d.n);
    std::vector<std::size_t> owner(un);
    for (std::uint64_t t = 0; t < p; ++t) {
      std::fill(owner.begin(), owner.end(), SIZE_MAX);
      std::size_t occupied = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const auto& c = d.cycles[i];
        const int v = c.values()[(s.roots[i] + t) % c.size()];
        auto& o = owner[static_cast<std::size_t>(v)];
        if (o == SIZE_MAX) {
          o = i;
          ++occupied;
        } else {
          ++collision.violations;
          if (collision.passed) {
            collision.passed = false;
            std::ostringstream os;
            os << "t=" << t << " nomads " << o << " and " << i
               << " at vertex " << v;
            collision.witness = os.str();
          }
        }
      }
      if (near && column.passed && occupied != un) {
        column.passed = false;
        column.violations = 1;
        for (std::size_t v = 0; v < un; ++v) {
          if (owner[v] == SIZE_MAX) {
            column.witness = "t=" + std::to_string(t) + " vertex " +
                             std::to_string(v) + " unoccupied";
            break;
          }
        }
      }
    }
  } else if (const auto hit = first_collision_pairwise(d, s)) {
    collision.passed = false;
    collision.violations = 1;
    std::ostringstream os;
    os << "t=" << hit->t << " nomads " << hit->i << " and " << hit->j
       << " at vertex " << hit->vertex;
    collision.witness = os.str();
    if (near && column.passed) {
      column.passed = false;
      column.violations = 1;
      column.witness = "collision at t=" + std::to_string(hit->t);
    }
  }
  r.add(std::move(collision));
  if (near) r.add(std::move(column));
  return r;
}

std::optional<int> verify_rotational_symmetry(const DirectedCycle& c1,
                                              const DirectedCycle& c2,
                                              std::size_t r1, std::size_t r2) {
  if (c1.order() != c2.order() || c1.size() != c2.size()) {
    throw Error(ErrorKind::kPrecondition,
                "rotational symmetry needs cycles of equal order and length");
  }
  const int n = c1.order();
  const std::size_t len = c1.size();
  const int c = mod(c1.values()[r1 % len] - c2.values()[r2 % len], n);
  for (std::size_t t = 1; t < len; ++t) {
    const int g = c1.values()[(r1 + t) % len];
    const int h = c2.values()[(r2 + t) % len];
    if (mod(g - h, n) != c) return std::nullopt;
  }
  return c;
}

bool has_distinct_lengths(const DirectedCycle& c) {
  std::vector<char> seen(static_cast<std::size_t>(c.order()), 0);
  for (const auto& [u, v] : c.edges()) {
    const int l = mod(v - u, c.order());
    if (l == 0 || seen[static_cast<std::size_t>(l)]++) return false;
  }
  return true;
}

VerificationReport full_verify(const Decomposition& d, const NomadSchedule& s) {
  VerificationReport r = verify_edge_partition(d);
  r.merge(verify_cycle_kind(d));
  r.merge(verify_collision_free(d, s));
  return r;
}

}  // namespace nomadic

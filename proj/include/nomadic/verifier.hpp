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

#include <optional>

#include "nomadic/core.hpp"

namespace nomadic {

// Check names used in reports.
inline constexpr const char* kEdgePartition = "edge-partition";
inline constexpr const char* kCycleKind = "cycle-kind";
inline constexpr const char* kScheduleShape = "schedule-shape";
inline constexpr const char* kCollisionFree = "collision-free";
inline constexpr const char* kColumnPermutation = "column-permutation";

// Every ordered pair (u, v), u != v, is an edge of exactly one cycle.
VerificationReport verify_edge_partition(const Decomposition& d);

// Cycle count and lengths match the kind and no cycle repeats a vertex.
VerificationReport verify_cycle_kind(const Decomposition& d);

// Simulates one full period; witness is the first (t, i, j, vertex).
// For near-Hamiltonian decompositions the stronger column-permutation
// property is checked as well.
VerificationReport verify_collision_free(const Decomposition& d,
                                         const NomadSchedule& s);

// The constant c with g(t) - h(t) = c mod n for every t, if one exists.
// Zero is returned as is; callers decide whether it means the same nomad.
std::optional<int> verify_rotational_symmetry(const DirectedCycle& c1,
                                              const DirectedCycle& c2,
                                              std::size_t r1, std::size_t r2);

bool has_distinct_lengths(const DirectedCycle& c);

VerificationReport full_verify(const Decomposition& d, const NomadSchedule& s);

}  // namespace nomadic

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

#include <array>

#include "nomadic/core.hpp"

namespace nomadic {

// Four-term length pattern of the n = 0 mod 4 construction.
struct Block {
  enum class Kind { kIncreasing, kDecreasing };

  Kind kind;
  int index;  // >= 1

  // Increasing i: (-4i, 4i+1, -4i, 4i+1). Decreasing j: (4j-1, -4j+2, 4j-1, -4j+2).
  std::array<int, 4> lengths() const;
};

/// Signed lengths 1, -2, 3, ..., +-k, +-(k-1), ..., -1, -+k for odd n with
/// k = (n-1)/2: each nonzero residue appears once and the partial sums are
/// distinct, so the walk from any vertex is a near-Hamiltonian cycle.
LengthSequence odd_length_sequence(int n);

/// The vertex the odd base cycle started at 0 never visits:
/// signed label (-1)^k * ceil((n+1)/4).
Vertex skipped_vertex_odd(int n);

/// n rotations (offsets 0..n-1) of the odd base cycle, roots at index 0.
Instance build_odd_decomposition(int n);

std::vector<Block> mod4_blocks(int n);

/// (k, 1, 1) followed by floor((n-4)/8) increasing blocks and
/// ceil((n-4)/8) decreasing blocks, k = n/2.
LengthSequence mod4_a_length_sequence(int n);

/// Term-by-term negation of the A sequence.
LengthSequence mod4_b_length_sequence(int n);

/// Group A: even rotations of the A cycle started at label 1.
/// Group B: even rotations of the B cycle started at 0.
/// The first n/2 cycles are group A.
Instance build_mod4_decomposition(int n);

// Dispatches to the odd or mod-4 construction; n = 2 mod 4 is unsupported.
Instance generate(int n);

}  // namespace nomadic

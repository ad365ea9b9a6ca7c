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

#include "nomadic/core.hpp"

namespace nomadic {

struct ClosureObstruction {
  bool holds;   // n even and one edge of each length cannot close
  int residue;  // n(n-1)/2 mod n
};

ClosureObstruction even_closure_obstruction(int n);

bool is_prime(int p);

// p-1 Hamiltonian cycles, cycle l-1 walks 0, l, 2l, ... mod p.
Decomposition prime_uniform_decomposition(int p);

// The unique t in [0, p) with t(l2 - l1) = v1 - v2 mod p: the time at which
// nomads started at v1 (length l1) and v2 (length l2) meet.
int prime_collision_time(int p, int l1, int v1, int l2, int v2);

struct NeverNomadicEvidence {
  bool algebraic;   // every pair has a congruence solution that checks out
  bool simulated;   // every pair co-occupies a vertex within p steps
  std::size_t pairs_checked;
};

NeverNomadicEvidence never_nomadic_evidence(int p);

// True iff both independent routes agree that every root choice collides.
bool verify_never_nomadic(int p);

}  // namespace nomadic

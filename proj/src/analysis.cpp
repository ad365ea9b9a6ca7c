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

#include "nomadic/analysis.hpp"

namespace nomadic {
namespace {

void require_prime(int p) {
  if (!is_prime(p) || p < kMinOrder) {
    throw Error(ErrorKind::kArgument,
                std::to_string(p) + " is not a prime >= 3");
  }
}

// a^(p-2) mod p.
int inverse_mod_prime(int a, int p) {
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

}  // namespace

ClosureObstruction even_closure_obstruction(int n) {
  require_order(n);
  const auto sum = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const int residue = mod(sum, n);
  return {n % 2 == 0 && residue != 0, residue};
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Decomposition prime_uniform_decomposition(int p) {
  require_prime(p);
  Decomposition d{p, DecompositionKind::kHamiltonian, {}};
  for (int l = 1; l < p; ++l) {
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) values.push_back(mod(std::int64_t{i} * l, p));
    d.cycles.emplace_back(p, std::move(values));
  }
  return d;
}

int prime_collision_time(int p, int l1, int v1, int l2, int v2) {
  require_prime(p);
  if (mod(l1, p) == mod(l2, p)) {
    throw Error(ErrorKind::kArgument,
                "equal lengths: nomads on parallel cycles never meet unless "
                "they start together");
  }
  const std::int64_t rhs = mod(v1 - v2, p);
  return mod(rhs * inverse_mod_prime(l2 - l1, p), p);
}

NeverNomadicEvidence never_nomadic_evidence(int p) {
  const auto d = prime_uniform_decomposition(p);
  NeverNomadicEvidence ev{true, true, 0};
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < d.cycles.size(); ++j) {
      const int l1 = static_cast<int>(i) + 1;
      const int l2 = static_cast<int>(j) + 1;
      for (std::size_t r1 = 0; r1 < d.cycles[i].size(); ++r1) {
        for (std::size_t r2 = 0; r2 < d.cycles[j].size(); ++r2) {
          ++ev.pairs_checked;
          const int v1 = d.cycles[i].values()[r1];
          const int v2 = d.cycles[j].values()[r2];

          const int t = prime_collision_time(p, l1, v1, l2, v2);
          const bool congruent =
              mod(std::int64_t{t} * (l2 - l1) - (v1 - v2), p) == 0;
          const bool meets = d.cycles[i].advance(r1, t) ==
                             d.cycles[j].advance(r2, t);
          ev.algebraic = ev.algebraic && congruent && meets;

          bool collided = false;
          for (int s = 0; s < p && !collided; ++s) {
            collided = d.cycles[i].advance(r1, s) == d.cycles[j].advance(r2, s);
          }
          ev.simulated = ev.simulated && collided;
        }
      }
    }
  }
  return ev;
}

bool verify_never_nomadic(int p) {
  const auto ev = never_nomadic_evidence(p);
  return ev.algebraic && ev.simulated;
}

}  // namespace nomadic

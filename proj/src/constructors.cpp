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

#include "nomadic/constructors.hpp"

namespace nomadic {
namespace {

int sign_pow(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

void require_odd(int n) {
  if (n < kMinOrder || n % 2 == 0) {
    throw Error(ErrorKind::kUnsupportedOrder,
                "odd construction needs odd n >= 3, got " + std::to_string(n));
  }
}

void require_mod4(int n) {
  if (n < 4 || n % 4 != 0) {
    throw Error(ErrorKind::kUnsupportedOrder,
                "mod-4 construction needs n = 0 mod 4, got " +
                    std::to_string(n));
  }
}

}  // namespace

std::array<int, 4> Block::lengths() const {
  if (kind == Kind::kIncreasing) {
    const int a = -4 * index;
    const int b = 4 * index + 1;
    return {a, b, a, b};
  }
  const int a = 4 * index - 1;
  const int b = -4 * index + 2;
  return {a, b, a, b};
}

LengthSequence odd_length_sequence(int n) {
  require_odd(n);
  const int k = (n - 1) / 2;
  std::vector<int> lengths;
  lengths.reserve(static_cast<std::size_t>(2 * k));
  for (int i = 1; i <= k; ++i) lengths.push_back(sign_pow(i + 1) * i);
  for (int j = k - 1; j >= 1; --j) {
    lengths.push_back(sign_pow(k + 1) * sign_pow(k - 1 - j) * j);
  }
  lengths.push_back(sign_pow(k) * k);
  return LengthSequence::from_signed(n, lengths);
}

Vertex skipped_vertex_odd(int n) {
  require_odd(n);
  const int k = (n - 1) / 2;
  const int magnitude = (n + 1 + 3) / 4;
  return Vertex::from_label(n, sign_pow(k) * magnitude);
}

Instance build_odd_decomposition(int n) {
  const auto base = cycle_from_lengths(Vertex(n, 0), odd_length_sequence(n));
  Instance out;
  out.decomposition.n = n;
  out.decomposition.kind = DecompositionKind::kNearHamiltonian;
  for (int offset = 0; offset < n; ++offset) {
    out.decomposition.cycles.push_back(rotate_cycle(base, offset));
  }
  out.schedule = NomadSchedule::zeros(out.decomposition.cycles.size());
  return out;
}

std::vector<Block> mod4_blocks(int n) {
  require_mod4(n);
  const int increasing = (n - 4) / 8;
  const int decreasing = (n - 4 + 7) / 8;
  std::vector<Block> blocks;
  for (int i = 1; i <= increasing; ++i) {
    blocks.push_back({Block::Kind::kIncreasing, i});
  }
  for (int j = decreasing; j >= 1; --j) {
    blocks.push_back({Block::Kind::kDecreasing, j});
  }
  return blocks;
}

LengthSequence mod4_a_length_sequence(int n) {
  const auto blocks = mod4_blocks(n);
  std::vector<int> lengths{n / 2, 1, 1};
  for (const auto& b : blocks) {
    const auto four = b.lengths();
    lengths.insert(lengths.end(), four.begin(), four.end());
  }
  return LengthSequence::from_signed(n, lengths);
}

LengthSequence mod4_b_length_sequence(int n) {
  return mod4_a_length_sequence(n).negated();
}

Instance build_mod4_decomposition(int n) {
  const auto a = cycle_from_lengths(Vertex::from_label(n, 1),
                                    mod4_a_length_sequence(n));
  const auto b = cycle_from_lengths(Vertex(n, 0), mod4_b_length_sequence(n));
  Instance out;
  out.decomposition.n = n;
  out.decomposition.kind = DecompositionKind::kNearHamiltonian;
  for (const auto* base : {&a, &b}) {
    for (int offset = 0; offset < n; offset += 2) {
      out.decomposition.cycles.push_back(rotate_cycle(*base, offset));
    }
  }
  out.schedule = NomadSchedule::zeros(out.decomposition.cycles.size());
  return out;
}

Instance generate(int n) {
  if (n >= kMinOrder && n % 2 == 1) return build_odd_decomposition(n);
  if (n >= 4 && n % 4 == 0) return build_mod4_decomposition(n);
  if (n >= kMinOrder && n % 4 == 2) {
    throw Error(ErrorKind::kUnsupportedOrder,
                "no construction is known for n = 2 mod 4 (n = " +
                    std::to_string(n) +
                    "); this case is open, try the search subcommand");
  }
  require_order(n);
  throw Error(ErrorKind::kUnsupportedOrder, "unsupported order");
}

}  // namespace nomadic

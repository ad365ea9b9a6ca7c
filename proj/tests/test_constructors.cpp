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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "nomadic/constructors.hpp"
#include "nomadic/verifier.hpp"
#include "oracles.hpp"

using namespace nomadic;

namespace {

std::vector<std::vector<int>> label_lists(const Decomposition& d) {
  std::vector<std::vector<int>> out;
  for (const auto& c : d.cycles) out.push_back(c.labels());
  return out;
}

}  // namespace

TEST_CASE("blocks") {
  CHECK(Block{Block::Kind::kIncreasing, 1}.lengths() == std::array<int, 4>{-4, 5, -4, 5});
  CHECK(Block{Block::Kind::kIncreasing, 2}.lengths() == std::array<int, 4>{-8, 9, -8, 9});
  CHECK(Block{Block::Kind::kDecreasing, 3}.lengths() == std::array<int, 4>{11, -10, 11, -10});
  CHECK(Block{Block::Kind::kDecreasing, 1}.lengths() == std::array<int, 4>{3, -2, 3, -2});
}

TEST_CASE("odd length sequence") {
  CHECK(odd_length_sequence(13).signed_values() ==
        std::vector<int>{1, -2, 3, -4, 5, -6, -5, 4, -3, 2, -1, 6});
  CHECK(odd_length_sequence(3).signed_values() == std::vector<int>{1, -1});
  CHECK(odd_length_sequence(11).signed_values() ==
        std::vector<int>{1, -2, 3, -4, 5, 4, -3, 2, -1, -5});
  CHECK_THROWS_AS(odd_length_sequence(12), Error);
  CHECK_THROWS_AS(odd_length_sequence(1), Error);
}

TEST_CASE("odd sequences use every length once and close without revisiting") {
  for (int n = 3; n <= 199; n += 2) {
    const auto seq = odd_length_sequence(n);
    REQUIRE(seq.size() == static_cast<std::size_t>(n - 1));
    std::set<int> residues;
    for (const auto& l : seq) residues.insert(l.residue());
    CHECK(residues.size() == static_cast<std::size_t>(n - 1));
    CHECK(oracle::closes_without_revisit(n, seq.signed_values()));
  }
}

TEST_CASE("skipped vertex") {
  CHECK(skipped_vertex_odd(13).label() == 4);
  CHECK(skipped_vertex_odd(11).label() == -3);
  CHECK(skipped_vertex_odd(5).label() == 2);
  for (int n = 3; n <= 199; n += 2) {
    const auto visited = oracle::walk(n, 0, odd_length_sequence(n).signed_values());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : visited) seen[static_cast<std::size_t>(v)] = 1;
    const auto missing = std::find(seen.begin(), seen.end(), 0) - seen.begin();
    CHECK(skipped_vertex_odd(n).value() == missing);
  }
}

TEST_CASE("odd decomposition") {
  SUBCASE("n=13: each cycle has one edge of every length") {
    const auto inst = build_odd_decomposition(13);
    REQUIRE(inst.decomposition.cycles.size() == 13);
    for (const auto& c : inst.decomposition.cycles) {
      CHECK(c.size() == 12);
      CHECK(has_distinct_lengths(c));
    }
  }
  SUBCASE("n=3 is three 2-cycles {v, v+1}") {
    const auto inst = build_odd_decomposition(3);
    CHECK(label_lists(inst.decomposition) ==
          std::vector<std::vector<int>>{{0, 1}, {1, -1}, {-1, 0}});
    CHECK(verify_edge_partition(inst.decomposition).passed());
  }
  SUBCASE("n=5 columns are permutations") {
    const auto inst = build_odd_decomposition(5);
    const std::vector<std::vector<int>> expected{
        {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}, {4, 0, 1, 2, 3}, {3, 4, 0, 1, 2}};
    for (int t = 0; t < 4; ++t) {
      std::vector<int> col;
      for (const auto& v : positions_at(inst.decomposition, *inst.schedule, t)) col.push_back(v.value());
      CHECK(col == expected[static_cast<std::size_t>(t)]);
    }
  }
}

TEST_CASE("mod-4 length sequences") {
  CHECK(mod4_a_length_sequence(24).signed_values() ==
        std::vector<int>{12, 1, 1, -4, 5, -4, 5, -8, 9, -8, 9, 11, -10, 11, -10, 7, -6, 7, -6, 3, -2, 3, -2});
  CHECK(mod4_b_length_sequence(24).signed_values() ==
        std::vector<int>{12, -1, -1, 4, -5, 4, -5, 8, -9, 8, -9, -11, 10, -11, 10, -7, 6, -7, 6, -3, 2, -3, 2});
  CHECK(mod4_a_length_sequence(4).signed_values() == std::vector<int>{2, 1, 1});
  CHECK(mod4_b_length_sequence(4).signed_values() == std::vector<int>{2, -1, -1});
  CHECK(mod4_a_length_sequence(8).signed_values() == std::vector<int>{4, 1, 1, 3, -2, 3, -2});
  CHECK(mod4_b_length_sequence(8).signed_values() == std::vector<int>{4, -1, -1, -3, 2, -3, 2});
  CHECK(oracle::walk(8, 1, {4, 1, 1, 3, -2, 3, -2}) == std::vector<int>{1, 5, 6, 7, 2, 0, 3});
  CHECK_THROWS_AS(mod4_a_length_sequence(6), Error);
  CHECK_THROWS_AS(mod4_b_length_sequence(10), Error);

  const auto blocks = mod4_blocks(24);
  REQUIRE(blocks.size() == 5);
  CHECK(blocks[0].kind == Block::Kind::kIncreasing);
  CHECK(blocks[1].index == 2);
  CHECK(blocks[2].kind == Block::Kind::kDecreasing);
  CHECK(blocks[2].index == 3);
  CHECK(blocks[4].index == 1);
}

TEST_CASE("mod-4 A sequence uses k once and one sign of every other length twice") {
  for (int n = 4; n <= 96; n += 4) {
    const int k = n / 2;
    const auto seq = mod4_a_length_sequence(n);
    REQUIRE(seq.size() == static_cast<std::size_t>(n - 1));
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (const auto& l : seq) ++count[static_cast<std::size_t>(l.residue())];
    CHECK(count[static_cast<std::size_t>(k)] == 1);
    for (int l = 1; l < k; ++l) {
      const int a = count[static_cast<std::size_t>(l)];
      const int b = count[static_cast<std::size_t>(n - l)];
      CHECK(((a == 2 && b == 0) || (a == 0 && b == 2)));
    }
    std::vector<int> a_values = seq.signed_values();
    CHECK(oracle::closes_without_revisit(n, a_values));
    CHECK(oracle::closes_without_revisit(n, mod4_b_length_sequence(n).signed_values()));
  }
}

TEST_CASE("mod-4 decomposition") {
  SUBCASE("n=4 hand enumeration") {
    const auto inst = build_mod4_decomposition(4);
    CHECK(label_lists(inst.decomposition) ==
          std::vector<std::vector<int>>{{1, -1, 0}, {-1, 1, 2}, {0, 2, 1}, {2, 0, -1}});
    CHECK(full_verify(inst.decomposition, *inst.schedule).passed());
  }
  SUBCASE("n=24: one edge of length 12 per cycle, groups keep opposite parity") {
    const auto inst = build_mod4_decomposition(24);
    const auto& d = inst.decomposition;
    REQUIRE(d.cycles.size() == 24);
    for (const auto& c : d.cycles) {
      int twelve = 0;
      for (const auto& l : c.length_sequence()) twelve += l.residue() == 12;
      CHECK(twelve == 1);
    }
    for (int t = 0; t < 23; ++t) {
      const auto pos = positions_at(d, *inst.schedule, t);
      const int a_parity = pos[0].label() & 1;
      for (std::size_t i = 0; i < 24; ++i) {
        CHECK((pos[i].label() & 1) == (i < 12 ? a_parity : 1 - a_parity));
      }
    }
  }
  SUBCASE("every nomad traverses lengths of one parity at each step") {
    for (int n = 4; n <= 96; n += 4) {
      const auto inst = build_mod4_decomposition(n);
      const auto& d = inst.decomposition;
      const std::size_t len = static_cast<std::size_t>(n - 1);
      for (std::size_t t = 0; t < len; ++t) {
        const int parity = mod(d.cycles[0].values()[(t + 1) % len] - d.cycles[0].values()[t], n) & 1;
        for (const auto& c : d.cycles) {
          CHECK((mod(c.values()[(t + 1) % len] - c.values()[t], n) & 1) == parity);
        }
      }
    }
  }
}

TEST_CASE("rotation families are rotationally symmetric with their offsets") {
  const auto odd = build_odd_decomposition(11);
  for (int i = 0; i < 11; ++i) {
    CHECK(verify_rotational_symmetry(odd.decomposition.cycles[static_cast<std::size_t>(i)],
                                     odd.decomposition.cycles[0], 0, 0) == i);
  }
  const auto even = build_mod4_decomposition(16);
  for (int group = 0; group < 2; ++group) {
    const auto& base = even.decomposition.cycles[static_cast<std::size_t>(8 * group)];
    for (int r = 0; r < 8; ++r) {
      CHECK(verify_rotational_symmetry(even.decomposition.cycles[static_cast<std::size_t>(8 * group + r)],
                                       base, 0, 0) == 2 * r);
    }
  }
}

TEST_CASE("generate dispatches and rejects 2 mod 4") {
  CHECK(generate(9).decomposition == build_odd_decomposition(9).decomposition);
  CHECK(generate(12).decomposition == build_mod4_decomposition(12).decomposition);
  try {
    generate(6);
    FAIL("expected unsupported order");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUnsupportedOrder);
    CHECK(std::string(e.what()).find("open") != std::string::npos);
  }
  CHECK_THROWS_AS(generate(2), Error);
}

TEST_CASE("constructions pass full verification") {
  for (int n = 3; n <= 99; n += 2) {
    const auto inst = build_odd_decomposition(n);
    CHECK_MESSAGE(full_verify(inst.decomposition, *inst.schedule).passed(), "odd n=", n);
  }
  for (int n = 4; n <= 96; n += 4) {
    const auto inst = build_mod4_decomposition(n);
    CHECK_MESSAGE(full_verify(inst.decomposition, *inst.schedule).passed(), "mod-4 n=", n);
  }
}

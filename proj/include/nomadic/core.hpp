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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nomadic/error.hpp"

namespace nomadic {

// Smallest order that admits a cycle of length at least two.
inline constexpr int kMinOrder = 3;

// Least non-negative residue of `a` modulo `n`.
constexpr int mod(std::int64_t a, int n) {
  const std::int64_t r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Signed display label of residue `value`: odd n uses -k..k with
// k = (n-1)/2, even n uses -(k-1)..k with k = n/2.
constexpr int signed_label(int n, int value) {
  return value <= n / 2 ? value : value - n;
}

constexpr int from_signed_label(int n, int label) { return mod(label, n); }

void require_order(int n);

class Vertex {
 public:
  Vertex(int n, int value);
  static Vertex from_label(int n, int label);

  int value() const noexcept { return value_; }
  int order() const noexcept { return order_; }
  int label() const noexcept { return signed_label(order_, value_); }

  Vertex shifted(std::int64_t offset) const {
    return Vertex(order_, mod(value_ + offset, order_));
  }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  int order_;
  int value_;
};

// A nonzero residue modulo n. Any integer is accepted and reduced; a zero
// residue is a loop and is rejected.
class EdgeLength {
 public:
  EdgeLength(int n, std::int64_t length);

  int residue() const noexcept { return residue_; }
  int order() const noexcept { return order_; }
  int signed_value() const noexcept { return signed_label(order_, residue_); }

  EdgeLength negated() const { return EdgeLength(order_, order_ - residue_); }
  bool self_negating() const noexcept { return 2 * residue_ == order_; }

  friend bool operator==(const EdgeLength&, const EdgeLength&) = default;

 private:
  int order_;
  int residue_;
};

EdgeLength edge_length(const Vertex& from, const Vertex& to);

class LengthSequence {
 public:
  LengthSequence(int n, std::vector<EdgeLength> lengths);
  static LengthSequence from_signed(int n, std::span<const int> lengths);
  static LengthSequence from_signed(int n, std::initializer_list<int> lengths) {
    return from_signed(n, std::span<const int>(lengths.begin(), lengths.size()));
  }

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return lengths_.size(); }
  const EdgeLength& operator[](std::size_t i) const { return lengths_[i]; }
  auto begin() const { return lengths_.begin(); }
  auto end() const { return lengths_.end(); }

  // Displacement after the first `t` terms.
  int partial_sum(std::size_t t) const;
  int total() const { return partial_sum(size()); }
  bool closes() const { return total() == 0; }

  LengthSequence negated() const;
  std::vector<int> signed_values() const;

  friend bool operator==(const LengthSequence&, const LengthSequence&) = default;

 private:
  int order_;
  std::vector<EdgeLength> lengths_;
};

// A directed cycle of K*_n stored as the vertex visit order; the last vertex
// returns to the first. Only vertex ranges are enforced here so that the
// verifier can inspect arbitrary candidates.
class DirectedCycle {
 public:
  DirectedCycle(int n, std::vector<int> values);
  static DirectedCycle from_labels(int n, std::span<const int> labels);
  static DirectedCycle from_labels(int n, std::initializer_list<int> labels) {
    return from_labels(n, std::span<const int>(labels.begin(), labels.size()));
  }

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const int> values() const noexcept { return values_; }
  Vertex vertex(std::size_t i) const { return Vertex(order_, values_[i]); }
  std::vector<int> labels() const;

  // The vertex reached by following the cycle `k` steps from index `i`.
  Vertex advance(std::size_t i, std::int64_t k) const;

  // Consecutive pairs including the wraparound edge.
  std::vector<std::pair<int, int>> edges() const;
  LengthSequence length_sequence() const;

  friend bool operator==(const DirectedCycle&, const DirectedCycle&) = default;

 private:
  int order_;
  std::vector<int> values_;
};

DirectedCycle cycle_from_lengths(const Vertex& start, const LengthSequence& seq);
DirectedCycle rotate_cycle(const DirectedCycle& cycle, std::int64_t offset);

enum class DecompositionKind { kNearHamiltonian, kHamiltonian };

const char* to_string(DecompositionKind kind);

struct Decomposition {
  int n = 0;
  DecompositionKind kind = DecompositionKind::kNearHamiltonian;
  std::vector<DirectedCycle> cycles;

  std::size_t expected_cycle_count() const;
  std::size_t expected_cycle_length() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// One root index per cycle: nomad i is at cycles[i][roots[i]] at time 0.
struct NomadSchedule {
  std::vector<std::size_t> roots;

  static NomadSchedule zeros(std::size_t cycles) {
    return NomadSchedule{std::vector<std::size_t>(cycles, 0)};
  }
  bool matches(const Decomposition& d) const;

  friend bool operator==(const NomadSchedule&, const NomadSchedule&) = default;
};

struct Instance {
  Decomposition decomposition;
  std::optional<NomadSchedule> schedule;

  friend bool operator==(const Instance&, const Instance&) = default;
};

std::vector<Vertex> positions_at(const Decomposition& d, const NomadSchedule& s,
                                 std::int64_t t);

// Least common multiple of the cycle lengths, saturating at `cap`.
std::uint64_t period(const Decomposition& d,
                     std::uint64_t cap = UINT64_MAX);

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;  // first violation, empty when passed
  std::size_t violations = 0;
};

class VerificationReport {
 public:
  void add(Check check) { checks_.push_back(std::move(check)); }
  void merge(const VerificationReport& other);

  bool passed() const;
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const Check* find(std::string_view name) const;
  std::string summary() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace nomadic

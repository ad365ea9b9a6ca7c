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

#include "nomadic/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nomadic {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kLoop: return "loop";
    case ErrorKind::kOrderMismatch: return "order-mismatch";
    case ErrorKind::kOpenWalk: return "open-walk";
    case ErrorKind::kPrematureRevisit: return "premature-revisit";
    case ErrorKind::kUnsupportedOrder: return "unsupported-order";
    case ErrorKind::kArgument: return "argument";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kFormat: return "format";
  }
  return "unknown";
}

const char* to_string(DecompositionKind kind) {
  return kind == DecompositionKind::kNearHamiltonian ? "near-hamiltonian"
                                                     : "hamiltonian";
}

void require_order(int n) {
  if (n < kMinOrder) {
    throw Error(ErrorKind::kUnsupportedOrder,
                "order " + std::to_string(n) + " is below the minimum of 3");
  }
}

Vertex::Vertex(int n, int value) : order_(n), value_(value) {
  require_order(n);
  if (value < 0 || value >= n) {
    throw Error(ErrorKind::kArgument, "vertex " + std::to_string(value) +
                                          " outside [0, " + std::to_string(n) +
                                          ")");
  }
}

Vertex Vertex::from_label(int n, int label) {
  require_order(n);
  const int lo = -((n - 1) / 2);
  const int hi = n / 2;
  if (label < lo || label > hi) {
    throw Error(ErrorKind::kArgument, "label " + std::to_string(label) +
                                          " outside [" + std::to_string(lo) +
                                          ", " + std::to_string(hi) + "]");
  }
  return Vertex(n, from_signed_label(n, label));
}

EdgeLength::EdgeLength(int n, std::int64_t length) : order_(n), residue_(0) {
  require_order(n);
  residue_ = mod(length, n);
  if (residue_ == 0) {
    throw Error(ErrorKind::kLoop, "edge length " + std::to_string(length) +
                                      " is 0 mod " + std::to_string(n));
  }
}

EdgeLength edge_length(const Vertex& from, const Vertex& to) {
  if (from.order() != to.order()) {
    throw Error(ErrorKind::kOrderMismatch, "vertices of different orders");
  }
  if (from == to) {
    throw Error(ErrorKind::kLoop,
                "loop at vertex " + std::to_string(from.value()));
  }
  return EdgeLength(from.order(), to.value() - from.value());
}

LengthSequence::LengthSequence(int n, std::vector<EdgeLength> lengths)
    : order_(n), lengths_(std::move(lengths)) {
  require_order(n);
  for (const auto& l : lengths_) {
    if (l.order() != n) {
      throw Error(ErrorKind::kOrderMismatch, "length of a different order");
    }
  }
}

LengthSequence LengthSequence::from_signed(int n, std::span<const int> lengths) {
  std::vector<EdgeLength> out;
  out.reserve(lengths.size());
  for (int l : lengths) out.emplace_back(n, l);
  return LengthSequence(n, std::move(out));
}

int LengthSequence::partial_sum(std::size_t t) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < t && i < lengths_.size(); ++i) {
    sum += lengths_[i].residue();
  }
  return mod(sum, order_);
}

LengthSequence LengthSequence::negated() const {
  std::vector<EdgeLength> out;
  out.reserve(lengths_.size());
  for (const auto& l : lengths_) out.push_back(l.negated());
  return LengthSequence(order_, std::move(out));
}

std::vector<int> LengthSequence::signed_values() const {
  std::vector<int> out;
  out.reserve(lengths_.size());
  for (const auto& l : lengths_) out.push_back(l.signed_value());
  return out;
}

DirectedCycle::DirectedCycle(int n, std::vector<int> values)
    : order_(n), values_(std::move(values)) {
  require_order(n);
  if (values_.empty()) {
    throw Error(ErrorKind::kArgument, "a cycle needs at least one vertex");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] >= n) {
      throw Error(ErrorKind::kArgument,
                  "vertex " + std::to_string(values_[i]) + " at position " +
                      std::to_string(i) + " outside [0, " +
                      std::to_string(n) + ")",
                  static_cast<std::int64_t>(i));
    }
  }
}

DirectedCycle DirectedCycle::from_labels(int n, std::span<const int> labels) {
  std::vector<int> values;
  values.reserve(labels.size());
  for (int l : labels) values.push_back(Vertex::from_label(n, l).value());
  return DirectedCycle(n, std::move(values));
}

std::vector<int> DirectedCycle::labels() const {
  std::vector<int> out;
  out.reserve(values_.size());
  for (int v : values_) out.push_back(signed_label(order_, v));
  return out;
}

Vertex DirectedCycle::advance(std::size_t i, std::int64_t k) const {
  const auto len = static_cast<std::int64_t>(values_.size());
  const auto idx = ((static_cast<std::int64_t>(i) + k) % len + len) % len;
  return Vertex(order_, values_[static_cast<std::size_t>(idx)]);
}

std::vector<std::pair<int, int>> DirectedCycle::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.emplace_back(values_[i], values_[(i + 1) % values_.size()]);
  }
  return out;
}

LengthSequence DirectedCycle::length_sequence() const {
  std::vector<EdgeLength> out;
  out.reserve(values_.size());
  for (const auto& [u, v] : edges()) {
    out.push_back(edge_length(Vertex(order_, u), Vertex(order_, v)));
  }
  return LengthSequence(order_, std::move(out));
}

DirectedCycle cycle_from_lengths(const Vertex& start, const LengthSequence& seq) {
  const int n = start.order();
  if (seq.order() != n) {
    throw Error(ErrorKind::kOrderMismatch,
                "start vertex and sequence have different orders");
  }
  if (seq.size() == 0) {
    throw Error(ErrorKind::kArgument, "empty length sequence");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> values;
  values.reserve(seq.size());
  int at = start.value();
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (seen[static_cast<std::size_t>(at)]) {
      throw Error(ErrorKind::kPrematureRevisit,
                  "vertex " + std::to_string(at) + " revisited at step " +
                      std::to_string(t),
                  static_cast<std::int64_t>(t));
    }
    seen[static_cast<std::size_t>(at)] = 1;
    values.push_back(at);
    at = mod(at + seq[t].residue(), n);
  }
  if (at != start.value()) {
    throw Error(ErrorKind::kOpenWalk,
                "lengths sum to " + std::to_string(seq.total()) + " mod " +
                    std::to_string(n) + ", walk does not close");
  }
  return DirectedCycle(n, std::move(values));
}

DirectedCycle rotate_cycle(const DirectedCycle& cycle, std::int64_t offset) {
  const int n = cycle.order();
  std::vector<int> values(cycle.values().begin(), cycle.values().end());
  for (int& v : values) v = mod(v + offset, n);
  return DirectedCycle(n, std::move(values));
}

std::size_t Decomposition::expected_cycle_count() const {
  const auto un = static_cast<std::size_t>(n);
  return kind == DecompositionKind::kNearHamiltonian ? un : un - 1;
}

std::size_t Decomposition::expected_cycle_length() const {
  const auto un = static_cast<std::size_t>(n);
  return kind == DecompositionKind::kNearHamiltonian ? un - 1 : un;
}

bool NomadSchedule::matches(const Decomposition& d) const {
  if (roots.size() != d.cycles.size()) return false;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i] >= d.cycles[i].size()) return false;
  }
  return true;
}

std::vector<Vertex> positions_at(const Decomposition& d, const NomadSchedule& s,
                                 std::int64_t t) {
  if (!s.matches(d)) {
    throw Error(ErrorKind::kPrecondition,
                "schedule does not match the decomposition");
  }
  std::vector<Vertex> out;
  out.reserve(d.cycles.size());
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    out.push_back(d.cycles[i].advance(s.roots[i], t));
  }
  return out;
}

std::uint64_t period(const Decomposition& d, std::uint64_t cap) {
  std::uint64_t p = 1;
  for (const auto& c : d.cycles) {
    const std::uint64_t len = c.size();
    const std::uint64_t g = std::gcd(p, len);
    const std::uint64_t step = len / g;
    if (p > cap / step) return cap;
    p *= step;
  }
  return std::min(p, cap);
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) os << ": " << c.witness;
    os << '\n';
  }
  return os.str();
}

}  // namespace nomadic

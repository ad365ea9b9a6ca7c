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
#include <string>
#include <string_view>

#include "nomadic/core.hpp"

namespace nomadic {

// Canonical decomposition document: sorted keys, no insignificant
// whitespace, trailing newline. Vertices are residues 0..n-1.
//   {"cycles":[[...],...],"kind":"near-hamiltonian","n":N,"roots":[...]}
// "roots" is omitted when the instance carries no schedule.
std::string serialize(const Instance& instance);

// Validates structure only (types, vertex ranges, root ranges). Whether the
// cycles form a decomposition is the verifier's business.
Instance deserialize(std::string_view text);

Instance read_instance_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

enum class FigureFormat { kDot, kSvg };

FigureFormat parse_figure_format(std::string_view name);

struct SvgOptions {
  bool clockwise = true;  // 0 at top, positive labels clockwise
  double size = 480.0;
};

// Whole decomposition as one digraph; each edge carries its cycle index and
// signed length.
std::string to_dot(const Instance& instance);

// Vertices on a circle with signed labels, one cycle drawn as chords with an
// arrowhead on the root's outgoing edge.
std::string to_svg(const Instance& instance, std::size_t cycle,
                   const SvgOptions& options = {});

// svg requires a cycle selection.
std::string export_figure(const Instance& instance, FigureFormat format,
                          std::optional<std::size_t> cycle,
                          const SvgOptions& options = {});

}  // namespace nomadic

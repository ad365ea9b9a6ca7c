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

#include "nomadic/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace nomadic {
namespace {

using nlohmann::json;

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorKind::kFormat, what);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

std::int64_t read_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) format_error(field + ": expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

std::string serialize(const Instance& instance) {
  const auto& d = instance.decomposition;
  json doc = json::object();
  doc["n"] = d.n;
  doc["kind"] = to_string(d.kind);
  json cycles = json::array();
  for (const auto& c : d.cycles) {
    cycles.push_back(std::vector<int>(c.values().begin(), c.values().end()));
  }
  doc["cycles"] = std::move(cycles);
  if (instance.schedule) doc["roots"] = instance.schedule->roots;
  return doc.dump() + "\n";
}

Instance deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kFormat,
                "line " + std::to_string(line_of(text, e.byte)) +
                    ": malformed JSON (" + e.what() + ")",
                static_cast<std::int64_t>(line_of(text, e.byte)));
  }
  if (!doc.is_object()) format_error("document: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "kind" && key != "cycles" && key != "roots") {
      format_error("unknown field '" + key + "'");
    }
  }
  for (const char* key : {"n", "kind", "cycles"}) {
    if (!doc.contains(key)) format_error(std::string("missing field '") + key + "'");
  }

  Instance out;
  auto& d = out.decomposition;
  const auto n = read_int(doc["n"], "n");
  if (n < kMinOrder || n > 1 << 20) format_error("n: " + std::to_string(n) + " out of range");
  d.n = static_cast<int>(n);

  if (!doc["kind"].is_string()) format_error("kind: expected a string");
  const auto kind = doc["kind"].get<std::string>();
  if (kind == "near-hamiltonian") {
    d.kind = DecompositionKind::kNearHamiltonian;
  } else if (kind == "hamiltonian") {
    d.kind = DecompositionKind::kHamiltonian;
  } else {
    format_error("kind: unknown kind '" + kind + "'");
  }

  const auto& cycles = doc["cycles"];
  if (!cycles.is_array()) format_error("cycles: expected an array");
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    const std::string where = "cycles[" + std::to_string(ci) + "]";
    if (!cycles[ci].is_array() || cycles[ci].empty()) {
      format_error(where + ": expected a non-empty array of vertices");
    }
    std::vector<int> values;
    for (std::size_t k = 0; k < cycles[ci].size(); ++k) {
      const std::string field = where + "[" + std::to_string(k) + "]";
      const auto v = read_int(cycles[ci][k], field);
      if (v < 0 || v >= n) {
        format_error(field + ": vertex " + std::to_string(v) + " outside [0, " +
                     std::to_string(n) + ") in cycle " + std::to_string(ci) +
                     " at position " + std::to_string(k));
      }
      values.push_back(static_cast<int>(v));
    }
    d.cycles.emplace_back(d.n, std::move(values));
  }

  if (doc.contains("roots")) {
    const auto& roots = doc["roots"];
    if (!roots.is_array()) format_error("roots: expected an array");
    if (roots.size() != d.cycles.size()) {
      format_error("roots: " + std::to_string(roots.size()) + " roots for " +
                   std::to_string(d.cycles.size()) + " cycles");
    }
    NomadSchedule s;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const std::string field = "roots[" + std::to_string(i) + "]";
      const auto r = read_int(roots[i], field);
      if (r < 0 || static_cast<std::size_t>(r) >= d.cycles[i].size()) {
        format_error(field + ": root index " + std::to_string(r) +
                     " not below cycle length " +
                     std::to_string(d.cycles[i].size()));
      }
      s.roots.push_back(static_cast<std::size_t>(r));
    }
    out.schedule = std::move(s);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kArgument, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kArgument, "cannot write '" + path + "'");
  out << text;
}

Instance read_instance_file(const std::string& path) {
  return deserialize(read_text_file(path));
}

FigureFormat parse_figure_format(std::string_view name) {
  if (name == "dot") return FigureFormat::kDot;
  if (name == "svg") return FigureFormat::kSvg;
  throw Error(ErrorKind::kArgument,
              "unknown figure format '" + std::string(name) + "' (dot|svg)");
}

std::string to_dot(const Instance& instance) {
  const auto& d = instance.decomposition;
  std::ostringstream os;
  os << "digraph K" << d.n << " {\n";
  os << "  // n=" << d.n << " kind=" << to_string(d.kind)
     << " cycles=" << d.cycles.size() << "\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < d.n; ++v) {
    os << "  v" << v << " [label=\"" << signed_label(d.n, v) << "\"];\n";
  }
  for (std::size_t ci = 0; ci < d.cycles.size(); ++ci) {
    for (const auto& [u, v] : d.cycles[ci].edges()) {
      const int len = signed_label(d.n, mod(v - u, d.n));
      os << "  v" << u << " -> v" << v << " [cycle=" << ci << ", length=" << len
         << ", colorscheme=set19, color=" << ci % 9 + 1 << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_svg(const Instance& instance, std::size_t cycle,
                   const SvgOptions& options) {
  const auto& d = instance.decomposition;
  if (cycle >= d.cycles.size()) {
    throw Error(ErrorKind::kArgument, "cycle " + std::to_string(cycle) +
                                          " does not exist (" +
                                          std::to_string(d.cycles.size()) +
                                          " cycles)");
  }
  const double size = options.size;
  const double c = size / 2;
  const double radius = size * 0.4;
  const double label_radius = radius + size * 0.05;
  const double dir = options.clockwise ? 1.0 : -1.0;
  auto point = [&](int v, double r) {
    const double theta = 2 * std::numbers::pi * v / d.n;
    return std::pair{c + dir * r * std::sin(theta), c - r * std::cos(theta)};
  };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size
     << "\">\n";
  os << "<g stroke=\"black\" stroke-width=\"1.2\">\n";
  const auto& cyc = d.cycles[cycle];
  for (const auto& [u, v] : cyc.edges()) {
    const auto [x1, y1] = point(u, radius);
    const auto [x2, y2] = point(v, radius);
    os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
       << "\" y2=\"" << y2 << "\"/>\n";
  }
  os << "</g>\n";

  // Arrowhead at the middle of the root's outgoing edge.
  const std::size_t root = instance.schedule && cycle < instance.schedule->roots.size()
                               ? instance.schedule->roots[cycle] % cyc.size()
                               : 0;
  {
    const int u = cyc.values()[root];
    const int v = cyc.values()[(root + 1) % cyc.size()];
    const auto [x1, y1] = point(u, radius);
    const auto [x2, y2] = point(v, radius);
    const double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
    const double len = std::hypot(x2 - x1, y2 - y1);
    const double ux = len > 0 ? (x2 - x1) / len : 0, uy = len > 0 ? (y2 - y1) / len : 0;
    const double head = size * 0.03;
    const double half = head * 0.45;
    os << "<polygon class=\"arrow\" fill=\"black\" points=\"" << mx + ux * head
       << ',' << my + uy * head << ' ' << mx - uy * half << ',' << my + ux * half
       << ' ' << mx + uy * half << ',' << my - ux * half << "\"/>\n";
  }

  for (int v = 0; v < d.n; ++v) {
    const auto [x, y] = point(v, radius);
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << size * 0.008
       << "\" fill=\"black\"/>\n";
  }
  for (int v = 0; v < d.n; ++v) {
    const auto [x, y] = point(v, label_radius);
    os << "<text x=\"" << x << "\" y=\"" << y
       << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
          "font-family=\"serif\" font-size=\""
       << size * 0.035 << "\">" << signed_label(d.n, v) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string export_figure(const Instance& instance, FigureFormat format,
                          std::optional<std::size_t> cycle,
                          const SvgOptions& options) {
  if (format == FigureFormat::kDot) return to_dot(instance);
  if (!cycle) {
    throw Error(ErrorKind::kArgument, "svg export needs a cycle selection");
  }
  return to_svg(instance, *cycle, options);
}

}  // namespace nomadic

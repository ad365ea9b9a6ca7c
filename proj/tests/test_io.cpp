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

#include <cstdio>
#include <regex>
#include <set>

#include "doctest.h"
#include "nomadic/constructors.hpp"
#include "nomadic/io.hpp"
#include "nomadic/verifier.hpp"

using namespace nomadic;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++c;
  }
  return c;
}

std::string format_error_of(const std::string& text) {
  try {
    deserialize(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFormat);
    return e.what();
  }
  FAIL("expected a format error for " << text);
  return {};
}

}  // namespace

TEST_CASE("instance serialization") {
  const auto inst = build_mod4_decomposition(4);
  const std::string expected =
      R"({"cycles":[[1,3,0],[3,1,2],[0,2,1],[2,0,3]],"kind":"near-hamiltonian","n":4,"roots":[0,0,0,0]})"
      "\n";
  CHECK(serialize(inst) == expected);
  CHECK(serialize(deserialize(expected)) == expected);
  CHECK(deserialize(expected) == inst);

  SUBCASE("round trip over generated orders") {
    for (int n = 3; n <= 96; ++n) {
      if (n % 4 == 2) continue;
      const auto g = generate(n);
      const auto text = serialize(g);
      CHECK(deserialize(text) == g);
      CHECK(serialize(deserialize(text)) == text);
    }
  }
  SUBCASE("roots are optional") {
    Instance bare{inst.decomposition, std::nullopt};
    const auto text = serialize(bare);
    CHECK(text.find("roots") == std::string::npos);
    CHECK_FALSE(deserialize(text).schedule.has_value());
  }
  SUBCASE("whitespace and key order do not matter") {
    const auto parsed = deserialize(
        "{\n  \"n\": 4,\n  \"roots\": [0, 0, 0, 0],\n  \"kind\": \"near-hamiltonian\",\n"
        "  \"cycles\": [[1, 3, 0], [3, 1, 2], [0, 2, 1], [2, 0, 3]]\n}\n");
    CHECK(parsed == inst);
  }
  SUBCASE("files") {
    const std::string path = "nomadic_io_test_instance.json";
    write_text_file(path, serialize(inst));
    CHECK(read_instance_file(path) == inst);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_instance_file("does/not/exist.json"), Error);
  }
}

TEST_CASE("deserialization errors") {
  const auto range = format_error_of(
      R"({"n":6,"kind":"near-hamiltonian","cycles":[[0,1,2,3,4],[0,9,1,2,3]]})");
  CHECK(range.find("vertex 9") != std::string::npos);
  CHECK(range.find("cycle 1") != std::string::npos);
  CHECK(range.find("position 1") != std::string::npos);

  const auto malformed = format_error_of("{\n\"n\": 6,\n\"kind\": \"near-hamiltonian\",\n\"cycles\": [[0,1,]\n}");
  CHECK(std::regex_search(malformed, std::regex("line [0-9]+")));
  CHECK(malformed.find("line 4") != std::string::npos);

  const auto root = format_error_of(R"({"n":3,"kind":"hamiltonian","cycles":[[0,1,2],[0,2,1]],"roots":[0,3]})");
  CHECK(root.find("roots[1]") != std::string::npos);

  CHECK(format_error_of(R"({"n":3,"kind":"hamiltonian","cycles":[[0,1,2]],"extra":1})")
            .find("extra") != std::string::npos);
  CHECK(format_error_of(R"({"n":3,"kind":"hamiltonian"})").find("cycles") != std::string::npos);
  CHECK(format_error_of(R"({"n":3,"kind":"tour","cycles":[[0,1,2]]})").find("kind") !=
        std::string::npos);
  CHECK(format_error_of(R"({"n":3.5,"kind":"hamiltonian","cycles":[[0,1,2]]})").find("n") !=
        std::string::npos);
  CHECK(format_error_of(R"({"n":3,"kind":"hamiltonian","cycles":[[]]})").find("cycles[0]") !=
        std::string::npos);
  CHECK(format_error_of(R"({"n":3,"kind":"hamiltonian","cycles":[[0,1,2]],"roots":[0,0]})")
            .find("roots") != std::string::npos);
  CHECK(format_error_of("[1,2,3]").find("object") != std::string::npos);
}

TEST_CASE("structurally valid but wrong instances parse and then fail verification") {
  const auto inst = deserialize(
      R"({"n":6,"kind":"near-hamiltonian","cycles":[[0,1,2,3,4],[1,2,3,4,5],[2,3,4,5,0],[3,4,5,0,1],[4,5,0,1,2]]})");
  CHECK(inst.decomposition.cycles.size() == 5);
  const auto r = verify_cycle_kind(inst.decomposition);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(verify_edge_partition(inst.decomposition).passed());
}

TEST_CASE("dot export") {
  const auto dot = to_dot(build_mod4_decomposition(4));
  CHECK(dot.rfind("digraph K4 {", 0) == 0);
  CHECK(count(dot, " -> ") == 12);
  std::set<std::string> cycles;
  const std::regex attr("cycle=([0-9]+)");
  for (std::sregex_iterator it(dot.begin(), dot.end(), attr), end; it != end; ++it) {
    cycles.insert((*it)[1]);
  }
  CHECK(cycles.size() == 4);
  CHECK(dot.find("label=\"-1\"") != std::string::npos);
  for (int n : {5, 8, 13}) {
    CHECK(count(to_dot(generate(n)), " -> ") == static_cast<std::size_t>(n * (n - 1)));
  }
}

TEST_CASE("svg export") {
  const auto inst = build_odd_decomposition(13);
  const auto svg = to_svg(inst, 0);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(count(svg, "<circle ") == 13);
  CHECK(count(svg, "<line ") == 12);
  CHECK(count(svg, "class=\"arrow\"") == 1);
  for (int label = -6; label <= 6; ++label) {
    CHECK(svg.find(">" + std::to_string(label) + "</text>") != std::string::npos);
  }
  CHECK(count(svg, "</text>") == 13);
  CHECK_THROWS_AS(to_svg(inst, 13), Error);

  SUBCASE("vertex 0 at the top and 1 to its right when clockwise") {
    const std::regex text_pos("<text x=\"([-0-9.e]+)\" y=\"([-0-9.e]+)\"[^>]*>(-?[0-9]+)</text>");
    double x0 = 0, y0 = 0, x1 = 0;
    double ymin = 1e9;
    for (std::sregex_iterator it(svg.begin(), svg.end(), text_pos), end; it != end; ++it) {
      const double x = std::stod((*it)[1]);
      const double y = std::stod((*it)[2]);
      ymin = std::min(ymin, y);
      if ((*it)[3] == "0") {
        x0 = x;
        y0 = y;
      }
      if ((*it)[3] == "1") x1 = x;
    }
    CHECK(y0 == doctest::Approx(ymin));
    CHECK(x1 > x0);
  }
}

TEST_CASE("figure dispatch") {
  const auto inst = build_odd_decomposition(5);
  CHECK(parse_figure_format("dot") == FigureFormat::kDot);
  CHECK(parse_figure_format("svg") == FigureFormat::kSvg);
  CHECK_THROWS_AS(parse_figure_format("png"), Error);
  CHECK(export_figure(inst, FigureFormat::kDot, std::nullopt) == to_dot(inst));
  CHECK(export_figure(inst, FigureFormat::kSvg, 2) == to_svg(inst, 2));
  try {
    export_figure(inst, FigureFormat::kSvg, std::nullopt);
    FAIL("expected an argument error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kArgument);
  }
}

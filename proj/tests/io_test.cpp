// Copyright 2026 The Cospectra Authors
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

#include <doctest.h>

#include <random>
#include <sstream>

#include "cospectra/errors.hpp"
#include "cospectra/io.hpp"
#include "fixtures.hpp"

namespace cospectra {
namespace {

ErrorKind parse_kind(const std::string& text) {
  try {
    (void)digraph_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInvalidArgument;
}

TEST_CASE("graph JSON round trips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Digraph g = testing::random_digraph(1 + trial % 9, 0.3, rng);
    CHECK(digraph_from_json(to_json(g)) == g);
    CHECK(digraph_from_json(Json::parse(to_json(g).dump())) == g);
  }
  const Digraph b = testing::b23();
  const Json j = to_json(b);
  CHECK(j["n"] == 8);
  CHECK(j["labels"][5] == Json::array({1, 0, 1}));
  CHECK(j["arcs"][0] == Json::array({0, 0}));
  CHECK(digraph_from_json(j) == b);
}

TEST_CASE("graph JSON arcs come out sorted") {
  const Digraph g(3, {{2, 0}, {0, 2}, {1, 1}, {0, 1}});
  CHECK(to_json(g)["arcs"].dump() == "[[0,1],[0,2],[1,1],[2,0]]");
  CHECK_FALSE(to_json(g).contains("labels"));
}

TEST_CASE("malformed graph JSON is a parse error") {
  CHECK(parse_kind(R"({"arcs": []})") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"n": 2, "arcs": [[0]]})") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"n": 2, "arcs": [[0, 5]]})") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"n": "two", "arcs": []})") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"n": 2, "arcs": [], "labels": [[0]]})") == ErrorKind::kParse);
  CHECK(parse_kind(R"([1, 2])") == ErrorKind::kParse);
  std::istringstream bad("{not json");
  CHECK_THROWS_AS(read_json("-", bad), Error);
  std::istringstream none;
  CHECK_THROWS_AS(read_json("/nonexistent/graph.json", none), Error);
}

TEST_CASE("DOT export") {
  const std::string dot = to_dot(de_bruijn({2, 2}));
  CHECK(dot.rfind("digraph G {\n", 0) == 0);
  CHECK(dot.find("  01 -> 10;\n") != std::string::npos);
  CHECK(dot.find("  11 -> 11;\n") != std::string::npos);
  std::size_t arcs = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++arcs;
  CHECK(arcs == 8);
  CHECK(to_dot(Digraph(2, {{1, 0}})).find("  1 -> 0;\n") != std::string::npos);
  CHECK(to_dot(kautz({10, 1})).find("  \"10\" -> 0;") == std::string::npos);
}

TEST_CASE("modification JSON") {
  const Digraph b = testing::b23();
  const Modification plan = testing::b23_prime_plan();
  const Json j = to_json(plan);
  CHECK(j["X"] == Json::array({4, 5}));
  CHECK(j["side"] == "out");
  const Modification back = modification_from_json(j, b);
  CHECK(back.removed() == plan.removed());
  CHECK(back.added() == plan.added());

  const Json by_label = Json::parse(R"({"X": ["100", "101"],
      "removed": [["100", "001"], ["101", "011"]],
      "added": [["100", "011"], ["101", "001"]]})");
  const Modification named = modification_from_json(by_label, b);
  CHECK(named.added() == plan.added());
  CHECK(named.side() == Side::kOut);

  CHECK_THROWS_AS(modification_from_json(Json::parse(R"({"removed": []})"), b), Error);
  CHECK_THROWS_AS(modification_from_json(Json::parse(R"({"X": [4], "side": "up"})"), b), Error);
  CHECK_THROWS_AS(modification_from_json(Json::parse(R"({"X": ["999"]})"), b), Error);
}

}  // namespace
}  // namespace cospectra

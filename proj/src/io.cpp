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

#include "cospectra/io.hpp"

#include <fstream>
#include <sstream>

#include "cospectra/errors.hpp"

namespace cospectra {
namespace {

Json arc_array(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

Vertex vertex_from_json(const Json& v, const Digraph& host) {
  if (v.is_number_unsigned()) {
    const auto idx = v.get<std::uint64_t>();
    if (idx >= host.order()) throw Error(ErrorKind::kParse, "vertex index out of range");
    return static_cast<Vertex>(idx);
  }
  if (v.is_string()) return host.resolve(v.get<std::string>());
  throw Error(ErrorKind::kParse, "vertex must be an index or a label string");
}

std::vector<Arc> arcs_from_json(const Json& j, const Digraph& host, const char* field) {
  std::vector<Arc> arcs;
  if (!j.contains(field)) return arcs;
  if (!j[field].is_array()) throw Error(ErrorKind::kParse, std::string(field) + " must be an array");
  for (const Json& a : j[field]) {
    if (!a.is_array() || a.size() != 2) {
      throw Error(ErrorKind::kParse, std::string(field) + " entries must be [u, v] pairs");
    }
    arcs.push_back({vertex_from_json(a[0], host), vertex_from_json(a[1], host)});
  }
  return arcs;
}

}  // namespace

Json to_json(const Digraph& g) {
  Json j;
  j["n"] = g.order();
  if (g.has_labels()) {
    Json labels = Json::array();
    for (const VertexWord& w : *g.labels()) {
      Json word = Json::array();
      for (std::uint8_t s : w.symbols) word.push_back(static_cast<unsigned>(s));
      labels.push_back(std::move(word));
    }
    j["labels"] = std::move(labels);
  }
  j["arcs"] = arc_array(g.arcs());
  return j;
}

Digraph digraph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs")) {
      throw Error(ErrorKind::kParse, "graph JSON needs fields \"n\" and \"arcs\"");
    }
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Arc> arcs;
    for (const Json& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::kParse, "arcs must be [u, v] pairs");
      arcs.push_back({a[0].get<Vertex>(), a[1].get<Vertex>()});
    }
    std::optional<std::vector<VertexWord>> labels;
    if (j.contains("labels") && !j["labels"].is_null()) {
      labels.emplace();
      for (const Json& w : j["labels"]) {
        VertexWord word;
        for (const Json& s : w) {
          const auto sym = s.get<unsigned>();
          if (sym > 255) throw Error(ErrorKind::kParse, "label symbol above 255");
          word.symbols.push_back(static_cast<std::uint8_t>(sym));
        }
        labels->push_back(std::move(word));
      }
    }
    try {
      return Digraph(n, std::move(arcs), std::move(labels));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInvalidArgument) throw;
      throw Error(ErrorKind::kParse, e.detail());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

std::string to_dot(const Digraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  auto id = [&](Vertex v) {
    const std::string name = g.vertex_name(v);
    const bool plain = name.find_first_not_of("0123456789") == std::string::npos;
    return plain ? name : "\"" + name + "\"";
  };
  for (const Arc& a : g.arcs()) os << "  " << id(a.tail) << " -> " << id(a.head) << ";\n";
  os << "}\n";
  return os.str();
}

Json to_json(const Modification& m) {
  Json j;
  j["X"] = m.set().members;
  j["removed"] = arc_array(m.removed());
  j["added"] = arc_array(m.added());
  j["side"] = std::string(to_string(m.side()));
  return j;
}

Modification modification_from_json(const Json& j, const Digraph& host) {
  try {
    if (!j.is_object() || !j.contains("X")) {
      throw Error(ErrorKind::kParse, "modification JSON needs field \"X\"");
    }
    std::vector<Vertex> members;
    for (const Json& v : j.at("X")) members.push_back(vertex_from_json(v, host));
    Side side = Side::kOut;
    if (j.contains("side")) {
      const auto s = j.at("side").get<std::string>();
      if (s == "in") side = Side::kIn;
      else if (s != "out") throw Error(ErrorKind::kParse, "side must be \"out\" or \"in\"");
    }
    return Modification(host, std::move(members), arcs_from_json(j, host, "removed"),
                        arcs_from_json(j, host, "added"), side);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

Json read_json(const std::string& path, std::istream& stdin_stream) {
  try {
    if (path == "-") return Json::parse(stdin_stream);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

}  // namespace cospectra

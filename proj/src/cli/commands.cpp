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

#include "cospectra/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "cospectra/enumerate.hpp"
#include "cospectra/errors.hpp"
#include "cospectra/families.hpp"
#include "cospectra/io.hpp"
#include "cospectra/iso.hpp"
#include "cospectra/modify.hpp"
#include "cospectra/spectral.hpp"

namespace cospectra::cli {
namespace {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json charpoly_json(const CharPoly& p) {
  Json j = Json::array();
  for (const Integer& c : p.coeffs) j.push_back(integer_json(c));
  return j;
}

Json spectrum_json(const IntSpectrum& s) {
  Json j = Json::object();
  for (const auto& [lambda, mult] : s.eigenvalues) j[lambda.str()] = mult;
  return j;
}

void add_spectrum(Json& j, const CharPoly& p) {
  const IntSpectrum s = integer_spectrum(p);
  j["charpoly"] = charpoly_json(p);
  j["spectrum"] = spectrum_json(s);
  if (!s.residual.is_one()) j["residual"] = charpoly_json(s.residual);
}

struct Io {
  std::istream& in;
  std::ostream& out;
};

Digraph load_graph(const std::string& path, Io io) {
  return digraph_from_json(read_json(path, io.in));
}

void emit_graph(const Digraph& g, bool dot, Io io) {
  if (dot) {
    io.out << to_dot(g);
  } else {
    io.out << to_json(g).dump() << "\n";
  }
}

int emit_bool(bool value, Io io) {
  io.out << (value ? "true" : "false") << "\n";
  return value ? kExitOk : kExitFalse;
}

std::string names(const Digraph& g, const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.vertex_name(vs[i]);
  return s + "}";
}

Json name_array(const Digraph& g, const std::vector<Vertex>& vs) {
  Json j = Json::array();
  for (Vertex v : vs) j.push_back(g.vertex_name(v));
  return j;
}

int info(const Digraph& g, bool json, Io io) {
  const std::size_t n = g.order();
  std::size_t out_min = n, out_max = 0, in_min = n, in_max = 0;
  for (Vertex v = 0; v < n; ++v) {
    out_min = std::min(out_min, g.out_degree(v));
    out_max = std::max(out_max, g.out_degree(v));
    in_min = std::min(in_min, g.in_degree(v));
    in_max = std::max(in_max, g.in_degree(v));
  }
  const bool sc = is_strongly_connected(g);
  // -1 when not strongly connected.
  const long diam = sc ? static_cast<long>(diameter(g)) : -1;
  const CharPoly p = char_poly(g);
  const auto out_sets = find_local_line_sets(g, Side::kOut);
  const auto in_sets = find_local_line_sets(g, Side::kIn);

  struct Row {
    unsigned ell;
    bool upp, kautz;
    std::optional<Integer> scale;
  };
  std::vector<Row> rows;
  if (diam >= 0) {
    for (unsigned ell = 1; ell <= static_cast<unsigned>(diam) + 1; ++ell) {
      Row r{ell, check_reachability_equation(g, ell, ReachabilityEquation::upp()),
            check_reachability_equation(g, ell, ReachabilityEquation::kautz()), std::nullopt};
      const IntMatrix w = walk_matrix(g, ell);
      if (w(0, 0) > 0 && w.is_constant(w(0, 0))) r.scale = w(0, 0);
      rows.push_back(std::move(r));
    }
  }

  if (json) {
    Json j;
    j["n"] = n;
    j["arcs"] = g.arc_count();
    j["out_degree"] = {{"min", out_min}, {"max", out_max}};
    j["in_degree"] = {{"min", in_min}, {"max", in_max}};
    j["strongly_connected"] = sc;
    j["diameter"] = diam >= 0 ? Json(diam) : Json(nullptr);
    j["line_digraph"] = is_line_digraph(g);
    for (const auto* sets : {&out_sets, &in_sets}) {
      Json list = Json::array();
      for (const auto& s : *sets) {
        list.push_back({{"X", name_array(g, s.members)}, {"Y", name_array(g, s.shared)}});
      }
      j[sets == &out_sets ? "local_line_sets_out" : "local_line_sets_in"] = std::move(list);
    }
    add_spectrum(j, p);
    Json eqs = Json::array();
    for (const Row& r : rows) {
      eqs.push_back({{"ell", r.ell},
                     {"upp", r.upp},
                     {"kautz", r.kautz},
                     {"scaled", r.scale ? integer_json(*r.scale) : Json(nullptr)}});
    }
    j["equations"] = std::move(eqs);
    io.out << j.dump() << "\n";
    return kExitOk;
  }

  io.out << "order: " << n << "\n"
         << "arcs: " << g.arc_count() << "\n"
         << "out-degree: " << out_min << ".." << out_max << "\n"
         << "in-degree: " << in_min << ".." << in_max << "\n"
         << "strongly connected: " << (sc ? "yes" : "no") << "\n"
         << "diameter: " << (diam >= 0 ? std::to_string(diam) : "-") << "\n"
         << "line digraph: " << (is_line_digraph(g) ? "yes" : "no") << "\n";
  for (const auto* sets : {&out_sets, &in_sets}) {
    io.out << (sets == &out_sets ? "local line sets (shared in-neighborhood):"
                                 : "local line sets (shared out-neighborhood):");
    if (sets->empty()) io.out << " none";
    for (const auto& s : *sets) io.out << " " << names(g, s.members);
    io.out << "\n";
  }
  io.out << "charpoly: " << p.to_string() << "\n"
         << "spectrum: " << integer_spectrum(p).to_string() << "\n";
  for (const Row& r : rows) {
    std::vector<std::string> holds;
    if (r.upp) holds.push_back("A^l = J");
    if (r.kautz) holds.push_back("A^l + A^(l-1) = J");
    if (r.scale && *r.scale != 1) holds.push_back("A^l = " + r.scale->str() + "J");
    if (holds.empty()) continue;
    io.out << "l=" << r.ell << ": ";
    for (std::size_t i = 0; i < holds.size(); ++i) io.out << (i ? ", " : "") << holds[i];
    io.out << "\n";
  }
  return kExitOk;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("COSPECTRA_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("COSPECTRA_JOBS", "must be a positive integer");
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  const Io io{in, out};
  CLI::App app{"Cospectral digraphs from locally line digraphs", "cospectra"};
  app.require_subcommand(1);

  std::size_t d = 2, ell = 3;
  bool dot = false, json = false;
  std::string graph = "-", other = "-", plan_path, in_plan_path, prefix, perms;
  std::string c_text = "1";
  unsigned jobs = 0;

  auto family_opts = [&](CLI::App* sub) {
    sub->add_option("--d", d, "degree")->required();
    sub->add_option("--ell", ell, "word length")->required();
  };
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", graph, "graph JSON file, - for stdin");
  };

  auto* gen = app.add_subcommand("gen", "generate a family digraph");
  gen->require_subcommand(1);
  auto* gen_db = gen->add_subcommand("de-bruijn", "De Bruijn digraph B(d, ell)");
  auto* gen_k = gen->add_subcommand("kautz", "Kautz digraph K(d, ell)");
  for (auto* sub : {gen_db, gen_k}) {
    family_opts(sub);
    sub->add_flag("--dot", dot, "emit DOT");
  }

  auto* mod = app.add_subcommand("modify", "rewire a digraph");
  mod->add_option("--plan", plan_path, "modification JSON");
  mod->add_flag("--dot", dot, "emit DOT");
  graph_arg(mod);
  auto* mod_db = mod->add_subcommand("de-bruijn", "permutation rewiring of B(d, ell)");
  family_opts(mod_db);
  mod_db->add_option("--prefix", prefix, "word of length ell-1")->required();
  mod_db->add_option("--perms", perms, "alpha_0;...;alpha_{d-1}, e.g. 01;10")->required();
  mod_db->add_flag("--dot", dot, "emit DOT");
  auto* mod_conv = mod->add_subcommand("converse", "reverse every arc");
  graph_arg(mod_conv);
  mod_conv->add_flag("--dot", dot, "emit DOT");
  auto* mod_double = mod->add_subcommand("double", "out-side and in-side plans together");
  mod_double->add_option("--out-plan", plan_path, "out-side modification JSON")->required();
  mod_double->add_option("--in-plan", in_plan_path, "in-side modification JSON")->required();
  graph_arg(mod_double);
  mod_double->add_flag("--dot", dot, "emit DOT");

  auto* spectrum = app.add_subcommand("spectrum", "characteristic polynomial and spectrum");
  graph_arg(spectrum);
  spectrum->add_flag("--json", json, "emit JSON");

  auto* check = app.add_subcommand("check", "boolean checks; exit 0 true, 1 false");
  check->require_subcommand(1);
  auto* check_upp = check->add_subcommand("upp", "A^ell = J");
  auto* check_kautz = check->add_subcommand("kautz", "A^ell + A^(ell-1) = J");
  auto* check_scaled = check->add_subcommand("scaled", "A^ell = cJ");
  for (auto* sub : {check_upp, check_kautz, check_scaled}) {
    sub->add_option("--ell", ell, "exponent")->required();
    graph_arg(sub);
  }
  check_scaled->add_option("--c", c_text, "scale")->required();
  auto* check_cospec = check->add_subcommand("cospectral", "equal characteristic polynomials");
  auto* check_iso = check->add_subcommand("isomorphic", "isomorphism");
  for (auto* sub : {check_cospec, check_iso}) {
    sub->add_option("a", graph, "first graph")->required();
    sub->add_option("b", other, "second graph")->required();
  }

  auto* canon = app.add_subcommand("canon", "canonical certificate (hex)");
  graph_arg(canon);

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive searches");
  enumerate->require_subcommand(1);
  auto* enum_upp = enumerate->add_subcommand("upp", "all UPP digraphs up to isomorphism");
  family_opts(enum_upp);
  enum_upp->add_option("--jobs", jobs, "worker threads (default $COSPECTRA_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  enum_upp->add_flag("--json", json, "emit JSON");
  auto* enum_perm = enumerate->add_subcommand("perm-sweep", "every permutation family");
  family_opts(enum_perm);
  enum_perm->add_option("--prefix", prefix, "word of length ell-1")->required();
  enum_perm->add_flag("--json", json, "emit JSON");

  auto* info_cmd = app.add_subcommand("info", "summary report");
  graph_arg(info_cmd);
  info_cmd->add_flag("--json", json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (mod->parsed() && mod->get_subcommands().empty() && plan_path.empty()) {
      throw CLI::RequiredError("--plan");
    }
    if (jobs == 0) jobs = default_jobs();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      emit_graph(gen_db->parsed() ? de_bruijn({d, ell}) : kautz({d, ell}), dot, io);
      return kExitOk;
    }
    if (mod->parsed()) {
      if (mod_db->parsed()) {
        emit_graph(de_bruijn_permutation_modify(d, ell, VertexWord::parse(prefix),
                                                PermutationFamily::parse(perms)),
                   dot, io);
      } else if (mod_conv->parsed()) {
        emit_graph(converse(load_graph(graph, io)), dot, io);
      } else if (mod_double->parsed()) {
        const Digraph g = load_graph(graph, io);
        const Modification out_mod = modification_from_json(read_json(plan_path, in), g);
        const Modification in_mod = modification_from_json(read_json(in_plan_path, in), g);
        emit_graph(double_modify(g, out_mod, in_mod), dot, io);
      } else {
        const Digraph g = load_graph(graph, io);
        const Modification m = modification_from_json(read_json(plan_path, in), g);
        const ValidationReport report = validate(m);
        if (!report.cospectral_guaranteed() && report.applicable()) {
          err << "note: " << report.describe() << "\n";
        }
        for (const DegreeChange& c : report.member_degree_changes) {
          err << "note: degree of " << g.vertex_name(c.vertex) << " changes " << c.before
              << " -> " << c.after << "\n";
        }
        emit_graph(apply(m), dot, io);
      }
      return kExitOk;
    }
    if (spectrum->parsed()) {
      const CharPoly p = char_poly(load_graph(graph, io));
      if (json) {
        Json j;
        add_spectrum(j, p);
        out << j.dump() << "\n";
      } else {
        out << "charpoly: " << p.to_string() << "\n"
            << "spectrum: " << integer_spectrum(p).to_string() << "\n";
      }
      return kExitOk;
    }
    if (check->parsed()) {
      if (check_cospec->parsed() || check_iso->parsed()) {
        const Digraph a = load_graph(graph, io);
        const Digraph b = load_graph(other, io);
        return emit_bool(check_cospec->parsed() ? cospectral(a, b) : isomorphic(a, b), io);
      }
      ReachabilityEquation eq = ReachabilityEquation::upp();
      if (check_kautz->parsed()) eq = ReachabilityEquation::kautz();
      if (check_scaled->parsed()) {
        Integer c;
        try {
          c = Integer(c_text);
        } catch (const std::exception&) {
          err << "usage error: --c must be an integer\n";
          return kExitUsage;
        }
        eq = ReachabilityEquation::scaled(c);
      }
      return emit_bool(
          check_reachability_equation(load_graph(graph, io), static_cast<unsigned>(ell), eq), io);
    }
    if (canon->parsed()) {
      out << canonical_form(load_graph(graph, io)).hex() << "\n";
      return kExitOk;
    }
    if (enum_upp->parsed()) {
      const UppEnumeration e = enumerate_upp({d, ell}, jobs);
      if (json) {
        Json certs = Json::array(), graphs = Json::array();
        for (const auto& f : e.classes) {
          certs.push_back(f.hex());
          graphs.push_back(to_json(to_digraph(f)));
        }
        out << Json{{"d", d},           {"ell", ell},           {"leaves", e.leaves},
                    {"classes", e.classes.size()}, {"certificates", certs}, {"graphs", graphs}}
                   .dump()
            << "\n";
      } else {
        for (std::size_t i = 0; i < e.classes.size(); ++i) {
          out << "class " << i << ": " << e.classes[i].hex() << "\n";
        }
        out << "leaves=" << e.leaves << "\n"
            << "classes=" << e.classes.size() << "\n";
      }
      return kExitOk;
    }
    if (enum_perm->parsed()) {
      const PermSweepReport r = perm_sweep(d, ell, VertexWord::parse(prefix));
      if (json) {
        Json classes = Json::array();
        for (const auto& c : r.classes) {
          classes.push_back({{"certificate", c.form.hex()},
                             {"representative", c.representative.to_string()},
                             {"members", c.members},
                             {"contains_base", c.contains_base}});
        }
        out << Json{{"d", r.d},
                    {"ell", r.ell},
                    {"prefix", r.prefix.to_string()},
                    {"families", r.families},
                    {"all_cospectral", r.all_cospectral},
                    {"all_upp", r.all_upp},
                    {"all_diameter_ell", r.all_diameter_ell},
                    {"classes", classes}}
                   .dump()
            << "\n";
      } else {
        out << std::boolalpha << "families=" << r.families << " cospectral=" << r.all_cospectral
            << " upp=" << r.all_upp << " diameter_ell=" << r.all_diameter_ell << "\n";
        for (const auto& c : r.classes) {
          out << c.representative.to_string() << " members=" << c.members
              << (c.contains_base ? " base" : "") << " " << c.form.hex() << "\n";
        }
        out << "classes=" << r.classes.size() << "\n";
      }
      return kExitOk;
    }
    if (info_cmd->parsed()) return info(load_graph(graph, io), json, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace cospectra::cli

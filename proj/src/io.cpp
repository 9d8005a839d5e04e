#include "taucat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "taucat/fixtures.hpp"

namespace taucat {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) {
  throw std::runtime_error("algebra spec: " + msg);
}

void check_fields(const json& j, std::initializer_list<const char*> allowed,
                  const char* where) {
  if (!j.is_object()) bad(std::string(where) + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* f : allowed)
      if (it.key() == f) ok = true;
    if (!ok) bad("unknown field \"" + it.key() + "\" in " + where);
  }
}

Scalar parse_coeff(const json& c) {
  if (c.is_number_integer()) return Scalar(c.get<long>());
  if (c.is_string()) {
    try {
      Scalar s(c.get<std::string>());
      s.canonicalize();
      return s;
    } catch (const std::invalid_argument&) {
      bad("bad coefficient \"" + c.get<std::string>() + "\"");
    }
  }
  bad("coefficient must be an integer or a rational string");
}

int vertex_index(const Quiver& q, const json& name, const char* where) {
  if (!name.is_string()) bad(std::string(where) + ": vertex references must be names");
  std::string s = name.get<std::string>();
  for (int v = 0; v < q.n(); ++v)
    if (q.vertices[v] == s) return v;
  bad(std::string(where) + ": unknown vertex \"" + s + "\"");
}

Quiver parse_quiver(const json& j, const char* where) {
  Quiver q;
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    bad(std::string(where) + " needs a nonempty vertices array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) bad("vertex names must be strings");
    q.vertices.push_back(v.get<std::string>());
  }
  for (int v = 0; v < q.n(); ++v)
    for (int w = v + 1; w < q.n(); ++w)
      if (q.vertices[v] == q.vertices[w]) bad("duplicate vertex \"" + q.vertices[v] + "\"");
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) bad("arrows must be an array");
    for (const auto& a : j["arrows"]) {
      check_fields(a, {"label", "src", "tgt"}, "an arrow");
      if (!a.contains("label") || !a["label"].is_string())
        bad("an arrow needs a string label");
      if (!a.contains("src") || !a.contains("tgt")) bad("an arrow needs src and tgt");
      ArrowDef d;
      d.label = a["label"].get<std::string>();
      d.src = vertex_index(q, a["src"], "arrow src");
      d.tgt = vertex_index(q, a["tgt"], "arrow tgt");
      for (const auto& have : q.arrows)
        if (have.label == d.label) bad("duplicate arrow label \"" + d.label + "\"");
      q.arrows.push_back(std::move(d));
    }
  }
  return q;
}

AlgebraPtr parse_plain(const json& j) {
  check_fields(j, {"vertices", "arrows", "relations", "nilpotency_bound"}, "an algebra spec");
  Quiver q = parse_quiver(j, "an algebra spec");
  std::vector<Relation> rels;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) bad("relations must be an array");
    for (const auto& rj : j["relations"]) {
      if (!rj.is_array() || rj.empty()) bad("a relation must be a nonempty array of terms");
      Relation rel;
      int rsrc = -1, rtgt = -1;
      for (const auto& tj : rj) {
        check_fields(tj, {"coeff", "path"}, "a relation term");
        RelTerm term;
        term.coeff = tj.contains("coeff") ? parse_coeff(tj["coeff"]) : Scalar(1);
        if (!tj.contains("path") || !tj["path"].is_array() || tj["path"].empty())
          bad("a relation term needs a nonempty arrow path");
        int at = -1;
        for (const auto& lab : tj["path"]) {
          if (!lab.is_string()) bad("path entries must be arrow labels");
          std::string s = lab.get<std::string>();
          int idx = -1;
          for (size_t k = 0; k < q.arrows.size(); ++k)
            if (q.arrows[k].label == s) idx = int(k);
          if (idx < 0) bad("unknown arrow label \"" + s + "\"");
          if (at >= 0 && q.arrows[idx].src != at)
            bad("path is not composable at arrow \"" + s + "\"");
          if (at < 0 && rsrc < 0) rsrc = q.arrows[idx].src;
          if (at < 0 && q.arrows[idx].src != rsrc)
            bad("terms of one relation must be parallel");
          at = q.arrows[idx].tgt;
          term.path.push_back(idx);
        }
        if (rtgt < 0) rtgt = at;
        if (at != rtgt) bad("terms of one relation must be parallel");
        rel.push_back(std::move(term));
      }
      rels.push_back(std::move(rel));
    }
  }
  if (!j.contains("nilpotency_bound") || !j["nilpotency_bound"].is_number_integer())
    bad("an integer nilpotency_bound is required");
  return build_algebra(q, rels, j["nilpotency_bound"].get<int>());
}

AlgebraPtr parse_spec(const json& j) {
  if (!j.is_object()) bad("top level must be an object");
  if (j.contains("local") || j.contains("quiver")) {
    check_fields(j, {"local", "quiver"}, "a tensor spec");
    if (!j.contains("local") || !j.contains("quiver"))
      bad("a tensor spec needs both local and quiver");
    AlgebraPtr r = parse_plain(j["local"]);
    if (r->n() != 1) bad("the local factor must have exactly one vertex");
    check_fields(j["quiver"], {"vertices", "arrows"}, "the quiver factor");
    return tensor_construction(r, parse_quiver(j["quiver"], "the quiver factor"));
  }
  return parse_plain(j);
}

}  // namespace

AlgebraPtr parse_algebra_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON (") + e.what() + ")");
  }
  return parse_spec(j);
}

AlgebraPtr load_algebra(const std::string& path_or_fixture) {
  std::ifstream f(path_or_fixture);
  if (f) {
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_algebra_spec(ss.str());
  }
  return fixture(path_or_fixture);
}

}  // namespace taucat

#include "cospec/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace cospec {

json to_json(const Hypergraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json edge = json::array();
    for (int v : e) edge.push_back(g.labels()[v]);
    edges.push_back(edge);
  }
  return {{"k", g.k()}, {"labels", g.labels()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("labels") ||
      !j.contains("edges"))
    throw std::invalid_argument("hypergraph json needs k, labels, edges");
  std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
  std::vector<std::vector<std::string>> edges;
  for (const auto& e : j["edges"])
    edges.push_back(e.get<std::vector<std::string>>());
  return Hypergraph::from_labels(j["k"].get<int>(), labels, edges);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
  size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{')
    return hypergraph_from_json(json::parse(text));
  auto parts = split(text, ';');
  if (parts.empty() || parts[0].empty())
    throw std::invalid_argument("compact hypergraph form: k; a,b,c; ...");
  int k = std::stoi(parts[0]);
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> edges;
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    auto verts = split(parts[i], ',');
    for (const auto& v : verts)
      if (std::find(labels.begin(), labels.end(), v) == labels.end())
        labels.push_back(v);
    edges.push_back(verts);
  }
  return Hypergraph::from_labels(k, labels, edges);
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("matrix json: array of rows expected");
  int nr = static_cast<int>(rows.size());
  int nc = static_cast<int>(rows[0].size());
  RatMatrix m(nr, nc);
  for (int r = 0; r < nr; ++r) {
    if (static_cast<int>(rows[r].size()) != nc)
      throw std::invalid_argument("matrix json: ragged rows");
    for (int c = 0; c < nc; ++c)
      m.at(r, c) = Rational::parse(rows[r][c].get<std::string>());
  }
  return m;
}

json to_json(const SymTensor& t) {
  json entries = json::array();
  for (const auto& [idx, val] : t.entries())
    entries.push_back({{"idx", idx}, {"val", val.str()}});
  return {{"k", t.order()}, {"n", t.dim()}, {"entries", entries}};
}

SymTensor tensor_from_json(const json& j) {
  SymTensor t(j.at("k").get<int>(), j.at("n").get<int>());
  for (const auto& e : j.at("entries"))
    t.set(e.at("idx").get<std::vector<int>>(),
          Rational::parse(e.at("val").get<std::string>()));
  return t;
}

json to_json(const QuadExt& q) {
  return {{"a", q.a().str()},
          {"b", q.b().str()},
          {"c", q.c().str()},
          {"d", q.d().str()},
          {"m", q.radicand()}};
}

json to_json(const SimilarityCertificate& c) {
  json j = {{"orthogonal", c.orthogonal},
            {"conjugation_equal", c.conjugation_equal},
            {"ok", c.ok()}};
  if (c.first_mismatch) j["first_mismatch"] = *c.first_mismatch;
  return j;
}

json to_json(const RegularityVerdict& v) {
  json j = {{"regular", v.regular}, {"algebraic", v.algebraic}};
  if (v.proof) {
    json p = {{"type", "structural"}, {"k", v.proof->k}};
    if (v.proof->k == 2) p["nullity"] = v.proof->nullity;
    if (v.proof->k == 3) {
      p["component_count"] = v.proof->component_count;
      p["all_components_complete"] = v.proof->all_components_complete;
    }
    if (v.proof->k >= 4) p["n"] = v.proof->n;
    j["certificate"] = p;
  }
  if (v.witness) {
    json x = json::array();
    for (const auto& c : v.witness->x) x.push_back(to_json(c));
    j["certificate"] = {{"type", "witness"},
                        {"source", to_string(v.witness->source)},
                        {"anchor", v.witness->anchor},
                        {"x", x}};
  }
  return j;
}

json to_json(const FixtureCertificate& c, const Fixture& f) {
  std::vector<std::string> mapped;
  for (int v : c.mapping) mapped.push_back(f.g.labels()[v]);
  return {{"fixture", f.name},
          {"family", f.family.name()},
          {"mapping", mapped},
          {"q", to_json(c.q)},
          {"certificate", to_json(c.cert)}};
}

json to_json(const UniPoly& p) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(v.str());
  return c;
}

}  // namespace cospec

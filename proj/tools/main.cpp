// cospec command-line front end.
//
// Subcommands: catalog, switch, verify, bkq, regular, echar, fixtures,
// prop4. Every command reads/writes JSON ("-" = stdin/stdout). Exit codes:
// 0 success, 1 domain failure (a machine-readable {"error": ...} object is
// still emitted), 2 usage error.

#include "CLI11.hpp"

#include "cospec/bkq.hpp"
#include "cospec/catalog.hpp"
#include "cospec/fixtures.hpp"
#include "cospec/groebner.hpp"
#include "cospec/json_io.hpp"
#include "cospec/numeric.hpp"
#include "cospec/regularity.hpp"
#include "cospec/switching.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cospec;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j, const std::string& path, bool pretty) {
  std::string text = pretty ? j.dump(2) : j.dump();
  text.push_back('\n');
  if (path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
  }
}

int emit_error(const json& detail, bool pretty) {
  emit(detail, "-", pretty);
  return 1;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<int> resolve_labels(const Hypergraph& g, const std::string& csv) {
  std::vector<int> idx;
  for (const auto& l : split_commas(csv)) {
    int i = g.index_of(l);
    if (i < 0) throw std::invalid_argument("unknown vertex label: " + l);
    idx.push_back(i);
  }
  return idx;
}

json labels_of(const Hypergraph& g, const std::vector<int>& idx) {
  json out = json::array();
  for (int v : idx) out.push_back(g.labels()[v]);
  return out;
}

json pairs_to_json(const std::vector<BkqPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs)
    arr.push_back({{"g", to_json(p.g)}, {"tg", to_json(p.tg)}});
  return arr;
}

// ---- catalog ---------------------------------------------------------

int run_catalog(const std::string& fam, const std::string& out, bool pretty) {
  SwitchFamily f = SwitchFamily::parse(fam);
  RatMatrix r = build(f);
  auto reg = is_regular_orthogonal(r);
  json j = {{"family", f.name()},
            {"dim", f.dim()},
            {"matrix", to_json(r)},
            {"level", level(r).get_str()},
            {"orthogonal", reg.ok()}};
  if (reg.row_sum) j["row_sum"] = reg.row_sum->str();
  emit(j, out, pretty);
  return 0;
}

// ---- switch ----------------------------------------------------------

int run_switch(const std::string& fam, const std::string& set,
               const std::string& in, const std::string& out,
               const std::string& cert_path, bool pretty) {
  SwitchFamily f = SwitchFamily::parse(fam);
  Hypergraph g = parse_hypergraph(slurp(in));
  std::vector<int> c = resolve_labels(g, set);
  try {
    SwitchResult res = switch_hypergraph(g, c, f);
    json j = to_json(res.h);
    emit(j, out, pretty);
    if (!cert_path.empty()) {
      json replaced = json::array();
      for (const auto& rec : res.plan.replacements)
        replaced.push_back({{"a", labels_of(g, rec.a)},
                            {"link", to_json(rec.link)},
                            {"image", to_json(rec.image)}});
      json cj = {{"family", f.name()},
                 {"set", labels_of(g, c)},
                 {"q", to_json(res.q)},
                 {"certificate", to_json(res.cert)},
                 {"replacements", replaced}};
      emit(cj, cert_path, pretty);
    }
    return res.cert.ok() ? 0 : 1;
  } catch (const SwitchError& e) {
    json viol = json::array();
    for (const auto& v : e.violations)
      viol.push_back({{"a", labels_of(g, v.a)}, {"reason", v.reason}});
    return emit_error({{"error", e.what()}, {"violations", viol}}, pretty);
  }
}

// ---- verify ----------------------------------------------------------

int run_verify(const std::string& qp, const std::string& gp,
               const std::string& hp, bool pretty) {
  RatMatrix q = matrix_from_json(json::parse(slurp(qp)));
  Hypergraph g = parse_hypergraph(slurp(gp));
  Hypergraph h = parse_hypergraph(slurp(hp));
  SimilarityCertificate cert = certify_similarity(q, g, h);
  emit(to_json(cert), "-", pretty);
  return cert.ok() ? 0 : 1;
}

// ---- bkq -------------------------------------------------------------

int run_bkq(const std::string& fam, int k, long long budget, bool no_symmetry,
            const std::string& out, bool pretty) {
  SwitchFamily f = SwitchFamily::parse(fam);
  BkqOptions opts;
  opts.budget_nodes = budget;
  opts.symmetry = !no_symmetry;
  try {
    auto pairs = enumerate_bkq(build(f), k, opts);
    emit({{"family", f.name()},
          {"k", k},
          {"count", pairs.size()},
          {"pairs", pairs_to_json(pairs)}},
         out, pretty);
    return 0;
  } catch (const BkqBudgetExhausted& e) {
    return emit_error({{"error", e.what()},
                       {"partial_count", e.partial.size()},
                       {"partial", pairs_to_json(e.partial)}},
                      pretty);
  }
}

// ---- regular ---------------------------------------------------------

int run_regular(const std::string& in, const std::string& out, bool pretty) {
  Hypergraph g = parse_hypergraph(slurp(in));
  RegularityVerdict v = decide_regularity(g);
  emit(to_json(v), out, pretty);
  return 0;
}

// ---- echar -----------------------------------------------------------

int run_echar(const std::string& in, const std::string& out,
              const std::string& method, bool scaled, int starts, double tol,
              unsigned long seed, long max_pairs, bool pretty) {
  Hypergraph g = parse_hypergraph(slurp(in));
  SymTensor t = adjacency_tensor(g);
  json j = {{"k", g.k()},
            {"n", g.n()},
            {"scaled", scaled},
            {"degree_bound", generic_degree_bound(std::max(g.n(), 1), g.k())}};
  if (method == "groebner" || method == "both") {
    GroebnerOptions opts;
    opts.max_pairs = max_pairs;
    UniPoly p = echar_eliminate(t, scaled, opts);
    j["polynomial"] = to_json(p);
    json roots = json::array();
    for (const auto& r : poly_roots(p))
      roots.push_back({{"re", r.real()}, {"im", r.imag()}});
    j["polynomial_roots"] = roots;
  }
  if (method == "numeric" || method == "both") {
    json eigs = json::array();
    for (const auto& p : eigenpairs_numeric(t, scaled, starts, tol, seed))
      eigs.push_back({{"re", p.lambda.real()},
                      {"im", p.lambda.imag()},
                      {"residual", p.residual}});
    j["eigenvalues_numeric"] = eigs;
  }
  emit(j, out, pretty);
  return 0;
}

// ---- fixtures --------------------------------------------------------

// Long-form corpus names accepted as synonyms of the short ones.
std::string canonical_fixture_name(const std::string& name) {
  if (name == "fano10") return "fano";
  if (name == "sun12") return "sun";
  if (name == "cube11") return "cube";
  if (name == "fano_plane_F1") return "f1";
  if (name == "fano_plane_F2") return "f2";
  return name;
}

bool is_pair_fixture(const std::string& name) {
  auto names = fixture_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

json verify_one_fixture(const std::string& name, bool& ok) {
  if (is_pair_fixture(name)) {
    Fixture f = fixture(name);
    FixtureCertificate c = verify_fixture(name);
    ok = c.cert.ok();
    return to_json(c, f);
  }
  Hypergraph g = named_hypergraph(name);
  if (name == "f1" || name == "f2") {
    // The two Fano orbits map onto each other under the catalogued
    // matrix (f1 forward, f2 under the transpose).
    RatMatrix r = build(SwitchFamily::parse("fano"));
    if (name == "f2") r = r.transpose();
    auto image = verify_membership(r, g);
    Hypergraph expect = named_hypergraph(name == "f1" ? "f2" : "f1");
    ok = image.has_value() && *image == expect;
    return {{"fixture", name},
            {"member", image.has_value()},
            {"image", image ? to_json(*image) : json()},
            {"image_is_other_orbit", ok}};
  }
  // g1, g2, g3: irregular with an exactly verified witness.
  RegularityVerdict v = decide_regularity(g);
  ok = !v.regular && v.witness && verify_witness(g, v.witness->x);
  json j = to_json(v);
  j["fixture"] = name;
  j["witness_verified"] = ok;
  return j;
}

int run_fixtures(const std::string& action, const std::string& name, bool all,
                 bool pretty) {
  if (action == "list") {
    emit({{"pairs", fixture_names()}, {"hypergraphs", named_hypergraph_names()}},
         "-", pretty);
    return 0;
  }
  if (action == "show") {
    if (is_pair_fixture(name)) {
      Fixture f = fixture(name);
      emit({{"name", f.name},
            {"family", f.family.name()},
            {"set", labels_of(f.g, f.c)},
            {"g", to_json(f.g)},
            {"h", to_json(f.h)}},
           "-", pretty);
    } else {
      emit(to_json(named_hypergraph(name)), "-", pretty);
    }
    return 0;
  }
  // verify
  std::vector<std::string> targets;
  if (all) {
    targets = fixture_names();
    for (const auto& n : named_hypergraph_names()) targets.push_back(n);
  } else {
    targets.push_back(name);
  }
  json results = json::array();
  bool all_ok = true;
  for (const auto& t : targets) {
    bool ok = false;
    json r = verify_one_fixture(t, ok);
    r["ok"] = ok;
    all_ok = all_ok && ok;
    results.push_back(std::move(r));
  }
  emit(all || targets.size() > 1 ? json{{"ok", all_ok}, {"results", results}}
                                 : results[0],
       "-", pretty);
  return all_ok ? 0 : 1;
}

// ---- prop4 -----------------------------------------------------------

int run_prop4(int part, int param, long long budget, bool pretty) {
  BkqOptions opts;
  opts.budget_nodes = budget;
  Prop4Report rep = reproduce_prop4(part, param, opts);
  emit({{"part", part},
        {"param", param},
        {"count", rep.found.size()},
        {"ok", rep.ok()},
        {"missing", pairs_to_json(rep.missing)},
        {"unexpected", pairs_to_json(rep.unexpected)}},
       "-", pretty);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact switching, cospectrality and regularity toolkit"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string family, set_csv, input = "-", output = "-", cert_path;
  std::string qpath, gpath, hpath;
  int k = 1, starts = 200, part = 1, param = 0;
  long long budget = 0;
  long max_pairs = 100000;
  double tol = 1e-10;
  unsigned long seed = 1;
  bool no_symmetry = false, scaled = false, all = false;
  std::string method = "both", action, name;

  auto* cat = app.add_subcommand("catalog", "print a switching matrix");
  cat->add_option("--family", family, "gm4 | gm:<n> | sg:<n> | fano | cube | wqh:<p>")
      ->required();

  auto* sw = app.add_subcommand("switch", "apply a switch to a hypergraph");
  sw->add_option("--family", family)->required();
  sw->add_option("--set", set_csv, "comma-separated vertex labels, row order")
      ->required();
  sw->add_option("--input", input, "hypergraph JSON or compact form, - = stdin");
  sw->add_option("--output", output, "path for the switched hypergraph");
  sw->add_option("--cert", cert_path, "also write the similarity certificate");

  auto* ver = app.add_subcommand("verify", "certify Q^T A_G Q = A_H");
  ver->add_option("qfile", qpath, "matrix JSON file")->required();
  ver->add_option("gfile", gpath, "source hypergraph file")->required();
  ver->add_option("hfile", hpath, "target hypergraph file")->required();

  auto* bk = app.add_subcommand("bkq", "enumerate B^k_R for a family");
  bk->add_option("--family", family)->required();
  bk->add_option("--k", k, "uniformity")->required();
  bk->add_option("--budget-nodes", budget, "DFS node budget, 0 = unlimited");
  bk->add_flag("--no-symmetry", no_symmetry, "disable cyclic reduction");
  bk->add_option("--output", output);

  auto* reg = app.add_subcommand("regular", "decide tensor regularity");
  reg->add_option("--input", input);
  reg->add_option("--output", output);

  auto* ec = app.add_subcommand("echar", "E-characteristic eliminant");
  ec->add_option("--input", input);
  ec->add_option("--output", output);
  ec->add_option("--method", method, "groebner | numeric | both")
      ->check(CLI::IsMember({"groebner", "numeric", "both"}));
  ec->add_flag("--scaled", scaled, "divide tensor entries by (k-1)!");
  ec->add_option("--starts", starts, "numeric Newton starts");
  ec->add_option("--tol", tol, "numeric residual tolerance");
  ec->add_option("--seed", seed, "numeric RNG seed");
  ec->add_option("--max-pairs", max_pairs, "Groebner S-pair budget");

  auto* fx = app.add_subcommand("fixtures", "embedded worked examples");
  fx->add_option("action", action, "list | show | verify")
      ->required()
      ->check(CLI::IsMember({"list", "show", "verify"}));
  fx->add_option("name", name, "fixture name");
  fx->add_flag("--all", all, "verify every fixture");

  auto* p4 = app.add_subcommand("prop4", "closed-form B^k_R cross-checks");
  p4->add_option("--part", part, "1..5")->required()->check(CLI::Range(1, 5));
  p4->add_option("--param", param, "family size parameter where applicable");
  p4->add_option("--budget-nodes", budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (cat->parsed()) return run_catalog(family, output, pretty);
    if (sw->parsed())
      return run_switch(family, set_csv, input, output, cert_path, pretty);
    if (ver->parsed()) return run_verify(qpath, gpath, hpath, pretty);
    if (bk->parsed())
      return run_bkq(family, k, budget, no_symmetry, output, pretty);
    if (reg->parsed()) return run_regular(input, output, pretty);
    if (ec->parsed())
      return run_echar(input, output, method, scaled, starts, tol, seed,
                       max_pairs, pretty);
    if (fx->parsed()) {
      if ((action == "show" || (action == "verify" && !all)) && name.empty()) {
        std::cerr << "fixtures " << action << ": a name is required\n";
        return 2;
      }
      return run_fixtures(action, canonical_fixture_name(name), all, pretty);
    }
    if (p4->parsed()) return run_prop4(part, param, budget, pretty);
  } catch (const std::exception& e) {
    return emit_error({{"error", e.what()}}, pretty);
  }
  return 2;
}

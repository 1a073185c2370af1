#include "cospec/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

namespace cospec {

namespace {

std::vector<std::vector<std::string>> triples(const std::string& packed) {
  // "124 235 1xy" -> {{"1","2","4"}, ...}, one character per label.
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  for (char ch : packed) {
    if (ch == ' ') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(std::string(1, ch));
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Fixture make_fano() {
  std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6", "7",
                                     "x", "y", "z"};
  Fixture f;
  f.name = "fano";
  f.family = SwitchFamily::parse("fano");
  f.c = {0, 1, 2, 3, 4, 5, 6};
  f.g = Hypergraph::from_labels(
      3, labels,
      triples("124 235 346 457 561 672 713 1xy 2xy 4xy xyz"));
  f.h = Hypergraph::from_labels(
      3, labels,
      triples("356 467 571 612 723 134 245 3xy 5xy 6xy xyz"));
  return f;
}

Fixture make_sun() {
  std::vector<std::string> labels = {"0", "1", "2", "3", "4", "5",
                                     "6", "7", "8", "9", "x", "y"};
  Fixture f;
  f.name = "sun";
  f.family = SwitchFamily::parse("sg:10");
  f.c = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  f.g = Hypergraph::from_labels(
      3, labels,
      triples("18x 25x 26x 28x 03x 47x 48x 04x 69x 06x 1xy 3xy 5xy 7xy 0xy"));
  f.h = Hypergraph::from_labels(
      3, labels,
      triples("16x 26x 27x 28x 38x 48x 49x 04x 05x 06x 9xy 1xy 3xy 5xy 8xy"));
  return f;
}

Fixture make_cube() {
  std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6",
                                     "7", "8", "x", "y", "z"};
  auto edges = [&](const std::string& singles, const std::string& pairs) {
    std::vector<std::vector<std::string>> out;
    for (char v : singles)
      out.push_back({std::string(1, v), "x", "y", "z"});
    for (const auto& p : triples(pairs))
      out.push_back({p[0], p[1], "x", "y"});
    return out;
  };
  Fixture f;
  f.name = "cube";
  f.family = SwitchFamily::parse("cube");
  f.c = {0, 1, 2, 3, 4, 5, 6, 7};
  f.g = Hypergraph::from_labels(
      4, labels, edges("2367", "17 26 46 48 28 35 45 47 56 67"));
  f.h = Hypergraph::from_labels(
      4, labels, edges("1368", "17 26 46 48 12 18 24 27 36 37"));
  return f;
}

}  // namespace

Fixture fixture(const std::string& name) {
  if (name == "fano") return make_fano();
  if (name == "sun") return make_sun();
  if (name == "cube") return make_cube();
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() { return {"fano", "sun", "cube"}; }

Hypergraph named_hypergraph(const std::string& name) {
  if (name == "g1") return pattern_graph(1);
  if (name == "g2") return pattern_graph(2);
  if (name == "g3") return pattern_graph(3);
  if (name == "f1") return fano_lines_and_ovals().f1;
  if (name == "f2") return fano_lines_and_ovals().f2;
  throw std::invalid_argument("unknown hypergraph: " + name);
}

std::vector<std::string> named_hypergraph_names() {
  return {"g1", "g2", "g3", "f1", "f2"};
}

namespace {

// Positions (within the printed order of C) of the rank-1 links of the
// tail tuples, paired G-side and H-side. A candidate row assignment must
// carry each G-side indicator to the H-side one under R^T.
struct Rank1Pair {
  std::vector<int> gx, hx;  // printed positions, sorted
};

std::vector<Rank1Pair> rank1_pairs(const Fixture& f) {
  std::vector<int> pos(f.g.n(), -1);
  for (size_t i = 0; i < f.c.size(); ++i) pos[f.c[i]] = static_cast<int>(i);
  std::vector<int> tail;
  for (int v = 0; v < f.g.n(); ++v)
    if (pos[v] < 0) tail.push_back(v);
  std::vector<Rank1Pair> out;
  for (const auto& a : k_subsets(static_cast<int>(tail.size()), f.g.k() - 1)) {
    std::vector<int> averts;
    for (int i : a) averts.push_back(tail[i]);
    Hypergraph lg = link(f.g, f.c, averts), lh = link(f.h, f.c, averts);
    if (lg.edges().empty() && lh.edges().empty()) continue;
    Rank1Pair pr;
    for (const auto& e : lg.edges()) pr.gx.push_back(e[0]);
    for (const auto& e : lh.edges()) pr.hx.push_back(e[0]);
    out.push_back(std::move(pr));
  }
  return out;
}

// perm[row] = printed position assigned to that row of R.
bool rank1_feasible(const RatMatrix& rt, const std::vector<int>& perm,
                    const std::vector<Rank1Pair>& pairs) {
  int s = rt.rows();
  for (const auto& pr : pairs) {
    std::vector<bool> in_g(s, false), in_h(s, false);
    for (size_t row = 0; row < perm.size(); ++row) {
      in_g[row] = std::binary_search(pr.gx.begin(), pr.gx.end(), perm[row]);
      in_h[row] = std::binary_search(pr.hx.begin(), pr.hx.end(), perm[row]);
    }
    for (int i = 0; i < s; ++i) {
      Rational sum;
      for (int j = 0; j < s; ++j)
        if (in_g[j]) sum += rt.at(i, j);
      if (sum != Rational(in_h[i] ? 1 : 0)) return false;
    }
  }
  return true;
}

std::optional<FixtureCertificate> try_mapping(const Fixture& f,
                                              const RatMatrix& r,
                                              const std::vector<int>& perm) {
  std::vector<int> mapping;
  for (int p : perm) mapping.push_back(f.c[p]);
  RatMatrix q = place_on(r, mapping, f.g.n());
  SimilarityCertificate cert = certify_similarity(q, f.g, f.h);
  if (!cert.ok()) return std::nullopt;
  return FixtureCertificate{cert, mapping, q};
}

// Exhaustive row-permutation search with the rank-1 indicator prefilter;
// fine up to s = 8.
std::optional<FixtureCertificate> permutation_search(const Fixture& f,
                                                     const RatMatrix& r) {
  int s = r.rows();
  RatMatrix rt = r.transpose();
  auto pairs = rank1_pairs(f);
  std::vector<int> perm(s);
  for (int i = 0; i < s; ++i) perm[i] = i;
  do {
    if (!rank1_feasible(rt, perm, pairs)) continue;
    if (auto found = try_mapping(f, r, perm)) return found;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// The sun matrix carries paired blocks (rows 2i, 2i+1); a transversal
// rank-1 link pins the block structure, so assign blocks depth-first and
// prune with the one-step shift the matrix induces on transversals.
std::optional<FixtureCertificate> sun_search(const Fixture& f,
                                             const RatMatrix& r) {
  int s = r.rows(), m = s / 2;
  auto pairs = rank1_pairs(f);
  // The pure transversal pair (if any) drives the pruning; identify one
  // G-side link of size m with one member per eventual block.
  const Rank1Pair* trans = nullptr;
  for (const auto& pr : pairs)
    if (static_cast<int>(pr.gx.size()) == m) trans = &pr;
  std::vector<int> perm(s, -1);
  std::vector<bool> used(s, false);
  std::optional<FixtureCertificate> found;

  auto in_set = [](const std::vector<int>& xs, int v) {
    return std::binary_search(xs.begin(), xs.end(), v);
  };

  std::function<void(int)> assign_block = [&](int b) {
    if (found) return;
    if (b == m) {
      // Wrap-around shift check for block 0 against block m-1.
      if (trans) {
        for (int slot = 0; slot < 2; ++slot)
          if (in_set(trans->gx, perm[slot]) &&
              !in_set(trans->hx, perm[2 * (m - 1) + slot]))
            return;
        std::set<int> image;
        for (int i = 0; i < m; ++i)
          for (int slot = 0; slot < 2; ++slot)
            if (in_set(trans->gx, perm[2 * i + slot]))
              image.insert(perm[(2 * i + slot - 2 + s) % s]);
        if (std::vector<int>(image.begin(), image.end()) != trans->hx) return;
      }
      RatMatrix rt = r.transpose();
      if (rank1_feasible(rt, perm, pairs))
        found = try_mapping(f, r, perm);
      return;
    }
    for (int a = 0; a < s; ++a) {
      if (used[a]) continue;
      for (int bb = 0; bb < s; ++bb) {
        if (used[bb] || bb == a) continue;
        perm[2 * b] = a;
        perm[2 * b + 1] = bb;
        used[a] = used[bb] = true;
        bool ok = true;
        if (trans) {
          int cnt = in_set(trans->gx, a) + in_set(trans->gx, bb);
          if (cnt != 1) ok = false;
          // Shift: a transversal member at (block b, slot t) must map to
          // an H-side member at (block b-1, slot t).
          if (ok && b > 0)
            for (int slot = 0; slot < 2 && ok; ++slot)
              if (in_set(trans->gx, perm[2 * b + slot]) &&
                  !in_set(trans->hx, perm[2 * (b - 1) + slot]))
                ok = false;
        }
        if (ok) assign_block(b + 1);
        used[a] = used[bb] = false;
      }
    }
    perm[2 * b] = perm[2 * b + 1] = -1;
  };
  assign_block(0);
  return found;
}

}  // namespace

FixtureCertificate verify_fixture(const std::string& name) {
  Fixture f = fixture(name);
  RatMatrix r = build(f.family);

  // The printed order first.
  std::vector<int> id(r.rows());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  if (auto direct = try_mapping(f, r, id)) return *direct;

  std::optional<FixtureCertificate> found =
      name == "sun" ? sun_search(f, r) : permutation_search(f, r);
  if (!found)
    throw std::runtime_error("fixture " + name +
                             ": no row assignment certifies the pair");
  return *found;
}

}  // namespace cospec

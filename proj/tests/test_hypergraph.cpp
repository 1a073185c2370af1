#include "doctest.h"

#include "cospec/catalog.hpp"
#include "cospec/hypergraph.hpp"

#include <random>
#include <set>

using namespace cospec;

namespace {

Hypergraph fano_plus_tail() {
  // 3-uniform hypergraph on {1..7, x, y, z}: the seven Fano lines plus
  // 1xy, 2xy, 4xy, xyz.
  std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6", "7",
                                     "x", "y", "z"};
  std::vector<std::vector<std::string>> edges = {
      {"1", "2", "4"}, {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "7"},
      {"5", "6", "1"}, {"6", "7", "2"}, {"7", "1", "3"}, {"1", "x", "y"},
      {"2", "x", "y"}, {"4", "x", "y"}, {"x", "y", "z"}};
  return Hypergraph::from_labels(3, labels, edges);
}

Hypergraph random_hypergraph(std::mt19937& rng, int n, int k) {
  std::vector<std::vector<int>> edges;
  std::uniform_int_distribution<int> coin(0, 2);
  for (const auto& e : k_subsets(n, k))
    if (coin(rng) == 0) edges.push_back(e);
  return Hypergraph::on_range(k, n, std::move(edges));
}

}  // namespace

TEST_CASE("construction canonicalizes") {
  Hypergraph g = Hypergraph::on_range(3, 4, {{2, 1, 0}, {1, 2, 3}, {0, 1, 2}});
  CHECK(g.edges().size() == 2);
  CHECK(g.edges()[0] == std::vector<int>{0, 1, 2});
  CHECK(g.edges()[1] == std::vector<int>{1, 2, 3});

  CHECK(Hypergraph::on_range(3, 4, {}).edges().empty());
  CHECK_THROWS(Hypergraph::on_range(3, 4, {{0, 1}}));
  CHECK_THROWS(Hypergraph::on_range(3, 4, {{0, 1, 4}}));
  CHECK_THROWS(Hypergraph::on_range(0, 4, {}));
  CHECK_THROWS(Hypergraph::from_labels(2, {"a", "b"}, {{"a", "zz"}}));
  CHECK_THROWS(Hypergraph(2, {"a", "a"}, {}));
}

TEST_CASE("links of the Fano fixture") {
  Hypergraph g = fano_plus_tail();
  std::vector<int> C = {0, 1, 2, 3, 4, 5, 6};  // labels 1..7
  int x = g.index_of("x"), y = g.index_of("y"), z = g.index_of("z");

  Hypergraph lxy = link(g, C, {x, y});
  CHECK(lxy.k() == 1);
  CHECK(lxy.edges() == std::vector<std::vector<int>>{{0}, {1}, {3}});

  Hypergraph lempty = link(g, C, {});
  CHECK(lempty.k() == 3);
  CHECK(lempty == fano_lines_and_ovals().f1);

  Hypergraph lxz = link(g, C, {x, z});
  CHECK(lxz.edges().empty());

  CHECK(rank0_link(g, {x, y, z}));
  CHECK_FALSE(rank0_link(g, {x, y, g.index_of("5")}) );
  CHECK_THROWS(link(g, C, {0}));  // A intersects C
}

TEST_CASE("link rank is k - |A|") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    int k = 2 + static_cast<int>(rng() % 2);
    Hypergraph g = random_hypergraph(rng, n, k);
    std::vector<int> C = {0, 1, 2};
    for (int asz = 0; asz < k; ++asz) {
      std::vector<int> A;
      for (int i = 0; i < asz && 3 + i < n; ++i) A.push_back(3 + i);
      if (static_cast<int>(A.size()) != asz) continue;
      CHECK(link(g, C, A).k() == k - asz);
    }
  }
}

TEST_CASE("link_decompose reassembles exactly") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);  // up to 8
    int k = 2 + static_cast<int>(rng() % 3);  // up to 4
    if (k > n) continue;
    Hypergraph g = random_hypergraph(rng, n, k);
    int csz = 1 + static_cast<int>(rng() % n);
    std::vector<int> C;
    for (int i = 0; i < csz; ++i) C.push_back(i);
    LinkTable table = link_decompose(g, C);
    CHECK(reassemble(g.k(), g.labels(), table) == g);
  }
}

TEST_CASE("link_decompose special shapes") {
  // All edges inside D: only the rank-0 part is populated.
  Hypergraph g = Hypergraph::on_range(3, 6, {{3, 4, 5}});
  LinkTable t = link_decompose(g, {0, 1, 2});
  CHECK(t.links.empty());
  CHECK(t.inside_d.size() == 1);

  // GM-shaped: every edge meets C in at most one vertex, so only rank-0
  // and rank-1 links are nonempty.
  Hypergraph gm = Hypergraph::on_range(3, 8, {{0, 4, 5}, {1, 4, 5}, {4, 5, 6}});
  LinkTable tg = link_decompose(gm, {0, 1, 2, 3});
  for (const auto& [A, l] : tg.links) CHECK(l.k() == 1);
  CHECK(tg.inside_d.size() == 1);

  // Fano fixture: links sit at A = empty and at 2-subsets of {x,y,z}.
  Hypergraph f = fano_plus_tail();
  LinkTable tf = link_decompose(f, {0, 1, 2, 3, 4, 5, 6});
  std::set<size_t> sizes;
  for (const auto& [A, l] : tf.links) sizes.insert(A.size());
  CHECK(sizes == std::set<size_t>{0, 2});
  CHECK(tf.inside_d.size() == 1);  // xyz
}

TEST_CASE("components") {
  Hypergraph g3 = Hypergraph::on_range(3, 5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(components(g3) == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});

  Hypergraph empty3 = Hypergraph::on_range(3, 3, {});
  CHECK(components(empty3).size() == 3);

  Hypergraph two = Hypergraph::on_range(3, 6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(components(two).size() == 2);
}

TEST_CASE("components partition V and contain the edges") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph g = random_hypergraph(rng, 3 + static_cast<int>(rng() % 5), 3);
    auto blocks = components(g);
    std::vector<int> owner(g.n(), -1);
    int total = 0;
    for (size_t b = 0; b < blocks.size(); ++b)
      for (int v : blocks[b]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(b);
        ++total;
      }
    CHECK(total == g.n());
    for (const auto& e : g.edges())
      for (int v : e) CHECK(owner[v] == owner[e[0]]);
  }
}

TEST_CASE("is_complete") {
  CHECK(is_complete(Hypergraph::on_range(3, 4, k_subsets(4, 3))));
  CHECK_FALSE(
      is_complete(Hypergraph::on_range(3, 4, {{0, 1, 2}, {1, 2, 3}, {0, 1, 3}})));
  CHECK(is_complete(Hypergraph::on_range(3, 1, {})));  // vacuous
  CHECK(is_complete(Hypergraph::on_range(3, 2, {})));  // no 3-subsets exist
}

TEST_CASE("find_forbidden_pattern basics") {
  auto hit1 = find_forbidden_pattern(pattern_graph(1));
  REQUIRE(hit1.has_value());
  CHECK(hit1->id == 1);

  CHECK_FALSE(find_forbidden_pattern(Hypergraph::on_range(3, 4, k_subsets(4, 3)))
                  .has_value());

  auto hit3 = find_forbidden_pattern(pattern_graph(3));
  REQUIRE(hit3.has_value());
  CHECK(hit3->id == 3);

  auto hit2 = find_forbidden_pattern(pattern_graph(2));
  REQUIRE(hit2.has_value());
  CHECK(hit2->id == 2);

  CHECK_THROWS(find_forbidden_pattern(Hypergraph::on_range(2, 3, {})));
}

TEST_CASE("pattern embeddings are induced isomorphic copies") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph g = random_hypergraph(rng, 5 + static_cast<int>(rng() % 3), 3);
    auto hit = find_forbidden_pattern(g);
    if (!hit) continue;
    Hypergraph pat = pattern_graph(hit->id);
    // The embedding must carry pattern edges to edges, and the induced
    // subgraph on the image must have exactly the pattern's edge count.
    for (const auto& e : pat.edges()) {
      std::vector<int> f;
      for (int v : e) f.push_back(hit->embedding[v]);
      std::sort(f.begin(), f.end());
      CHECK(g.has_edge(f));
    }
    std::vector<int> image = hit->embedding;
    std::sort(image.begin(), image.end());
    CHECK(induced(g, image).edges().size() == pat.edges().size());
  }
}

TEST_CASE("no pattern implies every component complete (n <= 5, exhaustive)") {
  for (int n = 3; n <= 5; ++n) {
    auto all = k_subsets(n, 3);
    for (uint32_t mask = 0; mask < (uint32_t(1) << all.size()); ++mask) {
      std::vector<std::vector<int>> edges;
      for (size_t i = 0; i < all.size(); ++i)
        if (mask & (uint32_t(1) << i)) edges.push_back(all[i]);
      Hypergraph g = Hypergraph::on_range(3, n, std::move(edges));
      if (find_forbidden_pattern(g).has_value()) continue;
      for (const auto& block : components(g))
        CHECK(is_complete(induced(g, block)));
    }
  }
}

TEST_CASE("are_isomorphic") {
  Hypergraph g = Hypergraph::on_range(3, 5, {{0, 1, 2}, {2, 3, 4}});
  auto self = are_isomorphic(g, g);
  REQUIRE(self.has_value());

  auto fano = fano_lines_and_ovals();
  auto iso = are_isomorphic(fano.f1, fano.f2);
  REQUIRE(iso.has_value());
  // Verify the witness carries F1 edges onto F2 edges.
  for (const auto& e : fano.f1.edges()) {
    std::vector<int> f;
    for (int v : e) f.push_back((*iso)[v]);
    std::sort(f.begin(), f.end());
    CHECK(fano.f2.has_edge(f));
  }

  Hypergraph single = Hypergraph::on_range(3, 3, {{0, 1, 2}});
  Hypergraph none = Hypergraph::on_range(3, 3, {});
  CHECK_FALSE(are_isomorphic(single, none).has_value());
  CHECK_THROWS(are_isomorphic(Hypergraph::on_range(2, 13, {}),
                              Hypergraph::on_range(2, 13, {})));
}

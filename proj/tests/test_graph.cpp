#include "graphlim/errors.hpp"
#include "graphlim/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace graphlim;

TEST_CASE("catalog graphs") {
  const int four = 4;
  auto p4 = make_named("path", std::span<const int>(&four, 1)).graph;
  CHECK(p4.order() == 4);
  CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

  auto s3 = make_named("S3").graph;
  CHECK(s3.order() == 6);
  CHECK(s3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}});
  CHECK(make_named("S3_complement").graph == complement(s3));

  auto f12 = make_named("cograph_certificate_F12");
  CHECK(f12.graph.order() == 12);
  CHECK(f12.graph.size() == 14);
  const std::vector<Edge> expected{{0, 7}, {1, 7}, {2, 8},  {3, 9},  {4, 10},
                                   {5, 11}, {0, 8}, {1, 9}, {0, 10}, {1, 11},
                                   {2, 6}, {2, 7}, {3, 7}, {5, 6}};
  CHECK(f12.graph == Graph(12, expected));
  REQUIRE(f12.parts);
  CHECK(f12.parts->separates(f12.graph));
  CHECK(f12.parts->part1 == std::vector<Vertex>{0, 1, 2, 3, 4, 5});

  CHECK(make_named("K13").graph.size() == 3);
  CHECK(make_named("2K2").graph.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("catalog errors") {
  const int two = 2;
  CHECK_THROWS_AS(make_named("nonsense"), UnknownName);
  CHECK_THROWS_AS(make_named("cycle", std::span<const int>(&two, 1)), std::invalid_argument);
  CHECK_THROWS_AS(make_named("path"), std::invalid_argument);
  CHECK_THROWS_AS(make_named("S3", std::span<const int>(&two, 1)), std::invalid_argument);
}

TEST_CASE("graph construction rejects loops and bad endpoints") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  // set semantics
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.size() == 1);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == Graph(3));
  auto s3 = make_named("S3").graph;
  CHECK(complement(complement(s3)) == s3);
  CHECK(oracle::isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  CHECK(is_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
}

TEST_CASE("induced subgraph") {
  const std::vector<Vertex> s{0, 1, 2};
  CHECK(induced_subgraph(cycle_graph(4), s) == path_graph(3));
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(induced_subgraph(cycle_graph(4), all) == cycle_graph(4));
  const std::vector<Vertex> ends{3, 0};
  CHECK(induced_subgraph(path_graph(4), ends) == Graph(2));
  const std::vector<Vertex> bad{0, 7};
  CHECK_THROWS_AS(induced_subgraph(path_graph(4), bad), std::out_of_range);
}

TEST_CASE("add_twin") {
  CHECK(add_twin(complete_graph(2), 0, true) == complete_graph(3));
  CHECK(add_twin(complete_graph(2), 0, false) == Graph(3, {{0, 1}, {1, 2}}));
  CHECK(add_twin(Graph(1), 0, false) == Graph(2));
  CHECK_THROWS_AS(add_twin(Graph(1), 1, false), std::out_of_range);
}

TEST_CASE("isomorphism examples") {
  CHECK(is_isomorphic(path_graph(4), complement(path_graph(4))));
  CHECK_FALSE(is_isomorphic(cycle_graph(4), make_named("2K2").graph));
  const std::vector<Vertex> perm{2, 0, 1};
  CHECK(is_isomorphic(complete_graph(3), relabel(complete_graph(3), perm)));
  CHECK(is_isomorphic(Graph(0), Graph(0)));
  CHECK(is_isomorphic(Graph(1), Graph(1)));
}

TEST_CASE("isomorphism agrees with permutation brute force on n <= 5") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto n = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    auto a = oracle::random_graph(rng, n, 0.5);
    auto b = oracle::random_graph(rng, n, 0.5);
    CHECK(is_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("isomorphism is an equivalence relation") {
  std::mt19937_64 rng(5);
  std::vector<Graph> corpus;
  for (int t = 0; t < 40; ++t)
    corpus.push_back(oracle::random_graph(
        rng, std::uniform_int_distribution<std::size_t>(3, 6)(rng), 0.5));
  // Include relabelled copies so the relation is not trivially sparse.
  for (int t = 0; t < 20; ++t) {
    auto g = corpus[t];
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    corpus.push_back(relabel(g, perm));
  }
  for (const auto &a : corpus) {
    CHECK(is_isomorphic(a, a));
    for (const auto &b : corpus) {
      CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
      if (!is_isomorphic(a, b)) continue;
      for (const auto &c : corpus)
        if (is_isomorphic(b, c)) CHECK(is_isomorphic(a, c));
    }
  }
}

TEST_CASE("canonical form") {
  SUBCASE("count of isomorphism classes on 4 vertices") {
    std::set<CanonicalForm> forms;
    for (const auto &g : enumerate_labelled(4)) forms.insert(canonical_form(g));
    CHECK(forms.size() == 11);
  }
  SUBCASE("empty graph") {
    CHECK(canonical_form(Graph(5)).graph.size() == 0);
    CHECK(canonical_form(Graph(0)).n == 0);
  }
  SUBCASE("minimal over all permutations") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
      auto g = oracle::random_graph(rng, 5, 0.5);
      std::vector<bool> best;
      std::vector<Vertex> perm{0, 1, 2, 3, 4};
      bool first = true;
      do {
        auto h = relabel(g, perm);
        std::vector<bool> bits;
        for (Vertex j = 1; j < 5; ++j)
          for (Vertex i = 0; i < j; ++i) bits.push_back(h.has_edge(i, j));
        if (first || bits < best) best = bits;
        first = false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      const auto cf = canonical_form(g);
      CHECK(cf.bits == best);
      CHECK(is_isomorphic(cf.graph, g));
    }
  }
  SUBCASE("invariant under relabelling, 50 permutations per graph") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
      const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
      auto g = oracle::random_graph(rng, n, 0.4);
      const auto cf = canonical_form(g);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), Vertex{0});
      for (int k = 0; k < 50; ++k) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(g, perm)) == cf);
      }
    }
  }
  SUBCASE("equal forms iff isomorphic") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
      auto a = oracle::random_graph(rng, 5, 0.5);
      auto b = oracle::random_graph(rng, 5, 0.5);
      CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    }
  }
}

TEST_CASE("enumerate_labelled") {
  CHECK(enumerate_labelled(0).count() == 1);
  CHECK(enumerate_labelled(3).count() == 8);
  CHECK(enumerate_labelled(4).count() == 64);
  std::set<Graph> seen;
  for (const auto &g : enumerate_labelled(4)) seen.insert(g);
  CHECK(seen.size() == 64);
  std::size_t empties = 0;
  for (const auto &g : enumerate_labelled(0)) empties += g.order() == 0;
  CHECK(empties == 1);
}

TEST_CASE("enumerate_unlabelled matches known class counts") {
  // 1, 1, 2, 4, 11, 34, 156 graphs on 0..6 vertices.
  const std::size_t counts[] = {1, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(enumerate_unlabelled(n).size() == counts[n]);
}

TEST_CASE("complement is an involution and commutes with induced subgraphs") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_graph(rng, 7, 0.5);
    CHECK(complement(complement(g)) == g);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 7; ++v)
      if (rng() & 1) s.push_back(v);
    CHECK(induced_subgraph(complement(g), s) == complement(induced_subgraph(g, s)));
  }
}

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(path_graph(4)) == "Ch");
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6("Ch") == path_graph(4));
  CHECK(from_graph6("Ch\n") == path_graph(4));
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(from_graph6("?") == Graph(0));

  // Large orders use the four-byte header.
  Graph big(70, {{0, 69}, {33, 34}});
  const auto text = to_graph6(big);
  CHECK(text[0] == '~');
  CHECK(from_graph6(text) == big);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("C"), ParseError);        // missing data
  CHECK_THROWS_AS(from_graph6("C~~"), ParseError);      // trailing garbage
  CHECK_THROWS_AS(from_graph6("C\x20"), ParseError);    // out-of-range char
  CHECK_THROWS_AS(from_graph6("B@"), ParseError);       // nonzero padding (n=3 uses 3 bits)
}

TEST_CASE("edge list format") {
  CHECK(from_edge_list("3 2\n0 1\n1 2\n") == path_graph(3));
  CHECK(to_edge_list(path_graph(3)) == "3 2\n0 1\n1 2\n");
  CHECK(to_edge_list(Graph(0)) == "0 0\n");
  CHECK(from_edge_list("0 0\n") == Graph(0));
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n"), ParseError);          // too few lines
  CHECK_THROWS_AS(from_edge_list("3 1\n1 0\n"), ParseError);          // u > v
  CHECK_THROWS_AS(from_edge_list("3 1\n0 3\n"), ParseError);          // out of range
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n0 1\n"), ParseError);     // duplicate
  CHECK_THROWS_AS(from_edge_list("3 1\n0  1\n"), ParseError);         // double space
  CHECK_THROWS_AS(from_edge_list("3 1\n0 1\nx\n"), ParseError);       // trailing garbage
  CHECK_THROWS_AS(from_edge_list("3 1 # c\n0 1\n"), ParseError);      // comments
}

TEST_CASE("round trips on all graphs with n <= 6") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto &g : enumerate_labelled(n)) {
      REQUIRE(from_graph6(to_graph6(g)) == g);
      REQUIRE(from_edge_list(to_edge_list(g)) == g);
    }
}

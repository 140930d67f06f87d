#include "graphlim/classes.hpp"
#include "graphlim/densities.hpp"
#include "graphlim/errors.hpp"
#include "graphlim/sampler.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace graphlim;

namespace {

Graph k13() { return make_named("K13").graph; }

Graph with_edge(Graph g, Vertex u, Vertex v) {
  g.add_edge(u, v);
  return g;
}

// Builders that produce members of specific classes, so hereditarity tests
// see plenty of positive instances.
Graph random_threshold(std::mt19937_64 &rng, std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v)
    if (rng() & 1)
      for (Vertex u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

Graph random_cograph(std::mt19937_64 &rng, std::size_t n) {
  if (n <= 1) return Graph(n);
  const auto split = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
  auto a = random_cograph(rng, split), b = random_cograph(rng, n - split);
  Graph g(n);
  for (const auto &e : a.edges()) g.add_edge(e.u, e.v);
  for (const auto &e : b.edges())
    g.add_edge(static_cast<Vertex>(e.u + split), static_cast<Vertex>(e.v + split));
  if (rng() & 1)
    for (Vertex u = 0; u < split; ++u)
      for (Vertex v = static_cast<Vertex>(split); v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph random_intervals(std::mt19937_64 &rng, std::size_t n, bool unit) {
  std::uniform_real_distribution<double> pos(0.0, 10.0), len(0.5, 4.0);
  std::vector<std::pair<double, double>> iv;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = pos(rng);
    iv.push_back({a, a + (unit ? 2.0 : len(rng))});
  }
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("recognizer examples") {
  CHECK_FALSE(is_member("threshold", path_graph(4)));
  CHECK(is_member("threshold", complete_graph(3)));
  CHECK_FALSE(is_member("unit_interval", k13()));
  CHECK(is_member("interval", k13()));
  CHECK_FALSE(is_member("chordal", cycle_graph(4)));
  CHECK(is_member("chordal", with_edge(cycle_graph(4), 0, 2)));
  CHECK(is_member("cograph", cycle_graph(4)));
  CHECK_FALSE(is_member("bipartite", cycle_graph(5)));
  CHECK(is_member("bipartite", cycle_graph(6)));
  CHECK_FALSE(is_member("triangle_free", complete_graph(3)));
  CHECK(is_member("triangle_free", cycle_graph(5)));
  CHECK_FALSE(is_member("interval", make_named("S3").graph));
  CHECK_FALSE(is_member("interval", make_named("S3_complement").graph));
  CHECK_THROWS_AS(is_member("perfect", Graph(1)), UnknownName);
}

TEST_CASE("every class contains the trivial graphs") {
  for (const auto &name : class_names()) {
    CHECK(is_member(name, Graph(0)));
    CHECK(is_member(name, Graph(1)));
    CHECK(is_member(name, complete_graph(2)));
  }
}

TEST_CASE("forbidden family membership") {
  ForbiddenFamily p4;
  p4.members = {path_graph(4)};
  CHECK_FALSE(avoids_family(path_graph(4), p4));

  ForbiddenFamily c4;
  c4.members = {cycle_graph(4)};
  CHECK(avoids_family(cycle_graph(5), c4));

  const auto odd = bipartite_family(9);
  CHECK_FALSE(avoids_family(cycle_graph(5), odd));
  CHECK(avoids_family(cycle_graph(6), odd));
  // Subgraph mode sees a triangle inside K4; induced mode with the same
  // family does too, but C4 is only a subgraph of K4.
  ForbiddenFamily c4_sub = c4;
  c4_sub.mode = ContainmentMode::Subgraph;
  CHECK(avoids_family(complete_graph(4), c4));
  CHECK_FALSE(avoids_family(complete_graph(4), c4_sub));

  ForbiddenFamily bad;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.cycle_min = 5;
  bad.truncation = 4;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("cycle tails respect truncation and parity") {
  auto f = bipartite_family(9);
  CHECK(f.cycle_lengths(100) == std::vector<std::size_t>{3, 5, 7, 9});
  CHECK(f.cycle_lengths(6) == std::vector<std::size_t>{3, 5});
  auto c = chordal_family(6);
  CHECK(c.cycle_lengths(100) == std::vector<std::size_t>{4, 5, 6});
  // A long hole is only visible with enough truncation.
  CHECK(avoids_family(cycle_graph(7), chordal_family(6)));
  CHECK_FALSE(avoids_family(cycle_graph(7), chordal_family(7)));
}

TEST_CASE("maximum cardinality search gives a perfect elimination ordering") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    auto g = random_intervals(rng, 9, false);
    auto order = maximum_cardinality_search(g);
    std::reverse(order.begin(), order.end());
    CHECK(is_perfect_elimination_ordering(g, order));
  }
  auto c5 = cycle_graph(5);
  auto order = maximum_cardinality_search(c5);
  std::reverse(order.begin(), order.end());
  CHECK_FALSE(is_perfect_elimination_ordering(c5, order));
}

TEST_CASE("recognizers agree with brute-force characterizations on n <= 5") {
  const auto tf = threshold_family();
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto &g : enumerate_labelled(n)) {
      CHECK(is_chordal(g) == oracle::chordal(g));
      CHECK(is_interval(g) == oracle::interval(g));
      CHECK(is_cograph(g) == !oracle::contains_induced(g, path_graph(4)));
      bool threshold = true;
      for (const auto &h : tf.members) threshold = threshold && !oracle::contains_induced(g, h);
      CHECK(is_threshold(g) == threshold);
      CHECK(is_triangle_free(g) == !oracle::contains_induced(g, complete_graph(3)));
    }
}

TEST_CASE("class inclusions on graphs with n <= 6") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto &g : enumerate_labelled(n)) {
      const bool threshold = is_threshold(g), interval = is_interval(g);
      if (threshold) {
        REQUIRE(is_cograph(g));
        REQUIRE(interval);
      }
      if (is_unit_interval(g)) REQUIRE(interval);
      if (interval) REQUIRE(is_chordal(g));
      if (is_bipartite(g)) REQUIRE(is_triangle_free(g));
    }
}

TEST_CASE("membership is hereditary") {
  std::mt19937_64 rng(4242);
  for (const auto &name : class_names()) {
    const auto oracle = class_spec(name).oracle;
    std::size_t members = 0;
    for (int t = 0; t < 500; ++t) {
      const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
      Graph g;
      switch (t % 5) {
      case 0: g = oracle::random_graph(rng, n, 0.3); break;
      case 1: g = random_threshold(rng, n); break;
      case 2: g = random_cograph(rng, n); break;
      case 3: g = random_intervals(rng, n, t % 2 == 0); break;
      default: {
        Bipartition parts;
        g = oracle::random_bipartite(rng, n / 2, n - n / 2, 0.5, parts);
      }
      }
      if (!oracle(g)) continue;
      ++members;
      for (Vertex drop = 0; drop < n; ++drop) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v)
          if (v != drop) keep.push_back(v);
        REQUIRE(oracle(induced_subgraph(g, keep)));
      }
    }
    CHECK(members > 50);
  }
}

TEST_CASE("class specs expose forbidden families") {
  CHECK(class_spec("threshold").forbidden->members.size() == 3);
  CHECK(class_spec("cograph").forbidden->members.size() == 1);
  CHECK(class_spec("chordal").forbidden->cycle_min == 4u);
  CHECK_FALSE(class_spec("interval").forbidden.has_value());
  CHECK(class_spec("bipartite").forbidden->mode == ContainmentMode::Subgraph);
}

#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "twoeig/families.hpp"
#include "twoeig/graph.hpp"

using namespace twoeig;

TEST_CASE("graph basics and input validation") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(513), std::invalid_argument);
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(g.edge(1, 0));
  CHECK(g.degree(0) == 1);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("graph6 round trip") {
  // K2 u K2 = 2K2: 4 vertices, 2 edges
  Graph m2 = oracles::matching(2);
  CHECK(from_graph6(to_graph6(m2)) == m2);
  CHECK(to_graph6(oracles::complete(5)) == "D~{");  // K5, well-known encoding
  CHECK(to_graph6(construct(friendship(2))) == "Dto");

  std::mt19937_64 rng(20240817);
  for (int n : {1, 2, 5, 62, 63, 64, 100, 511, 512}) {
    Graph g = oracles::random_graph(n, rng);
    Graph back = from_graph6(to_graph6(g));
    CHECK(back == g);
  }

  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("D"), std::invalid_argument);      // missing data bytes
  CHECK_THROWS_AS(from_graph6("Dto{"), std::invalid_argument);   // trailing bytes
  CHECK_THROWS_AS(from_graph6("B\x7f"), std::invalid_argument);  // out of range
  CHECK(from_graph6("A_").edge_count() == 1);                    // K2
  CHECK_THROWS_AS(from_graph6("Ao"), std::invalid_argument);     // nonzero padding
  CHECK(from_graph6("Dto\n") == construct(friendship(2)));       // newline tolerated
}

TEST_CASE("disjoint union and isolated edges") {
  Graph k2(2);
  k2.add_edge(0, 1);
  Graph u = disjoint_union(k2, k2);
  CHECK(u.order() == 4);
  CHECK(u.edge_count() == 2);
  CHECK(are_isomorphic(u, oracles::matching(2)));

  Graph f2 = construct(friendship(2));
  CHECK(add_isolated_edges(f2, 0) == f2);
  Graph padded = add_isolated_edges(construct(CaseI{4}), 1);
  CHECK(padded.order() == 10);
  CHECK(padded.edge_count() == construct(CaseI{4}).edge_count() + 1);

  Graph big(510);
  CHECK_THROWS_AS(disjoint_union(big, oracles::complete(3)), std::length_error);
  CHECK_THROWS_AS(add_isolated_edges(big, 2), std::length_error);
}

TEST_CASE("induced subgraphs") {
  Graph k5 = oracles::complete(5);
  VertexSet s(5);
  s.add(0);
  s.add(2);
  s.add(4);
  CHECK(induced_subgraph(k5, s) == oracles::complete(3));

  // one triangle of F_2: center 0 plus the matched pair {1, 4}
  Graph f2 = construct(friendship(2));
  VertexSet t(5);
  t.add(0);
  t.add(1);
  t.add(4);
  CHECK(are_isomorphic(induced_subgraph(f2, t), oracles::complete(3)));

  CHECK(induced_subgraph(k5, VertexSet::full(5)) == k5);
  CHECK_THROWS_AS(induced_subgraph(k5, VertexSet(5)), std::invalid_argument);

  // a 5-cycle of the Petersen graph is induced
  Graph pet = oracles::petersen();
  VertexSet outer(10);
  for (int i = 0; i < 5; ++i) outer.add(i);
  CHECK(are_isomorphic(induced_subgraph(pet, outer), oracles::cycle(5)));
}

TEST_CASE("contains_induced") {
  Graph f5 = construct(friendship(5));
  auto triangle = contains_induced(f5, oracles::complete(3));
  REQUIRE(triangle.has_value());
  CHECK(are_isomorphic(induced_subgraph(f5, *triangle), oracles::complete(3)));

  CHECK(!contains_induced(f5, oracles::cycle(5)).has_value());

  // the house (C5 plus a chord) does not contain C5 as an *induced* subgraph
  Graph house = oracles::cycle(5);
  house.add_edge(0, 2);
  CHECK(!contains_induced(house, oracles::cycle(5)).has_value());

  // first witness is lexicographically least
  auto w = contains_induced(oracles::complete(4), oracles::complete(2));
  REQUIRE(w.has_value());
  CHECK(w->vertices() == std::vector<int>{0, 1});

  CHECK_THROWS_AS(contains_induced(oracles::complete(2), oracles::complete(3)),
                  std::invalid_argument);

  // witness property on a random host
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph host = oracles::random_graph(9, rng);
    Graph pattern = oracles::cycle(4);
    if (auto witness = contains_induced(host, pattern))
      CHECK(are_isomorphic(induced_subgraph(host, *witness), pattern));
  }

  auto all = all_induced_witnesses(construct(friendship(2)), oracles::complete(3));
  CHECK(all.size() == 2);  // the two triangles of the bowtie
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(42);
  Graph f2 = construct(friendship(2));
  for (int trial = 0; trial < 10; ++trial)
    CHECK(are_isomorphic(f2, oracles::random_relabel(f2, rng)));

  CHECK(are_isomorphic(construct(CaseI{3}), oracles::cycle(6)));

  Graph f16 = construct(friendship(16));
  Graph mate = disjoint_union(construct(CaseVI{3, 5}), oracles::matching(10));
  CHECK(f16.order() == mate.order());
  CHECK(f16.edge_count() == mate.edge_count());
  CHECK(!are_isomorphic(f16, mate));

  // equivalence relation on a small pool + relabeling invariance
  std::vector<Graph> pool;
  for (int i = 0; i < 8; ++i) pool.push_back(oracles::random_graph(6, rng));
  for (const Graph& a : pool)
    for (const Graph& b : pool) {
      bool ab = are_isomorphic(a, b);
      CHECK(ab == are_isomorphic(b, a));
      if (ab) CHECK(are_isomorphic(oracles::random_relabel(a, rng), b));
    }

  // same degree sequence, not isomorphic: C6 vs 2 triangles
  CHECK(!are_isomorphic(oracles::cycle(6), disjoint_union(oracles::complete(3),
                                                          oracles::complete(3))));
}

TEST_CASE("connected components") {
  Graph f3 = construct(friendship(3));
  auto comps = connected_components(f3);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].count() == 7);
  CHECK(is_connected(f3));

  auto three = connected_components(oracles::matching(3));
  REQUIRE(three.size() == 3);
  for (const auto& c : three) CHECK(c.count() == 2);
  CHECK(three[0].smallest() == 0);
  CHECK(three[1].smallest() == 2);

  Graph big = disjoint_union(construct(CaseVI{3, 5}), oracles::matching(10));
  auto cs = connected_components(big);
  REQUIRE(cs.size() == 11);
  CHECK(cs[0].count() == 13);
  for (size_t i = 1; i < cs.size(); ++i) CHECK(cs[i].count() == 2);
}

TEST_CASE("canonical codes agree with isomorphism") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracles::random_graph(7, rng);
    CHECK(canonical_code_small(g) == canonical_code_small(oracles::random_relabel(g, rng)));
  }
  CHECK(canonical_code_small(oracles::cycle(6)) !=
        canonical_code_small(disjoint_union(oracles::complete(3), oracles::complete(3))));

  // the two independent implementations decide equivalence identically
  for (int trial = 0; trial < 150; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    Graph g = oracles::random_graph(n, rng);
    Graph h = oracles::random_graph(n, rng);
    CHECK((canonical_code_small(g) == canonical_code_small(h)) == are_isomorphic(g, h));
  }
}

TEST_CASE("graph6 decoder rejects garbage without crashing") {
  std::mt19937_64 rng(31337);
  // anything accepted must round-trip exactly; everything else must throw
  // invalid_argument (checked by the absence of other exception types)
  auto decode_roundtrips = [](const std::string& s) {
    std::string stripped = s;  // the decoder tolerates trailing line ends
    while (!stripped.empty() && (stripped.back() == '\n' || stripped.back() == '\r'))
      stripped.pop_back();
    try {
      return to_graph6(from_graph6(s)) == stripped;
    } catch (const std::invalid_argument&) {
      return true;
    }
  };
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    int len = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) s.push_back(static_cast<char>(rng() % 256));
    CHECK(decode_roundtrips(s));
  }

  // single-byte mutations of valid encodings
  for (int trial = 0; trial < 60; ++trial) {
    std::string enc = to_graph6(oracles::random_graph(2 + static_cast<int>(rng() % 9), rng));
    for (size_t pos = 0; pos < enc.size(); ++pos) {
      std::string mutated = enc;
      mutated[pos] = static_cast<char>(rng() % 256);
      if (mutated != enc) CHECK(decode_roundtrips(mutated));
    }
  }
}

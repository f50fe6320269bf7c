#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "twoeig/classifier.hpp"
#include "twoeig/families.hpp"

using namespace twoeig;

TEST_CASE("constructions match their descriptions") {
  CHECK(are_isomorphic(construct(CaseI{3}), oracles::cycle(6)));

  Graph f2 = construct(CaseII{1, 2});
  CHECK(f2.order() == 5);
  CHECK(f2.edge_count() == 6);
  CHECK(all_induced_witnesses(f2, oracles::complete(3)).size() == 2);  // bowtie

  Graph iv1 = construct(CaseIV{1});
  CHECK(iv1.order() == 10);
  CHECK(iv1.edge_count() == 13);
  CHECK(!contains_induced(iv1, oracles::complete(3)).has_value());  // bipartite

  CHECK(construct(friendship(1)) == construct(CaseII{1, 1}));
  CHECK(are_isomorphic(construct(friendship(1)), oracles::complete(3)));

  // friendship graph: k triangles sharing one vertex, 2k+1 vertices, 3k edges
  for (long k = 2; k <= 6; ++k) {
    Graph fk = construct(friendship(k));
    CHECK(fk.order() == 2 * k + 1);
    CHECK(fk.edge_count() == 3 * k);
    CHECK(all_induced_witnesses(fk, oracles::complete(3)).size() == static_cast<size_t>(k));
  }

  CHECK_THROWS_AS(construct(CaseI{2}), std::invalid_argument);
  CHECK_THROWS_AS(construct(CaseII{0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(construct(CaseIII{2, 3}), std::invalid_argument);  // needs l >= m
  CHECK_THROWS_AS(construct(CaseIV{3}), std::invalid_argument);
  CHECK_THROWS_AS(construct(CaseV{5, 5}), std::invalid_argument);
  CHECK_THROWS_AS(construct(CaseVI{3, 4}), std::invalid_argument);
}

TEST_CASE("expected spectra, frozen values") {
  TwoEigCertificate f16 = expected_certificate(friendship(16));
  CHECK(f16.p == 15);
  CHECK(f16.q == 16);
  CHECK(f16.t == 1);
  CHECK(f16.d == -32);

  TwoEigCertificate c3 = expected_certificate(CaseIII{2, 2});
  CHECK(c3.p == 2);
  CHECK(c3.q == 4);
  CHECK(c3.t == 2);
  CHECK(c3.d == -15);  // roots {5, -3}

  TwoEigCertificate c6 = expected_certificate(CaseVI{3, 5});
  CHECK(c6.p == 5);
  CHECK(c6.q == 6);
  CHECK(c6.t == 1);
  CHECK(c6.d == -32);

  TwoEigCertificate v46 = expected_certificate(CaseV{4, 6});
  CHECK(v46.p == 1);
  CHECK(v46.q == 8);
  CHECK(v46.t == 7);   // roots (7 +- sqrt(129))/2
  CHECK(v46.d == -20);

  CHECK_THROWS_AS(expected_certificate(friendship(1)), std::invalid_argument);
}

TEST_CASE("verify_family") {
  for (long a = 1; a <= 6; ++a)
    for (long k = 2; k <= 12; ++k) CHECK(verify_family(CaseII{a, k}));
  CHECK(verify_family(CaseV{4, 6}));
  CHECK(verify_family(CaseVI{4, 4}));
  CHECK(verify_family(CaseIV{1}));
  CHECK(verify_family(CaseIV{2}));

  // negative control: flipping one edge must break the verification
  Graph bad = construct(CaseI{4});
  bad.toggle_edge(0, 1);
  CHECK(strip_pm_one(char_poly(bad)) != expected_spectrum(CaseI{4}));
}

TEST_CASE("enumerate_instances") {
  auto n5 = enumerate_instances(5);
  REQUIRE(n5.size() == 1);
  CHECK(n5[0] == FamilySpec(CaseII{1, 2}));

  auto n8 = enumerate_instances(8);
  std::set<std::string> got;
  for (const auto& s : n8) got.insert(to_string(s));
  std::set<std::string> want = {"i:m=3",      "i:m=4",      "ii:a=1,k=2", "ii:a=1,k=3",
                                "ii:a=2,k=2", "ii:a=2,k=3", "ii:a=3,k=2", "ii:a=4,k=2",
                                "iii:l=2,m=2"};
  CHECK(got == want);

  auto n13 = enumerate_instances(13);
  std::set<std::string> got13;
  for (const auto& s : n13) got13.insert(to_string(s));
  CHECK(got13.count("vi:a=3,m=5") == 1);
  CHECK(got13.count("v:a=4,b=6") == 1);
  CHECK(got13.count("iv:1") == 1);

  // ordered by size, no duplicates
  for (size_t i = 1; i < n13.size(); ++i) CHECK(order_of(n13[i - 1]) <= order_of(n13[i]));
  CHECK(got13.size() == n13.size());

  CHECK_THROWS_AS(enumerate_instances(4), std::invalid_argument);
}

TEST_CASE("family structural invariants") {
  for (const FamilySpec& spec : enumerate_instances(16)) {
    Graph g = construct(spec);
    CHECK(is_connected(g));
    bool bipartite_case = std::holds_alternative<CaseI>(spec) || std::holds_alternative<CaseIV>(spec);
    CHECK(contains_induced(g, oracles::complete(3)).has_value() == !bipartite_case);
    // degree rules: no vertex of degree <= 1, no nested neighborhoods with
    // degree gap <= 2
    CHECK(check_structure_rules(g).ok());
    int min_deg = g.order();
    for (int v = 0; v < g.order(); ++v) min_deg = std::min(min_deg, g.degree(v));
    CHECK(min_deg >= 2);
  }
}

TEST_CASE("spec strings round trip") {
  for (const char* text : {"i:m=3", "ii:a=1,k=16", "iii:l=4,m=3", "iv:1", "iv:2",
                           "v:a=4,b=6", "vi:a=3,m=5"}) {
    FamilySpec spec = parse_family_spec(text);
    CHECK(to_string(spec) == text);
  }
  CHECK(parse_family_spec("friendship:k=16") == FamilySpec(CaseII{1, 16}));
  CHECK(to_string(parse_family_spec("friendship:k=16")) == "ii:a=1,k=16");

  CHECK_THROWS_AS(parse_family_spec("vii:a=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("i"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("ii:a=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("i:m=2"), std::invalid_argument);
}

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "twoeig/equitable.hpp"
#include "twoeig/graph.hpp"
#include "twoeig/spectra.hpp"

namespace twoeig {

// The six families of the classification, with the parameter bounds of the
// theorem. Block layouts follow the printed matrices, so vertex indices are
// reproducible.
struct CaseI {
  long m;  // m >= 3; [[O, J-I_m], [J-I_m, O]], order 2m
  bool operator==(const CaseI&) const = default;
};
struct CaseII {
  long a;  // a >= 1, k >= 2; [[J-I_a, J], [J, R_2k]], order a+2k
  long k;  // a = 1 gives the friendship graph F_k
  bool operator==(const CaseII&) const = default;
};
struct CaseIII {
  long l;  // l >= m >= 2; [[R_2l, J], [J, R_2m]], order 2l+2m
  long m;
  bool operator==(const CaseIII&) const = default;
};
struct CaseIV {
  int variant;  // 1 or 2; bipartite [[O, N], [N^T, O]], order 10 or 12
  bool operator==(const CaseIV&) const = default;
};
struct CaseV {
  long a;  // (a,b) in {(6,5),(4,6),(3,8)}; two joined cliques plus one
  long b;  // extra vertex attached to the first, order a+b+1
  bool operator==(const CaseV&) const = default;
};
struct CaseVI {
  long a;  // (a,m) in {(3,5),(4,4)}; clique, join, matching chain, order a+2m
  long m;
  bool operator==(const CaseVI&) const = default;
};

using FamilySpec = std::variant<CaseI, CaseII, CaseIII, CaseIV, CaseV, CaseVI>;

// Friendship graph F_k as a family spec (case (ii) with a = 1). Constructible
// for k >= 1 (F_1 = K_3), but the classification assumes k >= 2.
FamilySpec friendship(long k);

Graph construct(const FamilySpec& spec);
long order_of(const FamilySpec& spec);

// The block structure of each family's printed adjacency matrix, as an
// equitable partition of construct(spec).
Partition block_partition(const FamilySpec& spec);

// Closed-form (p, q, t, d) from the theorem; residual is x^2 - t x + d.
SpectrumSummary expected_spectrum(const FamilySpec& spec);
TwoEigCertificate expected_certificate(const FamilySpec& spec);

// strip_pm_one(char_poly(construct(spec))) == expected_spectrum(spec) exactly,
// and the graph carries a class-G certificate.
bool verify_family(const FamilySpec& spec);

// Every spec whose constructed graph has at most n_max vertices, exactly once,
// ordered by (order, family, parameters).
std::vector<FamilySpec> enumerate_instances(long n_max);

// Compact CLI forms: "i:m=3", "ii:a=1,k=16", "iii:l=4,m=3", "iv:1",
// "v:a=4,b=6", "vi:a=3,m=5", "friendship:k=16".
FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);

}  // namespace twoeig

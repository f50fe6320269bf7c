#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "twoeig/families.hpp"
#include "twoeig/graph.hpp"
#include "twoeig/spectra.hpp"

namespace twoeig {

// One representative per isomorphism class of simple graphs on n vertices,
// deterministic order. Built-in generation is capped at n = 8; larger orders
// must come from an external graph6 stream.
std::vector<Graph> enumerate_graphs(int n);

struct ClassificationReport {
  long n_max = 0;
  long graphs_seen = 0;
  long connected_seen = 0;
  std::array<long, 4> class_counts{};  // indexed by SpectrumClass

  struct Member {
    Graph graph;
    TwoEigCertificate cert;
    int instance = -1;  // index into instances; -1 = unmatched
  };
  std::vector<Member> members;
  std::vector<FamilySpec> instances;  // enumerate_instances(n_max)
  std::vector<long> instance_hits;

  std::vector<const Member*> unmatched() const;
  bool ok() const;  // no unmatched member and every instance hit exactly once
};

// Sweeps every graph of order <= n_max (built-in enumeration up to 8, plus
// optionally graphs of order 9..n_max from a graph6 stream), filters through
// the class membership test and matches members against the family instances.
ClassificationReport verify_classification(long n_max, std::istream* external = nullptr,
                                           int jobs = 1);

struct StructureViolation {
  int rule;  // 1: degree-1 vertex outside a K2 component; 2: nested neighborhoods
  int u;
  int v;  // -1 for rule 1
};

struct StructureReport {
  std::vector<StructureViolation> violations;
  bool ok() const { return violations.empty(); }
};

StructureReport check_structure_rules(const Graph& g);

struct CospectralPair {
  FamilySpec left;  // the larger graph; padding 0 in the minimal form
  long left_padding = 0;
  FamilySpec right;
  long right_padding = 0;
  IntPoly shared_char_poly;
};

// All certified cospectral nonisomorphic pairs H + a K2 / H' + a' K2 with
// padded order <= n_max, minimal padding. extra_common_padding additionally
// emits the versions with both paddings incremented while they still fit.
std::vector<CospectralPair> cospectral_mate_pairs(long n_max, bool extra_common_padding = false);

struct DsStatus {
  bool determined = true;
  std::string reason;  // for NotDS: which mate exists
};

DsStatus ds_status(const FamilySpec& spec);

// True iff all family instances of order <= n_max have pairwise distinct
// (p, q, t, d) signatures.
bool pairwise_distinct_spectra(long n_max);

}  // namespace twoeig

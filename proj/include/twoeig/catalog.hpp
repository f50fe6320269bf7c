#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "twoeig/graph.hpp"

namespace twoeig {

enum class BoundKind { SecondLargest, SecondSmallest };

// One forbidden induced subgraph of the figure. Letters run A..T skipping I
// and O, exactly as printed.
struct CatalogEntry {
  std::string name;
  Graph graph;
  BoundKind bound_kind;
  mpq_class printed_value;  // the figure's 2-decimal caption, exact
  std::string printed_text;
  bool printed_is_exact;  // only P prints an exact eigenvalue
};

const std::vector<CatalogEntry>& catalog();

struct CatalogValidation {
  std::string name;
  bool bound_ok = false;      // lambda_2 > 1 or lambda_{n-1} < -1, by Sturm
  bool printed_ok = false;    // |computed - printed| <= 5e-3
  bool exact_ok = true;       // printed_is_exact entries: root exactly there
  mpq_class lo, hi;           // isolating interval of the bounded eigenvalue
  bool ok() const { return bound_ok && printed_ok && exact_ok; }
};

// Exact self-check of the whole catalog; the printed captions act as the
// transcription checksum.
std::vector<CatalogValidation> validate_catalog();

// Catalog entries appearing in g as induced subgraphs, first witness each.
std::vector<std::pair<std::string, VertexSet>> scan_forbidden(const Graph& g);
// Every witness per entry.
std::vector<std::pair<std::string, std::vector<VertexSet>>> scan_forbidden_all(const Graph& g);

}  // namespace twoeig

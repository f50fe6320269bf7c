#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "twoeig/graph.hpp"
#include "twoeig/intpoly.hpp"

namespace twoeig {

// Ordered list of disjoint nonempty cells covering every vertex.
using Partition = std::vector<VertexSet>;

// Throws std::invalid_argument unless p partitions the vertices of g.
void check_partition(const Graph& g, const Partition& p);

// True iff every block A_{i,j} has constant row sums.
bool is_equitable(const Graph& g, const Partition& p);

struct RatMatrix {
  int n = 0;
  std::vector<mpq_class> a;  // row-major

  RatMatrix() = default;
  explicit RatMatrix(int order) : n(order), a(static_cast<size_t>(order) * order, 0) {}
  mpq_class& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const mpq_class& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool operator==(const RatMatrix&) const = default;
};

// Average row sums of each block, defined for any partition (diagnostics).
RatMatrix block_average_matrix(const Graph& g, const Partition& p);

// Quotient matrix of an equitable partition; throws std::invalid_argument on
// a non-equitable input.
RatMatrix quotient_matrix(const Graph& g, const Partition& p);

// char poly of a rational matrix, exact. For equitable quotients of graphs
// the entries are integers and the result is monic over Z.
IntPoly char_poly(const RatMatrix& q);

// True iff char_poly(quotient) divides char_poly(adjacency) exactly.
bool verify_quotient_divides(const Graph& g, const Partition& p);

// Coarsest equitable partition refining seed; cells ordered by
// (parent cell position, neighbor-count signature).
Partition coarsest_equitable_refinement(const Graph& g, const Partition& seed);

Partition unit_partition(const Graph& g);

// "0|1,2,3,4": cells separated by '|', vertices by ','.
Partition parse_partition(const std::string& text, int n);
std::string to_string(const Partition& p);

}  // namespace twoeig

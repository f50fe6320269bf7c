#include "twoeig/equitable.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "twoeig/spectra.hpp"

namespace twoeig {

void check_partition(const Graph& g, const Partition& p) {
  std::vector<bool> seen(g.order(), false);
  int covered = 0;
  for (const VertexSet& cell : p) {
    if (cell.count() == 0) throw std::invalid_argument("partition has an empty cell");
    for (int v : cell.vertices()) {
      if (v >= g.order()) throw std::invalid_argument("partition cell exceeds graph order");
      if (seen[v]) throw std::invalid_argument("partition cells overlap");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != g.order()) throw std::invalid_argument("partition does not cover all vertices");
}

namespace {

int neighbors_in(const Graph& g, int v, const VertexSet& cell) {
  int c = 0;
  for (int u : cell.vertices())
    if (g.edge(v, u)) ++c;
  return c;
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& p) {
  check_partition(g, p);
  for (const VertexSet& ci : p) {
    std::vector<int> vs = ci.vertices();
    for (const VertexSet& cj : p) {
      int want = neighbors_in(g, vs[0], cj);
      for (size_t k = 1; k < vs.size(); ++k)
        if (neighbors_in(g, vs[k], cj) != want) return false;
    }
  }
  return true;
}

RatMatrix block_average_matrix(const Graph& g, const Partition& p) {
  check_partition(g, p);
  int m = static_cast<int>(p.size());
  RatMatrix q(m);
  for (int i = 0; i < m; ++i) {
    long rows = p[i].count();
    for (int j = 0; j < m; ++j) {
      long total = 0;
      for (int v : p[i].vertices()) total += neighbors_in(g, v, p[j]);
      q.at(i, j) = mpq_class(total, rows);
      q.at(i, j).canonicalize();
    }
  }
  return q;
}

RatMatrix quotient_matrix(const Graph& g, const Partition& p) {
  if (!is_equitable(g, p))
    throw std::invalid_argument("quotient_matrix requires an equitable partition");
  return block_average_matrix(g, p);
}

IntPoly char_poly(const RatMatrix& q) {
  int n = q.n;
  // Faddeev-LeVerrier over Q.
  std::vector<mpq_class> c(static_cast<size_t>(n) + 1, 0);
  c[static_cast<size_t>(n)] = 1;
  RatMatrix work = q;
  auto mat_mul = [&](const RatMatrix& x, const RatMatrix& y) {
    RatMatrix r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (x.at(i, k) == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  };
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      RatMatrix shifted = work;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c[static_cast<size_t>(n - k + 1)];
      work = mat_mul(q, shifted);
    }
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i) tr += work.at(i, i);
    c[static_cast<size_t>(n - k)] = -tr / k;
  }
  std::vector<mpz_class> zc(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    c[i].canonicalize();
    if (c[i].get_den() != 1)
      throw std::invalid_argument("quotient char poly is not integral");
    zc[i] = c[i].get_num();
  }
  return IntPoly(std::move(zc));
}

bool verify_quotient_divides(const Graph& g, const Partition& p) {
  IntPoly qpoly = char_poly(quotient_matrix(g, p));
  IntPoly apoly = char_poly(g);
  return divide_exact(apoly, qpoly).has_value();
}

Partition coarsest_equitable_refinement(const Graph& g, const Partition& seed) {
  check_partition(g, seed);
  Partition cells = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    Partition next;
    for (const VertexSet& cell : cells) {
      // Signature: neighbor counts into every current cell.
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell.vertices()) {
        std::vector<int> sig;
        sig.reserve(cells.size());
        for (const VertexSet& target : cells) sig.push_back(neighbors_in(g, v, target));
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (const auto& [sig, members] : groups) {
        VertexSet sub(g.order());
        for (int v : members) sub.add(v);
        next.push_back(std::move(sub));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

Partition unit_partition(const Graph& g) { return {VertexSet::full(g.order())}; }

Partition parse_partition(const std::string& text, int n) {
  Partition p;
  std::istringstream cells_in(text);
  std::string cell;
  while (std::getline(cells_in, cell, '|')) {
    VertexSet s(n);
    std::istringstream verts_in(cell);
    std::string v;
    while (std::getline(verts_in, v, ',')) {
      if (v.empty()) throw std::invalid_argument("empty vertex in partition string");
      s.add(std::stoi(v));
    }
    if (s.count() == 0) throw std::invalid_argument("empty cell in partition string");
    p.push_back(std::move(s));
  }
  if (p.empty()) throw std::invalid_argument("empty partition string");
  return p;
}

std::string to_string(const Partition& p) {
  std::ostringstream out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out << "|";
    std::vector<int> vs = p[i].vertices();
    for (size_t j = 0; j < vs.size(); ++j) {
      if (j) out << ",";
      out << vs[j];
    }
  }
  return out.str();
}

}  // namespace twoeig

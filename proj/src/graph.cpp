#include "twoeig/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace twoeig {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int capacity) : cap_(capacity), w_((capacity + 63) / 64, 0) {
  if (capacity < 0 || capacity > Graph::kMaxOrder)
    throw std::invalid_argument("VertexSet capacity out of range");
}

VertexSet VertexSet::full(int capacity) {
  VertexSet s(capacity);
  for (int v = 0; v < capacity; ++v) s.add(v);
  return s;
}

void VertexSet::add(int v) {
  if (v < 0 || v >= cap_) throw std::invalid_argument("vertex out of range");
  w_[v >> 6] |= uint64_t{1} << (v & 63);
}

void VertexSet::remove(int v) {
  if (v < 0 || v >= cap_) throw std::invalid_argument("vertex out of range");
  w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= cap_) return false;
  return (w_[v >> 6] >> (v & 63)) & 1;
}

int VertexSet::count() const {
  int c = 0;
  for (uint64_t word : w_) c += std::popcount(word);
  return c;
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(count());
  for (int v = 0; v < cap_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

int VertexSet::smallest() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be between 1 and 512");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

bool Graph::edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (row(u)[v >> 6] >> (v & 63)) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void Graph::toggle_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] ^= uint64_t{1} << (v & 63);
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] ^= uint64_t{1} << (u & 63);
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

long Graph::edge_count() const {
  long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

// ---------------------------------------------------------------------------
// graph6

std::string to_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char ch : text)
    if (static_cast<unsigned char>(ch) < 63 || static_cast<unsigned char>(ch) > 126)
      throw std::invalid_argument("graph6: byte out of range");
  size_t pos = 0;
  long n;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126)
      throw std::invalid_argument("graph6: unsupported order encoding");
    n = (long{text[1] - 63} << 12) | (long{text[2] - 63} << 6) | long{text[3] - 63};
    pos = 4;
  }
  if (n < 1 || n > Graph::kMaxOrder)
    throw std::invalid_argument("graph6: order out of supported range [1, 512]");
  long nbits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((nbits + 5) / 6);
  if (text.size() - pos != need) throw std::invalid_argument("graph6: wrong data length");
  Graph g(static_cast<int>(n));
  long bit = 0, i = 0, j = 1;  // bits run through pairs (0,1),(0,2),(1,2),...
  for (size_t k = 0; k < need; ++k) {
    int group = text[pos + k] - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      int val = (group >> b) & 1;
      if (bit >= nbits) {
        if (val) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (val) g.add_edge(static_cast<int>(i), static_cast<int>(j));
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Structural operations

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > Graph::kMaxOrder)
    throw std::length_error("disjoint_union exceeds the 512-vertex capacity");
  Graph out(g.order() + h.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.edge(u, v)) out.add_edge(u, v);
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.edge(u, v)) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph add_isolated_edges(const Graph& g, int alpha) {
  if (alpha < 0) throw std::invalid_argument("negative edge count");
  if (g.order() + 2L * alpha > Graph::kMaxOrder)
    throw std::length_error("add_isolated_edges exceeds the 512-vertex capacity");
  if (alpha == 0) return g;
  Graph out(g.order() + 2 * alpha);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.edge(u, v)) out.add_edge(u, v);
  for (int i = 0; i < alpha; ++i) out.add_edge(g.order() + 2 * i, g.order() + 2 * i + 1);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> verts = s.vertices();
  if (verts.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  if (verts.back() >= g.order()) throw std::invalid_argument("vertex set exceeds graph order");
  Graph out(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<bool> seen(g.order(), false);
  for (int start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    VertexSet comp(g.order());
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.add(v);
      for (int u = 0; u < g.order(); ++u) {
        if (!seen[u] && g.edge(v, u)) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

// ---------------------------------------------------------------------------
// Induced-subgraph search

namespace {

// Backtracking over assignments h-vertex -> g-vertex in lexicographic order;
// calls sink with each witness set; sink returns false to stop the search.
template <typename Sink>
void induced_search(const Graph& g, const Graph& h, Sink&& sink) {
  int hn = h.order(), gn = g.order();
  std::vector<int> hdeg = h.degrees(), gdeg = g.degrees();
  std::vector<int> asg(hn, -1);
  std::vector<bool> used(gn, false);
  bool stop = false;

  auto rec = [&](auto&& self, int i) -> void {
    if (stop) return;
    if (i == hn) {
      VertexSet witness(gn);
      for (int v : asg) witness.add(v);
      if (!sink(witness)) stop = true;
      return;
    }
    for (int cand = 0; cand < gn && !stop; ++cand) {
      if (used[cand] || gdeg[cand] < hdeg[i]) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j) {
        if (g.edge(cand, asg[j]) != h.edge(i, j)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      asg[i] = cand;
      used[cand] = true;
      self(self, i + 1);
      used[cand] = false;
      asg[i] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::optional<VertexSet> contains_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order())
    throw std::invalid_argument("contains_induced: pattern larger than host");
  std::optional<VertexSet> found;
  induced_search(g, h, [&](const VertexSet& w) {
    found = w;
    return false;
  });
  return found;
}

std::vector<VertexSet> all_induced_witnesses(const Graph& g, const Graph& h) {
  if (h.order() > g.order())
    throw std::invalid_argument("contains_induced: pattern larger than host");
  std::vector<VertexSet> out;
  std::set<std::vector<int>> seen;
  induced_search(g, h, [&](const VertexSet& w) {
    if (seen.insert(w.vertices()).second) out.push_back(w);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Iterated neighborhood-color refinement run jointly on both graphs, so color
// ids are comparable. Returns false when the color histograms diverge.
bool joint_stable_colors(const Graph& g, const Graph& h, std::vector<int>& cg,
                         std::vector<int>& ch) {
  int n = g.order();
  cg.assign(n, 0);
  ch.assign(n, 0);
  int ncolors = 1;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [&](const Graph& gr, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (gr.edge(v, u)) nb.push_back(col[u]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(col[v], std::move(nb));
    };
    std::vector<std::pair<int, std::vector<int>>> sg(n), sh(n);
    for (int v = 0; v < n; ++v) sg[v] = signature(g, cg, v);
    for (int v = 0; v < n; ++v) sh[v] = signature(h, ch, v);
    for (int v = 0; v < n; ++v) ids.emplace(sg[v], 0);
    for (int v = 0; v < n; ++v) ids.emplace(sh[v], 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    std::vector<int> ng(n), nh(n);
    std::vector<int> histg(next, 0), histh(next, 0);
    for (int v = 0; v < n; ++v) histg[ng[v] = ids[sg[v]]]++;
    for (int v = 0; v < n; ++v) histh[nh[v] = ids[sh[v]]]++;
    if (histg != histh) return false;
    cg.swap(ng);
    ch.swap(nh);
    if (next == ncolors) return true;
    ncolors = next;
  }
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  if (g == h) return true;
  std::vector<int> dg = g.degrees(), dh = h.degrees();
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  std::vector<int> cg, ch;
  if (!joint_stable_colors(g, h, cg, ch)) return false;

  std::vector<int> map(n, -1), rmap(n, -1);
  std::vector<int> assigned;
  assigned.reserve(n);

  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(assigned.size()) == n) return true;
    // Most-constrained next vertex: maximal assigned-neighbor count, then
    // smallest id.
    int best = -1, best_anchors = -1;
    for (int v = 0; v < n; ++v) {
      if (map[v] >= 0) continue;
      int anchors = 0;
      for (int u : assigned)
        if (g.edge(v, u)) ++anchors;
      if (anchors > best_anchors) {
        best = v;
        best_anchors = anchors;
      }
    }
    int v = best;
    for (int w = 0; w < n; ++w) {
      if (rmap[w] >= 0 || ch[w] != cg[v]) continue;
      bool ok = true;
      for (int u : assigned) {
        if (g.edge(v, u) != h.edge(w, map[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[v] = w;
      rmap[w] = v;
      assigned.push_back(v);
      if (self(self)) return true;
      assigned.pop_back();
      map[v] = -1;
      rmap[w] = -1;
    }
    return false;
  };
  return rec(rec);
}

// ---------------------------------------------------------------------------
// Canonical code (small orders)

namespace {

struct CanonState {
  int n;
  std::vector<uint32_t> rows;  // neighbor masks
  uint64_t best = ~uint64_t{0};

  uint32_t cell_mask(const std::vector<int>& cell) const {
    uint32_t m = 0;
    for (int v : cell) m |= uint32_t{1} << v;
    return m;
  }

  // Equitable refinement by neighbor counts into every cell, with subcells
  // ordered by count; deterministic and isomorphism-invariant.
  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t t = 0; t < cells.size() && !changed; ++t) {
        uint32_t tm = cell_mask(cells[t]);
        for (size_t ci = 0; ci < cells.size(); ++ci) {
          if (cells[ci].size() <= 1) continue;
          std::map<int, std::vector<int>> groups;
          for (int v : cells[ci]) groups[std::popcount(rows[v] & tm)].push_back(v);
          if (groups.size() <= 1) continue;
          std::vector<std::vector<int>> split;
          for (auto& kv : groups) split.push_back(std::move(kv.second));
          cells.erase(cells.begin() + static_cast<long>(ci));
          cells.insert(cells.begin() + static_cast<long>(ci),
                       std::make_move_iterator(split.begin()),
                       std::make_move_iterator(split.end()));
          changed = true;
          break;
        }
      }
    }
  }

  uint64_t pack(const std::vector<int>& perm) const {
    uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (rows[perm[i]] >> perm[j] & 1) code |= uint64_t{1} << bit;
    return code;
  }

  void search(std::vector<std::vector<int>> cells) {
    refine(cells);
    int target = -1;
    size_t target_size = static_cast<size_t>(n) + 1;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && cells[i].size() < target_size) {
        target = static_cast<int>(i);
        target_size = cells[i].size();
      }
    }
    if (target < 0) {
      std::vector<int> perm;
      perm.reserve(n);
      for (const auto& cell : cells) perm.push_back(cell.front());
      best = std::min(best, pack(perm));
      return;
    }
    for (int v : cells[static_cast<size_t>(target)]) {
      std::vector<std::vector<int>> next = cells;
      auto& cell = next[static_cast<size_t>(target)];
      cell.erase(std::find(cell.begin(), cell.end(), v));
      next.insert(next.begin() + target, std::vector<int>{v});
      search(std::move(next));
    }
  }
};

}  // namespace

uint64_t canonical_code_small(const Graph& g) {
  if (g.order() > 11)
    throw std::invalid_argument("canonical_code_small supports order <= 11");
  CanonState st;
  st.n = g.order();
  st.rows.assign(static_cast<size_t>(st.n), 0);
  for (int v = 0; v < st.n; ++v)
    for (int u = 0; u < st.n; ++u)
      if (g.edge(v, u)) st.rows[static_cast<size_t>(v)] |= uint32_t{1} << u;
  std::vector<int> all(static_cast<size_t>(st.n));
  for (int v = 0; v < st.n; ++v) all[static_cast<size_t>(v)] = v;
  st.search({all});
  return st.best;
}

}  // namespace twoeig

#include "twoeig/catalog.hpp"

#include "twoeig/intpoly.hpp"
#include "twoeig/spectra.hpp"

namespace twoeig {

namespace {

struct RawEntry {
  const char* name;
  int n;
  std::vector<std::pair<int, int>> edges;
  int printed_hundredths;  // caption value times 100
  bool exact;
};

// Edge lists transcribed from the figure's drawings; a line running exactly
// through a vertex dot is a two-edge path. The captions (checked by
// validate_catalog) are the transcription checksum.
const std::vector<RawEntry>& raw_entries() {
  static const std::vector<RawEntry> entries = {
      {"A", 5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}}, -162, false},
      {"B", 5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}, -117, false},
      {"C", 5, {{0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}, -130, false},
      {"D", 5, {{0, 2}, {0, 3}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}, -127, false},
      {"E", 5, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}, -147, false},
      {"F", 5, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, -124, false},
      {"G", 6, {{0, 2}, {0, 4}, {1, 4}, {1, 5}, {2, 4}, {3, 4}, {3, 5}}, 126, false},
      {"H", 6, {{0, 2}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 4}, {3, 5}}, 151, false},
      {"J", 6, {{0, 2}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, 134,
       false},
      {"K", 6, {{0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {3, 5}, {4, 5}}, 173, false},
      {"L", 6, {{0, 2}, {0, 4}, {1, 5}, {2, 4}, {3, 5}, {4, 5}}, 126, false},
      {"M", 6, {{0, 2}, {0, 4}, {1, 4}, {1, 5}, {2, 4}, {3, 5}}, 136, false},
      {"N", 6, {{0, 2}, {1, 4}, {1, 5}, {2, 4}, {3, 5}}, 125, false},
      {"P", 6, {{0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {3, 5}}, 200, true},
      {"Q", 6, {{0, 2}, {0, 4}, {1, 5}, {2, 4}, {3, 5}}, 141, false},
      {"R", 6, {{0, 4}, {1, 5}, {2, 4}, {3, 5}}, 141, false},
      {"S", 7,
       {{0, 1}, {0, 2}, {0, 3}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 6},
        {3, 4}, {3, 5}},
       125, false},
      {"T", 7, {{0, 2}, {0, 3}, {0, 6}, {1, 3}, {2, 3}, {2, 6}, {3, 4}, {3, 5}}, 118, false},
  };
  return entries;
}

std::string caption_text(int hundredths, bool exact) {
  std::string sign = hundredths < 0 ? "-" : "";
  int mag = hundredths < 0 ? -hundredths : hundredths;
  std::string body =
      std::to_string(mag / 100) + "." + (mag % 100 < 10 ? "0" : "") + std::to_string(mag % 100);
  if (exact) return sign + std::to_string(mag / 100);
  return sign + body;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const RawEntry& raw : raw_entries()) {
      CatalogEntry e{raw.name,
                     Graph::from_edges(raw.n, raw.edges),
                     raw.printed_hundredths > 0 ? BoundKind::SecondLargest
                                                : BoundKind::SecondSmallest,
                     mpq_class(raw.printed_hundredths, 100),
                     caption_text(raw.printed_hundredths, raw.exact),
                     raw.exact};
      e.printed_value.canonicalize();
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

std::vector<CatalogValidation> validate_catalog() {
  std::vector<CatalogValidation> out;
  const mpq_class tol(5, 1000);
  for (const CatalogEntry& e : catalog()) {
    CatalogValidation v;
    v.name = e.name;
    IntPoly cp = char_poly(e.graph);
    int n = e.graph.order();
    int which;
    if (e.bound_kind == BoundKind::SecondLargest) {
      v.bound_ok = count_roots_above_with_multiplicity(cp, mpq_class(1), true) >= 2;
      which = 2;
    } else {
      // lambda_{n-1} < -1: at least two eigenvalues strictly below -1.
      int at_least = n - count_roots_above_with_multiplicity(cp, mpq_class(-1), false);
      v.bound_ok = at_least >= 2;
      which = n - 1;
    }
    auto [lo, hi] = approx_root(cp, which);
    v.lo = lo;
    v.hi = hi;
    v.printed_ok = (lo <= e.printed_value + tol) && (hi >= e.printed_value - tol);
    if (e.printed_is_exact)
      v.exact_ok = root_multiplicity_at(cp, e.printed_value) >= 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::pair<std::string, VertexSet>> scan_forbidden(const Graph& g) {
  std::vector<std::pair<std::string, VertexSet>> hits;
  for (const CatalogEntry& e : catalog()) {
    if (e.graph.order() > g.order()) continue;
    if (auto witness = contains_induced(g, e.graph))
      hits.emplace_back(e.name, std::move(*witness));
  }
  return hits;
}

std::vector<std::pair<std::string, std::vector<VertexSet>>> scan_forbidden_all(const Graph& g) {
  std::vector<std::pair<std::string, std::vector<VertexSet>>> hits;
  for (const CatalogEntry& e : catalog()) {
    if (e.graph.order() > g.order()) continue;
    std::vector<VertexSet> ws = all_induced_witnesses(g, e.graph);
    if (!ws.empty()) hits.emplace_back(e.name, std::move(ws));
  }
  return hits;
}

}  // namespace twoeig

#include "twoeig/classifier.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "twoeig/errors.hpp"

namespace twoeig {

// ---------------------------------------------------------------------------
// Isomorph-free enumeration: extend every (n-1)-vertex representative by one
// vertex per neighborhood subset, keep first representative per canonical
// code. Order of emission is deterministic.

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument(
        "built-in enumeration is capped at n = 8; supply an external graph6 stream");
  std::vector<Graph> level{Graph(1)};
  for (int s = 2; s <= n; ++s) {
    std::vector<Graph> next;
    std::unordered_set<uint64_t> seen;
    for (const Graph& parent : level) {
      for (uint32_t mask = 0; mask < (uint32_t{1} << (s - 1)); ++mask) {
        Graph child(s);
        for (int u = 0; u < s - 1; ++u)
          for (int v = u + 1; v < s - 1; ++v)
            if (parent.edge(u, v)) child.add_edge(u, v);
        for (int u = 0; u < s - 1; ++u)
          if (mask >> u & 1) child.add_edge(u, s - 1);
        if (seen.insert(canonical_code_small(child)).second) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

// ---------------------------------------------------------------------------

std::vector<const ClassificationReport::Member*> ClassificationReport::unmatched() const {
  std::vector<const Member*> out;
  for (const Member& m : members)
    if (m.instance < 0) out.push_back(&m);
  return out;
}

bool ClassificationReport::ok() const {
  if (!unmatched().empty()) return false;
  for (long h : instance_hits)
    if (h != 1) return false;
  return true;
}

namespace {

struct Classified {
  SpectrumClass kind;
  std::optional<TwoEigCertificate> cert;  // set when connected and certified
};

// Classify a batch of graphs, optionally on several threads; results are
// indexed, so aggregation is deterministic regardless of the worker count.
std::vector<Classified> classify_batch(const std::vector<Graph>& graphs, int jobs) {
  std::vector<Classified> out(graphs.size());
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      Classification c = classify_spectrum(graphs[i]);
      out[i].kind = c.kind;
      if (c.certificate && is_connected(graphs[i])) out[i].cert = c.certificate;
    }
  };
  if (jobs <= 1 || graphs.size() < 64) {
    work(0, graphs.size());
  } else {
    size_t chunk = (graphs.size() + jobs - 1) / jobs;
    std::vector<std::thread> threads;
    for (size_t lo = 0; lo < graphs.size(); lo += chunk)
      threads.emplace_back(work, lo, std::min(lo + chunk, graphs.size()));
    for (auto& t : threads) t.join();
  }
  return out;
}

}  // namespace

ClassificationReport verify_classification(long n_max, std::istream* external, int jobs) {
  if (n_max < 5) throw std::invalid_argument("verify_classification needs n_max >= 5");
  if (n_max > 8 && external == nullptr)
    throw std::invalid_argument(
        "n_max > 8 needs an external graph6 stream for the orders above 8");

  ClassificationReport report;
  report.n_max = n_max;
  report.instances = enumerate_instances(n_max);
  report.instance_hits.assign(report.instances.size(), 0);

  std::vector<Graph> graphs;
  for (int n = 1; n <= std::min<long>(8, n_max); ++n) {
    std::vector<Graph> level = enumerate_graphs(n);
    graphs.insert(graphs.end(), std::make_move_iterator(level.begin()),
                  std::make_move_iterator(level.end()));
  }
  if (external) {
    std::string line;
    while (std::getline(*external, line)) {
      if (line.empty() || line.starts_with(">>graph6<<")) continue;
      Graph g = from_graph6(line);
      if (g.order() <= 8 || g.order() > n_max)
        throw std::invalid_argument(
            "external stream graphs must have order between 9 and n_max");
      graphs.push_back(std::move(g));
    }
  }

  std::vector<Classified> classified = classify_batch(graphs, jobs);
  report.graphs_seen = static_cast<long>(graphs.size());
  for (size_t i = 0; i < graphs.size(); ++i) {
    ++report.class_counts[static_cast<size_t>(classified[i].kind)];
    if (is_connected(graphs[i])) ++report.connected_seen;
    if (!classified[i].cert) continue;
    ClassificationReport::Member member{graphs[i], *classified[i].cert, -1};
    for (size_t s = 0; s < report.instances.size(); ++s) {
      if (order_of(report.instances[s]) != graphs[i].order()) continue;
      if (are_isomorphic(graphs[i], construct(report.instances[s]))) {
        member.instance = static_cast<int>(s);
        ++report.instance_hits[s];
        break;
      }
    }
    report.members.push_back(std::move(member));
  }
  return report;
}

// ---------------------------------------------------------------------------

StructureReport check_structure_rules(const Graph& g) {
  StructureReport report;
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.count() == 2) continue;  // K2 components are fine as-is
    for (int v : comp.vertices())
      if (g.degree(v) <= 1) report.violations.push_back({1, v, -1});
  }
  int words = g.row_words();
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u == v) continue;
      bool subset = true;
      for (int w = 0; w < words && subset; ++w)
        if (g.row(u)[w] & ~g.row(v)[w]) subset = false;
      if (subset && g.degree(v) - g.degree(u) <= 2)
        report.violations.push_back({2, u, v});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

CospectralPair certify_pair(const FamilySpec& bigger, const FamilySpec& smaller, long n_max,
                            long common, bool* fits) {
  long nb = order_of(bigger), ns = order_of(smaller);
  if ((nb - ns) % 2 != 0 || nb < ns)
    throw internal_consistency_error("pair orders cannot be padded to match");
  CospectralPair pair;
  pair.left = bigger;
  pair.left_padding = common;
  pair.right = smaller;
  pair.right_padding = (nb - ns) / 2 + common;
  long total = nb + 2 * common;
  if (total > n_max) {
    *fits = false;
    return pair;
  }
  *fits = true;
  Graph gl = add_isolated_edges(construct(pair.left), static_cast<int>(pair.left_padding));
  Graph gr = add_isolated_edges(construct(pair.right), static_cast<int>(pair.right_padding));
  pair.shared_char_poly = char_poly(gl);
  if (pair.shared_char_poly != char_poly(gr))
    throw internal_consistency_error("pair certification failed: different char polys");
  if (are_isomorphic(gl, gr))
    throw internal_consistency_error("pair certification failed: graphs are isomorphic");
  return pair;
}

}  // namespace

std::vector<CospectralPair> cospectral_mate_pairs(long n_max, bool extra_common_padding) {
  if (n_max < 10) throw std::invalid_argument("cospectral_mate_pairs needs n_max >= 10");

  // Candidate (bigger, smaller) pairs from the four bullet families.
  std::vector<std::pair<FamilySpec, FamilySpec>> candidates;

  // (iii)/(iii) with equal products lm; the more unbalanced side is larger.
  std::map<long, std::vector<CaseIII>> by_product;
  for (long m = 2; 4 * m <= n_max; ++m)
    for (long l = m; 2 * (l + m) <= n_max; ++l) by_product[l * m].push_back(CaseIII{l, m});
  for (const auto& [product, specs] : by_product) {
    for (size_t i = 0; i < specs.size(); ++i)
      for (size_t j = i + 1; j < specs.size(); ++j) {
        const CaseIII &x = specs[i], &y = specs[j];
        if (x.l + x.m >= y.l + y.m)
          candidates.emplace_back(x, y);
        else
          candidates.emplace_back(y, x);
      }
  }
  // (iii)(l,m) vs (ii)(2, lm); the (ii) side is strictly larger for l,m >= 2.
  for (const auto& [product, specs] : by_product)
    if (2 + 2 * product <= n_max)
      for (const CaseIII& s : specs) candidates.emplace_back(CaseII{2, product}, s);
  // (iv) vs (i) with m = 4, 5.
  candidates.emplace_back(CaseIV{1}, CaseI{4});
  candidates.emplace_back(CaseIV{2}, CaseI{5});
  // (ii)(1,16) vs (vi)(3,5); (ii)(2,7) vs (vi)(4,4).
  candidates.emplace_back(CaseII{1, 16}, CaseVI{3, 5});
  candidates.emplace_back(CaseII{2, 7}, CaseVI{4, 4});

  std::vector<CospectralPair> out;
  for (const auto& [bigger, smaller] : candidates) {
    for (long common = 0;; ++common) {
      bool fits = false;
      CospectralPair pair = certify_pair(bigger, smaller, n_max, common, &fits);
      if (!fits) break;
      out.push_back(std::move(pair));
      if (!extra_common_padding) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const CospectralPair& x, const CospectralPair& y) {
    long nx = order_of(x.left) + 2 * x.left_padding;
    long ny = order_of(y.left) + 2 * y.left_padding;
    if (nx != ny) return nx < ny;
    if (to_string(x.left) != to_string(y.left)) return to_string(x.left) < to_string(y.left);
    if (to_string(x.right) != to_string(y.right)) return to_string(x.right) < to_string(y.right);
    return x.left_padding < y.left_padding;
  });
  return out;
}

// ---------------------------------------------------------------------------

DsStatus ds_status(const FamilySpec& spec) {
  order_of(spec);  // validates the parameters
  if (const CaseII* s = std::get_if<CaseII>(&spec)) {
    if (s->k < 2) throw std::invalid_argument("ds_status needs k >= 2 in case (ii)");
    if (s->a == 1 && s->k == 16)
      return {false, "type (ii) with (a,k)=(1,16): cospectral with vi:a=3,m=5 plus 10 K2"};
    if (s->a == 2 && s->k == 7)
      return {false, "type (ii) with (a,k)=(2,7): cospectral with vi:a=4,m=4 plus 2 K2"};
    if (s->a == 2) {
      for (long d = 2; d * d <= s->k; ++d)
        if (s->k % d == 0)
          return {false, "type (ii) with a=2 and k composite: cospectral with iii:l=" +
                             std::to_string(s->k / d) + ",m=" + std::to_string(d) +
                             " plus isolated edges"};
    }
  } else if (const CaseIII* s3 = std::get_if<CaseIII>(&spec)) {
    long product = s3->l * s3->m;
    for (long e = s3->m + 1; e < s3->l; ++e) {
      if (product % e == 0)
        return {false, "type (iii) where lm has the divisor " + std::to_string(e) +
                           " strictly between m and l: cospectral with iii:l=" +
                           std::to_string(product / e) + ",m=" + std::to_string(e) +
                           " plus isolated edges"};
    }
  } else if (const CaseIV* s4 = std::get_if<CaseIV>(&spec)) {
    return {false, std::string("type (iv): cospectral with i:m=") +
                       (s4->variant == 1 ? "4" : "5") + " plus one K2"};
  }
  return {true, ""};
}

bool pairwise_distinct_spectra(long n_max) {
  std::set<std::array<mpz_class, 4>> seen;
  for (const FamilySpec& spec : enumerate_instances(n_max)) {
    TwoEigCertificate cert = expected_certificate(spec);
    if (!seen.insert({mpz_class(cert.p), mpz_class(cert.q), cert.t, cert.d}).second)
      return false;
  }
  return true;
}

}  // namespace twoeig

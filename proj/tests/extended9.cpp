// Extended check, run manually (not part of the default ctest suite):
// regenerates every 9-vertex graph by one more canonical-dedupe extension
// level and replays the exhaustive classification at n_max = 9 through the
// external-stream interface. Expect ~274k isomorphism classes.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "twoeig/classifier.hpp"
#include "twoeig/graph.hpp"

using namespace twoeig;

int main() {
  auto start = std::chrono::steady_clock::now();
  std::ostringstream stream;
  long emitted = 0;
  {
    std::unordered_set<uint64_t> seen;
    for (const Graph& parent : enumerate_graphs(8)) {
      for (uint32_t mask = 0; mask < (uint32_t{1} << 8); ++mask) {
        Graph child(9);
        for (int u = 0; u < 8; ++u)
          for (int v = u + 1; v < 8; ++v)
            if (parent.edge(u, v)) child.add_edge(u, v);
        for (int u = 0; u < 8; ++u)
          if (mask >> u & 1) child.add_edge(u, 8);
        if (seen.insert(canonical_code_small(child)).second) {
          stream << to_graph6(child) << "\n";
          ++emitted;
        }
      }
    }
  }
  double gen_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("generated %ld graphs on 9 vertices (%.1fs)\n", emitted, gen_s);
  if (emitted != 274668) {
    std::printf("FAIL: expected 274668 isomorphism classes\n");
    return 1;
  }

  std::istringstream in(stream.str());
  ClassificationReport report = verify_classification(9, &in, 4);
  double total_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("graphs %ld, connected %ld, members %zu, instances %zu (%.1fs)\n",
              report.graphs_seen, report.connected_seen, report.members.size(),
              report.instances.size(), total_s);
  bool pass = report.ok() && report.members.size() == 12;
  std::printf("%s\n", pass ? "EXTENDED CHECK PASSED" : "EXTENDED CHECK FAILED");
  return pass ? 0 : 1;
}

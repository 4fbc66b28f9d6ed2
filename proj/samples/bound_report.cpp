// Evaluates both bounds on a few small graphs and prints one line per case.
#include <iostream>

#include "locturan/locturan.hpp"

int main() {
  using namespace locturan;
  const struct {
    const char* name;
    Graph graph;
  } cases[] = {
      {"bowtie", generate_pdbg({{3, 3}, {}, {}})},
      {"K4 + K4", disjoint_union(complete_graph(4), complete_graph(4))},
      {"C5", cycle_graph(5)},
      {"Petersen", petersen_graph()},
  };
  for (const auto& [name, g] : cases) {
    const VertexWeights w = compute_weights(g);
    for (int theorem = 1; theorem <= 2; ++theorem) {
      for (int s = 2; s <= 3; ++s) {
        const BoundReport r = check_theorem(g, s, theorem, w);
        std::cout << name << "  theorem " << theorem << "  s=" << s << "  N=" << r.lhs << "  bound=" << to_string(r.rhs)
                  << (r.equality ? "  (equality)" : "") << '\n';
      }
    }
  }
}

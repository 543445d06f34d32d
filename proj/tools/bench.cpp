// Scratch benchmark for the counting engine; not part of the shipped tool.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "laman/engine.hpp"
#include "laman/graph.hpp"

using namespace laman;

namespace {

SimpleGraph fixture(const std::string& name) {
  using E = std::vector<Edge>;
  if (name == "triangle") return SimpleGraph::from_edges(E{{0, 1}, {0, 2}, {1, 2}});
  if (name == "k4e") return SimpleGraph::from_edges(E{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "f6")
    return SimpleGraph::from_edges(
        E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  if (name == "f7")
    return SimpleGraph::from_edges(E{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
  if (name == "f8")
    return SimpleGraph::from_edges(E{{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 4}, {3, 6}, {4, 7}, {5, 6}, {5, 7}});
  if (name == "f9")
    return SimpleGraph::from_edges(E{{0, 1}, {0, 3}, {0, 4}, {0, 7}, {1, 5}, {1, 6}, {1, 8}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 7}, {4, 8}, {5, 7}, {6, 8}});
  if (name == "f10")
    return SimpleGraph::from_edges(E{{0, 1}, {0, 4}, {0, 6}, {0, 7}, {1, 5}, {1, 8}, {1, 9}, {2, 4}, {2, 5}, {2, 6}, {2, 8}, {3, 4}, {3, 5}, {3, 7}, {3, 9}, {6, 8}, {7, 9}});
  if (name == "f11")
    return SimpleGraph::from_edges(E{{0, 1}, {0, 5}, {0, 6}, {0, 9}, {1, 5}, {1, 7}, {1, 10}, {2, 3}, {2, 6}, {2, 8}, {2, 9}, {3, 7}, {3, 8}, {3, 10}, {4, 5}, {4, 6}, {4, 7}, {4, 8}, {9, 10}});
  if (name == "f12")
    return SimpleGraph::from_edges(E{{0, 1}, {0, 6}, {0, 7}, {0, 8}, {1, 9}, {1, 10}, {1, 11}, {2, 3}, {2, 6}, {2, 7}, {2, 9}, {3, 8}, {3, 10}, {3, 11}, {4, 5}, {4, 6}, {4, 8}, {4, 10}, {5, 7}, {5, 9}, {5, 11}});
  std::fprintf(stderr, "unknown fixture %s\n", name.c_str());
  std::exit(2);
}

}  // namespace

int main(int argc, char** argv) {
  bool fresh_memo = false;
  bool no_memo = false;
  std::vector<std::string> names;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--fresh") {
      fresh_memo = true;
    } else if (arg == "--no-memo") {
      no_memo = true;
    } else {
      names.push_back(arg);
    }
  }
  if (names.empty()) names = {"triangle", "k4e", "f6", "f7", "f8", "f9", "f10", "f11", "f12"};

  MemoTable<LamanCount> shared;
  for (const auto& name : names) {
    SimpleGraph g = fixture(name);
    MemoTable<LamanCount> local;
    ComputationStats stats;
    EngineOptions opts;
    opts.use_memo = !no_memo;
    auto t0 = std::chrono::steady_clock::now();
    LamanCount count = laman_number(g, fresh_memo || no_memo ? local : shared, stats, opts);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%-9s n=%2d m=%2d lam=%-12llu nodes=%-10llu hits=%-10llu splits=%-10llu depth=%-3d %.3fs\n",
                name.c_str(), g.vertex_count(), g.edge_count(),
                static_cast<unsigned long long>(count.value()),
                static_cast<unsigned long long>(stats.nodes_visited.load()),
                static_cast<unsigned long long>(stats.memo_hits.load()),
                static_cast<unsigned long long>(stats.splits_examined.load()),
                stats.max_depth.load(), dt);
    std::fflush(stdout);
  }
  return 0;
}

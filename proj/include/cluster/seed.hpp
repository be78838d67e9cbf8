#pragma once

#include "cluster/laurent.hpp"
#include "cluster/quiver.hpp"

namespace cluster {

// A seed: exchange matrix plus an ordered cluster of Laurent expansions in
// the initial variables, together with the walk that produced it.
struct Seed {
  ExchangeMatrix b;
  std::vector<LaurentPoly> cluster;
  std::vector<int> walk;  // 0-based directions from the root seed

  static Seed initial(const ExchangeMatrix& b0);
};

// Exchange relation (matrix rule plus cluster rule); directions 0-based.
Seed seed_mutate(const Seed& s, int k);

// The k-th cluster variable of the seed reached by the walk, expanded in
// the initial cluster.
LaurentPoly expand_along_walk(const ExchangeMatrix& b0,
                              const std::vector<int>& walk, int k);

struct ExchangeGraph {
  struct ClusterNode {
    std::vector<LaurentPoly> vars_sorted;  // canonical unordered cluster
    Seed rep;                              // representative seed (ordered)
    std::vector<int> neighbors;            // neighbors[k]: mutate rep at k
  };
  std::vector<ClusterNode> clusters;    // sorted by canonical cluster key
  std::vector<LaurentPoly> variables;   // all cluster variables, sorted
  int initial_cluster = 0;              // index of the root cluster
};

// BFS over seeds from the initial seed, deduplicating by the canonical
// (sorted) cluster.  Throws CapExceeded when more than cap distinct
// clusters appear (infinite type or too-small cap).
ExchangeGraph enumerate_exchange_graph(const ExchangeMatrix& b0,
                                       long long cap = 100000);

}  // namespace cluster

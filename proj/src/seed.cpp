#include "cluster/seed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace cluster {

Seed Seed::initial(const ExchangeMatrix& b0) {
  const int n = b0.size();
  Seed s{b0, {}, {}};
  for (int i = 0; i < n; ++i)
    s.cluster.push_back(LaurentPoly::variable(n, i));
  return s;
}

Seed seed_mutate(const Seed& s, int k) {
  const int n = s.b.size();
  if (k < 0 || k >= n) throw std::out_of_range("mutation direction out of range");
  LaurentPoly plus = LaurentPoly::one(n);
  LaurentPoly minus = LaurentPoly::one(n);
  for (int i = 0; i < n; ++i) {
    int b = s.b.at(i, k);
    if (b > 0) plus = plus * s.cluster[i].pow(b);
    if (b < 0) minus = minus * s.cluster[i].pow(-b);
  }
  Seed r{matrix_mutate(s.b, k), s.cluster, s.walk};
  r.cluster[k] = lp_div_exact(plus + minus, s.cluster[k]);
  r.walk.push_back(k);
  return r;
}

LaurentPoly expand_along_walk(const ExchangeMatrix& b0,
                              const std::vector<int>& walk, int k) {
  Seed s = Seed::initial(b0);
  for (int d : walk) s = seed_mutate(s, d);
  return s.cluster.at(k);
}

namespace {

std::string cluster_key(const std::vector<LaurentPoly>& sorted_vars) {
  std::ostringstream os;
  for (const auto& v : sorted_vars) os << v.to_string() << ";";
  return os.str();
}

std::vector<LaurentPoly> sorted_cluster(const Seed& s) {
  std::vector<LaurentPoly> vars = s.cluster;
  std::sort(vars.begin(), vars.end());
  return vars;
}

}  // namespace

ExchangeGraph enumerate_exchange_graph(const ExchangeMatrix& b0,
                                       long long cap) {
  if (cap <= 0) throw std::invalid_argument("cap must be positive");
  const int n = b0.size();
  ExchangeGraph g;
  std::map<std::string, int> index_of;  // canonical key -> cluster index

  std::deque<int> queue;
  Seed root = Seed::initial(b0);
  {
    ExchangeGraph::ClusterNode node{sorted_cluster(root), root, {}};
    index_of.emplace(cluster_key(node.vars_sorted), 0);
    g.clusters.push_back(std::move(node));
    queue.push_back(0);
  }

  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    Seed rep = g.clusters[idx].rep;
    std::vector<int> nbrs(n, -1);
    for (int k = 0; k < n; ++k) {
      Seed next = seed_mutate(rep, k);
      auto vars = sorted_cluster(next);
      std::string key = cluster_key(vars);
      auto it = index_of.find(key);
      if (it == index_of.end()) {
        if ((long long)g.clusters.size() >= cap)
          throw CapExceeded("exchange graph exceeded cluster cap");
        int ni = (int)g.clusters.size();
        index_of.emplace(std::move(key), ni);
        g.clusters.push_back({std::move(vars), std::move(next), {}});
        queue.push_back(ni);
        nbrs[k] = ni;
      } else {
        nbrs[k] = it->second;
      }
    }
    g.clusters[idx].neighbors = std::move(nbrs);
  }

  // Emit in canonical (sorted key) order, independent of BFS schedule.
  {
    std::vector<int> rank_of(g.clusters.size());
    int r = 0;
    for (const auto& [key, idx] : index_of) rank_of[idx] = r++;
    ExchangeGraph out;
    out.clusters.resize(g.clusters.size());
    for (size_t i = 0; i < g.clusters.size(); ++i) {
      ExchangeGraph::ClusterNode node = std::move(g.clusters[i]);
      for (int& nb : node.neighbors) nb = rank_of[nb];
      out.clusters[rank_of[i]] = std::move(node);
    }
    out.initial_cluster = rank_of[0];
    g = std::move(out);
  }

  std::vector<LaurentPoly> vars;
  for (const auto& c : g.clusters)
    for (const auto& v : c.vars_sorted) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  g.variables = std::move(vars);
  return g;
}

}  // namespace cluster

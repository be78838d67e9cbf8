#include "cluster/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace cluster {

ExchangeMatrix::ExchangeMatrix(int n, std::vector<int> row_major)
    : n_(n), b_(std::move(row_major)) {
  if ((int)b_.size() != n * n)
    throw InvalidQuiver("matrix data size does not match n");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != -at(j, i))
        throw InvalidQuiver("exchange matrix must be skew-symmetric");
}

ExchangeMatrix ExchangeMatrix::permuted(const std::vector<int>& perm) const {
  ExchangeMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(i, j, at(perm[i], perm[j]));
  return r;
}

Quiver::Quiver(int n, std::vector<Arrow> arrows)
    : n_(n), arrows_(std::move(arrows)) {
  std::sort(arrows_.begin(), arrows_.end());
  for (const Arrow& a : arrows_) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw InvalidQuiver("arrow endpoint out of range");
    if (a.tail == a.head) throw InvalidQuiver("quiver has a loop");
  }
  for (const Arrow& a : arrows_)
    if (std::binary_search(arrows_.begin(), arrows_.end(),
                           Arrow{a.head, a.tail}))
      throw InvalidQuiver("quiver has an oriented 2-cycle");
}

std::vector<int> Quiver::arrows_into(int k) const {
  std::vector<int> r;
  for (int i = 0; i < (int)arrows_.size(); ++i)
    if (arrows_[i].head == k) r.push_back(i);
  return r;
}

std::vector<int> Quiver::arrows_out_of(int k) const {
  std::vector<int> r;
  for (int i = 0; i < (int)arrows_.size(); ++i)
    if (arrows_[i].tail == k) r.push_back(i);
  return r;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<int> indeg(n_, 0);
  for (const Arrow& a : arrows_) ++indeg[a.head];
  std::deque<int> q;
  for (int i = 0; i < n_; ++i)
    if (indeg[i] == 0) q.push_back(i);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++seen;
    for (const Arrow& a : arrows_)
      if (a.tail == v && --indeg[a.head] == 0) q.push_back(a.head);
  }
  return seen == n_;
}

ExchangeMatrix quiver_to_matrix(const Quiver& q) {
  ExchangeMatrix b(q.vertex_count());
  for (const Arrow& a : q.arrows()) {
    b.set(a.head, a.tail, b.at(a.head, a.tail) + 1);
    b.set(a.tail, a.head, b.at(a.tail, a.head) - 1);
  }
  return b;
}

Quiver matrix_to_quiver(const ExchangeMatrix& b) {
  std::vector<Arrow> arrows;
  const int n = b.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < b.at(i, j); ++m) arrows.push_back({j, i});
  return Quiver(n, std::move(arrows));
}

ExchangeMatrix matrix_mutate(const ExchangeMatrix& b, int k) {
  const int n = b.size();
  if (k < 0 || k >= n) throw std::out_of_range("mutation direction out of range");
  ExchangeMatrix r(n);
  auto sg = [](int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  auto pos = [](int x) { return x > 0 ? x : 0; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        r.set(i, j, -b.at(i, j));
      else
        r.set(i, j, b.at(i, j) + sg(b.at(i, k)) * pos(b.at(i, k) * b.at(k, j)));
    }
  return r;
}

namespace {

std::optional<DynkinDiagram> classify_component(
    const std::vector<int>& verts, const std::vector<std::set<int>>& adj) {
  const int m = (int)verts.size();
  int edges = 0;
  for (int v : verts) edges += (int)adj[v].size();
  edges /= 2;
  if (edges != m - 1) return std::nullopt;  // not a tree
  std::vector<int> deg3;
  for (int v : verts) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) deg3.push_back(v);
  }
  if (deg3.empty()) return DynkinDiagram{DynkinType::A, m};
  if (deg3.size() > 1) return std::nullopt;
  // Branch lengths from the unique degree-3 node.
  int c = deg3[0];
  std::vector<int> lens;
  for (int nb : adj[c]) {
    int len = 1, prev = c, cur = nb;
    while (adj[cur].size() == 2) {
      int nxt = -1;
      for (int w : adj[cur])
        if (w != prev) nxt = w;
      prev = cur;
      cur = nxt;
      ++len;
    }
    if (adj[cur].size() != 1) return std::nullopt;
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  if (lens[0] != 1) return std::nullopt;
  if (lens[1] == 1) return DynkinDiagram{DynkinType::D, m};
  if (lens[1] != 2) return std::nullopt;
  if (lens[2] == 2) return DynkinDiagram{DynkinType::E6, 6};
  if (lens[2] == 3) return DynkinDiagram{DynkinType::E7, 7};
  if (lens[2] == 4) return DynkinDiagram{DynkinType::E8, 8};
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<DynkinDiagram>> dynkin_shape(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (const Arrow& a : q.arrows()) {
    if (adj[a.tail].count(a.head)) return std::nullopt;  // multiple edge
    adj[a.tail].insert(a.head);
    adj[a.head].insert(a.tail);
  }
  std::vector<int> comp(n, -1);
  std::vector<DynkinDiagram> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> verts;
    std::deque<int> queue{s};
    comp[s] = s;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      verts.push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = s;
          queue.push_back(w);
        }
    }
    auto d = classify_component(verts, adj);
    if (!d) return std::nullopt;
    out.push_back(*d);
  }
  return out;
}

namespace {

// Canonical representative of B under simultaneous permutation: the
// lexicographically least row-major data over all vertex permutations.
std::vector<int> permutation_canonical(const ExchangeMatrix& b) {
  const int n = b.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = b.data();
  do {
    ExchangeMatrix p = b.permuted(perm);
    if (p.data() < best) best = p.data();
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

FiniteTypeResult is_finite_type(const ExchangeMatrix& b0, long long cap) {
  if (cap <= 0) throw std::invalid_argument("cap must be positive");
  const int n = b0.size();
  std::set<std::vector<int>> seen;
  std::deque<ExchangeMatrix> queue{b0};
  seen.insert(permutation_canonical(b0));
  FiniteTypeResult result;
  bool big_entry = false;
  auto check_big = [&](const ExchangeMatrix& b) {
    for (int v : b.data())
      if (v >= 2 || v <= -2) big_entry = true;
  };
  check_big(b0);
  while (!queue.empty()) {
    ExchangeMatrix b = queue.front();
    queue.pop_front();
    if (!result.dynkin_member) {
      Quiver q = matrix_to_quiver(b);
      if (dynkin_shape(q)) result.dynkin_member = q;
    }
    for (int k = 0; k < n; ++k) {
      ExchangeMatrix m = matrix_mutate(b, k);
      check_big(m);
      auto key = permutation_canonical(m);
      if (seen.insert(key).second) {
        if ((long long)seen.size() > cap) {
          if (big_entry) {
            result.finite = false;
            result.class_size = (long long)seen.size();
            return result;
          }
          throw CapExceeded("mutation class did not close within cap");
        }
        queue.push_back(m);
      }
    }
  }
  result.class_size = (long long)seen.size();
  result.finite = result.dynkin_member.has_value();
  return result;
}

}  // namespace cluster

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cluster {

struct InvalidQuiver : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Skew-symmetric n x n integer matrix, zero diagonal.
class ExchangeMatrix {
 public:
  ExchangeMatrix() : n_(0) {}
  explicit ExchangeMatrix(int n) : n_(n), b_(n * n, 0) {}
  ExchangeMatrix(int n, std::vector<int> row_major);

  int size() const { return n_; }
  int at(int i, int j) const { return b_[i * n_ + j]; }
  void set(int i, int j, int v) { b_[i * n_ + j] = v; }
  const std::vector<int>& data() const { return b_; }

  bool operator==(const ExchangeMatrix& o) const {
    return n_ == o.n_ && b_ == o.b_;
  }
  bool operator<(const ExchangeMatrix& o) const { return b_ < o.b_; }

  // Simultaneous row/column permutation: result(i,j) = at(perm[i], perm[j]).
  ExchangeMatrix permuted(const std::vector<int>& perm) const;

 private:
  int n_;
  std::vector<int> b_;  // row-major
};

struct Arrow {
  int tail = 0;
  int head = 0;  // 0-based vertices
  bool operator==(const Arrow& o) const {
    return tail == o.tail && head == o.head;
  }
  bool operator<(const Arrow& o) const {
    return std::pair(tail, head) < std::pair(o.tail, o.head);
  }
};

// Finite quiver without loops or oriented 2-cycles.
class Quiver {
 public:
  Quiver() : n_(0) {}
  Quiver(int n, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // Arrow indices with head / tail at vertex k, in arrow-list order.
  std::vector<int> arrows_into(int k) const;
  std::vector<int> arrows_out_of(int k) const;
  bool is_acyclic() const;
  bool is_sink(int k) const { return arrows_out_of(k).empty(); }
  bool is_source(int k) const { return arrows_into(k).empty(); }

  bool operator==(const Quiver& o) const {
    return n_ == o.n_ && arrows_ == o.arrows_;
  }

 private:
  int n_;
  std::vector<Arrow> arrows_;  // sorted canonically
};

// b_ij = #(j->i) - #(i->j).
ExchangeMatrix quiver_to_matrix(const Quiver& q);
Quiver matrix_to_quiver(const ExchangeMatrix& b);

// Matrix mutation in direction k (0-based).
ExchangeMatrix matrix_mutate(const ExchangeMatrix& b, int k);

enum class DynkinType { A, D, E6, E7, E8 };
struct DynkinDiagram {
  DynkinType type;
  int rank;
};

// Classifies the underlying undirected graph of q as a disjoint union of
// simply-laced Dynkin diagrams, if it is one.
std::optional<std::vector<DynkinDiagram>> dynkin_shape(const Quiver& q);

struct FiniteTypeResult {
  bool finite = false;
  std::optional<Quiver> dynkin_member;
  long long class_size = 0;  // matrices visited up to permutation
};

// BFS over the matrix mutation class up to simultaneous permutation.
// finite = true iff the class closes within cap and contains an orientation
// of an A/D/E diagram.  A class member with |b_ij| >= 2 certifies infinite
// type when the cap is hit; otherwise CapExceeded is thrown.
FiniteTypeResult is_finite_type(const ExchangeMatrix& b0, long long cap);

}  // namespace cluster

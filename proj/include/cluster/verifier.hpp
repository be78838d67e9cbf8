#pragma once

#include "cluster/qp.hpp"
#include "cluster/seed.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cluster {

// A monomial in the variables of one cluster, recorded against that
// cluster's representative (ordered) seed, with its expansion in the
// initial cluster.  Monomials shared between adjacent clusters are owned by
// the lowest cluster index that produces them.
struct ClusterMonomial {
  int cluster = 0;
  std::vector<int> exponents;
  LaurentPoly expansion{0};
};

struct MonomialBasis {
  std::vector<ClusterMonomial> monomials;  // sorted by expansion
};

// All cluster monomials of total degree <= max_deg over every cluster of
// the graph, deduplicated by initial-cluster expansion.
MonomialBasis enumerate_cluster_monomials(const ExchangeGraph& g, int max_deg);

// Re-rooting machinery: expands clusters of the graph in the variables of
// another cluster by replaying walks from a formal seed, never inverting a
// rational function.
class ReexpansionCache {
 public:
  explicit ReexpansionCache(const ExchangeGraph& g) : g_(&g) {}
  // Ordered cluster of 'target', expanded in the variables of 'home'.
  const std::vector<LaurentPoly>& cluster_in(int home, int target);

 private:
  const ExchangeGraph* g_;
  std::map<std::pair<int, int>, std::vector<LaurentPoly>> cache_;
};

// The monomial's expansion in the variables of cluster 'home'.
LaurentPoly monomial_in_cluster(ReexpansionCache& cache,
                                const ClusterMonomial& m, int home);

// Precomputed expansions of every basis monomial in every cluster.
struct AtomicityContext {
  const ExchangeGraph* graph = nullptr;
  MonomialBasis basis;
  std::vector<std::vector<LaurentPoly>> table;  // [cluster][monomial]
};

AtomicityContext make_atomicity_context(const ExchangeGraph& g, int max_deg);

struct LemmaReport {
  long long checks = 0;
  long long skipped = 0;  // monomials in the home cluster's own variables
  std::vector<std::string> witnesses;
  bool clean() const { return witnesses.empty(); }
};

// For every cluster C and basis monomial b not a monomial in C's own
// variables, assert the expansion of b in C is a nonnegative sum of proper
// Laurent monomials.
LemmaReport check_proper_lemma(const AtomicityContext& ctx);
LemmaReport check_proper_lemma(const ExchangeGraph& g, int max_deg);

struct BasisExpansion {
  std::vector<mpz_class> coeffs;  // aligned with MonomialBasis::monomials
  bool residual = false;          // p not in the span at this degree bound
};

BasisExpansion expand_in_basis(const LaurentPoly& p, const MonomialBasis& b);

struct AtomicityResult {
  bool is_positive = false;     // nonnegative expansion in every cluster
  bool coords_nonneg = false;   // nonnegative basis coordinates
  bool theorem_consistent = false;
  bool residual = false;
};

AtomicityResult verify_atomicity(const LaurentPoly& p,
                                 const AtomicityContext& ctx);

struct ProofReport {
  long long checks = 0;
  std::vector<std::string> violations;
  bool clean() const { return violations.empty(); }
};

// The scalar-product bookkeeping behind the lemma, checked on a positive
// cluster representation with nonzero module part: e . g < 0 for every
// contributing e != 0, dim . g = -dim End, and every exponent vector
// g + B e with nonvanishing Euler characteristic is proper.
ProofReport proof_inequalities(const DecoratedRep& dec,
                               const ExchangeMatrix& b);

}  // namespace cluster

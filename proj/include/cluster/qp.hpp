#pragma once

#include "cluster/laurent.hpp"
#include "cluster/rep.hpp"

#include <map>
#include <vector>

namespace cluster {

struct QPError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Paths are arrow-index sequences in composition order: path[i] is applied
// after path[i+1], so a path (a_1 ... a_d) runs from t(a_d) to h(a_1) and
// consecutive entries satisfy t(path[i]) == h(path[i+1]).
using Path = std::vector<int>;

// Formal integer combination of parallel paths.
using PathSum = std::map<Path, mpz_class>;

// Lexicographically least rotation; the canonical representative of the
// cyclic-equivalence class of a cyclic path.
Path canonical_rotation(const Path& cycle);

// Finite integer combination of cyclic paths, keyed by canonical rotation.
class Potential {
 public:
  Potential() = default;

  void add(const Path& cycle, const mpz_class& coeff);
  const std::map<Path, mpz_class>& cycles() const { return cycles_; }
  bool is_zero() const { return cycles_.empty(); }
  // The degree-two homogeneous component.
  Potential degree_two_part() const;

  bool operator==(const Potential& o) const { return cycles_ == o.cycles_; }

 private:
  std::map<Path, mpz_class> cycles_;  // canonical rotations, no zero coeffs
};

struct QP {
  Quiver quiver;
  Potential potential;

  bool operator==(const QP& o) const {
    return quiver == o.quiver && potential == o.potential;
  }
};

// All chordless cycles (d >= 3, the induced subquiver on the cycle's vertex
// set is exactly the cycle), as canonical cyclic paths.
std::vector<Path> chordless_cycles(const Quiver& q);

// Sum of all chordless cycles with coefficient +1.  Requires the |b| <= 1
// regime of finite-type mutation classes.
Potential primitive_potential(const Quiver& q);

QP make_qp(const Quiver& q);

// d/da of the potential, per the rotation-summing rule.
PathSum cyclic_derivative(const Potential& s, const Quiver& q, int arrow);
// d/d(ba): for h(a) = t(b), collects the complementary path of each
// occurrence of the consecutive pair b,a; paths run from h(b) to t(a).
PathSum second_derivative(const Potential& s, const Quiver& q, int arrow_b,
                          int arrow_a);

// Matrix of a formal path sum acting on a representation; shape
// dims[to_vertex] x dims[from_vertex].
QMat pathsum_action(const Rep& m, const PathSum& ps, int from_vertex,
                    int to_vertex);

// True iff every cyclic derivative of s annihilates m.
bool jacobian_check(const Rep& m, const Potential& s);

// Decorated representation of a QP: module part plus decoration dimensions.
struct DecoratedRep {
  QP qp;
  Rep m;
  std::vector<int> v;  // decoration dimension vector

  static DecoratedRep negative_simple(const QP& qp, int k);
  bool is_positive() const;
};

struct Triangle {
  QMat alpha;  // M_in(k)  -> M_k
  QMat beta;   // M_k      -> M_out(k)
  QMat gamma;  // M_out(k) -> M_in(k)
  std::vector<int> in_arrows, out_arrows;   // arrow indices at k
  std::vector<int> in_offsets, out_offsets; // block offsets (size+1)
  int g = 0;   // dim ker gamma - dim M_k + dim V_k
};

// Assembles the triangle of linear maps at vertex k and checks the
// relations alpha o gamma = 0 = gamma o beta.
Triangle triangle_at(const DecoratedRep& dec, int k);

std::vector<int> g_vector(const DecoratedRep& dec);

struct QPMutation {
  QP result;
  // Premutation report: arrow span of the premutated QP (may contain
  // 2-cycles), each arrow tagged by origin, the premutated potential, and the
  // pairs the reduction cancelled.
  enum class Origin { Kept, Composite, Reversed };
  struct TildeArrow {
    Arrow arrow;
    Origin origin;
    int src_a = -1;  // Kept/Reversed: original index; Composite: index of a
    int src_b = -1;  // Composite: index of b
  };
  std::vector<TildeArrow> tilde_arrows;
  Potential s_tilde;                         // over tilde arrow indices
  std::vector<std::pair<int, int>> cancelled;  // tilde indices per 2-cycle
  std::vector<int> tilde_to_result;          // -1 for cancelled arrows
};

QPMutation qp_mutate(const QP& qp, int k);

DecoratedRep rep_mutate(const DecoratedRep& dec, int k);

DecoratedRep rep_direct_sum(const DecoratedRep& a, const DecoratedRep& b);

// Generating function of Euler characteristics of the quiver Grassmannians
// of the module part, as a polynomial in y_1..y_n.
LaurentPoly f_polynomial(const DecoratedRep& dec);

// F evaluated at the column monomials x^{b_j}, times x^{g}.
LaurentPoly x_of_rep(const DecoratedRep& dec, const ExchangeMatrix& b);

struct EInvariants {
  long long e_inj;          // E^inj(M, N)
  long long e_inj_reverse;  // E^inj(N, M)
  long long e_self_m;       // E(M)
  std::optional<long long> homological;  // dim Hom(tau^{-1} N, M), hereditary
};

EInvariants e_invariants(const DecoratedRep& m_dec, const DecoratedRep& n_dec);

long long e_invariant(const DecoratedRep& dec);

// M_{k,t}: mutate the QP of b0 forward along the walk, take the negative
// simple at k there, and mutate it back along the reversed walk.  Asserts
// E = 0 and the support condition (M_i = 0 or V_i = 0 at every vertex).
DecoratedRep build_cluster_rep(const ExchangeMatrix& b0,
                               const std::vector<int>& walk, int k);

// Direct sum over k of build_cluster_rep with multiplicities.
DecoratedRep build_cluster_monomial_rep(const ExchangeMatrix& b0,
                                        const std::vector<int>& walk,
                                        const std::vector<int>& exponents);

}  // namespace cluster

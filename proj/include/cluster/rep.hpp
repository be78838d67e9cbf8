#pragma once

#include "cluster/linalg.hpp"
#include "cluster/quiver.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cluster {

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InterpolationInconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-dimensional representation of a quiver over the rationals:
// one vector space dimension per vertex and one exact matrix per arrow
// (shape dim M_{h(a)} x dim M_{t(a)}, in arrow-list order).
struct Rep {
  Quiver quiver;
  std::vector<int> dims;
  std::vector<QMat> matrices;  // indexed like quiver.arrows()

  static Rep zero(const Quiver& q);
  static Rep simple(const Quiver& q, int k);
  bool is_zero() const;
  long long total_dim() const;
};

// Validated construction; throws ShapeMismatch on inconsistent shapes.
Rep rep_build(const Quiver& q, std::vector<int> dims,
              std::vector<QMat> matrices);

Rep rep_direct_sum(const Rep& a, const Rep& b);

// dim Hom(M, N): solution space of the commuting conditions, one per arrow.
long long hom_dim(const Rep& m, const Rep& n);
// Same computation over F_p from the same matrices (p must avoid every
// denominator); used as an independent cross-check of genericity of rank.
long long hom_dim_fp(const Rep& m, const Rep& n, std::int64_t p);

// Number of subrepresentations of M (reduced mod p) with dimension vector e.
long long grassmannian_point_count(const Rep& m, const std::vector<int>& e,
                                   std::int64_t p);

struct GrassmannianCount {
  std::vector<int> e;
  std::vector<std::pair<std::int64_t, long long>> point_counts;
  std::vector<mpq_class> counting_poly;  // coefficients, degree ascending
  mpz_class euler;                       // value of the polynomial at q = 1
};

// Point counts at the first deg+2 usable primes, polynomial interpolation,
// consistency check at the spare prime, evaluation at q = 1.
GrassmannianCount grassmannian_profile(const Rep& m, const std::vector<int>& e);

mpz_class euler_characteristic(const Rep& m, const std::vector<int>& e);

enum class Reflection { AtSink, AtSource };

// BGP reflection functor at a sink (+) or source (-); the result lives over
// the quiver with all arrows at k reversed.
Rep reflection_functor(const Rep& m, int k, Reflection kind);

// Inverse AR translate of a representation of an acyclic quiver, computed
// as the composite of source reflections along an admissible ordering
// (lowest-index current source first).  Injectives map to zero.
Rep tau_inverse(const Rep& m);

// One representative per positive root; requires a Dynkin orientation.
std::vector<Rep> enumerate_indecomposables(const Quiver& h);

}  // namespace cluster

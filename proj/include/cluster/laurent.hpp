#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cluster {

// Exponent vector of a Laurent monomial; entries may be negative.
// All values in one algebra context share the same length (the rank).
using Exponent = std::vector<int>;

struct RankMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativePowerOfNonUnit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multivariate Laurent polynomial over arbitrary-precision integers.
// Canonical form: no stored coefficient is zero; terms are kept in
// lexicographic order on exponent vectors (std::map over Exponent).
// Values are immutable in spirit: all operations return new values.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, mpz_class>;

  explicit LaurentPoly(int rank) : rank_(rank) {}
  LaurentPoly(int rank, TermMap terms);

  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
  static LaurentPoly constant(int rank, const mpz_class& c);
  static LaurentPoly one(int rank) { return constant(rank, 1); }
  // The monomial c * x^e.
  static LaurentPoly monomial(const Exponent& e, const mpz_class& c = 1);
  // The generator x_i (0-based).
  static LaurentPoly variable(int rank, int i);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Single term with coefficient +1 or -1 (an invertible element).
  bool is_unit_monomial() const;
  // Single term, any coefficient.
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator+(const LaurentPoly& q) const;
  LaurentPoly operator-(const LaurentPoly& q) const;
  LaurentPoly operator*(const LaurentPoly& q) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& q) const {
    return rank_ == q.rank_ && terms_ == q.terms_;
  }
  bool operator!=(const LaurentPoly& q) const { return !(*this == q); }
  // Lexicographic order on the canonical term maps; drives every
  // deterministic sort of polynomials in the project.
  bool operator<(const LaurentPoly& q) const;

  LaurentPoly pow(int k) const;  // k >= 0, or any k for unit monomials
  LaurentPoly inv_unit() const;  // inverse of a unit monomial

  std::string to_string() const;
  static LaurentPoly parse(int rank, const std::string& text);

 private:
  int rank_;
  TermMap terms_;  // invariant: no zero coefficients

  void add_term(const Exponent& e, const mpz_class& c);
  friend LaurentPoly lp_div_exact(const LaurentPoly&, const LaurentPoly&);
};

// Exact division: returns r with r*q == p, throws InexactDivision if no
// such Laurent polynomial exists.  Implemented by shifting both operands
// into the ordinary polynomial ring and dividing with respect to lex order.
LaurentPoly lp_div_exact(const LaurentPoly& p, const LaurentPoly& q);

// Simultaneous substitution x_i -> images[i].  Negative powers are only
// taken of unit-monomial images.
LaurentPoly lp_substitute(const LaurentPoly& p,
                          const std::vector<LaurentPoly>& images);

// d_i = -(min exponent of variable i over the support); errors on zero.
std::vector<int> lp_denominator_vector(const LaurentPoly& p);

struct LaurentClass {
  bool is_nonneg;      // all coefficients >= 0
  bool is_proper_sum;  // every monomial has at least one negative exponent
};
LaurentClass lp_classify(const LaurentPoly& p);

}  // namespace cluster

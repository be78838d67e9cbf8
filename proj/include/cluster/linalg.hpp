#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace cluster {

// Dense matrix over the rationals; the workhorse for every exact kernel,
// image and quotient computation in the representation layer.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static QMat identity(int n);
  // Horizontal concatenation [a | b].
  static QMat hcat(const QMat& a, const QMat& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const mpq_class& at(int i, int j) const { return a_[i * cols_ + j]; }
  mpq_class& at(int i, int j) { return a_[i * cols_ + j]; }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-() const;
  bool operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const;

  QMat col(int j) const;
  // Columns js, in order.
  QMat cols_of(const std::vector<int>& js) const;
  // Rows [r0, r1).
  QMat row_slice(int r0, int r1) const;
  void set_block(int r0, int c0, const QMat& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpq_class> a_;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(QMat& m);

int rank(QMat m);

// Columns form a basis of the kernel (canonical, from RREF free columns).
QMat kernel_basis(const QMat& m);

// Independent columns of m, left to right (a basis of the column space).
QMat column_space_basis(const QMat& m);

// Solves a * x = rhs column by column; nullopt if any column has no solution.
// When the system is underdetermined the free variables are set to zero.
std::optional<QMat> solve(const QMat& a, const QMat& rhs);

// Indices of columns of 'extra' that extend the independent columns of
// 'base' to a basis of span(base) + span(extra).
std::vector<int> extending_columns(const QMat& base, const QMat& extra);

// ---- prime field helpers (entries in [0, p)) -------------------------------

using FpMat = std::vector<std::vector<std::int64_t>>;  // row-major

std::int64_t fp_inv(std::int64_t a, std::int64_t p);

// Reduce a rational matrix mod p; fails (nullopt) when p divides a denominator.
std::optional<FpMat> reduce_mod_p(const QMat& m, std::int64_t p);

int rank_fp(FpMat m, std::int64_t p);

// All reduced-row-echelon bases of e-dimensional subspaces of F_p^m.
// Each entry is an e x m matrix in RREF; enumeration order is deterministic.
std::vector<FpMat> enumerate_subspaces_fp(int m, int e, std::int64_t p);

// Is v in the row space of the RREF basis?
bool in_rowspace_fp(const FpMat& rref_basis, std::vector<std::int64_t> v,
                    std::int64_t p);

}  // namespace cluster

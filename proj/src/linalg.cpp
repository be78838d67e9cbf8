#include "cluster/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cluster {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::hcat(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  QMat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matmul: shape mismatch");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpq_class& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matadd: shape mismatch");
  QMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

QMat QMat::operator-() const {
  QMat r = *this;
  for (auto& v : r.a_) v = -v;
  return r;
}

bool QMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const mpq_class& v) { return v == 0; });
}

QMat QMat::col(int j) const {
  QMat r(rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

QMat QMat::cols_of(const std::vector<int>& js) const {
  QMat r(rows_, (int)js.size());
  for (int j = 0; j < (int)js.size(); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, js[j]);
  return r;
}

QMat QMat::row_slice(int r0, int r1) const {
  QMat r(r1 - r0, cols_);
  for (int i = r0; i < r1; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i - r0, j) = at(i, j);
  return r;
}

void QMat::set_block(int r0, int c0, const QMat& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    mpq_class inv = 1 / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      mpq_class f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(QMat m) { return (int)rref(m).size(); }

QMat kernel_basis(const QMat& m) {
  QMat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  QMat k(m.cols(), (int)free_cols.size());
  for (int fi = 0; fi < (int)free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k.at(f, fi) = 1;
    for (int pi = 0; pi < (int)pivots.size(); ++pi)
      k.at(pivots[pi], fi) = -r.at(pi, f);
  }
  return k;
}

QMat column_space_basis(const QMat& m) {
  QMat r = m;
  std::vector<int> pivots = rref(r);
  return m.cols_of(pivots);
}

std::optional<QMat> solve(const QMat& a, const QMat& rhs) {
  if (a.rows() != rhs.rows()) throw std::invalid_argument("solve: row mismatch");
  QMat aug = QMat::hcat(a, rhs);
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;  // inconsistent system
  QMat x(a.cols(), rhs.cols());
  for (int pi = 0; pi < (int)pivots.size(); ++pi)
    for (int j = 0; j < rhs.cols(); ++j)
      x.at(pivots[pi], j) = aug.at(pi, a.cols() + j);
  return x;
}

std::vector<int> extending_columns(const QMat& base, const QMat& extra) {
  QMat joint = QMat::hcat(base, extra);
  std::vector<int> pivots = rref(joint);
  std::vector<int> out;
  for (int p : pivots)
    if (p >= base.cols()) out.push_back(p - base.cols());
  return out;
}

// ---- prime field helpers ---------------------------------------------------

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
  // Extended Euclid; a nonzero mod p.
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("fp_inv: not invertible");
  return t < 0 ? t + p : t;
}

std::optional<FpMat> reduce_mod_p(const QMat& m, std::int64_t p) {
  FpMat r(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const mpq_class& v = m.at(i, j);
      mpz_class den = v.get_den();
      if (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)p))
        return std::nullopt;
      mpz_class num = v.get_num();
      std::int64_t n = mpz_class(num % p).get_si();
      std::int64_t d = mpz_class(den % p).get_si();
      std::int64_t x = ((n % p) + p) % p;
      r[i][j] = x * fp_inv(((d % p) + p) % p, p) % p;
    }
  return r;
}

int rank_fp(FpMat m, std::int64_t p) {
  if (m.empty()) return 0;
  int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    std::int64_t inv = fp_inv(m[rank][col], p);
    for (int j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      std::int64_t f = m[i][col];
      for (int j = col; j < cols; ++j)
        m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

namespace {

void enumerate_pivot_sets(int m, int e, int start, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == e) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c <= m - (e - (int)cur.size()); ++c) {
    cur.push_back(c);
    enumerate_pivot_sets(m, e, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FpMat> enumerate_subspaces_fp(int m, int e, std::int64_t p) {
  std::vector<FpMat> out;
  if (e < 0 || e > m) return out;
  if (e == 0) {
    out.push_back(FpMat{});
    return out;
  }
  std::vector<std::vector<int>> pivot_sets;
  std::vector<int> cur;
  enumerate_pivot_sets(m, e, 0, cur, pivot_sets);
  for (const auto& piv : pivot_sets) {
    std::vector<bool> is_pivot(m, false);
    for (int c : piv) is_pivot[c] = true;
    // Free positions: right of the row's pivot, not a pivot column.
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < e; ++i)
      for (int j = piv[i] + 1; j < m; ++j)
        if (!is_pivot[j]) free_pos.emplace_back(i, j);
    std::vector<std::int64_t> vals(free_pos.size(), 0);
    while (true) {
      FpMat basis(e, std::vector<std::int64_t>(m, 0));
      for (int i = 0; i < e; ++i) basis[i][piv[i]] = 1;
      for (size_t t = 0; t < free_pos.size(); ++t)
        basis[free_pos[t].first][free_pos[t].second] = vals[t];
      out.push_back(std::move(basis));
      // Next assignment (odometer).
      size_t t = 0;
      for (; t < vals.size(); ++t) {
        if (++vals[t] < p) break;
        vals[t] = 0;
      }
      if (t == vals.size()) break;
      if (vals.empty()) break;
    }
  }
  return out;
}

bool in_rowspace_fp(const FpMat& rref_basis, std::vector<std::int64_t> v,
                    std::int64_t p) {
  for (const auto& row : rref_basis) {
    int piv = -1;
    for (int j = 0; j < (int)row.size(); ++j)
      if (row[j] != 0) { piv = j; break; }
    if (piv < 0) continue;
    std::int64_t f = v[piv] % p;
    if (f == 0) continue;
    for (int j = 0; j < (int)row.size(); ++j)
      v[j] = ((v[j] - f * row[j]) % p + p) % p;
  }
  return std::all_of(v.begin(), v.end(),
                     [p](std::int64_t x) { return x % p == 0; });
}

}  // namespace cluster

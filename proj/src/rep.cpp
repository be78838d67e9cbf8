#include "cluster/rep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace cluster {

Rep Rep::zero(const Quiver& q) {
  Rep r{q, std::vector<int>(q.vertex_count(), 0), {}};
  for (size_t a = 0; a < q.arrows().size(); ++a) r.matrices.emplace_back(0, 0);
  return r;
}

Rep Rep::simple(const Quiver& q, int k) {
  Rep r = zero(q);
  r.dims[k] = 1;
  for (size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    r.matrices[a] = QMat(r.dims[ar.head], r.dims[ar.tail]);
  }
  return r;
}

bool Rep::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

long long Rep::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0LL);
}

Rep rep_build(const Quiver& q, std::vector<int> dims,
              std::vector<QMat> matrices) {
  if ((int)dims.size() != q.vertex_count())
    throw ShapeMismatch("dimension vector length does not match quiver");
  for (int d : dims)
    if (d < 0) throw ShapeMismatch("negative dimension");
  if (matrices.size() != q.arrows().size())
    throw ShapeMismatch("one matrix per arrow required");
  for (size_t a = 0; a < matrices.size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    if (matrices[a].rows() != dims[ar.head] ||
        matrices[a].cols() != dims[ar.tail])
      throw ShapeMismatch("arrow matrix shape does not match dims");
  }
  return Rep{q, std::move(dims), std::move(matrices)};
}

Rep rep_direct_sum(const Rep& a, const Rep& b) {
  if (!(a.quiver == b.quiver))
    throw ShapeMismatch("direct sum over different quivers");
  std::vector<int> dims(a.dims.size());
  for (size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims[i] + b.dims[i];
  std::vector<QMat> mats;
  for (size_t t = 0; t < a.matrices.size(); ++t) {
    const Arrow& ar = a.quiver.arrows()[t];
    QMat m(dims[ar.head], dims[ar.tail]);
    m.set_block(0, 0, a.matrices[t]);
    m.set_block(a.dims[ar.head], a.dims[ar.tail], b.matrices[t]);
    mats.push_back(std::move(m));
  }
  return Rep{a.quiver, std::move(dims), std::move(mats)};
}

namespace {

// Commuting-square system for Hom(M, N): unknowns are the entries of the
// vertex maps psi_i : M_i -> N_i.
QMat hom_system(const Rep& m, const Rep& n) {
  const int nv = m.quiver.vertex_count();
  std::vector<int> offset(nv + 1, 0);
  for (int i = 0; i < nv; ++i)
    offset[i + 1] = offset[i] + n.dims[i] * m.dims[i];
  const int unknowns = offset[nv];
  int eqns = 0;
  for (size_t t = 0; t < m.matrices.size(); ++t) {
    const Arrow& ar = m.quiver.arrows()[t];
    eqns += n.dims[ar.head] * m.dims[ar.tail];
  }
  QMat sys(eqns, unknowns);
  int row = 0;
  auto idx = [&](int vtx, int r, int c) {
    return offset[vtx] + r * m.dims[vtx] + c;
  };
  for (size_t t = 0; t < m.matrices.size(); ++t) {
    const Arrow& ar = m.quiver.arrows()[t];
    const QMat& aM = m.matrices[t];
    const QMat& aN = n.matrices[t];
    for (int r = 0; r < n.dims[ar.head]; ++r)
      for (int c = 0; c < m.dims[ar.tail]; ++c) {
        // (psi_head * a_M - a_N * psi_tail)(r, c) = 0
        for (int s = 0; s < m.dims[ar.head]; ++s)
          sys.at(row, idx(ar.head, r, s)) += aM.at(s, c);
        for (int s = 0; s < n.dims[ar.tail]; ++s)
          sys.at(row, idx(ar.tail, s, c)) -= aN.at(r, s);
        ++row;
      }
  }
  return sys;
}

void check_compatible(const Rep& m, const Rep& n) {
  if (!(m.quiver == n.quiver))
    throw ShapeMismatch("representations over different quivers");
}

}  // namespace

long long hom_dim(const Rep& m, const Rep& n) {
  check_compatible(m, n);
  QMat sys = hom_system(m, n);
  return sys.cols() - rank(sys);
}

long long hom_dim_fp(const Rep& m, const Rep& n, std::int64_t p) {
  check_compatible(m, n);
  QMat sys = hom_system(m, n);
  auto fp = reduce_mod_p(sys, p);
  if (!fp) throw ShapeMismatch("prime divides a denominator in hom system");
  return sys.cols() - rank_fp(*fp, p);
}

long long grassmannian_point_count(const Rep& m, const std::vector<int>& e,
                                   std::int64_t p) {
  const int nv = m.quiver.vertex_count();
  if ((int)e.size() != nv) throw ShapeMismatch("dimension vector length");
  for (int i = 0; i < nv; ++i)
    if (e[i] < 0 || e[i] > m.dims[i])
      throw ShapeMismatch("subspace dimension out of range");

  std::vector<FpMat> arrow_fp;
  for (const QMat& a : m.matrices) {
    auto f = reduce_mod_p(a, p);
    if (!f) throw ShapeMismatch("prime divides a denominator of the module");
    arrow_fp.push_back(std::move(*f));
  }

  // Vertex order by descending arrow degree for early pruning.
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> degree(nv, 0);
  for (const Arrow& a : m.quiver.arrows()) {
    ++degree[a.tail];
    ++degree[a.head];
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  std::vector<int> position(nv);
  for (int i = 0; i < nv; ++i) position[order[i]] = i;

  std::vector<std::vector<FpMat>> choices(nv);
  for (int i = 0; i < nv; ++i)
    choices[i] = enumerate_subspaces_fp(m.dims[i], e[i], p);

  std::vector<const FpMat*> chosen(nv, nullptr);
  long long count = 0;

  // a_M(U_tail) must lie in U_head for every arrow with both ends chosen.
  auto stable_against = [&](int vtx) {
    for (size_t t = 0; t < m.quiver.arrows().size(); ++t) {
      const Arrow& ar = m.quiver.arrows()[t];
      if (ar.tail != vtx && ar.head != vtx) continue;
      if (!chosen[ar.tail] || !chosen[ar.head]) continue;
      const FpMat& tail_basis = *chosen[ar.tail];
      const FpMat& head_basis = *chosen[ar.head];
      const FpMat& act = arrow_fp[t];
      for (const auto& bv : tail_basis) {
        std::vector<std::int64_t> img(m.dims[ar.head], 0);
        for (int r = 0; r < m.dims[ar.head]; ++r) {
          std::int64_t acc = 0;
          for (int c = 0; c < m.dims[ar.tail]; ++c)
            acc = (acc + act[r][c] * bv[c]) % p;
          img[r] = acc;
        }
        if (!in_rowspace_fp(head_basis, img, p)) return false;
      }
    }
    return true;
  };

  std::function<void(int)> recurse = [&](int pos) {
    if (pos == nv) {
      ++count;
      return;
    }
    int vtx = order[pos];
    for (const FpMat& sub : choices[vtx]) {
      chosen[vtx] = &sub;
      if (stable_against(vtx)) recurse(pos + 1);
    }
    chosen[vtx] = nullptr;
  };
  recurse(0);
  return count;
}

namespace {

bool prime_usable(const Rep& m, std::int64_t p) {
  for (const QMat& a : m.matrices)
    if (!reduce_mod_p(a, p)) return false;
  return true;
}

std::int64_t next_usable_prime(const Rep& m, std::int64_t after) {
  mpz_class p(after);
  while (true) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (prime_usable(m, p.get_si())) return p.get_si();
  }
}

}  // namespace

GrassmannianCount grassmannian_profile(const Rep& m,
                                       const std::vector<int>& e) {
  GrassmannianCount out;
  out.e = e;
  int deg_bound = 0;
  for (size_t i = 0; i < e.size(); ++i)
    deg_bound += e[i] * (m.dims[i] - e[i]);
  const int points = deg_bound + 1;

  std::int64_t p = 1;
  for (int i = 0; i < points + 1; ++i) {  // one spare prime for the check
    p = next_usable_prime(m, p);
    out.point_counts.emplace_back(p, grassmannian_point_count(m, e, p));
  }

  // Lagrange interpolation through the first `points` samples.
  std::vector<mpq_class> poly(points, 0);
  for (int i = 0; i < points; ++i) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (int j = 0; j < points; ++j) {
      if (j == i) continue;
      // basis *= (q - p_j)
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * out.point_counts[j].first;
      }
      basis = std::move(next);
      denom *= mpq_class(out.point_counts[i].first -
                         out.point_counts[j].first);
    }
    mpq_class scale = mpq_class((long)out.point_counts[i].second) / denom;
    for (size_t d = 0; d < basis.size(); ++d)
      poly[d] += basis[d] * scale;
  }
  out.counting_poly = poly;

  auto eval = [&](const mpq_class& q) {
    mpq_class acc = 0, pw = 1;
    for (const auto& c : poly) {
      acc += c * pw;
      pw *= q;
    }
    return acc;
  };
  // Consistency at the spare prime.
  mpq_class check = eval(mpq_class(out.point_counts.back().first));
  if (check != mpq_class((long)out.point_counts.back().second))
    throw InterpolationInconsistent(
        "counting polynomial fails at the spare prime (bad degree bound?)");
  mpq_class at1 = eval(1);
  if (at1.get_den() != 1)
    throw InterpolationInconsistent("non-integer Euler characteristic");
  out.euler = at1.get_num();
  return out;
}

mpz_class euler_characteristic(const Rep& m, const std::vector<int>& e) {
  return grassmannian_profile(m, e).euler;
}

Rep reflection_functor(const Rep& m, int k, Reflection kind) {
  const Quiver& q = m.quiver;
  const int nv = q.vertex_count();
  if (kind == Reflection::AtSink && !q.is_sink(k))
    throw ShapeMismatch("vertex is not a sink");
  if (kind == Reflection::AtSource && !q.is_source(k))
    throw ShapeMismatch("vertex is not a source");

  // Reflected quiver: reverse every arrow at k.
  std::vector<Arrow> new_arrows;
  std::vector<size_t> incident;  // original indices of arrows at k
  for (size_t t = 0; t < q.arrows().size(); ++t) {
    Arrow a = q.arrows()[t];
    if (a.tail == k || a.head == k) {
      incident.push_back(t);
      std::swap(a.tail, a.head);
    }
    new_arrows.push_back(a);
  }
  Quiver rq(nv, new_arrows);

  std::vector<int> dims = m.dims;
  QMat new_space_map;  // kernel basis (sink) or quotient map (source)
  std::vector<int> block_offset;  // offsets into the assembled sum

  if (kind == Reflection::AtSink) {
    // ker( sum a_M : (+) M_{t(a)} -> M_k )
    int total = 0;
    block_offset.assign(incident.size() + 1, 0);
    for (size_t i = 0; i < incident.size(); ++i) {
      total += m.dims[q.arrows()[incident[i]].tail];
      block_offset[i + 1] = total;
    }
    QMat assembled(m.dims[k], total);
    for (size_t i = 0; i < incident.size(); ++i)
      assembled.set_block(0, block_offset[i], m.matrices[incident[i]]);
    new_space_map = kernel_basis(assembled);  // total x nullity
    dims[k] = new_space_map.cols();
  } else {
    // coker( (b_M) : M_k -> (+) M_{h(b)} )
    int total = 0;
    block_offset.assign(incident.size() + 1, 0);
    for (size_t i = 0; i < incident.size(); ++i) {
      total += m.dims[q.arrows()[incident[i]].head];
      block_offset[i + 1] = total;
    }
    QMat assembled(total, m.dims[k]);
    for (size_t i = 0; i < incident.size(); ++i)
      assembled.set_block(block_offset[i], 0, m.matrices[incident[i]]);
    QMat img = column_space_basis(assembled);
    // Extend im by standard basis vectors; quotient coordinates are the
    // complement part of the expansion in the extended basis.
    QMat eye = QMat::identity(total);
    std::vector<int> ext = extending_columns(img, eye);
    QMat full = QMat::hcat(img, eye.cols_of(ext));
    QMat inv = *solve(full, eye);
    new_space_map = inv.row_slice(img.cols(), total);  // q x total
    dims[k] = new_space_map.rows();
  }

  std::vector<QMat> mats(q.arrows().size());
  for (size_t t = 0; t < q.arrows().size(); ++t) {
    const Arrow& na = rq.arrows()[t];
    bool at_k = q.arrows()[t].tail == k || q.arrows()[t].head == k;
    if (!at_k) {
      mats[t] = m.matrices[t];
      continue;
    }
    size_t slot =
        std::find(incident.begin(), incident.end(), t) - incident.begin();
    if (kind == Reflection::AtSink) {
      // a* : M'_k -> M_{t(a)}: block rows of the kernel basis.
      mats[t] = new_space_map.row_slice(block_offset[slot],
                                        block_offset[slot + 1]);
      (void)na;
    } else {
      // b* : M_{h(b)} -> M'_k: include then project to the quotient.
      int total = block_offset.back();
      int d = block_offset[slot + 1] - block_offset[slot];
      QMat incl(total, d);
      for (int j = 0; j < d; ++j) incl.at(block_offset[slot] + j, j) = 1;
      mats[t] = new_space_map * incl;
    }
  }
  // Arrow reversal can reorder the canonical arrow list; rebuild aligned.
  std::vector<std::pair<Arrow, QMat>> tagged;
  for (size_t t = 0; t < new_arrows.size(); ++t)
    tagged.emplace_back(new_arrows[t], mats[t]);
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<QMat> sorted_mats;
  for (auto& [a, mm] : tagged) sorted_mats.push_back(std::move(mm));
  return rep_build(rq, dims, std::move(sorted_mats));
}

Rep tau_inverse(const Rep& m) {
  if (!m.quiver.is_acyclic())
    throw ShapeMismatch("tau_inverse requires an acyclic quiver");
  const int nv = m.quiver.vertex_count();
  Rep cur = m;
  std::vector<bool> done(nv, false);
  for (int step = 0; step < nv; ++step) {
    int src = -1;
    for (int v = 0; v < nv; ++v)
      if (!done[v] && cur.quiver.is_source(v)) { src = v; break; }
    if (src < 0)
      throw ShapeMismatch("no admissible source ordering (cyclic quiver?)");
    cur = reflection_functor(cur, src, Reflection::AtSource);
    done[src] = true;
  }
  if (!(cur.quiver == m.quiver))
    throw ShapeMismatch("inverse Coxeter composite did not return the quiver");
  return cur;
}

namespace {

// Indecomposable projective at vertex i of a tree-shaped acyclic quiver:
// one-dimensional at every vertex reachable from i along arrows.
Rep projective_at(const Quiver& h, int i) {
  const int nv = h.vertex_count();
  std::vector<int> dims(nv, 0);
  dims[i] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Arrow& a : h.arrows())
      if (dims[a.tail] == 1 && dims[a.head] == 0) {
        dims[a.head] = 1;
        changed = true;
      }
  }
  std::vector<QMat> mats;
  for (const Arrow& a : h.arrows()) {
    QMat m(dims[a.head], dims[a.tail]);
    if (dims[a.head] == 1 && dims[a.tail] == 1) m.at(0, 0) = 1;
    mats.push_back(std::move(m));
  }
  return rep_build(h, dims, std::move(mats));
}

}  // namespace

std::vector<Rep> enumerate_indecomposables(const Quiver& h) {
  if (!dynkin_shape(h))
    throw ShapeMismatch("enumerate_indecomposables requires a Dynkin quiver");
  std::vector<Rep> out;
  std::set<std::vector<int>> seen;  // dim vector determines the indecomposable
  for (int i = 0; i < h.vertex_count(); ++i) {
    Rep cur = projective_at(h, i);
    while (!cur.is_zero()) {
      if (seen.insert(cur.dims).second) out.push_back(cur);
      cur = tau_inverse(cur);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Rep& a, const Rep& b) { return a.dims < b.dims; });
  return out;
}

}  // namespace cluster

#include "cluster/qp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cluster {

Path canonical_rotation(const Path& cycle) {
  if (cycle.empty()) return cycle;
  Path best = cycle;
  Path rot = cycle;
  for (size_t i = 1; i < cycle.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

void Potential::add(const Path& cycle, const mpz_class& coeff) {
  if (coeff == 0) return;
  Path key = canonical_rotation(cycle);
  auto [it, inserted] = cycles_.emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) cycles_.erase(it);
  }
}

Potential Potential::degree_two_part() const {
  Potential out;
  for (const auto& [p, c] : cycles_)
    if (p.size() == 2) out.add(p, c);
  return out;
}

std::vector<Path> chordless_cycles(const Quiver& q) {
  const int n = q.vertex_count();
  const auto& arrows = q.arrows();
  std::vector<Path> out;

  // DFS over directed simple cycles whose minimal vertex is the start.
  std::vector<int> traversal;  // arrow indices in traversal order
  std::vector<bool> on_path(n, false);
  std::function<void(int, int)> dfs = [&](int start, int cur) {
    for (int t = 0; t < (int)arrows.size(); ++t) {
      if (arrows[t].tail != cur) continue;
      int next = arrows[t].head;
      if (next == start && traversal.size() >= 2) {
        traversal.push_back(t);
        // Chordless: the induced subquiver is exactly this cycle.
        std::set<int> verts;
        for (int ti : traversal) verts.insert(arrows[ti].tail);
        int induced = 0;
        for (const Arrow& a : arrows)
          if (verts.count(a.tail) && verts.count(a.head)) ++induced;
        if (induced == (int)traversal.size()) {
          Path written(traversal.rbegin(), traversal.rend());
          out.push_back(canonical_rotation(written));
        }
        traversal.pop_back();
        continue;
      }
      if (next <= start || on_path[next]) continue;
      traversal.push_back(t);
      on_path[next] = true;
      dfs(start, next);
      on_path[next] = false;
      traversal.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Potential primitive_potential(const Quiver& q) {
  ExchangeMatrix b = quiver_to_matrix(q);
  for (int v : b.data())
    if (v >= 2 || v <= -2)
      throw QPError("primitive potential requires |b_ij| <= 1");
  Potential s;
  for (const Path& c : chordless_cycles(q)) s.add(c, 1);
  return s;
}

QP make_qp(const Quiver& q) { return QP{q, primitive_potential(q)}; }

PathSum cyclic_derivative(const Potential& s, const Quiver& q, int arrow) {
  (void)q;
  PathSum out;
  for (const auto& [p, c] : s.cycles()) {
    const int d = (int)p.size();
    for (int i = 0; i < d; ++i) {
      if (p[i] != arrow) continue;
      Path rem;
      for (int j = 1; j < d; ++j) rem.push_back(p[(i + j) % d]);
      auto [it, inserted] = out.emplace(std::move(rem), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

PathSum second_derivative(const Potential& s, const Quiver& q, int arrow_b,
                          int arrow_a) {
  (void)q;
  PathSum out;
  for (const auto& [p, c] : s.cycles()) {
    const int d = (int)p.size();
    for (int i = 0; i < d; ++i) {
      if (p[i] != arrow_b || p[(i + 1) % d] != arrow_a) continue;
      Path rem;
      for (int j = 2; j < d; ++j) rem.push_back(p[(i + j) % d]);
      auto [it, inserted] = out.emplace(std::move(rem), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

QMat pathsum_action(const Rep& m, const PathSum& ps, int from_vertex,
                    int to_vertex) {
  QMat acc(m.dims[to_vertex], m.dims[from_vertex]);
  const auto& arrows = m.quiver.arrows();
  for (const auto& [p, c] : ps) {
    if (!p.empty()) {
      if (arrows[p.back()].tail != from_vertex ||
          arrows[p.front()].head != to_vertex)
        throw QPError("path endpoints do not match the requested action");
    } else if (from_vertex != to_vertex) {
      throw QPError("empty path between distinct vertices");
    }
    QMat prod = QMat::identity(m.dims[from_vertex]);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
      prod = m.matrices[*it] * prod;
    mpq_class scale{c};
    for (int i = 0; i < acc.rows(); ++i)
      for (int j = 0; j < acc.cols(); ++j)
        acc.at(i, j) += scale * prod.at(i, j);
  }
  return acc;
}

bool jacobian_check(const Rep& m, const Potential& s) {
  const auto& arrows = m.quiver.arrows();
  for (int t = 0; t < (int)arrows.size(); ++t) {
    PathSum ds = cyclic_derivative(s, m.quiver, t);
    if (ds.empty()) continue;
    QMat act = pathsum_action(m, ds, arrows[t].head, arrows[t].tail);
    if (!act.is_zero()) return false;
  }
  return true;
}

DecoratedRep DecoratedRep::negative_simple(const QP& qp, int k) {
  std::vector<int> v(qp.quiver.vertex_count(), 0);
  v.at(k) = 1;
  return DecoratedRep{qp, Rep::zero(qp.quiver), std::move(v)};
}

bool DecoratedRep::is_positive() const {
  return std::all_of(v.begin(), v.end(), [](int d) { return d == 0; });
}

Triangle triangle_at(const DecoratedRep& dec, int k) {
  const Quiver& q = dec.qp.quiver;
  const Rep& m = dec.m;
  Triangle tri;
  tri.in_arrows = q.arrows_into(k);
  tri.out_arrows = q.arrows_out_of(k);
  tri.in_offsets.assign(1, 0);
  for (int a : tri.in_arrows)
    tri.in_offsets.push_back(tri.in_offsets.back() +
                             m.dims[q.arrows()[a].tail]);
  tri.out_offsets.assign(1, 0);
  for (int b : tri.out_arrows)
    tri.out_offsets.push_back(tri.out_offsets.back() +
                              m.dims[q.arrows()[b].head]);
  const int in_total = tri.in_offsets.back();
  const int out_total = tri.out_offsets.back();

  tri.alpha = QMat(m.dims[k], in_total);
  for (size_t i = 0; i < tri.in_arrows.size(); ++i)
    tri.alpha.set_block(0, tri.in_offsets[i], m.matrices[tri.in_arrows[i]]);

  tri.beta = QMat(out_total, m.dims[k]);
  for (size_t i = 0; i < tri.out_arrows.size(); ++i)
    tri.beta.set_block(tri.out_offsets[i], 0, m.matrices[tri.out_arrows[i]]);

  tri.gamma = QMat(in_total, out_total);
  for (size_t ia = 0; ia < tri.in_arrows.size(); ++ia)
    for (size_t ib = 0; ib < tri.out_arrows.size(); ++ib) {
      const Arrow& a = q.arrows()[tri.in_arrows[ia]];
      const Arrow& b = q.arrows()[tri.out_arrows[ib]];
      PathSum d2 = second_derivative(dec.qp.potential, q, tri.out_arrows[ib],
                                     tri.in_arrows[ia]);
      tri.gamma.set_block(tri.in_offsets[ia], tri.out_offsets[ib],
                          pathsum_action(m, d2, b.head, a.tail));
    }

  if (!(tri.alpha * tri.gamma).is_zero() || !(tri.gamma * tri.beta).is_zero())
    throw QPError("triangle relations violated at vertex " +
                  std::to_string(k + 1));
  QMat g = tri.gamma;
  tri.g = (out_total - rank(g)) - m.dims[k] + dec.v[k];
  return tri;
}

std::vector<int> g_vector(const DecoratedRep& dec) {
  std::vector<int> g;
  for (int k = 0; k < dec.qp.quiver.vertex_count(); ++k)
    g.push_back(triangle_at(dec, k).g);
  return g;
}

QPMutation qp_mutate(const QP& qp, int k) {
  const Quiver& q = qp.quiver;
  const int n = q.vertex_count();
  if (k < 0 || k >= n) throw std::out_of_range("mutation vertex out of range");
  const auto& arrows = q.arrows();
  std::vector<int> in_k = q.arrows_into(k);
  std::vector<int> out_k = q.arrows_out_of(k);

  QPMutation mu;
  std::vector<int> kept_index(arrows.size(), -1);
  std::map<std::pair<int, int>, int> composite_index;  // (a, b) -> tilde idx
  std::map<int, int> reversed_index;                   // orig idx -> tilde idx

  for (int t = 0; t < (int)arrows.size(); ++t) {
    if (arrows[t].tail == k || arrows[t].head == k) continue;
    kept_index[t] = (int)mu.tilde_arrows.size();
    mu.tilde_arrows.push_back({arrows[t], QPMutation::Origin::Kept, t, -1});
  }
  for (int a : in_k)
    for (int b : out_k) {
      composite_index[{a, b}] = (int)mu.tilde_arrows.size();
      mu.tilde_arrows.push_back({Arrow{arrows[a].tail, arrows[b].head},
                                 QPMutation::Origin::Composite, a, b});
    }
  for (int a : in_k) {
    reversed_index[a] = (int)mu.tilde_arrows.size();
    mu.tilde_arrows.push_back(
        {Arrow{k, arrows[a].tail}, QPMutation::Origin::Reversed, a, -1});
  }
  for (int b : out_k) {
    reversed_index[b] = (int)mu.tilde_arrows.size();
    mu.tilde_arrows.push_back(
        {Arrow{arrows[b].head, k}, QPMutation::Origin::Reversed, b, -1});
  }

  // [S]: rotate each cycle off the vertex k, then contract every b,a pair
  // whose junction is k into the composite arrow [ba].
  for (const auto& [cyc, coeff] : qp.potential.cycles()) {
    const int d = (int)cyc.size();
    Path p = cyc;
    for (int r = 0; r < d && arrows[p.front()].head == k; ++r)
      std::rotate(p.begin(), p.begin() + 1, p.end());
    if (arrows[p.front()].head == k)
      throw QPError("cycle cannot be rotated off the mutation vertex");
    Path image;
    for (int i = 0; i < d; ++i) {
      int junction = arrows[p[i]].tail;  // between p[i] and p[i+1]
      if (i + 1 < d && junction == k) {
        int b = p[i], a = p[i + 1];
        image.push_back(composite_index.at({a, b}));
        ++i;
      } else {
        if (kept_index[p[i]] < 0)
          throw QPError("cycle arrow at k without a matching pair");
        image.push_back(kept_index[p[i]]);
      }
    }
    mu.s_tilde.add(image, coeff);
  }
  // Delta_k: one triangle [ba] a* b* per composable pair through k.
  for (int a : in_k)
    for (int b : out_k)
      mu.s_tilde.add({composite_index.at({a, b}), reversed_index.at(a),
                      reversed_index.at(b)},
                     1);

  // Restricted reduction: cancel unit-coefficient 2-cycles of the
  // premutated potential by deleting both arrows.
  std::vector<bool> deleted(mu.tilde_arrows.size(), false);
  Potential deg2 = mu.s_tilde.degree_two_part();
  for (const auto& [cyc, coeff] : deg2.cycles()) {
    if (coeff != 1 && coeff != -1)
      throw QPError("non-unit degree-2 coefficient (" + coeff.get_str() +
                    " on " + std::to_string(cyc[0]) + "," +
                    std::to_string(cyc[1]) +
                    "): outside the finite-type regime this reduction "
                    "supports");
    if (deleted[cyc[0]] || deleted[cyc[1]])
      throw QPError("arrow shared by two trivial pairs");
    deleted[cyc[0]] = deleted[cyc[1]] = true;
    mu.cancelled.emplace_back(cyc[0], cyc[1]);
  }

  // The reduced quiver must agree with matrix mutation.
  Quiver mutated = matrix_to_quiver(matrix_mutate(quiver_to_matrix(q), k));
  mu.tilde_to_result.assign(mu.tilde_arrows.size(), -1);
  std::vector<bool> used(mutated.arrows().size(), false);
  for (size_t t = 0; t < mu.tilde_arrows.size(); ++t) {
    if (deleted[t]) continue;
    bool found = false;
    for (size_t r = 0; r < mutated.arrows().size(); ++r) {
      if (used[r] || !(mutated.arrows()[r] == mu.tilde_arrows[t].arrow))
        continue;
      used[r] = true;
      mu.tilde_to_result[t] = (int)r;
      found = true;
      break;
    }
    if (!found)
      throw QPError("reduced arrow span disagrees with matrix mutation");
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw QPError("matrix mutation has arrows the reduction lacks");

  mu.result = QP{mutated, primitive_potential(mutated)};
  return mu;
}

namespace {

// Scales helper around the solve() edge case of an empty basis.
QMat coords_in(const QMat& basis, const QMat& vectors) {
  if (basis.cols() == 0) {
    if (!vectors.is_zero())
      throw QPError("vectors outside the span of an empty basis");
    return QMat(0, vectors.cols());
  }
  auto sol = solve(basis, vectors);
  if (!sol) throw QPError("vectors outside the span of a basis");
  return *sol;
}

}  // namespace

DecoratedRep rep_mutate(const DecoratedRep& dec, int k) {
  Triangle tri = triangle_at(dec, k);
  QPMutation mu = qp_mutate(dec.qp, k);
  const Rep& m = dec.m;
  const Quiver& q = dec.qp.quiver;
  const int in_total = tri.in_offsets.back();
  const int out_total = tri.out_offsets.back();

  // Decomposition of the new space at k:
  //   im gamma (+) ker alpha / im gamma (+) ker gamma / im beta (+) V_k.
  QMat c1 = column_space_basis(tri.gamma);
  QMat ker_alpha = kernel_basis(tri.alpha);
  QMat c2 = ker_alpha.cols_of(extending_columns(c1, ker_alpha));
  QMat im_beta = column_space_basis(tri.beta);
  QMat ker_gamma = kernel_basis(tri.gamma);
  QMat c3 = ker_gamma.cols_of(extending_columns(im_beta, ker_gamma));
  const int d1 = c1.cols(), d2 = c2.cols(), d3 = c3.cols(), d4 = dec.v[k];
  const int mk = d1 + d2 + d3 + d4;

  // alpha_bar components (splitting data chosen via RREF pivots).
  QMat alpha1 = -coords_in(c1, tri.gamma);  // d1 x out_total
  QMat alpha3(d3, out_total);
  if (d3 > 0) {
    QMat eye = QMat::identity(out_total);
    QMat full = QMat::hcat(ker_gamma, eye.cols_of(extending_columns(ker_gamma, eye)));
    QMat rho = coords_in(full, eye).row_slice(0, ker_gamma.cols());
    QMat in_kg = coords_in(QMat::hcat(im_beta, c3), ker_gamma);
    QMat pi_part = in_kg.row_slice(im_beta.cols(), im_beta.cols() + d3);
    alpha3 = -(pi_part * rho);
  }
  QMat alpha_bar(mk, out_total);
  alpha_bar.set_block(0, 0, alpha1);
  alpha_bar.set_block(d1 + d2, 0, alpha3);

  QMat beta_bar(in_total, mk);
  beta_bar.set_block(0, 0, c1);
  beta_bar.set_block(0, d1, c2);

  // New decoration at k: ker beta / (ker beta  im alpha).
  QMat ker_beta = kernel_basis(tri.beta);
  QMat im_alpha = column_space_basis(tri.alpha);
  int inter = ker_beta.cols() + im_alpha.cols() -
              rank(QMat::hcat(ker_beta, im_alpha));
  const int vbar_k = ker_beta.cols() - inter;

  std::vector<int> dims = m.dims;
  dims[k] = mk;
  std::vector<int> v = dec.v;
  v[k] = vbar_k;

  // Actions of the surviving premutation arrows, then reindex onto the
  // mutated quiver.
  auto slot_of = [](const std::vector<int>& list, int val) {
    return (int)(std::find(list.begin(), list.end(), val) - list.begin());
  };
  std::vector<QMat> result_mats(mu.result.quiver.arrows().size());
  for (size_t t = 0; t < mu.tilde_arrows.size(); ++t) {
    int r = mu.tilde_to_result[t];
    if (r < 0) continue;
    const auto& ta = mu.tilde_arrows[t];
    QMat act;
    switch (ta.origin) {
      case QPMutation::Origin::Kept:
        act = m.matrices[ta.src_a];
        break;
      case QPMutation::Origin::Composite:
        act = m.matrices[ta.src_b] * m.matrices[ta.src_a];
        break;
      case QPMutation::Origin::Reversed: {
        const Arrow& orig = q.arrows()[ta.src_a];
        if (orig.head == k) {
          // a* : new M_k -> M_{t(a)}: block rows of beta_bar.
          int s = slot_of(tri.in_arrows, ta.src_a);
          act = beta_bar.row_slice(tri.in_offsets[s], tri.in_offsets[s + 1]);
        } else {
          // b* : M_{h(b)} -> new M_k: block columns of alpha_bar.
          int s = slot_of(tri.out_arrows, ta.src_a);
          std::vector<int> cols;
          for (int j = tri.out_offsets[s]; j < tri.out_offsets[s + 1]; ++j)
            cols.push_back(j);
          act = alpha_bar.cols_of(cols);
        }
        break;
      }
    }
    result_mats[r] = std::move(act);
  }
  Rep new_m = rep_build(mu.result.quiver, dims, std::move(result_mats));
  DecoratedRep out{mu.result, std::move(new_m), std::move(v)};

  if (!jacobian_check(out.m, out.qp.potential))
    throw QPError("mutated module violates the Jacobian relations");
  for (int vtx = 0; vtx < q.vertex_count(); ++vtx)
    triangle_at(out, vtx);  // throws on a broken triangle relation
  return out;
}

DecoratedRep rep_direct_sum(const DecoratedRep& a, const DecoratedRep& b) {
  if (!(a.qp == b.qp)) throw QPError("direct sum over different QPs");
  std::vector<int> v(a.v.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.v[i] + b.v[i];
  return DecoratedRep{a.qp, rep_direct_sum(a.m, b.m), std::move(v)};
}

LaurentPoly f_polynomial(const DecoratedRep& dec) {
  const int n = dec.qp.quiver.vertex_count();
  LaurentPoly f(n);
  std::vector<int> e(n, 0);
  while (true) {
    mpz_class chi = euler_characteristic(dec.m, e);
    Exponent exp(e.begin(), e.end());
    f = f + LaurentPoly::monomial(exp, chi);
    int i = 0;
    for (; i < n; ++i) {
      if (++e[i] <= dec.m.dims[i]) break;
      e[i] = 0;
    }
    if (i == n) break;
  }
  return f;
}

LaurentPoly x_of_rep(const DecoratedRep& dec, const ExchangeMatrix& b) {
  const int n = b.size();
  if (n != dec.qp.quiver.vertex_count())
    throw QPError("exchange matrix does not match the QP");
  if (!(quiver_to_matrix(dec.qp.quiver) == b))
    throw QPError("exchange matrix disagrees with the QP's quiver");
  std::vector<LaurentPoly> images;
  for (int j = 0; j < n; ++j) {
    Exponent col(n);
    for (int i = 0; i < n; ++i) col[i] = b.at(i, j);
    images.push_back(LaurentPoly::monomial(col));
  }
  LaurentPoly f = f_polynomial(dec);
  std::vector<int> g = g_vector(dec);
  return lp_substitute(f, images) *
         LaurentPoly::monomial(Exponent(g.begin(), g.end()));
}

EInvariants e_invariants(const DecoratedRep& m_dec, const DecoratedRep& n_dec) {
  if (!(m_dec.qp == n_dec.qp)) throw QPError("E-invariant across different QPs");
  auto dot = [](const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
    return s;
  };
  std::vector<int> g_m = g_vector(m_dec), g_n = g_vector(n_dec);
  EInvariants out{};
  out.e_inj = hom_dim(m_dec.m, n_dec.m) + dot(m_dec.m.dims, g_n);
  out.e_inj_reverse = hom_dim(n_dec.m, m_dec.m) + dot(n_dec.m.dims, g_m);
  out.e_self_m = hom_dim(m_dec.m, m_dec.m) + dot(m_dec.m.dims, g_m);
  // Homological cross-check on the hereditary (acyclic, potential-free) seed.
  if (m_dec.qp.potential.is_zero() && m_dec.qp.quiver.is_acyclic() &&
      m_dec.is_positive() && n_dec.is_positive())
    out.homological = hom_dim(tau_inverse(n_dec.m), m_dec.m);
  return out;
}

long long e_invariant(const DecoratedRep& dec) {
  return e_invariants(dec, dec).e_inj;
}

DecoratedRep build_cluster_rep(const ExchangeMatrix& b0,
                               const std::vector<int>& walk, int k) {
  std::vector<QP> qps{make_qp(matrix_to_quiver(b0))};
  for (int d : walk) qps.push_back(qp_mutate(qps.back(), d).result);
  DecoratedRep dec = DecoratedRep::negative_simple(qps.back(), k);
  for (int j = (int)walk.size() - 1; j >= 0; --j) {
    dec = rep_mutate(dec, walk[j]);
    if (!(dec.qp == qps[j]))
      throw QPError("representation mutation left the expected QP sequence");
  }
  if (e_invariant(dec) != 0)
    throw QPError("cluster representation has nonzero E-invariant");
  for (size_t i = 0; i < dec.v.size(); ++i)
    if (dec.m.dims[i] != 0 && dec.v[i] != 0)
      throw QPError("cluster representation violates the support condition");
  return dec;
}

DecoratedRep build_cluster_monomial_rep(const ExchangeMatrix& b0,
                                        const std::vector<int>& walk,
                                        const std::vector<int>& exponents) {
  const int n = b0.size();
  if ((int)exponents.size() != n)
    throw QPError("exponent vector length does not match rank");
  QP qp0 = make_qp(matrix_to_quiver(b0));
  DecoratedRep acc{qp0, Rep::zero(qp0.quiver),
                   std::vector<int>(n, 0)};
  for (int k = 0; k < n; ++k) {
    if (exponents[k] < 0) throw QPError("negative exponent in cluster monomial");
    if (exponents[k] == 0) continue;
    DecoratedRep factor = build_cluster_rep(b0, walk, k);
    for (int c = 0; c < exponents[k]; ++c) acc = rep_direct_sum(acc, factor);
  }
  return acc;
}

}  // namespace cluster

#include "cluster/verifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cluster {

namespace {

// All exponent vectors of length n with total degree in [1, max_deg].
void enumerate_exponents(int n, int max_deg,
                         const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      f(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(0, max_deg);
}

bool has_negative_entry(const std::vector<int>& v) {
  return std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

MonomialBasis enumerate_cluster_monomials(const ExchangeGraph& g,
                                          int max_deg) {
  const int n = g.clusters.empty()
                    ? 0
                    : (int)g.clusters.front().rep.cluster.size();
  std::map<LaurentPoly, ClusterMonomial> seen;
  LaurentPoly one = LaurentPoly::one(n);
  seen.emplace(one, ClusterMonomial{g.initial_cluster,
                                    std::vector<int>(n, 0), one});
  for (int c = 0; c < (int)g.clusters.size(); ++c) {
    const auto& vars = g.clusters[c].rep.cluster;
    enumerate_exponents(n, max_deg, [&](const std::vector<int>& e) {
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }))
        return;
      LaurentPoly prod = LaurentPoly::one(n);
      for (int i = 0; i < n; ++i)
        if (e[i] > 0) prod = prod * vars[i].pow(e[i]);
      seen.emplace(prod, ClusterMonomial{c, e, prod});  // keep first owner
    });
  }
  MonomialBasis out;
  for (auto& [key, m] : seen) out.monomials.push_back(std::move(m));
  return out;
}

const std::vector<LaurentPoly>& ReexpansionCache::cluster_in(int home,
                                                             int target) {
  auto key = std::make_pair(home, target);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const auto& hc = g_->clusters.at(home);
  const auto& tc = g_->clusters.at(target);
  Seed s = Seed::initial(hc.rep.b);
  for (auto w = hc.rep.walk.rbegin(); w != hc.rep.walk.rend(); ++w)
    s = seed_mutate(s, *w);
  for (int w : tc.rep.walk) s = seed_mutate(s, w);
  return cache_.emplace(key, std::move(s.cluster)).first->second;
}

LaurentPoly monomial_in_cluster(ReexpansionCache& cache,
                                const ClusterMonomial& m, int home) {
  const auto& vars = cache.cluster_in(home, m.cluster);
  LaurentPoly prod = LaurentPoly::one((int)m.exponents.size());
  for (size_t i = 0; i < m.exponents.size(); ++i)
    if (m.exponents[i] > 0) prod = prod * vars[i].pow(m.exponents[i]);
  return prod;
}

AtomicityContext make_atomicity_context(const ExchangeGraph& g, int max_deg) {
  AtomicityContext ctx;
  ctx.graph = &g;
  ctx.basis = enumerate_cluster_monomials(g, max_deg);
  ReexpansionCache cache(g);
  ctx.table.resize(g.clusters.size());
  for (int c = 0; c < (int)g.clusters.size(); ++c)
    for (const auto& m : ctx.basis.monomials)
      ctx.table[c].push_back(monomial_in_cluster(cache, m, c));
  return ctx;
}

LemmaReport check_proper_lemma(const AtomicityContext& ctx) {
  LemmaReport rep;
  for (int c = 0; c < (int)ctx.table.size(); ++c)
    for (size_t mi = 0; mi < ctx.basis.monomials.size(); ++mi) {
      const LaurentPoly& expanded = ctx.table[c][mi];
      if (expanded.is_monomial() &&
          !has_negative_entry(expanded.terms().begin()->first)) {
        ++rep.skipped;  // a monomial in the home cluster's own variables
        continue;
      }
      ++rep.checks;
      LaurentClass cls = lp_classify(expanded);
      if (!cls.is_proper_sum || !cls.is_nonneg)
        rep.witnesses.push_back(
            "cluster " + std::to_string(c) + ", monomial " +
            std::to_string(ctx.basis.monomials[mi].cluster) + ":" +
            join_ints(ctx.basis.monomials[mi].exponents) + " -> " +
            expanded.to_string());
    }
  return rep;
}

LemmaReport check_proper_lemma(const ExchangeGraph& g, int max_deg) {
  return check_proper_lemma(make_atomicity_context(g, max_deg));
}

BasisExpansion expand_in_basis(const LaurentPoly& p, const MonomialBasis& b) {
  BasisExpansion out;
  const int cols = (int)b.monomials.size();
  std::map<Exponent, int> row_of;
  auto touch = [&](const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms()) row_of.emplace(e, (int)row_of.size());
  };
  touch(p);
  for (const auto& m : b.monomials) touch(m.expansion);
  QMat a((int)row_of.size(), cols), rhs((int)row_of.size(), 1);
  for (int j = 0; j < cols; ++j)
    for (const auto& [e, c] : b.monomials[j].expansion.terms())
      a.at(row_of.at(e), j) = mpq_class(c);
  for (const auto& [e, c] : p.terms()) rhs.at(row_of.at(e), 0) = mpq_class(c);
  auto sol = solve(a, rhs);
  out.coeffs.assign(cols, 0);
  if (!sol) {
    out.residual = true;
    return out;
  }
  LaurentPoly check = LaurentPoly::zero(p.rank());
  for (int j = 0; j < cols; ++j) {
    const mpq_class& v = sol->at(j, 0);
    if (v.get_den() != 1) {
      out.residual = true;
      return out;
    }
    out.coeffs[j] = v.get_num();
    if (out.coeffs[j] != 0)
      check = check + LaurentPoly::constant(p.rank(), out.coeffs[j]) *
                          b.monomials[j].expansion;
  }
  out.residual = !(check == p);
  return out;
}

AtomicityResult verify_atomicity(const LaurentPoly& p,
                                 const AtomicityContext& ctx) {
  AtomicityResult res;
  BasisExpansion exp = expand_in_basis(p, ctx.basis);
  if (exp.residual) {
    res.residual = true;
    return res;
  }
  res.coords_nonneg = std::all_of(exp.coeffs.begin(), exp.coeffs.end(),
                                  [](const mpz_class& c) { return c >= 0; });
  res.is_positive = true;
  for (int c = 0; c < (int)ctx.table.size() && res.is_positive; ++c) {
    LaurentPoly in_c = LaurentPoly::zero(p.rank());
    for (size_t j = 0; j < exp.coeffs.size(); ++j)
      if (exp.coeffs[j] != 0)
        in_c = in_c + LaurentPoly::constant(p.rank(), exp.coeffs[j]) *
                          ctx.table[c][j];
    if (!lp_classify(in_c).is_nonneg) res.is_positive = false;
  }
  res.theorem_consistent = (res.is_positive == res.coords_nonneg);
  return res;
}

ProofReport proof_inequalities(const DecoratedRep& dec,
                               const ExchangeMatrix& b) {
  ProofReport rep;
  if (!dec.is_positive()) {
    rep.violations.push_back("decoration is nonzero");
    return rep;
  }
  if (dec.m.is_zero()) {
    rep.violations.push_back("module part is zero");
    return rep;
  }
  const int n = b.size();
  std::vector<int> g = g_vector(dec);
  const std::vector<int>& dim = dec.m.dims;
  auto dot = [](const std::vector<int>& x, const std::vector<int>& y) {
    long long s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += (long long)x[i] * y[i];
    return s;
  };

  std::vector<int> e(n, 0);
  while (true) {
    mpz_class chi = euler_characteristic(dec.m, e);
    if (chi != 0) {
      bool zero_e = std::all_of(e.begin(), e.end(),
                                [](int x) { return x == 0; });
      ++rep.checks;
      if (!zero_e && dot(e, g) >= 0)
        rep.violations.push_back("e.g >= 0 at e = " + join_ints(e));
      std::vector<int> expo(n);
      for (int i = 0; i < n; ++i) {
        long long v = g[i];
        for (int j = 0; j < n; ++j) v += (long long)b.at(i, j) * e[j];
        expo[i] = (int)v;
      }
      if (!has_negative_entry(expo))
        rep.violations.push_back("x^(g+Be) not proper at e = " + join_ints(e));
    }
    int i = 0;
    for (; i < n; ++i) {
      if (++e[i] <= dim[i]) break;
      e[i] = 0;
    }
    if (i == n) break;
  }
  ++rep.checks;
  if (dot(dim, g) != -hom_dim(dec.m, dec.m))
    rep.violations.push_back("dim.g != -dim End(M)");
  ++rep.checks;
  if (!has_negative_entry(g))
    rep.violations.push_back("g-vector has no negative entry");
  return rep;
}

}  // namespace cluster

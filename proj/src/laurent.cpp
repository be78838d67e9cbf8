#include "cluster/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cluster {

namespace {

void check_same_rank(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.rank() != q.rank())
    throw RankMismatch("Laurent polynomial rank mismatch: " +
                       std::to_string(p.rank()) + " vs " +
                       std::to_string(q.rank()));
}

}  // namespace

LaurentPoly::LaurentPoly(int rank, TermMap terms)
    : rank_(rank), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if ((int)it->first.size() != rank_)
      throw RankMismatch("exponent length does not match rank");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

LaurentPoly LaurentPoly::constant(int rank, const mpz_class& c) {
  LaurentPoly p(rank);
  if (c != 0) p.terms_.emplace(Exponent(rank, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const mpz_class& c) {
  LaurentPoly p((int)e.size());
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int rank, int i) {
  Exponent e(rank, 0);
  e.at(i) = 1;
  return monomial(e);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         terms_.begin()->first == Exponent(rank_, 0);
}

bool LaurentPoly::is_unit_monomial() const {
  return terms_.size() == 1 &&
         (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& q) const {
  check_same_rank(*this, q);
  LaurentPoly r = *this;
  for (const auto& [e, c] : q.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& q) const {
  check_same_rank(*this, q);
  LaurentPoly r = *this;
  for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& q) const {
  check_same_rank(*this, q);
  LaurentPoly r(rank_);
  Exponent e(rank_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      for (int i = 0; i < rank_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

bool LaurentPoly::operator<(const LaurentPoly& q) const {
  return std::lexicographical_compare(terms_.begin(), terms_.end(),
                                      q.terms_.begin(), q.terms_.end());
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_unit_monomial())
      throw NegativePowerOfNonUnit("negative power of a non-unit");
    return inv_unit().pow(-k);
  }
  LaurentPoly r = one(rank_);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::inv_unit() const {
  if (!is_unit_monomial())
    throw NegativePowerOfNonUnit("inverse of a non-unit");
  const auto& [e, c] = *terms_.begin();
  Exponent inv(rank_);
  for (int i = 0; i < rank_; ++i) inv[i] = -e[i];
  return monomial(inv, c);  // c is +-1, self-inverse
}

LaurentPoly lp_div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  check_same_rank(p, q);
  if (q.is_zero()) throw InexactDivision("division by zero polynomial");
  if (p.is_zero()) return LaurentPoly::zero(p.rank());
  const int n = p.rank();

  // Shift both operands into the ordinary polynomial ring.
  auto min_exps = [n](const LaurentPoly& f) {
    Exponent m(n, 0);
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
      for (int i = 0; i < n; ++i)
        m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  };
  Exponent sp = min_exps(p), sq = min_exps(q);
  auto shifted = [n](const LaurentPoly& f, const Exponent& s) {
    LaurentPoly::TermMap t;
    for (const auto& [e, c] : f.terms()) {
      Exponent e2(n);
      for (int i = 0; i < n; ++i) e2[i] = e[i] - s[i];
      t.emplace(std::move(e2), c);
    }
    return LaurentPoly(n, std::move(t));
  };
  LaurentPoly rem = shifted(p, sp);
  const LaurentPoly dq = shifted(q, sq);

  // Lex-leading-term division; an exact quotient keeps the leading term
  // of the running remainder divisible by the leading term of q.
  const auto& qlead = *dq.terms().rbegin();
  LaurentPoly quot(n);
  Exponent de(n);
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    mpz_class qc, rc;
    mpz_tdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), rlead.second.get_mpz_t(),
                qlead.second.get_mpz_t());
    if (rc != 0) throw InexactDivision("leading coefficient not divisible");
    for (int i = 0; i < n; ++i) {
      de[i] = rlead.first[i] - qlead.first[i];
      if (de[i] < 0) throw InexactDivision("leading monomial not divisible");
    }
    LaurentPoly t = LaurentPoly::monomial(de, qc);
    quot = quot + t;
    rem = rem - t * dq;
  }
  Exponent back(n);
  for (int i = 0; i < n; ++i) back[i] = sp[i] - sq[i];
  return quot * LaurentPoly::monomial(back);
}

LaurentPoly lp_substitute(const LaurentPoly& p,
                          const std::vector<LaurentPoly>& images) {
  const int n = p.rank();
  if ((int)images.size() != n)
    throw RankMismatch("substitute: wrong number of images");
  int target = n > 0 ? images[0].rank() : 0;
  for (const auto& im : images) {
    if (im.rank() != target) throw RankMismatch("substitute: image ranks differ");
    if (im.is_zero())
      throw NegativePowerOfNonUnit("substitute: zero image");
  }
  LaurentPoly r = LaurentPoly::zero(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (int i = 0; i < n; ++i)
      if (e[i] != 0) term = term * images[i].pow(e[i]);
    r = r + term;
  }
  return r;
}

std::vector<int> lp_denominator_vector(const LaurentPoly& p) {
  if (p.is_zero())
    throw ZeroPolynomial("denominator vector of the zero polynomial");
  const int n = p.rank();
  std::vector<int> d(n, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < n; ++i)
      d[i] = first ? -e[i] : std::max(d[i], -e[i]);
    first = false;
  }
  return d;
}

LaurentClass lp_classify(const LaurentPoly& p) {
  LaurentClass out{true, true};
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) out.is_nonneg = false;
    bool proper = false;
    for (int x : e)
      if (x < 0) { proper = true; break; }
    if (!proper) out.is_proper_sum = false;
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    bool first_var = true;
    for (int i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      if (!first_var) vars << "*";
      first_var = false;
      vars << "x" << (i + 1);
      if (e[i] != 1) vars << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << vars.str();
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(int rank, const std::string& text) {
  LaurentPoly result(rank);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  auto parse_int = [&]() -> long {
    skip_ws();
    size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
    if (i == start || (i == start + 1 && !std::isdigit((unsigned char)text[start])))
      throw ParseError("expected integer at position " + std::to_string(start));
    return std::stol(text.substr(start, i - start));
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty polynomial string");
  bool first_term = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (!first_term) {
      if (text[i] == '+') { ++i; }
      else if (text[i] == '-') { sign = -1; ++i; }
      else throw ParseError("expected '+' or '-' at position " + std::to_string(i));
    } else if (text[i] == '-') {
      sign = -1; ++i;
    } else if (text[i] == '+') {
      ++i;
    }
    first_term = false;
    skip_ws();
    mpz_class coeff = 1;
    bool saw_coeff = false;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      size_t start = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      coeff = mpz_class(text.substr(start, i - start));
      saw_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
    }
    Exponent e(rank, 0);
    bool saw_var = false;
    while (i < text.size() && text[i] == 'x') {
      ++i;
      size_t start = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      if (i == start) throw ParseError("expected variable index");
      int var = std::stoi(text.substr(start, i - start));
      if (var < 1 || var > rank)
        throw ParseError("variable index out of range: x" + std::to_string(var));
      int exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        exp = (int)parse_int();
      }
      e[var - 1] += exp;
      saw_var = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
      else break;
    }
    if (!saw_coeff && !saw_var)
      throw ParseError("malformed term at position " + std::to_string(i));
    result.add_term(e, sign * coeff);
  }
  return result;
}

}  // namespace cluster

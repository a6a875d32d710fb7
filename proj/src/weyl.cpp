#include "gldirac/weyl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gldirac {

namespace {

Rat binom(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

Rat factorial(int n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat falling(int q, int b) {
  Rat r = 1;
  for (int t = 0; t < b; ++t) r *= q - t;
  return r;
}

// Sum over componentwise e <= min(b, c) of prod binom(b_i,e_i) binom(c_i,e_i) e_i!
// times a callback on e.
void contraction_sum(const std::vector<int>& b, const std::vector<int>& c,
                     std::vector<int>& e, std::size_t pos, const Rat& acc,
                     const std::function<void(const std::vector<int>&, const Rat&)>& emit) {
  if (pos == b.size()) {
    emit(e, acc);
    return;
  }
  const int top = std::min(b[pos], c[pos]);
  for (int k = 0; k <= top; ++k) {
    e[pos] = k;
    contraction_sum(b, c, e, pos + 1,
                    acc * binom(b[pos], k) * binom(c[pos], k) * factorial(k), emit);
  }
  e[pos] = 0;
}

}  // namespace

WeylElement WeylElement::scalar(int vars, const Rat& c) {
  WeylElement w(vars);
  w.add_term(std::vector<int>(vars, 0), std::vector<int>(vars, 0), c);
  return w;
}

WeylElement WeylElement::x(int vars, int p) {
  if (p < 1 || p > vars) throw std::out_of_range("WeylElement::x: bad index");
  WeylElement w(vars);
  std::vector<int> xe(vars, 0), de(vars, 0);
  xe[p - 1] = 1;
  w.add_term(xe, de, 1);
  return w;
}

WeylElement WeylElement::del(int vars, int p) {
  if (p < 1 || p > vars) throw std::out_of_range("WeylElement::del: bad index");
  WeylElement w(vars);
  std::vector<int> xe(vars, 0), de(vars, 0);
  de[p - 1] = 1;
  w.add_term(xe, de, 1);
  return w;
}

Rat WeylElement::scalar_part(bool strict) const {
  Rat c = 0;
  for (const auto& [key, v] : terms_) {
    bool constant = true;
    for (int e : key.first)
      if (e) constant = false;
    for (int e : key.second)
      if (e) constant = false;
    if (constant)
      c = v;
    else if (strict)
      throw std::logic_error("WeylElement::scalar_part: non-scalar element");
  }
  return c;
}

void WeylElement::add_term(const std::vector<int>& xe, const std::vector<int>& de,
                           const Rat& c) {
  if (static_cast<int>(xe.size()) != vars_ || static_cast<int>(de.size()) != vars_)
    throw std::invalid_argument("WeylElement::add_term: exponent length");
  if (c == 0) return;
  Key k{xe, de};
  auto [it, inserted] = terms_.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void WeylElement::check_compatible(const WeylElement& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("WeylElement: mixed variable counts");
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  check_compatible(o);
  WeylElement out = *this;
  for (const auto& [k, v] : o.terms_) out.add_term(k.first, k.second, v);
  return out;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  return *this + o.scaled(-1);
}

WeylElement WeylElement::scaled(const Rat& c) const {
  WeylElement out(vars_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_[k] = c * v;
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  // (x^a del^b)(x^c del^d): commute del^b past x^c, contracting e pairs.
  check_compatible(o);
  WeylElement out(vars_);
  for (const auto& [k1, v1] : terms_)
    for (const auto& [k2, v2] : o.terms_) {
      const auto& [a, b] = k1;
      const auto& [c, d] = k2;
      std::vector<int> e(vars_, 0);
      contraction_sum(b, c, e, 0, v1 * v2,
                      [&](const std::vector<int>& ee, const Rat& coeff) {
                        std::vector<int> xe(vars_), de(vars_);
                        for (int i = 0; i < vars_; ++i) {
                          xe[i] = a[i] + c[i] - ee[i];
                          de[i] = b[i] + d[i] - ee[i];
                        }
                        out.add_term(xe, de, coeff);
                      });
    }
  return out;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [xe, de] = it->first;
    Rat c = it->second;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::ostringstream mono;
    for (int i = 0; i < vars_; ++i)
      if (xe[i]) {
        mono << "*x" << i + 1;
        if (xe[i] > 1) mono << '^' << xe[i];
      }
    for (int i = 0; i < vars_; ++i)
      if (de[i]) {
        mono << "*d" << i + 1;
        if (de[i] > 1) mono << '^' << de[i];
      }
    os << rat_str(c) << mono.str();
  }
  return os.str();
}

WeylElement sigma(const WeylElement& u, const WeylElement& v) {
  return (u * v + v * u).scaled(frac(1, 2));
}

RatMatrix sp_gram(int vars) {
  RatMatrix j(2 * vars, 2 * vars);
  for (int i = 0; i < vars; ++i) {
    j.set(i, vars + i, frac(1, 2));
    j.set(vars + i, i, frac(-1, 2));
  }
  return j;
}

RatMatrix sp_matrix(const WeylElement& w) {
  const int nv = w.vars();
  RatMatrix mat(2 * nv, 2 * nv);
  Rat constant = 0, forced = 0;
  for (const auto& [key, c] : w.terms()) {
    const auto& [xe, de] = key;
    int xdeg = 0, ddeg = 0;
    for (int e : xe) xdeg += e;
    for (int e : de) ddeg += e;
    std::vector<int> xs, ds;
    for (int i = 0; i < nv; ++i) {
      for (int t = 0; t < xe[i]; ++t) xs.push_back(i);
      for (int t = 0; t < de[i]; ++t) ds.push_back(i);
    }
    if (xdeg == 0 && ddeg == 0) {
      constant = c;
    } else if (xdeg == 2 && ddeg == 0) {
      const int i = xs[0], j = xs[1];
      mat.add_to(nv + i, j, -c);
      mat.add_to(nv + j, i, -c);
    } else if (xdeg == 0 && ddeg == 2) {
      const int i = ds[0], j = ds[1];
      mat.add_to(i, nv + j, c);
      mat.add_to(j, nv + i, c);
    } else if (xdeg == 1 && ddeg == 1) {
      const int j = xs[0], i = ds[0];  // c * x_j del_i
      mat.add_to(i, j, -c);
      mat.add_to(nv + j, nv + i, c);
      if (i == j) forced += c / 2;
    } else {
      throw std::invalid_argument("sp_matrix: term of degree other than 0 or 2");
    }
  }
  if (constant != forced)
    throw std::invalid_argument(
        "sp_matrix: constant term does not match the symmetrized quadratic span");
  return mat;
}

WeylElement alpha1(const AlgebraContext& g, const SuperElement& xeven) {
  if (g.parity(xeven) != 0) throw std::invalid_argument("alpha1: element not even");
  const int nv = g.odd_dim();
  WeylElement out(nv);
  for (int i = 1; i <= nv; ++i)
    for (int j = 1; j <= nv; ++j) {
      SuperElement br = g.bracket(g.x_id(i), g.del_id(j));
      Rat coeff = -2 * g.form(xeven, br);
      if (coeff == 0) continue;
      std::vector<int> xe(nv, 0), de(nv, 0);
      xe[j - 1] = 1;
      de[i - 1] = 1;
      out.add_term(xe, de, coeff);
    }
  return out;
}

Rat alpha2(const AlgebraContext& g, const SuperElement& xeven) {
  if (g.parity(xeven) != 0) throw std::invalid_argument("alpha2: element not even");
  SuperElement sum;
  for (int i = 1; i <= g.odd_dim(); ++i)
    sum += g.bracket(g.del_id(i), g.x_id(i));
  return -g.form(xeven, sum);
}

WeylElement alpha(const AlgebraContext& g, const SuperElement& xeven) {
  WeylElement a = alpha1(g, xeven);
  Rat c = alpha2(g, xeven);
  if (c != 0) a = a + WeylElement::scalar(g.odd_dim(), c);
  return a;
}

Rat casimir_constant(const AlgebraContext& g) {
  const int nv = g.odd_dim();
  WeylElement c(nv);
  for (int id : g.g0_ids()) {
    Rat coeff;
    const int dualId = g.dual_even_id(id, &coeff);
    SuperElement w, wd;
    w.add(id, 1);
    wd.add(dualId, coeff);
    c = c + alpha(g, w) * alpha(g, wd);
  }
  return c.scalar_part(/*strict=*/true);
}

Rat casimir_constant_trace(const AlgebraContext& g) {
  // Matrix of ad on the odd part, basis (del_1..del_N, x_1..x_N).
  const int nv = g.odd_dim();
  std::vector<int> oddIds;
  for (int p = 1; p <= nv; ++p) oddIds.push_back(g.del_id(p));
  for (int p = 1; p <= nv; ++p) oddIds.push_back(g.x_id(p));
  std::map<int, int> pos;
  for (int i = 0; i < 2 * nv; ++i) pos[oddIds[i]] = i;
  auto ad = [&](int id) {
    RatMatrix a(2 * nv, 2 * nv);
    for (int c = 0; c < 2 * nv; ++c)
      for (const auto& [rid, v] : g.bracket(id, oddIds[c]).c) a.set(pos.at(rid), c, v);
    return a;
  };
  RatMatrix total(2 * nv, 2 * nv);
  for (const CasimirTerm& t : g.casimir_even_terms())
    total = total + (ad(t.left) * ad(t.right)).scaled(t.coeff);
  // Supertrace: every vector of the odd part carries parity one.
  return -total.trace() / 8;
}

PolyVec weil_apply(const WeylElement& w, const PolyVec& f) {
  PolyVec out;
  const int nv = w.vars();
  for (const auto& [key, c] : w.terms()) {
    const auto& [a, b] = key;
    for (const auto& [q, fq] : f) {
      if (static_cast<int>(q.size()) != nv)
        throw std::invalid_argument("weil_apply: exponent length mismatch");
      Rat coeff = c * fq;
      std::vector<int> r(nv);
      bool dead = false;
      for (int i = 0; i < nv && !dead; ++i) {
        if (q[i] < b[i]) {
          dead = true;
          break;
        }
        coeff *= falling(q[i], b[i]);
        r[i] = q[i] - b[i] + a[i];
      }
      if (dead || coeff == 0) continue;
      auto [it, inserted] = out.try_emplace(r, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Rat weil_form(int vars, const PolyVec& f, const PolyVec& g) {
  Rat s = 0;
  for (const auto& [q, fq] : f) {
    if (static_cast<int>(q.size()) != vars)
      throw std::invalid_argument("weil_form: exponent length mismatch");
    auto it = g.find(q);
    if (it == g.end()) continue;
    Rat prod = fq * it->second;
    for (int e : q) prod *= factorial(e);
    s += prod;
  }
  return s;
}

namespace {
void gen_monomials(int vars, int deg, std::vector<int>& cur, std::size_t pos,
                   std::vector<std::vector<int>>& out) {
  if (pos + 1 == static_cast<std::size_t>(vars)) {
    cur[pos] = deg;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= deg; ++e) {
    cur[pos] = e;
    gen_monomials(vars, deg - e, cur, pos + 1, out);
  }
}
}  // namespace

WeilSlice weil_slice(int vars, int degree) {
  if (vars < 1 || degree < 0) throw std::invalid_argument("weil_slice: bad shape");
  WeilSlice s;
  s.vars = vars;
  s.degree = degree;
  std::vector<int> cur(vars, 0);
  gen_monomials(vars, degree, cur, 0, s.monomials);
  for (int i = 0; i < s.dim(); ++i) s.index[s.monomials[i]] = i;
  return s;
}

RatMatrix weil_matrix(const WeylElement& w, const WeilSlice& from, const WeilSlice& to) {
  if (w.vars() != from.vars || from.vars != to.vars)
    throw std::invalid_argument("weil_matrix: variable count mismatch");
  RatMatrix m(to.dim(), from.dim());
  for (int c = 0; c < from.dim(); ++c) {
    PolyVec img = weil_apply(w, PolyVec{{from.monomials[c], Rat(1)}});
    for (const auto& [q, v] : img) {
      auto it = to.index.find(q);
      if (it == to.index.end())
        throw std::invalid_argument("weil_matrix: image leaves the target degree");
      m.set(it->second, c, v);
    }
  }
  return m;
}

}  // namespace gldirac

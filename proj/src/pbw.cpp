#include "gldirac/pbw.hpp"

#include <sstream>
#include <stdexcept>

namespace gldirac {

PbwOrder::PbwOrder(const AlgebraContext& g) {
  for (int id : g.gminus_ids()) id_of_pos_.push_back(id);
  for (int id : g.cartan_ids()) id_of_pos_.push_back(id);
  std::vector<int> offdiag;
  for (int id : g.g0_ids()) {
    auto [k, l] = g.unit_of(id);
    if (k != l) offdiag.push_back(id);
  }
  for (int id : offdiag) id_of_pos_.push_back(id);
  for (int id : g.gplus_ids()) id_of_pos_.push_back(id);

  pos_of_id_.assign(g.dim(), -1);
  for (int p = 0; p < count(); ++p) {
    pos_of_id_[id_of_pos_[p]] = p;
    parity_of_pos_.push_back(g.parity_id(id_of_pos_[p]));
  }
}

int PbwOrder::pos(int id) const {
  const int p = pos_of_id_.at(id);
  if (p < 0) throw std::invalid_argument("PbwOrder::pos: id has no position");
  return p;
}

TensorElement TensorElement::one(int vars) {
  TensorElement t(vars);
  t.add_term({}, {std::vector<int>(vars, 0), std::vector<int>(vars, 0)}, 1);
  return t;
}

void TensorElement::add_term(const UWord& u, const WeylElement::Key& w, const Rat& c) {
  if (c == 0) return;
  Key k{u, w};
  auto [it, inserted] = terms_.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("TensorElement: mixed vars");
  TensorElement out = *this;
  for (const auto& [k, v] : o.terms_) out.add_term(k.first, k.second, v);
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  return *this + o.scaled(-1);
}

TensorElement TensorElement::scaled(const Rat& c) const {
  TensorElement out(vars_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_[k] = c * v;
  return out;
}

namespace {

std::string word_str(const AlgebraContext& g, const PbwOrder& order, const UWord& u) {
  if (u.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : u) {
    if (!first) os << '*';
    first = false;
    auto [k, l] = g.unit_of(order.id_at(p));
    os << "E(" << k << ',' << l << ')';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::string weyl_key_str(const WeylElement::Key& key) {
  const auto& [xe, de] = key;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < xe.size(); ++i)
    if (xe[i]) {
      if (!first) os << '*';
      first = false;
      os << 'x' << i + 1;
      if (xe[i] > 1) os << '^' << xe[i];
    }
  for (std::size_t i = 0; i < de.size(); ++i)
    if (de[i]) {
      if (!first) os << '*';
      first = false;
      os << 'd' << i + 1;
      if (de[i] > 1) os << '^' << de[i];
    }
  if (first) return "1";
  return os.str();
}

}  // namespace

std::vector<std::string> TensorElement::term_strings(const AlgebraContext& g,
                                                     const PbwOrder& order) const {
  std::vector<std::string> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::ostringstream os;
    os << rat_str(it->second) << '*' << word_str(g, order, it->first.first) << " (x) "
       << weyl_key_str(it->first.second);
    out.push_back(os.str());
  }
  return out;
}

std::string TensorElement::str(const AlgebraContext& g, const PbwOrder& order) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const std::string& t : term_strings(g, order)) {
    if (first)
      os << t;
    else if (t[0] == '-')
      os << " - " << t.substr(1);
    else
      os << " + " << t;
    first = false;
  }
  return os.str();
}

namespace {

// Straighten a fully expanded generator sequence into PBW words.
// seq holds positions; out accumulates position->exponent words.
void straighten(const AlgebraContext& g, const PbwOrder& order, std::vector<int> seq,
                Rat coeff, std::map<UWord, Rat>& out) {
  // Find the first adjacent violation.
  std::size_t i = 0;
  bool clean = true;
  for (; i + 1 < seq.size(); ++i) {
    if (seq[i] > seq[i + 1] ||
        (seq[i] == seq[i + 1] && order.parity_at(seq[i]) == 1)) {
      clean = false;
      break;
    }
  }
  if (clean) {
    UWord w;
    for (int p : seq) {
      if (!w.empty() && w.back().first == p)
        w.back().second += 1;
      else
        w.emplace_back(p, 1);
    }
    auto [it, inserted] = out.try_emplace(std::move(w), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) out.erase(it);
    }
    return;
  }

  const int u = seq[i], v = seq[i + 1];
  if (u == v) return;  // equal odd generators: e e = (1/2)[e,e] = 0 here

  // u v = (-1)^{|u||v|} v u + [u, v]
  const int sgn = (order.parity_at(u) && order.parity_at(v)) ? -1 : 1;
  std::vector<int> swapped = seq;
  std::swap(swapped[i], swapped[i + 1]);
  straighten(g, order, std::move(swapped), coeff * sgn, out);

  SuperElement br = g.bracket(order.id_at(u), order.id_at(v));
  for (const auto& [id, c] : br.c) {
    std::vector<int> replaced;
    replaced.reserve(seq.size() - 1);
    for (std::size_t t = 0; t < seq.size(); ++t) {
      if (t == i) {
        replaced.push_back(order.pos(id));
        ++t;  // skip v
      } else {
        replaced.push_back(seq[t]);
      }
    }
    straighten(g, order, std::move(replaced), coeff * c, out);
  }
}

std::vector<int> expand_word(const UWord& u) {
  std::vector<int> seq;
  for (const auto& [p, e] : u)
    for (int t = 0; t < e; ++t) seq.push_back(p);
  return seq;
}

}  // namespace

TensorElement u_gen(const AlgebraContext& g, const PbwOrder& order, int basisId) {
  TensorElement t(g.odd_dim());
  const int nv = g.odd_dim();
  t.add_term({{order.pos(basisId), 1}},
             {std::vector<int>(nv, 0), std::vector<int>(nv, 0)}, 1);
  return t;
}

TensorElement w_factor(const AlgebraContext& g, const WeylElement& w) {
  if (w.vars() != g.odd_dim())
    throw std::invalid_argument("w_factor: variable count mismatch");
  TensorElement t(g.odd_dim());
  for (const auto& [k, v] : w.terms()) t.add_term({}, k, v);
  return t;
}

TensorElement pbw_mul(const AlgebraContext& g, const PbwOrder& order,
                      const TensorElement& a, const TensorElement& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("pbw_mul: mixed vars");
  const int nv = a.vars();
  TensorElement out(nv);
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms()) {
      // Enveloping side: concatenate and straighten.
      std::vector<int> seq = expand_word(ka.first);
      const std::vector<int> tail = expand_word(kb.first);
      seq.insert(seq.end(), tail.begin(), tail.end());
      std::map<UWord, Rat> words;
      straighten(g, order, std::move(seq), va * vb, words);
      if (words.empty()) continue;
      // Weyl side: normal-ordered product of the two monomials.
      WeylElement wa(nv), wb(nv);
      wa.add_term(ka.second.first, ka.second.second, 1);
      wb.add_term(kb.second.first, kb.second.second, 1);
      WeylElement wprod = wa * wb;
      for (const auto& [uw, uc] : words)
        for (const auto& [wk, wc] : wprod.terms()) out.add_term(uw, wk, uc * wc);
    }
  return out;
}

TensorElement pbw_commutator(const AlgebraContext& g, const PbwOrder& order,
                             const TensorElement& a, const TensorElement& b) {
  return pbw_mul(g, order, a, b) - pbw_mul(g, order, b, a);
}

TensorElement diagonal_embed(const AlgebraContext& g, const PbwOrder& order,
                             const SuperElement& x) {
  if (g.parity(x) != 0)
    throw std::invalid_argument("diagonal_embed: element not even");
  TensorElement t(g.odd_dim());
  const int nv = g.odd_dim();
  for (const auto& [id, c] : x.c)
    t.add_term({{order.pos(id), 1}}, {std::vector<int>(nv, 0), std::vector<int>(nv, 0)}, c);
  return t + w_factor(g, alpha(g, x));
}

TensorElement dirac_element(const AlgebraContext& g, const PbwOrder& order) {
  TensorElement d(g.odd_dim());
  for (int p = 1; p <= g.odd_dim(); ++p) {
    TensorElement up = u_gen(g, order, g.del_id(p));
    TensorElement xp = u_gen(g, order, g.x_id(p));
    d = d + pbw_mul(g, order, up, w_factor(g, WeylElement::x(g.odd_dim(), p))).scaled(2);
    d = d - pbw_mul(g, order, xp, w_factor(g, WeylElement::del(g.odd_dim(), p))).scaled(2);
  }
  return d;
}

TensorElement omega_g(const AlgebraContext& g, const PbwOrder& order) {
  TensorElement omega(g.odd_dim());
  for (const CasimirTerm& t : g.casimir_terms()) {
    TensorElement prod =
        pbw_mul(g, order, u_gen(g, order, t.left), u_gen(g, order, t.right));
    omega = omega + prod.scaled(t.coeff);
  }
  return omega;
}

TensorElement omega_g0_delta(const AlgebraContext& g, const PbwOrder& order) {
  TensorElement omega(g.odd_dim());
  for (const CasimirTerm& t : g.casimir_even_terms()) {
    SuperElement l, r;
    l.add(t.left, 1);
    r.add(t.right, t.coeff);
    omega = omega + pbw_mul(g, order, diagonal_embed(g, order, l),
                            diagonal_embed(g, order, r));
  }
  return omega;
}

D2Report verify_d_squared(const AlgebraContext& g) {
  PbwOrder order(g);
  D2Report rep;
  TensorElement d = dirac_element(g, order);
  rep.lhs = pbw_mul(g, order, d, d);
  rep.c_constant = casimir_constant(g);
  rep.rhs = omega_g0_delta(g, order) - omega_g(g, order) -
            TensorElement::one(g.odd_dim()).scaled(rep.c_constant);
  rep.difference = rep.lhs - rep.rhs;
  rep.equal = rep.difference.is_zero();
  return rep;
}

}  // namespace gldirac

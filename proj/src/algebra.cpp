#include "gldirac/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace gldirac {

Weight Weight::operator+(const Weight& o) const {
  if (e.size() != o.e.size()) throw std::invalid_argument("Weight: length mismatch");
  Weight w = *this;
  for (std::size_t i = 0; i < e.size(); ++i) w.e[i] += o.e[i];
  return w;
}

Weight Weight::operator-(const Weight& o) const {
  if (e.size() != o.e.size()) throw std::invalid_argument("Weight: length mismatch");
  Weight w = *this;
  for (std::size_t i = 0; i < e.size(); ++i) w.e[i] -= o.e[i];
  return w;
}

bool Weight::is_zero() const {
  for (const Rat& v : e)
    if (v != 0) return false;
  return true;
}

std::string weight_str(const Weight& w, int m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.e.size(); ++i) {
    if (i) os << (static_cast<int>(i) == m ? "|" : ",");
    os << rat_str(w.e[i]);
  }
  os << ')';
  return os.str();
}

void SuperElement::add(int id, const Rat& v) {
  if (v == 0) return;
  auto [it, inserted] = c.try_emplace(id, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  for (const auto& [id, v] : o.c) add(id, v);
  return *this;
}

SuperElement SuperElement::scaled(const Rat& v) const {
  SuperElement out;
  if (v == 0) return out;
  for (const auto& [id, w] : c) out.c[id] = v * w;
  return out;
}

AlgebraContext::AlgebraContext(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("AlgebraContext: need m,n >= 1");
  for (int k = 1; k <= size(); ++k) cartan_.push_back(unit_id(k, k));
  for (int k = 1; k <= size(); ++k)
    for (int l = 1; l <= size(); ++l) {
      const int id = unit_id(k, l);
      if (is_even_id(id)) {
        g0_.push_back(id);
        if (k < l) raising_.push_back(id);
        if (k > l) lowering_.push_back(id);
      }
    }
  for (int p = 1; p <= odd_dim(); ++p) {
    gplus_.push_back(del_id(p));
    gminus_.push_back(x_id(p));
  }
}

int AlgebraContext::unit_id(int k, int l) const {
  if (k < 1 || k > size() || l < 1 || l > size())
    throw std::out_of_range("unit_id: index outside 1..m+n");
  return (k - 1) * size() + (l - 1);
}

std::pair<int, int> AlgebraContext::unit_of(int id) const {
  if (id < 0 || id >= dim()) throw std::out_of_range("unit_of: bad id");
  return {id / size() + 1, id % size() + 1};
}

int AlgebraContext::parity_id(int id) const {
  auto [k, l] = unit_of(id);
  return ((k <= m_) == (l <= m_)) ? 0 : 1;
}

int AlgebraContext::flat(int i, int k) const {
  if (i < 1 || i > m_ || k <= m_ || k > size())
    throw std::out_of_range("flat: need i <= m < k");
  return (i - 1) * n_ + (k - m_);
}

std::pair<int, int> AlgebraContext::flat_of(int p) const {
  if (p < 1 || p > odd_dim()) throw std::out_of_range("flat_of: bad index");
  return {(p - 1) / n_ + 1, m_ + 1 + (p - 1) % n_};
}

int AlgebraContext::del_id(int p) const {
  auto [i, k] = flat_of(p);
  return unit_id(i, k);
}

int AlgebraContext::x_id(int p) const {
  auto [i, k] = flat_of(p);
  return unit_id(k, i);
}

SuperElement AlgebraContext::bracket(int a, int b) const {
  // [E_{kl}, E_{qr}] = d_{lq} E_{kr} - (-1)^{|a||b|} d_{rk} E_{ql}
  auto [k, l] = unit_of(a);
  auto [q, r] = unit_of(b);
  const int sgn = (parity_id(a) && parity_id(b)) ? -1 : 1;
  SuperElement out;
  if (l == q) out.add(unit_id(k, r), 1);
  if (r == k) out.add(unit_id(q, l), -sgn);
  return out;
}

SuperElement AlgebraContext::bracket(const SuperElement& x, const SuperElement& y) const {
  SuperElement out;
  for (const auto& [a, va] : x.c)
    for (const auto& [b, vb] : y.c) out += bracket(a, b).scaled(va * vb);
  return out;
}

int AlgebraContext::parity(const SuperElement& x) const {
  int p = -1;
  for (const auto& [id, v] : x.c) {
    const int q = parity_id(id);
    if (p < 0) p = q;
    if (p != q) throw std::invalid_argument("parity: mixed-parity element");
  }
  return p < 0 ? 0 : p;
}

Rat AlgebraContext::supertrace_product(int a, int b) const {
  // E_{kl} E_{qr} = d_{lq} E_{kr}; str E_{kr} = d_{kr} s_k.
  auto [k, l] = unit_of(a);
  auto [q, r] = unit_of(b);
  if (l != q || k != r) return 0;
  return row_sign(k);
}

Rat AlgebraContext::form(int a, int b) const { return Rat(supertrace_product(a, b)) / 2; }

Rat AlgebraContext::form(const SuperElement& x, const SuperElement& y) const {
  Rat out = 0;
  for (const auto& [a, va] : x.c)
    for (const auto& [b, vb] : y.c) {
      Rat f = form(a, b);
      if (f != 0) out += va * vb * f;
    }
  return out;
}

int AlgebraContext::dual_even_id(int id, Rat* coeff) const {
  if (!is_even_id(id)) throw std::invalid_argument("dual_even_id: odd element");
  auto [k, l] = unit_of(id);
  if (coeff) *coeff = 2 * row_sign(k);
  return unit_id(l, k);
}

std::vector<CasimirTerm> AlgebraContext::casimir_even_terms() const {
  std::vector<CasimirTerm> terms;
  for (int id : g0_) {
    Rat coeff;
    const int dualId = dual_even_id(id, &coeff);
    terms.push_back({coeff, id, dualId});
  }
  return terms;
}

std::vector<CasimirTerm> AlgebraContext::casimir_terms() const {
  std::vector<CasimirTerm> terms = casimir_even_terms();
  for (int p = 1; p <= odd_dim(); ++p) {
    terms.push_back({Rat(2), x_id(p), del_id(p)});
    terms.push_back({Rat(-2), del_id(p), x_id(p)});
  }
  return terms;
}

Weight AlgebraContext::root_of(int id) const {
  auto [k, l] = unit_of(id);
  Weight w = Weight::zero(size());
  if (k != l) {
    w.e[k - 1] = 1;
    w.e[l - 1] = -1;
  }
  return w;
}

Weight AlgebraContext::beta(int p) const { return root_of(del_id(p)); }

Weight AlgebraContext::rho1() const {
  Weight w = Weight::zero(size());
  for (int k = 1; k <= size(); ++k) w.e[k - 1] = k <= m_ ? frac(n_, 2) : frac(-m_, 2);
  return w;
}

Weight AlgebraContext::weight_of_cartan_dual(int k) const {
  Weight w = Weight::zero(size());
  w.e[k - 1] = 1;
  return w;
}

}  // namespace gldirac

// The Lie superalgebra gl(m|n) in its matrix-unit basis: parity, super
// bracket, supertrace form, dual bases, Casimir term list, root data.
// Basis elements are identified by dense integer ids; linear combinations
// are sparse id->coefficient maps.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gldirac/rational.hpp"

namespace gldirac {

// A vector in the dual of the diagonal Cartan, coordinates against e_1..e_{m+n}.
struct Weight {
  std::vector<Rat> e;

  bool operator==(const Weight& o) const { return e == o.e; }
  bool operator!=(const Weight& o) const { return e != o.e; }
  bool operator<(const Weight& o) const { return e < o.e; }
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool is_zero() const;
  static Weight zero(int len) { return Weight{std::vector<Rat>(len, Rat(0))}; }
};

// "(a_1,...,a_m|a_{m+1},...,a_{m+n})" with exact fractions.
std::string weight_str(const Weight& w, int m);

// Sparse element of gl(m|n): basis id -> coefficient.
struct SuperElement {
  std::map<int, Rat> c;

  void add(int id, const Rat& v);
  SuperElement& operator+=(const SuperElement& o);
  SuperElement scaled(const Rat& v) const;
  bool is_zero() const { return c.empty(); }
  bool operator==(const SuperElement& o) const { return c == o.c; }
};

// One summand of the quadratic Casimir: coeff * E_left * E_right.
struct CasimirTerm {
  Rat coeff;
  int left;
  int right;
};

class AlgebraContext {
 public:
  AlgebraContext(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + n_; }     // matrix side m+n
  int dim() const { return size() * size(); }
  int odd_dim() const { return m_ * n_; }  // rank of g_+ and of g_-

  // Matrix units, 1-based indices.
  int unit_id(int k, int l) const;
  std::pair<int, int> unit_of(int id) const;
  int parity_id(int id) const;  // 0 even, 1 odd
  bool is_even_id(int id) const { return parity_id(id) == 0; }
  int row_sign(int k) const { return k <= m_ ? 1 : -1; }

  // Flattened odd coordinates p = 1..m*n: p <-> (i,k), i <= m < k.
  int flat(int i, int k) const;
  std::pair<int, int> flat_of(int p) const;
  int del_id(int p) const;  // E_{ik}: raises, spans g_+
  int x_id(int p) const;    // E_{ki}: lowers, spans g_-

  const std::vector<int>& g0_ids() const { return g0_; }
  const std::vector<int>& gplus_ids() const { return gplus_; }
  const std::vector<int>& gminus_ids() const { return gminus_; }
  const std::vector<int>& cartan_ids() const { return cartan_; }
  const std::vector<int>& even_raising_ids() const { return raising_; }
  const std::vector<int>& even_lowering_ids() const { return lowering_; }

  SuperElement bracket(int a, int b) const;
  SuperElement bracket(const SuperElement& x, const SuperElement& y) const;
  int parity(const SuperElement& x) const;  // throws on mixed parity

  Rat supertrace_product(int a, int b) const;  // str(E_a E_b)
  Rat form(int a, int b) const;                // B = (1/2) str
  Rat form(const SuperElement& x, const SuperElement& y) const;

  // B-dual of an even basis element: dual(E_{kl}) = 2 s_k E_{lk}.
  int dual_even_id(int id, Rat* coeff) const;

  // Omega_g = sum over g_0 of W W^dual + 2 sum_p (x_p del_p - del_p x_p).
  std::vector<CasimirTerm> casimir_terms() const;
  // The g_0 Casimir alone (the even part of the list above).
  std::vector<CasimirTerm> casimir_even_terms() const;

  Weight root_of(int id) const;       // e_k - e_l, zero on the diagonal
  Weight beta(int p) const;           // root of del_p
  Weight rho1() const;                // half sum of the roots of g_+
  Weight weight_of_cartan_dual(int k) const;  // e_k itself

 private:
  int m_, n_;
  std::vector<int> g0_, gplus_, gminus_, cartan_, raising_, lowering_;
};

}  // namespace gldirac

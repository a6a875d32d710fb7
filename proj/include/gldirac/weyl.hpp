// The Weyl algebra W on m*n symplectic pairs (x_p, del_p), its action on the
// polynomial module, the symmetrization map into sp(2mn), and the map alpha
// from the even part of gl(m|n) into degree <= 2 Weyl elements together with
// the scalar it generates.
//
// Elements are kept in normal order, x powers left of del powers; a term is
// (a, b) -> coeff for the monomial x^a del^b.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gldirac/algebra.hpp"
#include "gldirac/matrix.hpp"

namespace gldirac {

class WeylElement {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;  // (x exps, del exps)

  explicit WeylElement(int vars = 0) : vars_(vars) {}

  static WeylElement scalar(int vars, const Rat& c);
  static WeylElement x(int vars, int p);    // 1-based
  static WeylElement del(int vars, int p);  // 1-based

  int vars() const { return vars_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // The constant coefficient; whole element must be scalar if `strict`.
  Rat scalar_part(bool strict = false) const;

  void add_term(const std::vector<int>& xe, const std::vector<int>& de, const Rat& c);
  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator*(const WeylElement& o) const;  // normal-ordering product
  WeylElement scaled(const Rat& c) const;
  bool operator==(const WeylElement& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  // Descending lexicographic term order, exact fraction coefficients, e.g.
  // "-1*x1*d1 - 1/2"; the zero element prints "0".
  std::string str() const;

 private:
  int vars_;
  std::map<Key, Rat> terms_;
  void check_compatible(const WeylElement& o) const;
};

// (1/2)(uv + vu).
WeylElement sigma(const WeylElement& u, const WeylElement& v);

// Matrix of a symmetrized quadratic element on span(del_1..del_N, x_1..x_N),
// the eigenvector convention being commutator action.  Throws
// std::invalid_argument unless the element lies in the symmetrized quadratic
// span (degree two terms plus the forced constant).
RatMatrix sp_matrix(const WeylElement& w);

// The symplectic Gram on that basis: J(del_i, x_j) = (1/2) delta_ij.
RatMatrix sp_gram(int vars);

// alpha = alpha1 + alpha2 on the even part; input must be even.
WeylElement alpha(const AlgebraContext& g, const SuperElement& xeven);
WeylElement alpha1(const AlgebraContext& g, const SuperElement& xeven);
Rat alpha2(const AlgebraContext& g, const SuperElement& xeven);

// C = sum over a dual pair basis of g_0 of alpha(W) alpha(W^dual).  Validated
// to be scalar; throws std::logic_error otherwise.
Rat casimir_constant(const AlgebraContext& g);
// The same number as (1/8) str of the g_0 Casimir acting on the odd part;
// the supertrace is forced because the odd part is purely odd, and the two
// routes are cross-checked in the test suite.
Rat casimir_constant_trace(const AlgebraContext& g);

// Polynomials C[x_1..x_N] as exponent -> coefficient maps.
using PolyVec = std::map<std::vector<int>, Rat>;

PolyVec weil_apply(const WeylElement& w, const PolyVec& f);
// <x^p, x^q> = delta_pq prod_k p_k!
Rat weil_form(int vars, const PolyVec& f, const PolyVec& g);

// Degree slice of the polynomial module: monomial exponent vectors in
// ascending lexicographic order, with index lookup.
struct WeilSlice {
  int vars = 0;
  int degree = 0;
  std::vector<std::vector<int>> monomials;
  std::map<std::vector<int>, int> index;

  int dim() const { return static_cast<int>(monomials.size()); }
};

WeilSlice weil_slice(int vars, int degree);

// Matrix of w mapping `from` into `to`; throws if the image leaves the target
// degree.
RatMatrix weil_matrix(const WeylElement& w, const WeilSlice& from, const WeilSlice& to);

}  // namespace gldirac

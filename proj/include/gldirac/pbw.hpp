// U(gl(m|n)) tensor the Weyl algebra, with exact PBW straightening.  Words in
// the enveloping factor are kept in the fixed generator order
//   lowering odd (by flat index), diagonal, even off-diagonal (by id),
//   raising odd (by flat index),
// odd generators with exponent one.  A tensor element is a finite sum
// coeff * (PBW word) (x) (normal-ordered Weyl monomial).
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gldirac/weyl.hpp"

namespace gldirac {

class PbwOrder {
 public:
  explicit PbwOrder(const AlgebraContext& g);
  int count() const { return static_cast<int>(id_of_pos_.size()); }
  int pos(int id) const;
  int id_at(int p) const { return id_of_pos_.at(p); }
  int parity_at(int p) const { return parity_of_pos_.at(p); }

 private:
  std::vector<int> id_of_pos_;
  std::vector<int> pos_of_id_;
  std::vector<int> parity_of_pos_;
};

// (position, exponent) with positions strictly increasing, exponents >= 1,
// odd positions with exponent exactly 1.
using UWord = std::vector<std::pair<int, int>>;

class TensorElement {
 public:
  using Key = std::pair<UWord, WeylElement::Key>;

  explicit TensorElement(int vars = 0) : vars_(vars) {}
  static TensorElement one(int vars);

  int vars() const { return vars_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  void add_term(const UWord& u, const WeylElement::Key& w, const Rat& c);
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement scaled(const Rat& c) const;
  bool operator==(const TensorElement& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

  // "-4*E(2,1)*E(1,2) (x) 1" style, descending term order; "0" when empty.
  std::string str(const AlgebraContext& g, const PbwOrder& order) const;
  // Individual rendered terms in the same order (for reports).
  std::vector<std::string> term_strings(const AlgebraContext& g, const PbwOrder& order) const;

 private:
  int vars_;
  std::map<Key, Rat> terms_;
};

// Generators: a single enveloping basis element, or a pure Weyl factor.
TensorElement u_gen(const AlgebraContext& g, const PbwOrder& order, int basisId);
TensorElement w_factor(const AlgebraContext& g, const WeylElement& w);

// Product with straightening of the enveloping factor; the Weyl factor is
// even, so no sign crosses the tensor symbol.
TensorElement pbw_mul(const AlgebraContext& g, const PbwOrder& order,
                      const TensorElement& a, const TensorElement& b);
TensorElement pbw_commutator(const AlgebraContext& g, const PbwOrder& order,
                             const TensorElement& a, const TensorElement& b);

// X (x) 1 + 1 (x) alpha(X) for even X; throws std::invalid_argument otherwise.
TensorElement diagonal_embed(const AlgebraContext& g, const PbwOrder& order,
                             const SuperElement& x);

TensorElement dirac_element(const AlgebraContext& g, const PbwOrder& order);
TensorElement omega_g(const AlgebraContext& g, const PbwOrder& order);       // Omega (x) 1
TensorElement omega_g0_delta(const AlgebraContext& g, const PbwOrder& order);

struct D2Report {
  TensorElement lhs;        // D^2
  TensorElement rhs;        // -Omega_g (x) 1 + Omega_{g0 Delta} - C
  TensorElement difference; // lhs - rhs
  Rat c_constant;
  bool equal = false;
};

D2Report verify_d_squared(const AlgebraContext& g);

}  // namespace gldirac

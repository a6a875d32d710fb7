// Exact linear algebra over Q.  Two elimination engines:
//  - fraction-free Bareiss on denominator-cleared integer rows (rank, kernel,
//    determinant, canonical echelon), deterministic pivoting by minimal bit
//    length with smallest-index tie break;
//  - plain rational Gauss-Jordan (solve, reduced echelon), used where unique
//    normalized coordinates are wanted and as a cross-check of the first.
// All routines are total: they throw std::invalid_argument on shape misuse
// and never approximate.
#pragma once

#include <utility>
#include <vector>

#include "gldirac/matrix.hpp"

namespace gldirac {

struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;  // increasing
};

// Forward elimination only; pivot data for rank and column independence.
Echelon echelon(const RatMatrix& a);

int rank(const RatMatrix& a);

// Basis of { x : a x = 0 }; columns independent, one per free column,
// deterministic given the pivoting rule.
Subspace kernel(const RatMatrix& a);

// The pivot columns of `a` itself, a canonical independent spanning subset.
Subspace column_space(const RatMatrix& a);

// Unique reduced column-echelon basis of the span; equal subspaces produce
// byte-identical matrices, which makes this the canonicalization used by
// regression fixtures and equality assertions.
RatMatrix canonical_basis(const Subspace& s);

bool in_span(const Subspace& s, const RatMatrix& vectors);
bool subspace_eq(const Subspace& a, const Subspace& b);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// Representatives in `whole` completing `sub` to a basis, taken greedily from
// the columns of whole.basis.  Pre: sub is contained in whole.
Subspace quotient_basis(const Subspace& whole, const Subspace& sub);

// Unique X with a X = b.  Pre: the columns of a are independent.  Returns
// false when the system is inconsistent.
bool solve(const RatMatrix& a, const RatMatrix& b, RatMatrix* x);

Rat det(const RatMatrix& a);

// Congruence diagonalization pivots of a symmetric matrix.  The sign pattern
// is the inertia; all pivots positive iff positive definite.  Zero-diagonal
// blocks are handled by a row+column addition, which may split one step into
// an opposite-sign pivot pair.
std::vector<Rat> symmetric_pivots(const RatMatrix& g);

// Monic characteristic polynomial det(xI - a), coefficients by ascending
// degree, via Faddeev-LeVerrier.
std::vector<Rat> charpoly(const RatMatrix& a);

// All rational roots with multiplicities of a polynomial with rational
// coefficients (ascending degree).  Pairs sorted by root.
std::vector<std::pair<Rat, int>> rational_roots(const std::vector<Rat>& poly);

// Eigenvalues with algebraic multiplicities.  Throws std::domain_error when
// the characteristic polynomial has an irrational root, i.e. when the
// multiplicities do not sum to the dimension.
std::vector<std::pair<Rat, int>> rational_eigenvalues(const RatMatrix& a);

// Naive rational Gauss-Jordan reduced row echelon; exposed for cross-checks.
struct RowReduced {
  RatMatrix r;
  std::vector<int> pivot_cols;
  int rank = 0;
};
RowReduced rref(const RatMatrix& a);

}  // namespace gldirac

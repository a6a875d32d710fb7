// Cohomology of the raising complex (Ker d_i / Im d_{i-1}), homology of the
// lowering complex (Ker delta_i / Im delta_{i+1}), quotient g_0-types computed
// twice (echelon complement and harmonic lift), the Hodge decomposition
// certificates, the -rho_1 twist comparison, and the windowed Euler identity.
#pragma once

#include <vector>

#include "gldirac/dirac.hpp"

namespace gldirac {

struct CohomologySlice {
  int degree = 0;
  int dim = 0;
  Subspace kernelSpace;
  Subspace imageSpace;
  TypeMultiset types;          // adjoint-model types, echelon complement
  TypeMultiset typesHarmonic;  // recomputed on harmonic lifts (unitary only)
  bool harmonicCompared = false;
  bool wellDefined = true;     // the two computations agree
};

// H^i of the d-complex: Ker d_i / Im d_{i-1}.
CohomologySlice g_plus_cohomology(const GradedOps& ops, int i);
// H_i of the delta-complex: Ker delta_i / Im delta_{i+1}.
CohomologySlice g_minus_homology(const GradedOps& ops, int i);

struct HodgeDegree {
  int degree = 0;
  bool dimIdentity = false;    // slice = harm + rank d_{i-1} + rank delta_{i+1}
  bool directSum = false;      // stacked three-part basis has full column rank
  bool orthogonal = false;     // pairwise orthogonality under the slice form
  bool kerdSplits = false;     // Ker d_i = Harm_i + Im d_{i-1}, direct
  bool kernelsEqual = false;   // Ker D^2 = Ker D = Ker d meet Ker delta
  bool squareSplits = false;   // slice = Ker D^2 + Im D^2, direct
  bool all_pass() const {
    return dimIdentity && directSum && orthogonal && kerdSplits &&
           kernelsEqual && squareSplits;
  }
};

struct HodgeReport {
  std::vector<HodgeDegree> degrees;
  bool all_pass() const {
    for (const HodgeDegree& d : degrees)
      if (!d.all_pass()) return false;
    return true;
  }
};

// Runs every certificate for degrees 0..maxDegree (maxDegree <= ops degree).
HodgeReport hodge_verify(const GradedOps& ops, int maxDegree);

struct TwistDegree {
  int degree = 0;
  TypeMultiset harmonicTypes;  // alpha model
  TypeMultiset hplusShifted;   // types(H^i) shifted by -rho_1
  TypeMultiset hminusShifted;  // types(H_i) shifted by -rho_1
  bool match = false;
};

struct TwistReport {
  std::vector<TwistDegree> degrees;
  bool all_pass() const {
    for (const TwistDegree& d : degrees)
      if (!d.match) return false;
    return true;
  }
};

TwistReport twist_compare(const GradedOps& ops, int maxDegree);

// Alternating sums over the degree window [lo, hi]:
//   sliceSum - cohomologySum = (-1)^lo rank d_{lo-1} + (-1)^hi rank d_hi,
// exactly; the plain Euler equality holds when the boundary term is zero.
struct EulerWindow {
  int lo = 0;
  int hi = 0;
  long long cohomologySum = 0;
  long long sliceSum = 0;
  long long boundary = 0;
  bool identityHolds = false;
  bool windowExact = false;  // boundary == 0 and the sums agree
};

EulerWindow euler_window(const GradedOps& ops, int lo, int hi);

}  // namespace gldirac

// The graded slice model of V (x) M(g_1): per polynomial degree i the slice
// V (x) M^i, the operators d (degree +1), delta (degree -1), D = 2(d - delta),
// two g_0-action models on each slice, the diagonal even Casimir, and the
// induced positive form.  Everything downstream (harmonics, Dirac cohomology,
// infinitesimal character certificates, vanishing scan) reads from here.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gldirac/rep.hpp"
#include "gldirac/weyl.hpp"

namespace gldirac {

class GradedOps {
 public:
  // Builds slices 0..maxDegree+1, d_i for i <= maxDegree, delta_i for
  // i <= maxDegree+1, both g_0 models and the diagonal even Casimir per slice.
  GradedOps(const AlgebraContext& g, const ModuleData& v, int maxDegree);

  const AlgebraContext& algebra() const { return *g_; }
  const ModuleData& module() const { return v_; }
  int max_degree() const { return n_; }
  bool unitary() const { return unitary_; }

  const WeilSlice& slice(int i) const { return slices_.at(i); }
  int slice_dim(int i) const { return v_.dim * slices_.at(i).dim(); }

  const RatMatrix& d(int i) const { return d_.at(i); }          // C_i -> C_{i+1}
  const RatMatrix& delta(int i) const { return delta_.at(i); }  // C_i -> C_{i-1}
  RatMatrix dirac(int i) const;  // stacked [2 d_i; -2 delta_i], i <= maxDegree
  RatMatrix dirac_squared(int i) const;  // -4(d_{i-1} delta_i + delta_{i+1} d_i)

  const RatMatrix& gram(int i) const { return gram_.at(i); }

  // X (x) 1 + 1 (x) alpha(X): carries the -rho_1 shift on weights.
  const RatMatrix& g0_alpha(int i, int id) const;
  // X (x) 1 + 1 (x) alpha_1(X): the plain tensor-with-S(g_-) model.
  const RatMatrix& g0_adjoint(int i, int id) const;
  const std::vector<Weight>& weights_alpha(int i) const { return wAlpha_.at(i); }
  const std::vector<Weight>& weights_adjoint(int i) const { return wAdj_.at(i); }
  ActionMap alpha_map(int i) const;
  ActionMap adjoint_map(int i) const;

  // Even Casimir composed through the alpha model, per slice.
  const RatMatrix& omega_g0_delta(int i) const { return omega_.at(i); }
  const RatMatrix& omega_v() const { return omegaV_; }

 private:
  const AlgebraContext* g_;
  ModuleData v_;
  int n_;
  bool unitary_;
  std::vector<WeilSlice> slices_;
  std::vector<RatMatrix> d_, delta_, gram_, omega_;
  std::vector<std::vector<RatMatrix>> alphaMat_, adjMat_;  // [degree][g0 index]
  std::vector<std::vector<Weight>> wAlpha_, wAdj_;
  std::vector<int> g0Index_;  // basis id -> position in g0_ids
  RatMatrix omegaV_;
};

struct HarmonicSpace {
  int degree = 0;
  Subspace basis;       // inside the degree slice
  TypeMultiset types;   // alpha-model g_0 types
  int parity = 0;       // degree mod 2
};

// Ker d_i intersect Ker delta_i; requires the module to have passed
// validate_unitary, else throws std::invalid_argument.
Subspace harmonic_basis(const GradedOps& ops, int i);
// The same space with its g_0 decomposition attached.
HarmonicSpace harmonics(const GradedOps& ops, int i);

struct DegreeReport {
  int degree = 0;
  int sliceDim = 0;
  int harmonicDim = 0;
  TypeMultiset types;
};

struct DiracReport {
  std::vector<DegreeReport> degrees;  // 0..maxDegree
  int hplusDim = 0;                   // even degrees
  int hminusDim = 0;                  // odd degrees
  bool kernelMeetsImageTrivially = true;  // harmonics orthogonal to Im d + Im delta
};

DiracReport dirac_cohomology(const GradedOps& ops);

// dim Ker D_i / (Ker D_i meet (Im d_{i-1} + Im delta_{i+1})); no unitarity
// assumption, exposed for the non-unitary smoke path.
int dirac_quotient_dim(const GradedOps& ops, int i);

struct InfCharDegree {
  int degree = 0;
  int harmonicDim = 0;
  bool scalarMatches = true;  // Omega_{g0 Delta} restricted = (c_V + c) id
};

struct InfCharReport {
  Rat expected;  // c_V + c
  std::vector<InfCharDegree> degrees;
  bool all_pass() const {
    for (const InfCharDegree& d : degrees)
      if (!d.scalarMatches) return false;
    return true;
  }
};

// cV is the Omega_g scalar on V (its Casimir-block eigenvalue).
InfCharReport infinitesimal_character_check(const GradedOps& ops, const Rat& cV);

struct NegativeControl {
  bool found = false;   // some non-harmonic vector exists in the scanned range
  int degree = -1;
  int subspaceDim = 0;
  Rat determinant;      // det(Omega restricted - (c_V + c) id); nonzero on pass
  bool invertible = false;
};

// Krylov span of a vector of Im d under Omega_{g0 Delta}: the shifted Casimir
// must be invertible there, separating its infinitesimal character from the
// harmonic one.
NegativeControl infinitesimal_character_negative_control(const GradedOps& ops,
                                                         const Rat& cV);

struct VanishingDegree {
  int degree = 0;
  bool eigenvalueAttained = false;  // c_V + c among the Omega_{g0 Delta} eigenvalues
};

struct VanishingReport {
  bool found = false;
  int bound = -1;  // least i0 with no attainment for all scanned i >= i0
  std::vector<VanishingDegree> degrees;
};

VanishingReport vanishing_bound(const GradedOps& ops, const Rat& cV);

}  // namespace gldirac

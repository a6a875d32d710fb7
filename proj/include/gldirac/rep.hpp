// Finite dimensional gl(m|n)-modules with contravariant forms: constructors
// (trivial, natural, dual, tensor, diagonal character), validation of the
// representation axioms and unitarity, Casimir spectra with exact block
// splitting, and g_0-type extraction with Weyl-dimension accounting.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gldirac/algebra.hpp"
#include "gldirac/linalg.hpp"

namespace gldirac {

struct ModuleData {
  std::string label;
  int dim = 0;
  bool g0_only = false;            // diagonal character twists: no odd action
  std::vector<int> parity;         // per basis vector
  std::vector<Weight> weights;     // per basis vector
  std::vector<RatMatrix> action;   // per algebra basis id
  RatMatrix gram;

  const RatMatrix& act(int id) const { return action.at(id); }
};

ModuleData trivial_module(const AlgebraContext& g);
ModuleData natural_module(const AlgebraContext& g);
ModuleData dual_module(const AlgebraContext& g, const ModuleData& v);
ModuleData tensor_module(const AlgebraContext& g, const ModuleData& a, const ModuleData& b);
// One dimensional g_0-module for a diagonal character; w must be constant on
// each of the two diagonal blocks.
ModuleData character_module(const AlgebraContext& g, const Weight& w);

// Grammar: triv | nat | dual(S) | tensor(S,S); spaces ignored.
ModuleData parse_module(const AlgebraContext& g, const std::string& spec);

struct ValidationReport {
  bool representation = true;
  bool weights_consistent = true;
  bool parity_consistent = true;
  bool gram_symmetric = true;
  bool contravariant = true;
  bool gram_weight_blocked = true;
  bool positive_definite = true;
  std::vector<std::string> failures;

  bool structure_ok() const {
    return representation && weights_consistent && parity_consistent;
  }
  bool unitary_ok() const {
    return structure_ok() && gram_symmetric && contravariant &&
           gram_weight_blocked && positive_definite;
  }
};

// Representation property, weight and parity consistency of the action.
ValidationReport validate_module(const AlgebraContext& g, const ModuleData& v);
// Everything above plus contravariance of the form for all generator pairs
// (E_kl adjoint to E_lk), weight-block diagonality, positive definiteness.
ValidationReport validate_unitary(const AlgebraContext& g, const ModuleData& v);

// Matrix of Omega_g (or of the even Casimir only) in the module basis.
RatMatrix casimir_matrix(const AlgebraContext& g, const ModuleData& v);
RatMatrix casimir_even_matrix(const AlgebraContext& g, const ModuleData& v);

// Exact spectrum; throws std::domain_error on an irrational eigenvalue.
std::vector<std::pair<Rat, int>> casimir_eigenvalues(const AlgebraContext& g,
                                                     const ModuleData& v);

struct CasimirBlock {
  Rat eigenvalue;
  ModuleData module;     // restricted structure, weight-pure basis columns
  RatMatrix embedding;   // ambient x block_dim
};

// Generalized eigenspace decomposition under Omega_g.  Blocks are honest
// submodules (centrality is what the split relies on and is re-validated).
std::vector<CasimirBlock> split_by_casimir(const AlgebraContext& g, const ModuleData& v);

// g_0-types.
struct TypeEntry {
  Weight hw;
  int mult = 0;
  bool operator==(const TypeEntry& o) const { return hw == o.hw && mult == o.mult; }
};
using TypeMultiset = std::vector<TypeEntry>;  // sorted by weight

std::string types_str(const TypeMultiset& t, int m);
TypeMultiset shift_types(const TypeMultiset& t, const Weight& by);

// Dimension of the irreducible g_0-module with dominant highest weight hw;
// throws std::invalid_argument when hw is not dominant integral-difference.
Int weyl_dimension(const AlgebraContext& g, const Weight& hw);

// Split a subspace into weight-pure pieces against coordinate weight labels;
// throws std::invalid_argument if the space is not weight homogeneous.
std::vector<std::pair<Weight, Subspace>> weight_split(
    const std::vector<Weight>& coordWeights, const Subspace& space);

using ActionMap = std::map<int, RatMatrix>;  // g_0 basis id -> ambient matrix

// Highest-weight multiset of `space` (modOut == nullptr) or of the quotient
// space/modOut.  `act` must contain every g_0 basis id; stability and the
// Weyl-dimension accounting
//   sum_mu mult(mu) * dim(mu) = dim(space) - dim(modOut)
// are certified, with std::logic_error on mismatch.  `repsOverride`, when
// given, supplies the complement representatives (e.g. harmonic lifts) in
// place of the internally chosen echelon complement.
TypeMultiset decompose_g0(const AlgebraContext& g,
                          const std::vector<Weight>& coordWeights,
                          const ActionMap& act, const Subspace& space,
                          const Subspace* modOut = nullptr,
                          const Subspace* repsOverride = nullptr);

}  // namespace gldirac

#include "gldirac/cohomology.hpp"

#include <stdexcept>

namespace gldirac {

namespace {

CohomologySlice quotient_slice(const GradedOps& ops, int i, const RatMatrix& op,
                               const RatMatrix& into) {
  CohomologySlice s;
  s.degree = i;
  s.kernelSpace = kernel(op);
  s.imageSpace = column_space(into);
  s.dim = s.kernelSpace.dim() - s.imageSpace.dim();
  s.types = decompose_g0(ops.algebra(), ops.weights_adjoint(i),
                         ops.adjoint_map(i), s.kernelSpace, &s.imageSpace);
  if (ops.unitary()) {
    Subspace harm = harmonic_basis(ops, i);
    s.typesHarmonic =
        decompose_g0(ops.algebra(), ops.weights_adjoint(i), ops.adjoint_map(i),
                     s.kernelSpace, &s.imageSpace, &harm);
    s.harmonicCompared = true;
    s.wellDefined = s.typesHarmonic == s.types;
  } else {
    s.typesHarmonic = s.types;
  }
  return s;
}

}  // namespace

CohomologySlice g_plus_cohomology(const GradedOps& ops, int i) {
  RatMatrix into(ops.slice_dim(i), 0);
  if (i > 0) into = ops.d(i - 1);
  return quotient_slice(ops, i, ops.d(i), into);
}

CohomologySlice g_minus_homology(const GradedOps& ops, int i) {
  return quotient_slice(ops, i, ops.delta(i), ops.delta(i + 1));
}

HodgeReport hodge_verify(const GradedOps& ops, int maxDegree) {
  if (maxDegree > ops.max_degree())
    throw std::invalid_argument("hodge_verify: degree beyond the built ladder");
  HodgeReport rep;
  for (int i = 0; i <= maxDegree; ++i) {
    HodgeDegree h;
    h.degree = i;
    const int dim = ops.slice_dim(i);
    Subspace harm = harmonic_basis(ops, i);
    Subspace imd = i > 0 ? column_space(ops.d(i - 1)) : Subspace::zero(dim);
    Subspace imdel = column_space(ops.delta(i + 1));

    h.dimIdentity = dim == harm.dim() + imd.dim() + imdel.dim();
    RatMatrix stacked =
        RatMatrix::hstack(RatMatrix::hstack(harm.basis, imd.basis), imdel.basis);
    h.directSum = rank(stacked) == stacked.cols();
    h.orthogonal = (harm.basis.transpose() * ops.gram(i) * imd.basis).is_zero() &&
                   (harm.basis.transpose() * ops.gram(i) * imdel.basis).is_zero() &&
                   (imd.basis.transpose() * ops.gram(i) * imdel.basis).is_zero();

    Subspace kerd = kernel(ops.d(i));
    h.kerdSplits = subspace_eq(kerd, subspace_sum(harm, imd)) &&
                   kerd.dim() == harm.dim() + imd.dim();

    Subspace kerD = kernel(ops.dirac(i));
    RatMatrix dsq = ops.dirac_squared(i);
    Subspace kerD2 = kernel(dsq);
    h.kernelsEqual = subspace_eq(kerD2, kerD) && subspace_eq(kerD, harm);

    Subspace imD2 = column_space(dsq);
    h.squareSplits = kerD2.dim() + imD2.dim() == dim &&
                     intersect(kerD2, imD2).dim() == 0;
    rep.degrees.push_back(h);
  }
  return rep;
}

TwistReport twist_compare(const GradedOps& ops, int maxDegree) {
  if (maxDegree > ops.max_degree())
    throw std::invalid_argument("twist_compare: degree beyond the built ladder");
  TwistReport rep;
  const Weight minusRho =
      Weight::zero(ops.algebra().size()) - ops.algebra().rho1();
  for (int i = 0; i <= maxDegree; ++i) {
    TwistDegree t;
    t.degree = i;
    t.harmonicTypes = harmonics(ops, i).types;
    CohomologySlice up = g_plus_cohomology(ops, i);
    CohomologySlice down = g_minus_homology(ops, i);
    t.hplusShifted = shift_types(up.types, minusRho);
    t.hminusShifted = shift_types(down.types, minusRho);
    t.match = up.wellDefined && down.wellDefined &&
              t.harmonicTypes == t.hplusShifted &&
              t.harmonicTypes == t.hminusShifted;
    rep.degrees.push_back(std::move(t));
  }
  return rep;
}

EulerWindow euler_window(const GradedOps& ops, int lo, int hi) {
  if (lo < 0 || hi < lo || hi > ops.max_degree())
    throw std::invalid_argument("euler_window: bad degree window");
  EulerWindow w;
  w.lo = lo;
  w.hi = hi;
  for (int i = lo; i <= hi; ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    w.sliceSum += sign * ops.slice_dim(i);
    const int hDim = kernel(ops.d(i)).dim() - (i > 0 ? rank(ops.d(i - 1)) : 0);
    w.cohomologySum += sign * hDim;
  }
  const long long rLo = lo > 0 ? rank(ops.d(lo - 1)) : 0;
  const long long rHi = rank(ops.d(hi));
  w.boundary = (lo % 2 == 0 ? rLo : -rLo) + (hi % 2 == 0 ? rHi : -rHi);
  w.identityHolds = w.sliceSum - w.cohomologySum == w.boundary;
  w.windowExact = w.boundary == 0 && w.sliceSum == w.cohomologySum;
  return w;
}

}  // namespace gldirac

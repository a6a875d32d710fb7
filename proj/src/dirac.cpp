#include "gldirac/dirac.hpp"

#include <stdexcept>

#include "gldirac/parallel.hpp"

namespace gldirac {

namespace {

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

GradedOps::GradedOps(const AlgebraContext& g, const ModuleData& v, int maxDegree)
    : g_(&g), v_(v), n_(maxDegree) {
  if (n_ < 0) throw std::invalid_argument("GradedOps: negative degree");
  unitary_ = validate_unitary(g, v_).unitary_ok();
  const int nv = g.odd_dim();
  for (int i = 0; i <= n_ + 1; ++i) slices_.push_back(weil_slice(nv, i));

  g0Index_.assign(g.dim(), -1);
  const auto& g0 = g.g0_ids();
  for (std::size_t j = 0; j < g0.size(); ++j) g0Index_[g0[j]] = static_cast<int>(j);
  std::vector<WeylElement> alphaEl;
  std::vector<Rat> alphaScalar;
  for (int id : g0) {
    SuperElement x;
    x.add(id, 1);
    alphaEl.push_back(alpha(g, x));
    alphaScalar.push_back(alpha2(g, x));
  }
  omegaV_ = casimir_matrix(g, v_);

  d_.assign(n_ + 1, RatMatrix(0, 0));
  delta_.assign(n_ + 2, RatMatrix(0, 0));
  gram_.assign(n_ + 2, RatMatrix(0, 0));
  omega_.assign(n_ + 2, RatMatrix(0, 0));
  alphaMat_.assign(n_ + 2, {});
  adjMat_.assign(n_ + 2, {});
  wAlpha_.assign(n_ + 2, {});
  wAdj_.assign(n_ + 2, {});

  const Weight rho = g.rho1();
  parallel_for(n_ + 2, [&](int i) {
    const WeilSlice& cur = slices_[i];
    const int mono = cur.dim();
    const int dim = v_.dim * mono;

    // d_i and delta_i from the odd generator actions.
    if (i <= n_) {
      const WeilSlice& up = slices_[i + 1];
      RatMatrix di(v_.dim * up.dim(), dim);
      for (int p = 1; p <= nv; ++p) {
        const RatMatrix& a = v_.act(g.del_id(p));
        for (int r = 0; r < v_.dim; ++r)
          for (const auto& [c, val] : a.row(r))
            for (int q = 0; q < mono; ++q) {
              std::vector<int> e = cur.monomials[q];
              ++e[p - 1];
              di.add_to(r * up.dim() + up.index.at(e), c * mono + q, val);
            }
      }
      d_[i] = std::move(di);
    }
    {
      const int downDim = i == 0 ? 0 : slices_[i - 1].dim();
      RatMatrix de(v_.dim * downDim, dim);
      if (i > 0) {
        const WeilSlice& down = slices_[i - 1];
        for (int p = 1; p <= nv; ++p) {
          const RatMatrix& a = v_.act(g.x_id(p));
          for (int r = 0; r < v_.dim; ++r)
            for (const auto& [c, val] : a.row(r))
              for (int q = 0; q < mono; ++q) {
                std::vector<int> e = cur.monomials[q];
                if (e[p - 1] == 0) continue;
                const Rat coeff = val * e[p - 1];
                --e[p - 1];
                de.add_to(r * down.dim() + down.index.at(e), c * mono + q, coeff);
              }
        }
      }
      delta_[i] = std::move(de);
    }

    // Slice form: gram_V (x) diag(prod q_k!).
    RatMatrix monoForm(mono, mono);
    for (int q = 0; q < mono; ++q) {
      PolyVec f{{cur.monomials[q], Rat(1)}};
      monoForm.set(q, q, weil_form(nv, f, f));
    }
    gram_[i] = RatMatrix::kronecker(v_.gram, monoForm);

    // Coordinate weights of both models.
    wAlpha_[i].reserve(dim);
    wAdj_[i].reserve(dim);
    for (int a = 0; a < v_.dim; ++a)
      for (int q = 0; q < mono; ++q) {
        Weight w = v_.weights[a];
        for (int p = 1; p <= nv; ++p) {
          const int e = cur.monomials[q][p - 1];
          if (e == 0) continue;
          const Weight b = g.beta(p);
          for (std::size_t t = 0; t < w.e.size(); ++t) w.e[t] -= Rat(e) * b.e[t];
        }
        wAdj_[i].push_back(w);
        wAlpha_[i].push_back(w - rho);
      }

    // g_0 models on the slice.
    alphaMat_[i].reserve(g0.size());
    adjMat_[i].reserve(g0.size());
    const RatMatrix idV = RatMatrix::identity(v_.dim);
    const RatMatrix idMono = RatMatrix::identity(mono);
    for (std::size_t j = 0; j < g0.size(); ++j) {
      RatMatrix w = weil_matrix(alphaEl[j], cur, cur);
      RatMatrix full = RatMatrix::kronecker(v_.act(g0[j]), idMono) +
                       RatMatrix::kronecker(idV, w);
      adjMat_[i].push_back(full - RatMatrix::identity(dim).scaled(alphaScalar[j]));
      alphaMat_[i].push_back(std::move(full));
    }

    RatMatrix om(dim, dim);
    for (const CasimirTerm& t : g.casimir_even_terms())
      om = om + (alphaMat_[i][g0Index_[t.left]] * alphaMat_[i][g0Index_[t.right]])
                    .scaled(t.coeff);
    omega_[i] = std::move(om);
  });
}

RatMatrix GradedOps::dirac(int i) const {
  return RatMatrix::vstack(d_.at(i).scaled(2), delta_.at(i).scaled(-2));
}

RatMatrix GradedOps::dirac_squared(int i) const {
  RatMatrix out = delta_.at(i + 1) * d_.at(i);
  if (i > 0) out = out + d_.at(i - 1) * delta_.at(i);
  return out.scaled(-4);
}

const RatMatrix& GradedOps::g0_alpha(int i, int id) const {
  if (g0Index_.at(id) < 0) throw std::invalid_argument("g0_alpha: not a g0 id");
  return alphaMat_.at(i).at(g0Index_[id]);
}

const RatMatrix& GradedOps::g0_adjoint(int i, int id) const {
  if (g0Index_.at(id) < 0) throw std::invalid_argument("g0_adjoint: not a g0 id");
  return adjMat_.at(i).at(g0Index_[id]);
}

ActionMap GradedOps::alpha_map(int i) const {
  ActionMap m;
  for (int id : g_->g0_ids()) m.emplace(id, g0_alpha(i, id));
  return m;
}

ActionMap GradedOps::adjoint_map(int i) const {
  ActionMap m;
  for (int id : g_->g0_ids()) m.emplace(id, g0_adjoint(i, id));
  return m;
}

Subspace harmonic_basis(const GradedOps& ops, int i) {
  if (!ops.unitary())
    throw std::invalid_argument("harmonics: module failed the unitarity checks");
  return intersect(kernel(ops.d(i)), kernel(ops.delta(i)));
}

HarmonicSpace harmonics(const GradedOps& ops, int i) {
  HarmonicSpace h;
  h.degree = i;
  h.parity = i % 2;
  h.basis = harmonic_basis(ops, i);
  h.types = decompose_g0(ops.algebra(), ops.weights_alpha(i), ops.alpha_map(i),
                         h.basis);
  return h;
}

DiracReport dirac_cohomology(const GradedOps& ops) {
  DiracReport rep;
  for (int i = 0; i <= ops.max_degree(); ++i) {
    HarmonicSpace h = harmonics(ops, i);
    DegreeReport d;
    d.degree = i;
    d.sliceDim = ops.slice_dim(i);
    d.harmonicDim = h.basis.dim();
    d.types = h.types;
    (i % 2 == 0 ? rep.hplusDim : rep.hminusDim) += d.harmonicDim;

    RatMatrix pairing = h.basis.basis.transpose() * ops.gram(i);
    if (i > 0 && !(pairing * ops.d(i - 1)).is_zero())
      rep.kernelMeetsImageTrivially = false;
    if (!(pairing * ops.delta(i + 1)).is_zero())
      rep.kernelMeetsImageTrivially = false;
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

int dirac_quotient_dim(const GradedOps& ops, int i) {
  Subspace kerD = kernel(ops.dirac(i));
  Subspace image = column_space(ops.delta(i + 1));
  if (i > 0) image = subspace_sum(image, column_space(ops.d(i - 1)));
  return kerD.dim() - intersect(kerD, image).dim();
}

InfCharReport infinitesimal_character_check(const GradedOps& ops, const Rat& cV) {
  InfCharReport rep;
  rep.expected = cV + casimir_constant(ops.algebra());
  for (int i = 0; i <= ops.max_degree(); ++i) {
    HarmonicSpace h = harmonics(ops, i);
    InfCharDegree d;
    d.degree = i;
    d.harmonicDim = h.basis.dim();
    if (d.harmonicDim > 0) {
      RatMatrix restricted;
      if (!solve(h.basis.basis, ops.omega_g0_delta(i) * h.basis.basis, &restricted))
        throw std::logic_error("infinitesimal_character_check: harmonics not "
                               "Casimir stable");
      d.scalarMatches =
          restricted == RatMatrix::identity(d.harmonicDim).scaled(rep.expected);
    }
    rep.degrees.push_back(d);
  }
  return rep;
}

NegativeControl infinitesimal_character_negative_control(const GradedOps& ops,
                                                         const Rat& cV) {
  NegativeControl out;
  const Rat expected = cV + casimir_constant(ops.algebra());
  for (int i = 1; i <= ops.max_degree(); ++i) {
    Subspace imd = column_space(ops.d(i - 1));
    if (imd.dim() == 0) continue;
    // Krylov span of one image vector under the diagonal even Casimir.
    const RatMatrix& om = ops.omega_g0_delta(i);
    RatMatrix span = imd.basis.submatrix(iota_vec(ops.slice_dim(i)), {0});
    for (;;) {
      RatMatrix next = om * span.submatrix(iota_vec(span.rows()),
                                           {span.cols() - 1});
      RatMatrix candidate = RatMatrix::hstack(span, next);
      if (rank(candidate) == span.cols()) break;
      span = std::move(candidate);
    }
    RatMatrix restricted;
    if (!solve(span, om * span, &restricted))
      throw std::logic_error("negative control: Krylov span not stable");
    out.found = true;
    out.degree = i;
    out.subspaceDim = span.cols();
    out.determinant =
        det(restricted - RatMatrix::identity(span.cols()).scaled(expected));
    out.invertible = out.determinant != 0;
    return out;
  }
  return out;
}

VanishingReport vanishing_bound(const GradedOps& ops, const Rat& cV) {
  VanishingReport rep;
  const Rat expected = cV + casimir_constant(ops.algebra());
  for (int i = 0; i <= ops.max_degree(); ++i) {
    // The diagonal Casimir is weight-blocked, so scan it block by block.
    std::map<Weight, std::vector<int>> classes;
    for (int r = 0; r < ops.slice_dim(i); ++r)
      classes[ops.weights_alpha(i)[r]].push_back(r);
    bool attained = false;
    for (const auto& [w, rows] : classes) {
      RatMatrix block = ops.omega_g0_delta(i).submatrix(rows, rows);
      for (const auto& [eig, mult] : rational_eigenvalues(block)) {
        (void)mult;
        if (eig == expected) {
          attained = true;
          break;
        }
      }
      if (attained) break;
    }
    rep.degrees.push_back({i, attained});
  }
  int bound = ops.max_degree() + 1;
  for (int i = ops.max_degree(); i >= 0; --i) {
    if (rep.degrees[i].eigenvalueAttained) break;
    bound = i;
  }
  if (bound <= ops.max_degree()) {
    rep.found = true;
    rep.bound = bound;
  }
  return rep;
}

}  // namespace gldirac

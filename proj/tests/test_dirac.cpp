#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "gldirac/dirac.hpp"
#include "oracles.hpp"

using namespace gldirac;

namespace {

Rat binom_rat(int n, int k) {
  Rat out = 1;
  for (int j = 1; j <= k; ++j) out *= Rat(n - k + j) / Rat(j);
  return out;
}

// Independent slice oracle for the natural module: its own monomial order
// (descending recursive enumeration), matrix-unit action written out directly,
// dense elimination from the shared oracle header.
struct NatSliceOracle {
  int m, n, mn, dim;

  NatSliceOracle(int m_, int n_) : m(m_), n(n_), mn(m_ * n_), dim(m_ + n_) {}

  void enumerate(int deg, int var, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) const {
    if (var == mn - 1) {
      cur.push_back(deg);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int e = deg; e >= 0; --e) {
      cur.push_back(e);
      enumerate(deg - e, var + 1, cur, out);
      cur.pop_back();
    }
  }

  std::vector<std::vector<int>> monos(int deg) const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate(deg, 0, cur, out);
    return out;
  }

  // Odd pair p = 1..mn corresponds to (i, k), i <= m < k.
  std::pair<int, int> pair_of(int p) const {
    return {(p - 1) / n + 1, m + 1 + (p - 1) % n};
  }

  // d entries: v_b x^q picks up E_{ik} v_b = delta_{kb} v_i times x_p.
  RatMatrix d_matrix(int deg) const {
    auto lo = monos(deg);
    auto hi = monos(deg + 1);
    std::map<std::vector<int>, int> hiIdx;
    for (std::size_t t = 0; t < hi.size(); ++t) hiIdx[hi[t]] = static_cast<int>(t);
    RatMatrix a(dim * static_cast<int>(hi.size()),
                dim * static_cast<int>(lo.size()));
    for (int p = 1; p <= mn; ++p) {
      auto [i, k] = pair_of(p);
      for (std::size_t q = 0; q < lo.size(); ++q) {
        std::vector<int> e = lo[q];
        ++e[p - 1];
        a.add_to((i - 1) * static_cast<int>(hi.size()) + hiIdx.at(e),
                 (k - 1) * static_cast<int>(lo.size()) + static_cast<int>(q),
                 Rat(1));
      }
    }
    return a;
  }

  // delta entries: v_b x^q picks up q_p E_{ki} v_b = q_p delta_{ib} v_k.
  RatMatrix delta_matrix(int deg) const {
    auto lo = monos(deg - 1);
    auto hi = monos(deg);
    std::map<std::vector<int>, int> loIdx;
    for (std::size_t t = 0; t < lo.size(); ++t) loIdx[lo[t]] = static_cast<int>(t);
    RatMatrix a(dim * static_cast<int>(lo.size()),
                dim * static_cast<int>(hi.size()));
    for (int p = 1; p <= mn; ++p) {
      auto [i, k] = pair_of(p);
      for (std::size_t q = 0; q < hi.size(); ++q) {
        if (hi[q][p - 1] == 0) continue;
        std::vector<int> e = hi[q];
        --e[p - 1];
        a.add_to((k - 1) * static_cast<int>(lo.size()) + loIdx.at(e),
                 (i - 1) * static_cast<int>(hi.size()) + static_cast<int>(q),
                 Rat(hi[q][p - 1]));
      }
    }
    return a;
  }

  int harmonic_dim(int deg) const {
    Subspace kd = oracle::null_space(d_matrix(deg));
    Subspace kdel = oracle::null_space(delta_matrix(deg));
    // dim(A cap B) = dim A + dim B - rank [A | B].
    const int joint =
        oracle::eliminate(RatMatrix::hstack(kd.basis, kdel.basis)).rank;
    return kd.dim() + kdel.dim() - joint;
  }
};

const std::vector<std::pair<int, int>> kSizes = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};

int frozen_harmonic_dim(int m, int n, int i) {
  if (m == 1 && n == 1) return i == 0 ? 1 : 0;
  if (m == 2 && n == 1) return i + 2;
  if (m == 1 && n == 2) return i == 0 ? 1 : i;
  return (i + 1) * (i + 2);  // (2,2)
}

}  // namespace

TEST_CASE("slice dimensions and the explicit gl(1|1) degree-0 operators") {
  AlgebraContext g(1, 1);
  GradedOps ops(g, natural_module(g), 4);
  for (int i = 0; i <= 4; ++i) CHECK(ops.slice_dim(i) == 2);
  // d_0: only v_2 (x) 1 -> v_1 (x) x_1.
  CHECK(ops.d(0) == RatMatrix::from_rows({{0, 1}, {0, 0}}));
  // delta_1: only v_1 (x) x_1 -> v_2 (x) 1.
  CHECK(ops.delta(1) == RatMatrix::from_rows({{0, 0}, {1, 0}}));
  CHECK(ops.delta(0).rows() == 0);
  CHECK(ops.dirac(0) == RatMatrix::from_rows({{0, 2}, {0, 0}}));
  // Slice form at degree 2: gram_V (x) (2).
  CHECK(ops.gram(2) == RatMatrix::identity(2).scaled(2));
}

TEST_CASE("d and delta square to zero on all desk sizes") {
  for (auto [m, n] : kSizes) {
    AlgebraContext g(m, n);
    GradedOps ops(g, natural_module(g), 4);
    CAPTURE(m);
    CAPTURE(n);
    for (int i = 0; i + 1 <= 4; ++i) {
      CHECK((ops.d(i + 1) * ops.d(i)).is_zero());
      CHECK((ops.delta(i) * ops.delta(i + 1)).is_zero());
    }
  }
}

TEST_CASE("d and delta are adjoint and D is anti-self-adjoint, degrees <= 6") {
  for (auto [m, n] : kSizes) {
    AlgebraContext g(m, n);
    GradedOps ops(g, natural_module(g), 6);
    CAPTURE(m);
    CAPTURE(n);
    for (int i = 0; i <= 6; ++i) {
      CHECK(ops.d(i).transpose() * ops.gram(i + 1) == ops.gram(i) * ops.delta(i + 1));
      CHECK(ops.d(i).scaled(2).transpose() * ops.gram(i + 1) +
                ops.gram(i) * ops.delta(i + 1).scaled(-2) ==
            RatMatrix(ops.slice_dim(i), ops.slice_dim(i + 1)));
    }
  }
}

TEST_CASE("both g0 models commute with d and delta") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    AlgebraContext g(m, n);
    GradedOps ops(g, natural_module(g), 3);
    CAPTURE(m);
    CAPTURE(n);
    for (int i = 0; i <= 3; ++i)
      for (int id : g.g0_ids()) {
        CHECK(ops.g0_adjoint(i + 1, id) * ops.d(i) ==
              ops.d(i) * ops.g0_adjoint(i, id));
        CHECK(ops.g0_alpha(i + 1, id) * ops.d(i) == ops.d(i) * ops.g0_alpha(i, id));
        if (i > 0) {
          CHECK(ops.g0_adjoint(i - 1, id) * ops.delta(i) ==
                ops.delta(i) * ops.g0_adjoint(i, id));
          CHECK(ops.g0_alpha(i - 1, id) * ops.delta(i) ==
                ops.delta(i) * ops.g0_alpha(i, id));
        }
      }
  }
}

TEST_CASE("D squared equals the Casimir combination on slices up to 6") {
  for (auto [m, n] : kSizes) {
    AlgebraContext g(m, n);
    ModuleData v = natural_module(g);
    GradedOps ops(g, v, 6);
    const Rat c = casimir_constant(g);
    CAPTURE(m);
    CAPTURE(n);
    for (int i = 0; i <= 6; ++i) {
      const int dim = ops.slice_dim(i);
      RatMatrix rhs =
          ops.omega_g0_delta(i) -
          RatMatrix::kronecker(ops.omega_v(), RatMatrix::identity(ops.slice(i).dim())) -
          RatMatrix::identity(dim).scaled(c);
      CHECK(ops.dirac_squared(i) == rhs);
    }
  }
}

TEST_CASE("harmonic dimensions match frozen tables and the dense oracle") {
  for (auto [m, n] : kSizes) {
    AlgebraContext g(m, n);
    GradedOps ops(g, natural_module(g), 6);
    NatSliceOracle oracle(m, n);
    CAPTURE(m);
    CAPTURE(n);
    const int oracleCap = (m == 2 && n == 2) ? 3 : 5;
    for (int i = 0; i <= 6; ++i) {
      HarmonicSpace h = harmonics(ops, i);
      CHECK(h.basis.dim() == frozen_harmonic_dim(m, n, i));
      if (i <= oracleCap) CHECK(h.basis.dim() == oracle.harmonic_dim(i));
      CHECK((ops.d(i) * h.basis.basis).is_zero());
      CHECK((ops.delta(i) * h.basis.basis).is_zero());
      CHECK(h.parity == i % 2);
      Int typeTotal = 0;
      for (const TypeEntry& t : h.types)
        typeTotal += Int(t.mult) * weyl_dimension(g, t.hw);
      CHECK(typeTotal == h.basis.dim());
    }
  }
}

TEST_CASE("frozen harmonic types for gl(2|1) and gl(1|2) natural modules") {
  {
    AlgebraContext g(2, 1);
    GradedOps ops(g, natural_module(g), 3);
    const Weight rho = g.rho1();
    for (int i = 0; i <= 3; ++i) {
      HarmonicSpace h = harmonics(ops, i);
      REQUIRE(h.types.size() == 1);
      // Single g0 type of highest weight (1, -i | i) before the twist.
      Weight expect{{Rat(1), Rat(-i), Rat(i)}};
      CHECK(h.types[0].hw == expect - rho);
      CHECK(h.types[0].mult == 1);
    }
  }
  {
    AlgebraContext g(1, 2);
    GradedOps ops(g, natural_module(g), 3);
    const Weight rho = g.rho1();
    for (int i = 1; i <= 3; ++i) {
      HarmonicSpace h = harmonics(ops, i);
      REQUIRE(h.types.size() == 1);
      Weight expect{{Rat(-i), Rat(i), Rat(1)}};
      CHECK(h.types[0].hw == expect - rho);
    }
  }
}

TEST_CASE("dirac_cohomology aggregates degrees and certifies orthogonality") {
  AlgebraContext g(2, 1);
  GradedOps ops(g, natural_module(g), 4);
  DiracReport rep = dirac_cohomology(ops);
  REQUIRE(rep.degrees.size() == 5);
  for (int i = 0; i <= 4; ++i) {
    CHECK(rep.degrees[i].harmonicDim == i + 2);
    CHECK(rep.degrees[i].sliceDim == 3 * (i + 1));
  }
  CHECK(rep.hplusDim == 2 + 4 + 6);
  CHECK(rep.hminusDim == 3 + 5);
  CHECK(rep.kernelMeetsImageTrivially);
}

TEST_CASE("trivial modules: zero operators, binomial slice dims, no bound") {
  for (auto [m, n] : kSizes) {
    AlgebraContext g(m, n);
    GradedOps ops(g, trivial_module(g), 8);
    CAPTURE(m);
    CAPTURE(n);
    const Rat c = casimir_constant(g);
    for (int i = 0; i <= 8; ++i) {
      CHECK(ops.d(i).is_zero());
      CHECK(ops.delta(i).is_zero());
      CHECK(ops.dirac(i).is_zero());
      HarmonicSpace h = harmonics(ops, i);
      CHECK(Rat(h.basis.dim()) == binom_rat(m * n + i - 1, i));
      CHECK(h.basis.dim() == ops.slice_dim(i));
      CHECK(ops.omega_g0_delta(i) ==
            RatMatrix::identity(ops.slice_dim(i)).scaled(c));
    }
    VanishingReport vr = vanishing_bound(ops, Rat(0));
    CHECK_FALSE(vr.found);
    for (const VanishingDegree& d : vr.degrees) CHECK(d.eigenvalueAttained);
  }
}

TEST_CASE("trivial gl(1|1) harmonic types carry the -rho_1 ladder") {
  AlgebraContext g(1, 1);
  GradedOps ops(g, trivial_module(g), 3);
  for (int i = 0; i <= 3; ++i) {
    HarmonicSpace h = harmonics(ops, i);
    REQUIRE(h.types.size() == 1);
    Weight expect{{Rat(-i) - frac(1, 2), Rat(i) + frac(1, 2)}};
    CHECK(h.types[0].hw == expect);
  }
}

TEST_CASE("infinitesimal character certificate and negative control") {
  for (auto [m, n] : kSizes) {
    AlgebraContext g(m, n);
    ModuleData v = natural_module(g);
    GradedOps ops(g, v, 4);
    auto eigs = casimir_eigenvalues(g, v);
    REQUIRE(eigs.size() == 1);
    const Rat cV = eigs[0].first;
    CAPTURE(m);
    CAPTURE(n);
    InfCharReport rep = infinitesimal_character_check(ops, cV);
    CHECK(rep.all_pass());
    CHECK(rep.expected == cV + casimir_constant(g));
    NegativeControl nc = infinitesimal_character_negative_control(ops, cV);
    CHECK(nc.found);
    CHECK(nc.invertible);
    CHECK(nc.determinant != 0);
  }
}

TEST_CASE("frozen infinitesimal character values on natural modules") {
  // (c_V, c): (1,1) -> (0,0); (2,1) -> (2,-1); (1,2) -> (-2,1); (2,2) -> (0,0).
  std::map<std::pair<int, int>, Rat> expect = {
      {{1, 1}, Rat(0)}, {{2, 1}, Rat(1)}, {{1, 2}, Rat(-1)}, {{2, 2}, Rat(0)}};
  for (auto [m, n] : kSizes) {
    AlgebraContext g(m, n);
    ModuleData v = natural_module(g);
    GradedOps ops(g, v, 2);
    InfCharReport rep = infinitesimal_character_check(
        ops, casimir_eigenvalues(g, v)[0].first);
    CHECK(rep.expected == expect.at({m, n}));
  }
}

TEST_CASE("vanishing bound: gl(1|1) natural bounds at degree 1") {
  AlgebraContext g(1, 1);
  GradedOps ops(g, natural_module(g), 6);
  VanishingReport vr = vanishing_bound(ops, Rat(0));
  REQUIRE(vr.found);
  CHECK(vr.bound == 1);
  CHECK(vr.degrees[0].eigenvalueAttained);
  for (int i = 1; i <= 6; ++i) {
    CHECK_FALSE(vr.degrees[i].eigenvalueAttained);
    CHECK(harmonics(ops, i).basis.dim() == 0);
  }
}

TEST_CASE("vanishing bound: gl(2|1) natural attains the eigenvalue everywhere") {
  AlgebraContext g(2, 1);
  GradedOps ops(g, natural_module(g), 4);
  VanishingReport vr = vanishing_bound(ops, Rat(2));
  CHECK_FALSE(vr.found);
  for (const VanishingDegree& d : vr.degrees) CHECK(d.eigenvalueAttained);
}

TEST_CASE("non-unitary module: harmonics refuse, quotient smoke path works") {
  AlgebraContext g(1, 1);
  GradedOps ops(g, dual_module(g, natural_module(g)), 3);
  CHECK_FALSE(ops.unitary());
  CHECK_THROWS_AS(harmonics(ops, 0), std::invalid_argument);
  // Ker D_0 = span(v2*), entering image im delta_1 = span(v1*); quotient 1.
  CHECK(dirac_quotient_dim(ops, 0) == 1);
}

TEST_CASE("nat tensor nat gl(1|1) splits and each block has clean harmonics") {
  AlgebraContext g(1, 1);
  ModuleData v = tensor_module(g, natural_module(g), natural_module(g));
  auto blocks = split_by_casimir(g, v);
  REQUIRE(blocks.size() == 2);
  for (const CasimirBlock& blk : blocks) {
    GradedOps ops(g, blk.module, 4);
    CAPTURE(rat_str(blk.eigenvalue));
    InfCharReport rep = infinitesimal_character_check(ops, blk.eigenvalue);
    CHECK(rep.all_pass());
    DiracReport dr = dirac_cohomology(ops);
    CHECK(dr.kernelMeetsImageTrivially);
    // One-dimensional harmonic space in degree 0 for both blocks.
    CHECK(dr.degrees[0].harmonicDim == 1);
  }
}

TEST_CASE("worker count does not change any constructed block") {
  AlgebraContext g(2, 1);
  setenv("GLDIRAC_THREADS", "1", 1);
  GradedOps serial(g, natural_module(g), 3);
  setenv("GLDIRAC_THREADS", "3", 1);
  GradedOps pooled(g, natural_module(g), 3);
  unsetenv("GLDIRAC_THREADS");
  for (int i = 0; i <= 3; ++i) {
    CHECK(serial.d(i) == pooled.d(i));
    CHECK(serial.delta(i) == pooled.delta(i));
    CHECK(serial.omega_g0_delta(i) == pooled.omega_g0_delta(i));
    CHECK(serial.gram(i) == pooled.gram(i));
  }
}

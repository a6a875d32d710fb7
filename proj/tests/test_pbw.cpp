#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gldirac/pbw.hpp"

using namespace gldirac;

namespace {

Rat R(long n, long d = 1) { return frac(n, d); }

TensorElement random_element(const AlgebraContext& g, const PbwOrder& order,
                             std::mt19937& rng) {
  std::uniform_int_distribution<int> id(0, g.dim() - 1), coeff(-3, 3), kind(0, 3);
  TensorElement t(g.odd_dim());
  for (int k = 0; k < 2; ++k) {
    TensorElement gen = u_gen(g, order, id(rng));
    if (kind(rng) == 0)
      gen = w_factor(g, WeylElement::x(g.odd_dim(), 1 + id(rng) % g.odd_dim()));
    t = t + gen.scaled(R(coeff(rng)));
  }
  return t;
}

}  // namespace

TEST_CASE("straightening ground truth on gl(1|1)") {
  AlgebraContext g(1, 1);
  PbwOrder order(g);
  TensorElement del = u_gen(g, order, g.del_id(1));
  TensorElement x = u_gen(g, order, g.x_id(1));
  TensorElement h11 = u_gen(g, order, g.unit_id(1, 1));
  TensorElement h22 = u_gen(g, order, g.unit_id(2, 2));

  // del x = -x del + E11 + E22.
  CHECK(pbw_mul(g, order, del, x) ==
        pbw_mul(g, order, x, del).scaled(R(-1)) + h11 + h22);
  // Odd squares vanish.
  CHECK(pbw_mul(g, order, del, del).is_zero());
  CHECK(pbw_mul(g, order, x, x).is_zero());
  // Commuting diagonals.
  CHECK(pbw_mul(g, order, h11, h22) == pbw_mul(g, order, h22, h11));
  // [E11, del] = del.
  CHECK(pbw_commutator(g, order, h11, del) == del);
}

TEST_CASE("straightening matches structure constants on basis pairs") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    AlgebraContext g(m, n);
    PbwOrder order(g);
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) {
        const int sgn = (g.parity_id(a) && g.parity_id(b)) ? -1 : 1;
        TensorElement lhs = pbw_mul(g, order, u_gen(g, order, a), u_gen(g, order, b)) -
                            pbw_mul(g, order, u_gen(g, order, b), u_gen(g, order, a))
                                .scaled(R(sgn));
        TensorElement rhs(g.odd_dim());
        for (const auto& [id, c] : g.bracket(a, b).c)
          rhs = rhs + u_gen(g, order, id).scaled(c);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("product is associative under re-association") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    AlgebraContext g(m, n);
    PbwOrder order(g);
    std::mt19937 rng(1000 * m + n);
    for (int trial = 0; trial < 200; ++trial) {
      TensorElement a = random_element(g, order, rng);
      TensorElement b = random_element(g, order, rng);
      TensorElement c = random_element(g, order, rng);
      CHECK(pbw_mul(g, order, pbw_mul(g, order, a, b), c) ==
            pbw_mul(g, order, a, pbw_mul(g, order, b, c)));
    }
  }
}

TEST_CASE("diagonal embedding is a homomorphism on g0") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}}) {
    AlgebraContext g(m, n);
    PbwOrder order(g);
    for (int a : g.g0_ids())
      for (int b : g.g0_ids()) {
        SuperElement ea, eb;
        ea.add(a, R(1));
        eb.add(b, R(1));
        TensorElement lhs = diagonal_embed(g, order, g.bracket(ea, eb));
        TensorElement rhs = pbw_commutator(g, order, diagonal_embed(g, order, ea),
                                           diagonal_embed(g, order, eb));
        CHECK(lhs == rhs);
      }
    SuperElement odd;
    odd.add(g.del_id(1), R(1));
    CHECK_THROWS_AS(diagonal_embed(g, order, odd), std::invalid_argument);
  }
}

TEST_CASE("dirac element for gl(1|1)") {
  AlgebraContext g(1, 1);
  PbwOrder order(g);
  TensorElement d = dirac_element(g, order);
  auto strs = d.term_strings(g, order);
  REQUIRE(strs.size() == 2);
  CHECK(strs[0] == "2*E(1,2) (x) x1");
  CHECK(strs[1] == "-2*E(2,1) (x) d1");
  CHECK(d.str(g, order) == "2*E(1,2) (x) x1 - 2*E(2,1) (x) d1");
}

TEST_CASE("d squared closed form on gl(1|1)") {
  AlgebraContext g(1, 1);
  PbwOrder order(g);
  D2Report rep = verify_d_squared(g);
  CHECK(rep.c_constant == 0);
  CHECK(rep.equal);
  CHECK(rep.difference.is_zero());

  // D^2 = -4 E21 E12 (x) 1 - 4 (E11 + E22) (x) x1 d1, frozen by hand.
  TensorElement expect(1);
  const std::vector<int> zero{0}, one{1};
  expect.add_term({{order.pos(g.x_id(1)), 1}, {order.pos(g.del_id(1)), 1}},
                  {zero, zero}, R(-4));
  expect.add_term({{order.pos(g.unit_id(1, 1)), 1}}, {one, one}, R(-4));
  expect.add_term({{order.pos(g.unit_id(2, 2)), 1}}, {one, one}, R(-4));
  CHECK(rep.lhs == expect);
}

TEST_CASE("d squared identity on the larger desk cases") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}, {2, 2}}) {
    AlgebraContext g(m, n);
    D2Report rep = verify_d_squared(g);
    CHECK(rep.equal);
    CHECK(rep.c_constant == R(static_cast<long>(m) * n * (n - m), 2));
  }
}

TEST_CASE("casimir centrality, and the flipped odd sign fails it") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    AlgebraContext g(m, n);
    PbwOrder order(g);
    TensorElement omega = omega_g(g, order);
    for (int id = 0; id < g.dim(); ++id)
      CHECK(pbw_commutator(g, order, omega, u_gen(g, order, id)).is_zero());

    // Same even part, odd part with the opposite sign: not central.
    TensorElement flipped = omega;
    for (int p = 1; p <= g.odd_dim(); ++p) {
      TensorElement xd = pbw_mul(g, order, u_gen(g, order, g.x_id(p)),
                                 u_gen(g, order, g.del_id(p)));
      TensorElement dx = pbw_mul(g, order, u_gen(g, order, g.del_id(p)),
                                 u_gen(g, order, g.x_id(p)));
      flipped = flipped - (xd - dx).scaled(R(4));
    }
    bool central = true;
    for (int id = 0; id < g.dim() && central; ++id)
      central = pbw_commutator(g, order, flipped, u_gen(g, order, id)).is_zero();
    CHECK_FALSE(central);
  }
}

TEST_CASE("diagonal casimir image matches the expanded square form on gl(1|1)") {
  AlgebraContext g(1, 1);
  PbwOrder order(g);
  // Basis is B-orthogonal here, so Omega_{g0 Delta} should equal
  // sum_k (1/B(W_k,W_k)) (W_k^2 (x) 1 + 2 W_k (x) alpha(W_k) + 1 (x) alpha(W_k)^2).
  TensorElement expanded(g.odd_dim());
  for (int k = 1; k <= 2; ++k) {
    const int id = g.unit_id(k, k);
    SuperElement e;
    e.add(id, R(1));
    const Rat inv = 1 / g.form(id, id);
    WeylElement a = alpha(g, e);
    TensorElement w = u_gen(g, order, id);
    TensorElement sq = pbw_mul(g, order, w, w);
    sq = sq + pbw_mul(g, order, w, w_factor(g, a)).scaled(2);
    sq = sq + w_factor(g, a * a);
    expanded = expanded + sq.scaled(inv);
  }
  CHECK(omega_g0_delta(g, order) == expanded);
}

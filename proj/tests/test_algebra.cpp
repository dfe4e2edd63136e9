#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brauer/algebra.hpp"

using namespace brauer;

namespace {

AlgebraElement<DeltaPoly> random_element(int r, int terms, std::mt19937& rng,
                                         const std::vector<BrauerDiagram>& diagrams) {
  AlgebraElement<DeltaPoly> x(r);
  for (int t = 0; t < terms; ++t) {
    int coeff = static_cast<int>(rng() % 9) - 4;
    x.add_term(diagrams[rng() % diagrams.size()], DeltaPoly(coeff));
  }
  return x;
}

}  // namespace

TEST_CASE("product relations with symbolic delta") {
  BrauerAlgebra<DeltaPoly> alg{3, DeltaPoly::delta()};
  auto e1 = alg.e(1);
  SECTION("e_1 e_1 = delta e_1") {
    CHECK(alg.mul(e1, e1) == DeltaPoly::delta() * e1);
  }
  SECTION("e_1 s_2 e_1 = e_1") {
    CHECK(alg.mul(alg.mul(e1, alg.s(2)), e1) == e1);
  }
  SECTION("horizontal arc annihilates the straddling alternating element") {
    // e_{i,j} a(H) = a(H) e_{i,j} = 0 whenever Sym(H) contains the swap (i,j)
    auto a13 = alt_interval<DeltaPoly>(1, 3, 3);
    auto e12 = alg.e(1, 2);
    auto e13 = alg.e(1, 3);
    CHECK(alg.mul(e12, a13).is_zero());
    CHECK(alg.mul(a13, e12).is_zero());
    CHECK(alg.mul(e13, a13).is_zero());
    auto a12 = alt_interval<DeltaPoly>(1, 2, 3);
    CHECK(alg.mul(e12, a12).is_zero());
    CHECK(alg.mul(a12, e12).is_zero());
  }
}

TEST_CASE("presentation relations") {
  CHECK(presentation_check(3));
  CHECK(presentation_check(4));
  SECTION("perturbed relation fails") {
    BrauerAlgebra<DeltaPoly> alg{3, DeltaPoly::delta()};
    // true relation is s_1 e_2 e_1 = s_2 e_1
    CHECK(alg.mul(alg.s(1), alg.e(2), alg.e(1)) != alg.mul(alg.s(1), alg.e(1)));
  }
}

TEST_CASE("alternating interval elements") {
  BrauerAlgebra<DeltaPoly> alg{3, DeltaPoly::delta()};
  SECTION("degenerate interval is the identity") {
    CHECK(alt_interval<DeltaPoly>(1, 1, 3) == alg.one());
    CHECK(alt_interval<DeltaPoly>(3, 2, 3) == alg.one());
  }
  SECTION("two-element interval") {
    CHECK(alt_interval<DeltaPoly>(1, 2, 3) == alg.one() - alg.s(1));
  }
  SECTION("squares to the group order times itself") {
    auto a = alt_interval<DeltaPoly>(1, 3, 3);
    CHECK(a.term_count() == 6);
    CHECK(alg.mul(a, a) == DeltaPoly(6) * a);
  }
  SECTION("absorbs its own permutations with sign") {
    auto a = alt_interval<DeltaPoly>(2, 4, 4);
    BrauerAlgebra<DeltaPoly> alg4{4, DeltaPoly::delta()};
    for (auto [u, v] : {std::pair{2, 3}, {3, 4}, {2, 4}}) {
      auto t = alg4.perm(Permutation::transposition(4, u, v));
      CHECK(alg4.mul(a, t) == DeltaPoly(-1) * a);
      CHECK(alg4.mul(t, a) == DeltaPoly(-1) * a);
    }
  }
  SECTION("double coset split of the full alternator") {
    // a(Sym_m) = a(Sym_{m-1}) - |Sym_{m-2}|^{-1} a(Sym_{m-1}) s_{m-1} a(Sym_{m-1})
    for (int m = 2; m <= 5; ++m) {
      int r = m;
      BrauerAlgebra<DeltaPoly> algm{r, DeltaPoly::delta()};
      auto am = alt_interval<DeltaPoly>(1, m, r);
      auto am1 = alt_interval<DeltaPoly>(1, m - 1, r);
      auto rhs = am1 - DeltaPoly(Rational(1, factorial(m - 2))) *
                           algm.mul(algm.mul(am1, algm.s(m - 1)), am1);
      CHECK(am == rhs);
    }
  }
}

TEST_CASE("star on elements") {
  BrauerAlgebra<DeltaPoly> alg{4, DeltaPoly::delta()};
  auto x = alg.mul(alg.s(1), alg.s(2));
  CHECK(apply_star(x) == alg.mul(alg.s(2), alg.s(1)));

  auto diagrams = all_diagrams(4);
  std::mt19937 rng(5);
  for (int it = 0; it < 20; ++it) {
    auto a = random_element(4, 5, rng, diagrams);
    auto b = random_element(4, 5, rng, diagrams);
    CHECK(apply_star(apply_star(a)) == a);
    CHECK(apply_star(alg.mul(a, b)) == alg.mul(apply_star(b), apply_star(a)));
  }
}

TEST_CASE("multiplication is associative and unital") {
  std::mt19937 rng(17);
  for (int r = 2; r <= 4; ++r) {
    BrauerAlgebra<DeltaPoly> alg{r, DeltaPoly::delta()};
    auto diagrams = all_diagrams(r);
    for (int it = 0; it < 12; ++it) {
      auto a = random_element(r, 3, rng, diagrams);
      auto b = random_element(r, 3, rng, diagrams);
      auto c = random_element(r, 3, rng, diagrams);
      CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
      CHECK(alg.mul(alg.one(), a) == a);
      CHECK(alg.mul(a, alg.one()) == a);
    }
  }
}

TEST_CASE("specialization and modular reduction") {
  BrauerAlgebra<DeltaPoly> sym{2, DeltaPoly::delta()};
  auto x = DeltaPoly::delta() * sym.e(1);
  auto spec = specialize_delta(x, Rational(2));
  BrauerAlgebra<Rational> num{2, Rational(2)};
  CHECK(spec == Rational(2) * num.e(1));

  SECTION("specialization is multiplicative") {
    std::mt19937 rng(23);
    auto diagrams = all_diagrams(3);
    BrauerAlgebra<DeltaPoly> alg{3, DeltaPoly::delta()};
    BrauerAlgebra<Rational> alg2{3, Rational(2)};
    for (int it = 0; it < 15; ++it) {
      auto a = random_element(3, 4, rng, diagrams);
      auto b = random_element(3, 4, rng, diagrams);
      CHECK(specialize_delta(alg.mul(a, b), Rational(2)) ==
            alg2.mul(specialize_delta(a, Rational(2)), specialize_delta(b, Rational(2))));
    }
  }
  SECTION("mod-p reduction is a ring map") {
    std::mt19937 rng(29);
    auto diagrams = all_diagrams(3);
    BrauerAlgebra<Rational> algq{3, Rational(2)};
    BrauerAlgebra<Fp> algp{3, Fp(2, 7)};
    for (int it = 0; it < 15; ++it) {
      AlgebraElement<Rational> a(3), b(3);
      for (int t = 0; t < 4; ++t) {
        a.add_term(diagrams[rng() % diagrams.size()], Rational(static_cast<int>(rng() % 9) - 4));
        b.add_term(diagrams[rng() % diagrams.size()], Rational(static_cast<int>(rng() % 9) - 4));
      }
      CHECK(reduce_mod_p(algq.mul(a, b), 7) == algp.mul(reduce_mod_p(a, 7), reduce_mod_p(b, 7)));
    }
  }
  SECTION("denominator divisible by p rejected") {
    AlgebraElement<Rational> a(2);
    a.add_term(BrauerDiagram::identity(2), Rational(1, 7));
    CHECK_THROWS(reduce_mod_p(a, 7));
    CHECK_THROWS(reduce_mod_p(a, 9));
  }
}

TEST_CASE("coefficient vectors") {
  DiagramBasis basis(2);
  BrauerAlgebra<Rational> alg{2, Rational(2)};
  auto v_one = coefficient_vector(alg.one(), basis);
  int nonzero = 0;
  for (const auto& c : v_one) nonzero += !is_zero(c);
  CHECK(nonzero == 1);
  CHECK(v_one[basis.index_of(BrauerDiagram::identity(2))] == Rational(1));

  CHECK(coefficient_vector(alg.zero(), basis) == std::vector<Rational>(3, Rational(0)));

  auto x = alg.one() - alg.s(1);
  auto v = coefficient_vector(x, basis);
  int plus = 0, minus = 0;
  for (const auto& c : v) {
    if (c == Rational(1)) ++plus;
    if (c == Rational(-1)) ++minus;
  }
  CHECK(plus == 1);
  CHECK(minus == 1);
}

TEST_CASE("ideal spans") {
  BrauerAlgebra<Rational> alg{3, Rational(2)};
  DiagramBasis basis(3);
  SECTION("the unit generates everything") {
    CHECK(ideal_span(alg, {alg.one()}, basis).dim() == 15);
  }
  SECTION("zero generates nothing") {
    CHECK(ideal_span(alg, {alg.zero()}, basis).dim() == 0);
  }
  SECTION("invariance under scaling and permutation sandwich") {
    auto g = alg.e(1) - Rational(2) * alg.s(2);
    auto base = ideal_span(alg, {g}, basis);
    CHECK(subspace_equal(base, ideal_span(alg, {Rational(-7) * g}, basis)));
    auto u = alg.perm(Permutation::from_images({2, 3, 1}));
    auto v = alg.perm(Permutation::from_images({3, 2, 1}));
    CHECK(subspace_equal(base, ideal_span(alg, {alg.mul(alg.mul(u, g), v)}, basis)));
  }
}

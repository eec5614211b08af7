#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pcl/pseudoalg.hpp"

using namespace pcl;

namespace {

PseudoAlgebraPtr boson_n1() {
  auto d = make_abelian(1);
  return build_example_boson(d, {{"u", 0}},
                             {{HopfElement::generator(d, 1)}});
}

PseudoAlgebraPtr fermion_one_odd() {
  auto d = make_abelian(1);
  return build_example_fermion(d, {{"phi", 1}}, {{Rational(1)}});
}

PseudoAlgebraPtr affine_rank1() {
  auto d = make_abelian(1);
  auto g = make_abelian(1);
  return build_example_affine(d, g, {{HopfElement::generator(d, 1)}});
}

LieAlgebraPtr nonabelian_2d() {
  std::vector<std::vector<std::vector<Rational>>> c(
      2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, 0)));
  c[0][1][1] = 1;
  c[1][0][1] = -1;
  return make_lie_algebra(2, c);
}

AlgebraElement random_element(const ModulePtr& mod, std::mt19937_64& rng,
                              int max_atoms, int max_deg) {
  AlgebraElement v(mod);
  int terms = 1 + (int)(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    int n_atoms = (mod->kind == ModuleKind::free_module)
                      ? 1
                      : 1 + (int)(rng() % max_atoms);
    AlgebraElement mono = (mod->kind == ModuleKind::free_module)
                              ? AlgebraElement::zero(mod)
                              : AlgebraElement::unit(mod);
    for (int a = 0; a < n_atoms; ++a) {
      MultiIndex I(mod->hopf->dim, 0);
      int deg = (int)(rng() % (max_deg + 1));
      for (int k = 0; k < deg; ++k) I[rng() % mod->hopf->dim] += 1;
      int g = (int)(rng() % mod->generators.size());
      auto at = AlgebraElement::atom(mod, I, g);
      mono = (mod->kind == ModuleKind::free_module) ? at
                                                    : super_multiply(mono, at);
    }
    long num = (long)(rng() % 7) - 3;
    if (num == 0) num = 2;
    v = v + mono * Rational(num);
  }
  return v;
}

}  // namespace

TEST_CASE("free boson bracket table and lambda image") {
  auto alg = boson_n1();
  auto mod = alg->module;
  auto u = AlgebraElement::generator(mod, 0);
  auto T = bracket(*alg, u, u);

  PseudoTensor expect(mod, 2);
  expect.add_term({{1}}, AlgebraElement::unit(mod));
  CHECK(T == expect);

  auto L = to_lambda_bracket(mod, T);
  REQUIRE(L.coeffs.size() == 1);
  CHECK(L.coeffs.begin()->first == MultiIndex{1});
  CHECK(L.coeffs.begin()->second == -AlgebraElement::unit(mod));
  CHECK(lambda_bracket_str(mod, L) == "-1 * l[1]");
  CHECK(from_lambda_bracket(mod, L) == T);
}

TEST_CASE("free module bracket for one abelian derivation") {
  auto alg = build_example_W_d(make_abelian(1));
  auto mod = alg->module;
  auto a = AlgebraElement::generator(mod, 0);
  auto T = bracket(*alg, a, a);

  PseudoTensor expect(mod, 2);
  expect.add_term({{1}}, a * 2);
  expect.add_term({{0}}, -AlgebraElement::atom(mod, {1}, 0));
  CHECK(T == expect);
}

TEST_CASE("free module bracket is H-bilinear") {
  std::mt19937_64 rng(11);
  for (auto d : {make_abelian(2), nonabelian_2d()}) {
    auto alg = build_example_W_d(d);
    auto mod = alg->module;
    for (int t = 0; t < 20; ++t) {
      MultiIndex If(d->dim, 0), Ig(d->dim, 0);
      for (int k = 0; k < 2; ++k) {
        If[rng() % d->dim] += (int)(rng() % 2);
        Ig[rng() % d->dim] += (int)(rng() % 2);
      }
      int i = (int)(rng() % mod->generators.size());
      int j = (int)(rng() % mod->generators.size());
      auto fa = AlgebraElement::atom(mod, If, i);
      auto gb = AlgebraElement::atom(mod, Ig, j);
      auto lhs = bracket(*alg, fa, gb);
      auto base = bracket(*alg, AlgebraElement::generator(mod, i),
                          AlgebraElement::generator(mod, j));
      auto rhs = act_component(
          HopfElement::monomial(d, If), 1,
          act_component(HopfElement::monomial(d, Ig), 2, base));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("bracket with the empty monomial vanishes") {
  auto alg = boson_n1();
  auto mod = alg->module;
  auto u = AlgebraElement::generator(mod, 0);
  CHECK(bracket(*alg, AlgebraElement::unit(mod), u).is_zero());
  CHECK(bracket(*alg, u, AlgebraElement::unit(mod)).is_zero());
}

TEST_CASE("boson products expand by the Leibniz rule") {
  auto alg = boson_n1();
  auto mod = alg->module;
  auto u = AlgebraElement::generator(mod, 0);
  auto uu = super_multiply(u, u);

  PseudoTensor left(mod, 2);
  left.add_term({{1}}, u * 2);
  CHECK(bracket(*alg, u, uu) == left);

  PseudoTensor right(mod, 2);
  right.add_term({{1}}, u * 2);
  right.add_term({{0}}, AlgebraElement::atom(mod, {1}, 0) * -2);
  CHECK(bracket(*alg, uu, u) == right);
}

TEST_CASE("contact bracket on the Heisenberg side") {
  Rational c(3);
  auto alg = build_example_type_K(1, c);
  auto mod = alg->module;
  auto d = mod->hopf;
  auto e = AlgebraElement::generator(mod, 0);
  auto T = bracket(*alg, e, e);

  PseudoTensor expect(mod, 2);
  expect.add_term({{1, 0, 0}}, e * -3);
  expect.add_term({{0, 0, 0}}, AlgebraElement::atom(mod, {1, 0, 0}, 0));
  expect.add_term({{0, 1, 0}}, AlgebraElement::atom(mod, {0, 0, 1}, 0));
  expect.add_term({{0, 0, 1}}, -AlgebraElement::atom(mod, {0, 1, 0}, 0));
  expect.add_term({{1, 0, 0}}, AlgebraElement::unit(mod) * c);
  CHECK(T == expect);
  (void)d;
}

TEST_CASE("skewsymmetry and Jacobi hold for the example families") {
  std::vector<PseudoAlgebraPtr> algs{
      build_example_W_d(make_abelian(1)),
      build_example_W_d(make_abelian(2)),
      build_example_W_d(nonabelian_2d()),
      boson_n1(),
      fermion_one_odd(),
      affine_rank1(),
      build_example_type_W(make_abelian(1),
                           {{HopfElement::generator(make_abelian(1), 1)}}),
      build_example_type_K(1, Rational(2)),
  };
  for (const auto& alg : algs) {
    CHECK(check_skewsymmetry(*alg).empty());
    CHECK(check_jacobi(*alg).empty());
  }
}

TEST_CASE("Leibniz rules hold for the Poisson families") {
  for (const auto& alg : {boson_n1(), fermion_one_odd(), affine_rank1()}) {
    CHECK(check_leibniz(*alg).empty());
    CHECK(check_right_leibniz(*alg).empty());
  }
}

TEST_CASE("a corrupted table is caught by the checkers") {
  auto d = make_abelian(1);
  auto mod = make_module(d, {{"u", 0}}, ModuleKind::symmetric_algebra);
  PseudoTensor bad(mod, 2);
  bad.add_term({{0}}, AlgebraElement::generator(mod, 0));
  auto alg = make_pseudoalgebra(mod, {{{0, 0}, bad}});
  CHECK(!check_skewsymmetry(*alg).empty());
}

TEST_CASE("missing table entries are completed by skewsymmetry") {
  auto d = make_abelian(1);
  auto mod = make_module(d, {{"u", 0}, {"v", 0}}, ModuleKind::symmetric_algebra);
  PseudoTensor uv(mod, 2);
  uv.add_term({{1}}, AlgebraElement::unit(mod));
  auto alg = make_pseudoalgebra(mod, {{{0, 1}, uv}});
  auto got = alg->table[1][0];
  PseudoTensor expect(mod, 2);
  expect.add_term({{1}}, AlgebraElement::unit(mod));
  CHECK(got == expect);
  CHECK(check_skewsymmetry(*alg).empty());
}

TEST_CASE("chain identity for right and left multiplication") {
  std::mt19937_64 rng(7);
  auto alg = boson_n1();
  auto mod = alg->module;
  auto hopf = mod->hopf;
  for (int t = 0; t < 25; ++t) {
    auto a = random_element(mod, rng, 2, 2);
    auto b = random_element(mod, rng, 2, 2);
    auto c = random_element(mod, rng, 2, 2);
    auto T = bracket(*alg, a, b);

    PseudoTensor lhs =
        -permute_slots({2, 1}, multiply_right_by_V(bracket(*alg, b, a), c));
    PseudoTensor rhs = multiply_left_by_V(c, T);
    PseudoTensor mid(mod, 2);
    for (const auto& [key, e] : T.terms()) {
      HTensor tw = twisted_coproduct_right(HopfElement::monomial(hopf, key[0]));
      for (const auto& [legs, cl] : tw.terms()) {
        auto acted = module_action(HopfElement::monomial(hopf, legs[1]), c);
        mid.add_term({legs[0]}, super_multiply(e, acted) * cl);
      }
    }
    CHECK(lhs == mid);
    CHECK(mid == rhs);
  }
}

TEST_CASE("lambda dictionary round trip on random brackets") {
  std::mt19937_64 rng(23);
  auto d = make_abelian(1);
  auto mod = make_module(d, {{"u", 0}}, ModuleKind::symmetric_algebra);
  for (int t = 0; t < 50; ++t) {
    PseudoTensor T(mod, 2);
    int terms = 1 + (int)(rng() % 3);
    for (int s = 0; s < terms; ++s) {
      MultiIndex I{(int)(rng() % 4)};
      T.add_term({I}, random_element(mod, rng, 2, 2));
    }
    CHECK(from_lambda_bracket(mod, to_lambda_bracket(mod, T)) == T);
  }
}

TEST_CASE("the lambda dictionary rejects nonabelian coefficients") {
  auto alg = build_example_type_K(1, Rational(0));
  auto mod = alg->module;
  auto T = bracket(*alg, AlgebraElement::generator(mod, 0),
                   AlgebraElement::generator(mod, 0));
  CHECK_THROWS_AS(to_lambda_bracket(mod, T), error);
}

TEST_CASE("builders validate their bilinear forms") {
  auto d = make_abelian(2);
  auto zero = HopfElement::zero(d);
  auto d1 = HopfElement::generator(d, 1);
  auto d2 = HopfElement::generator(d, 2);
  CHECK_THROWS_AS(
      build_example_boson(d, {{"u", 0}, {"v", 0}}, {{zero, d1}, {d2, zero}}),
      error);
  CHECK_THROWS_AS(
      build_example_boson(d, {{"u", 0}},
                          {{pbw_multiply(d1, d1)}}),
      error);
  CHECK_THROWS_AS(
      build_example_fermion(d, {{"u", 0}}, {{Rational(1)}}), error);
  CHECK_THROWS_AS(
      build_example_affine(d, make_abelian(2), {{zero, d1}, {d2, zero}}),
      error);
  auto nab = nonabelian_2d();
  auto e1 = HopfElement::generator(nab, 1);
  CHECK_THROWS_AS(
      build_example_type_W(nab, {{e1, zero}, {zero, e1}}), error);
  CHECK_THROWS_AS(build_example_type_K(0, Rational(1)), error);
}

TEST_CASE("table values must match generator parities") {
  auto d = make_abelian(1);
  auto mod = make_module(d, {{"u", 0}, {"phi", 1}},
                         ModuleKind::symmetric_algebra);
  PseudoTensor bad(mod, 2);
  bad.add_term({{0}}, AlgebraElement::unit(mod));
  CHECK_THROWS_AS(make_pseudoalgebra(mod, {{{0, 1}, bad}}), error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pcl/hopf.hpp"

using namespace pcl;

namespace {

HopfElement random_element(const LieAlgebraPtr& alg, std::mt19937_64& rng,
                           int max_deg, int n_terms) {
  HopfElement h(alg);
  for (int t = 0; t < n_terms; ++t) {
    MultiIndex I(alg->dim, 0);
    int deg = (int)(rng() % (max_deg + 1));
    for (int d = 0; d < deg; ++d) I[rng() % alg->dim] += 1;
    long num = (long)(rng() % 9) - 4;
    long den = 1 + (long)(rng() % 3);
    if (num == 0) num = 1;
    h = h + HopfElement::monomial(alg, I, rational(num, den));
  }
  return h;
}

}  // namespace

TEST_CASE("pbw straightening in the rank-1 Heisenberg algebra") {
  auto alg = make_heisenberg(1);  // d1 central, [d2, d3] = d1
  auto d1 = HopfElement::generator(alg, 1);
  auto d2 = HopfElement::generator(alg, 2);
  auto d3 = HopfElement::generator(alg, 3);

  // d3 * d2 = d2 d3 - d1.
  auto prod = pbw_multiply(d3, d2);
  auto expected = HopfElement::monomial(alg, {0, 1, 1}) - d1;
  CHECK(prod == expected);

  // d2 * d3 is already normal.
  CHECK(pbw_multiply(d2, d3) == HopfElement::monomial(alg, {0, 1, 1}));

  // d3^2 * d2^2 = d2^2 d3^2 - 4 d1 d2 d3 + 2 d1^2.
  auto d3sq = pbw_multiply(d3, d3);
  auto d2sq = pbw_multiply(d2, d2);
  auto lhs = pbw_multiply(d3sq, d2sq);
  auto rhs = HopfElement::monomial(alg, {0, 2, 2}) -
             HopfElement::monomial(alg, {1, 1, 1}, 4) +
             HopfElement::monomial(alg, {2, 0, 0}, 2);
  CHECK(lhs == rhs);
}

TEST_CASE("pbw product is associative and unital") {
  std::mt19937_64 rng(7);
  for (const auto& alg : {make_abelian(2), make_heisenberg(1)}) {
    auto one = HopfElement::one(alg);
    for (int it = 0; it < 20; ++it) {
      auto a = random_element(alg, rng, 3, 2);
      auto b = random_element(alg, rng, 3, 2);
      auto c = random_element(alg, rng, 3, 2);
      CHECK(pbw_multiply(pbw_multiply(a, b), c) ==
            pbw_multiply(a, pbw_multiply(b, c)));
      CHECK(pbw_multiply(one, a) == a);
      CHECK(pbw_multiply(a, one) == a);
    }
  }
}

TEST_CASE("coproduct of generators and powers") {
  auto alg = make_abelian(1);
  auto d = HopfElement::generator(alg, 1);

  // Delta(d) = d x 1 + 1 x d.
  HTensor expected(alg, 2);
  expected.add_term({{1}, {0}}, 1);
  expected.add_term({{0}, {1}}, 1);
  CHECK(coproduct(d) == expected);

  // Delta(d^2) = d^2 x 1 + 2 d x d + 1 x d^2.
  auto dsq = HopfElement::monomial(alg, {2});
  HTensor expected2(alg, 2);
  expected2.add_term({{2}, {0}}, 1);
  expected2.add_term({{1}, {1}}, 2);
  expected2.add_term({{0}, {2}}, 1);
  CHECK(coproduct(dsq) == expected2);
}

TEST_CASE("coproduct is an algebra homomorphism") {
  std::mt19937_64 rng(11);
  for (const auto& alg : {make_abelian(3), make_heisenberg(1)}) {
    for (int it = 0; it < 15; ++it) {
      auto a = random_element(alg, rng, 3, 2);
      auto b = random_element(alg, rng, 3, 2);
      CHECK(coproduct(pbw_multiply(a, b)) ==
            htensor_multiply(coproduct(a), coproduct(b)));
    }
  }
}

TEST_CASE("coassociativity and cocommutativity") {
  std::mt19937_64 rng(13);
  for (const auto& alg : {make_abelian(2), make_heisenberg(1)}) {
    for (int it = 0; it < 10; ++it) {
      auto h = random_element(alg, rng, 4, 3);
      auto d3 = iterated_coproduct(h, 2);
      // (Delta x id)Delta = (id x Delta)Delta = Delta^(2).
      HTensor left(alg, 3), right(alg, 3);
      auto dh = coproduct(h);
      for (const auto& [k, c] : dh.terms()) {
        auto dl = coproduct(HopfElement::monomial(alg, k[0]));
        for (const auto& [k2, c2] : dl.terms())
          left.add_term({k2[0], k2[1], k[1]}, c * c2);
        auto dr = coproduct(HopfElement::monomial(alg, k[1]));
        for (const auto& [k2, c2] : dr.terms())
          right.add_term({k[0], k2[0], k2[1]}, c * c2);
      }
      CHECK(left == d3);
      CHECK(right == d3);
      // Cocommutativity.
      CHECK(htensor_permute(coproduct(h), {2, 1}) == coproduct(h));
    }
  }
}

TEST_CASE("iterated coproduct edge cases") {
  auto alg = make_abelian(1);
  auto h = HopfElement::monomial(alg, {2}, 3) + HopfElement::one(alg);
  // n = 0 is the identity.
  HTensor id1(alg, 1);
  id1.add_term({{2}}, 3);
  id1.add_term({{0}}, 1);
  CHECK(iterated_coproduct(h, 0) == id1);
  // n = -1 is the counit.
  CHECK(iterated_coproduct(h, -1) == HTensor::scalar(alg, 1));
  CHECK(counit(h) == Rational(1));
  CHECK_THROWS_AS(iterated_coproduct(h, -2), error);
}

TEST_CASE("antipode values and properties") {
  auto ab = make_abelian(1);
  auto d = HopfElement::generator(ab, 1);
  CHECK(antipode(d) == -d);
  // Abelian: S(d^k) = (-1)^k d^k.
  CHECK(antipode(HopfElement::monomial(ab, {3})) ==
        HopfElement::monomial(ab, {3}, -1));
  CHECK(antipode(HopfElement::monomial(ab, {4})) ==
        HopfElement::monomial(ab, {4}));

  // Heisenberg: S(d2 d3) = d2 d3 - d1.
  auto heis = make_heisenberg(1);
  auto d23 = HopfElement::monomial(heis, {0, 1, 1});
  CHECK(antipode(d23) == d23 - HopfElement::generator(heis, 1));

  std::mt19937_64 rng(17);
  for (const auto& alg : {make_abelian(2), make_heisenberg(1)}) {
    for (int it = 0; it < 15; ++it) {
      auto a = random_element(alg, rng, 3, 2);
      auto b = random_element(alg, rng, 3, 2);
      // Anti-homomorphism and involution (cocommutative case).
      CHECK(antipode(pbw_multiply(a, b)) ==
            pbw_multiply(antipode(b), antipode(a)));
      CHECK(antipode(antipode(a)) == a);
    }
  }
}

TEST_CASE("twisted coproducts and the antipode identities") {
  auto alg = make_abelian(1);
  auto d = HopfElement::generator(alg, 1);
  // d_(1) x d_(-2) = d x 1 - 1 x d.
  HTensor expected(alg, 2);
  expected.add_term({{1}, {0}}, 1);
  expected.add_term({{0}, {1}}, -1);
  CHECK(twisted_coproduct_right(d) == expected);
  HTensor expectedl(alg, 2);
  expectedl.add_term({{1}, {0}}, -1);
  expectedl.add_term({{0}, {1}}, 1);
  CHECK(twisted_coproduct_left(d) == expectedl);

  std::mt19937_64 rng(19);
  for (const auto& a : {make_abelian(2), make_heisenberg(1)}) {
    for (int it = 0; it < 15; ++it) {
      auto h = random_element(a, rng, 4, 3);
      // eps(h) = h_(-1) h_(2) = h_(1) h_(-2): contract both twisted coproducts.
      HopfElement contract_r(a), contract_l(a);
      auto twr = twisted_coproduct_right(h);
      auto twl = twisted_coproduct_left(h);
      for (const auto& [k, c] : twr.terms())
        contract_r = contract_r + pbw_multiply(HopfElement::monomial(a, k[0]),
                                               HopfElement::monomial(a, k[1])) *
                                      c;
      for (const auto& [k, c] : twl.terms())
        contract_l = contract_l + pbw_multiply(HopfElement::monomial(a, k[0]),
                                               HopfElement::monomial(a, k[1])) *
                                      c;
      auto eps = HopfElement::one(a) * counit(h);
      CHECK(contract_r == eps);
      CHECK(contract_l == eps);

      // h = eps(h_(1)) h_(2).
      HopfElement recon(a);
      auto dh = coproduct(h);
      for (const auto& [k, c] : dh.terms())
        recon = recon + HopfElement::monomial(a, k[1]) *
                            (c * counit(HopfElement::monomial(a, k[0])));
      CHECK(recon == h);

      // h_(-1) h_(2) x h_(3) = 1 x h = h_(1) h_(-2) x h_(3).
      HTensor lhs1(a, 2), lhs2(a, 2);
      auto d2h = iterated_coproduct(h, 2);
      for (const auto& [k, c] : d2h.terms()) {
        auto s0 = antipode(HopfElement::monomial(a, k[0]));
        auto p0 = pbw_multiply(s0, HopfElement::monomial(a, k[1]));
        for (const auto& [J, cj] : p0.terms()) lhs1.add_term({J, k[2]}, c * cj);
        auto s1 = antipode(HopfElement::monomial(a, k[1]));
        auto p1 = pbw_multiply(HopfElement::monomial(a, k[0]), s1);
        for (const auto& [J, cj] : p1.terms()) lhs2.add_term({J, k[2]}, c * cj);
      }
      HTensor one_h(a, 2);
      for (const auto& [I, c] : h.terms())
        one_h.add_term({MultiIndex(a->dim, 0), I}, c);
      CHECK(lhs1 == one_h);
      CHECK(lhs2 == one_h);

      // h_(1) x h_(-2) h_(3) = h x 1 = h_(1) x h_(2) h_(-3).
      HTensor rhs1(a, 2), rhs2(a, 2);
      for (const auto& [k, c] : d2h.terms()) {
        auto s1 = antipode(HopfElement::monomial(a, k[1]));
        auto p1 = pbw_multiply(s1, HopfElement::monomial(a, k[2]));
        for (const auto& [J, cj] : p1.terms()) rhs1.add_term({k[0], J}, c * cj);
        auto s2 = antipode(HopfElement::monomial(a, k[2]));
        auto p2 = pbw_multiply(HopfElement::monomial(a, k[1]), s2);
        for (const auto& [J, cj] : p2.terms()) rhs2.add_term({k[0], J}, c * cj);
      }
      HTensor h_one(a, 2);
      for (const auto& [I, c] : h.terms())
        h_one.add_term({I, MultiIndex(a->dim, 0)}, c);
      CHECK(rhs1 == h_one);
      CHECK(rhs2 == h_one);
    }
  }
}

TEST_CASE("iterated coproduct satisfies the recursion") {
  std::mt19937_64 rng(23);
  for (const auto& alg : {make_abelian(2), make_heisenberg(1)}) {
    for (int it = 0; it < 8; ++it) {
      auto h = random_element(alg, rng, 3, 2);
      for (int n = 2; n <= 3; ++n) {
        // (Delta^(n-1) x id)Delta = Delta^(n).
        HTensor built(alg, n + 1);
        auto dh = coproduct(h);
        for (const auto& [k, c] : dh.terms()) {
          auto inner = iterated_coproduct(HopfElement::monomial(alg, k[0]), n - 1);
          for (const auto& [k2, c2] : inner.terms()) {
            auto key = k2;
            key.push_back(k[1]);
            built.add_term(key, c * c2);
          }
        }
        CHECK(built == iterated_coproduct(h, n));
      }
    }
  }
}

TEST_CASE("tensor permutation is a right action") {
  auto alg = make_abelian(2);
  std::mt19937_64 rng(29);
  HTensor t(alg, 3);
  t.add_term({{1, 0}, {0, 2}, {1, 1}}, 2);
  t.add_term({{0, 1}, {1, 0}, {0, 0}}, rational(-1, 3));
  std::vector<int> s1 = {2, 3, 1}, s2 = {1, 3, 2};
  // Applying s1 then s2 composes as (s2 s1)(i) = s2(s1(i)).
  std::vector<int> s12(3);
  for (int i = 0; i < 3; ++i) s12[i] = s2[s1[i] - 1];
  CHECK(htensor_permute(htensor_permute(t, s1), s2) == htensor_permute(t, s12));
}

TEST_CASE("lie algebra validation") {
  CHECK_THROWS_AS(make_lie_algebra(1, {{{Rational(1)}}}), error);  // not antisym
  // [d1,d2]=d2 is a valid 2-dim nonabelian Lie algebra.
  std::vector<std::vector<std::vector<Rational>>> c(
      2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, 0)));
  c[0][1][1] = 1;
  c[1][0][1] = -1;
  auto alg = make_lie_algebra(2, c);
  CHECK(!alg->is_abelian());
  auto d1 = HopfElement::generator(alg, 1);
  auto d2 = HopfElement::generator(alg, 2);
  CHECK(pbw_multiply(d2, d1) == HopfElement::monomial(alg, {1, 1}) - d2);
}

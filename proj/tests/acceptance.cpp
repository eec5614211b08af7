// Acceptance suite: one test case per criterion, each printing a single
// [PASS]/[FAIL] line. All arithmetic is exact rational, so every comparison
// below is exact equality; the tolerance is pinned to zero.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "pcl/io.hpp"

using namespace pcl;

namespace {

void report(int n, const char* desc, bool ok) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << desc
            << "\n";
  CHECK(ok);
}

HopfElement random_hopf(const LieAlgebraPtr& alg, std::mt19937_64& rng,
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

Graph random_forest(std::mt19937_64& rng, int n) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> edges;
  int attempts = 2 * n;
  while (attempts-- > 0 && (int)edges.size() < n - 1) {
    if (n < 2) break;
    int a = 1 + (int)(rng() % n), b = 1 + (int)(rng() % n);
    if (a == b) continue;
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    parent[ra] = rb;
    if (rng() % 3) edges.push_back({a, b});
  }
  return Graph{n, edges};
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[(int)(rng() % (i + 1))]);
  return p;
}

std::vector<int> random_composition(std::mt19937_64& rng, int total) {
  std::vector<int> parts;
  while (total > 0) {
    int p = 1 + (int)(rng() % total);
    parts.push_back(p);
    total -= p;
  }
  return parts;
}

PseudoAlgebraPtr boson_n1() {
  auto d = make_abelian(1);
  return build_example_boson(d, {{"u", 0}}, {{HopfElement::generator(d, 1)}});
}

PseudoAlgebraPtr fermion_one_odd() {
  auto d = make_abelian(1);
  return build_example_fermion(d, {{"phi", 1}}, {{Rational(1)}});
}

PseudoAlgebraPtr affine_rank1() {
  auto d = make_abelian(1);
  return build_example_affine(d, make_abelian(1),
                              {{HopfElement::generator(d, 1)}});
}

// Skewsymmetric table violating only Jacobi: [u_lambda v] = (del + 2 lambda)v
// with zero diagonal brackets.
PseudoAlgebraPtr jacobi_breaker() {
  auto d = make_abelian(1);
  auto mod =
      make_module(d, {{"u", 0}, {"v", 0}}, ModuleKind::symmetric_algebra);
  AlgebraElement v = AlgebraElement::generator(mod, 1);
  LambdaBracket L;
  L.coeffs[{0}] = module_action(HopfElement::generator(d, 1), v);
  L.coeffs[{1}] = v * 2;
  PseudoTensor T = from_lambda_bracket(mod, L);
  PseudoTensor Z = PseudoTensor::zero(mod, 2);
  return make_pseudoalgebra(mod, {{{0, 0}, Z}, {{1, 1}, Z}, {{0, 1}, T}});
}

AlgebraElement random_module_element(const ModulePtr& mod,
                                     std::mt19937_64& rng, int max_atoms) {
  AlgebraElement e(mod);
  int n = 1 + (int)(rng() % max_atoms);
  for (int t = 0; t < n; ++t) {
    long c = (long)(rng() % 7) - 3;
    if (c == 0) c = 1;
    MultiIndex I{(int)(rng() % 3)};
    AlgebraElement a = AlgebraElement::atom(mod, I, (int)(rng() % mod->generators.size()), c);
    if (mod->kind == ModuleKind::symmetric_algebra && rng() % 2)
      a = super_multiply(a, AlgebraElement::generator(mod, 0));
    e = e + a;
  }
  return e;
}

}  // namespace

TEST_CASE("criterion 1") {
  std::mt19937_64 rng(20260823);
  bool ok = true;
  int count = 0;
  std::vector<LieAlgebraPtr> algs = {make_abelian(1), make_abelian(2),
                                     make_abelian(3), make_heisenberg(1)};
  for (const auto& alg : algs) {
    for (int it = 0; it < 50; ++it) {
      auto h = random_hopf(alg, rng, 4, 3);
      auto b = random_hopf(alg, rng, 4, 2);
      ++count;
      auto d3 = iterated_coproduct(h, 2);
      HTensor left(alg, 3), right(alg, 3);
      HopfElement keep_l(alg), keep_r(alg), fold_l(alg), fold_r(alg);
      HTensor dh = coproduct(h);
      for (const auto& [k, c] : dh.terms()) {
        auto m0 = HopfElement::monomial(alg, k[0]);
        auto m1 = HopfElement::monomial(alg, k[1]);
        auto dl = coproduct(m0);
        for (const auto& [k2, c2] : dl.terms())
          left.add_term({k2[0], k2[1], k[1]}, c * c2);
        auto dr = coproduct(m1);
        for (const auto& [k2, c2] : dr.terms())
          right.add_term({k[0], k2[0], k2[1]}, c * c2);
        keep_l = keep_l + m1 * (c * counit(m0));
        keep_r = keep_r + m0 * (c * counit(m1));
        fold_l = fold_l + pbw_multiply(antipode(m0), m1) * c;
        fold_r = fold_r + pbw_multiply(m0, antipode(m1)) * c;
      }
      ok = ok && left == d3 && right == d3;                    // coassociativity
      ok = ok && htensor_permute(dh, {2, 1}) == dh;            // cocommutativity
      ok = ok && keep_l == h && keep_r == h;                   // counit axiom
      auto eps1 = HopfElement::one(alg) * counit(h);
      ok = ok && fold_l == eps1 && fold_r == eps1;             // antipode axiom
      ok = ok && antipode(pbw_multiply(h, b)) ==
                     pbw_multiply(antipode(b), antipode(h));
      ok = ok && antipode(antipode(h)) == h;
    }
  }
  ok = ok && count == 200;
  report(1, "Hopf coalgebra and antipode identities on 200 random elements",
         ok);
}

TEST_CASE("criterion 2") {
  bool ok = enumerate_acyclic(2).size() == 3 && enumerate_acyclic(3).size() == 19;
  auto g10 = parse_graph("10; 1->4, 2->3, 4->5, 5->8, 6->10, 8->9");
  auto co = cocompose(g10, {2, 4, 1, 3});
  ok = ok && co.outer == parse_graph("4; 1->2, 1->2, 2->4, 2->4") &&
       co.inner.size() == 4 && co.inner[0] == parse_graph("2;") &&
       co.inner[1] == parse_graph("4; 2->3") &&
       co.inner[2] == parse_graph("1;") &&
       co.inner[3] == parse_graph("3; 1->2");
  for (int k = 1; k <= 10; ++k) {
    auto ext = externally_connected(g10, {2, 4, 1, 3}, k);
    auto want =
        (k == 7 || k == 9) ? std::vector<int>{} : std::vector<int>{1, 2, 4};
    ok = ok && ext == want;
  }
  ok = ok && permute_graph(parse_graph("5; 1->2, 1->3, 4->1, 5->4"),
                           {2, 1, 5, 3, 4}) ==
                 parse_graph("5; 2->1, 2->5, 3->2, 4->3");
  ok = ok && induced_component_permutation(parse_graph("5; 1->3, 2->4"),
                                           {4, 3, 2, 5, 1}) ==
                 std::vector<int>{3, 1, 2};
  auto rho = rho_permutation(parse_graph("7; 1->5, 3->4, 6->7"), 4, 3);
  ok = ok && rho && rho->s == 3 && rho->t == 2 && rho->q == 1 &&
       rho->rho == std::vector<int>{3, 1, 4, 2};
  report(2, "graph golden examples bit-exact and acyclic counts 3/19", ok);
}

TEST_CASE("criterion 3") {
  std::mt19937_64 rng(31);
  bool ok = true;
  for (int inst = 0; inst < 500; ++inst) {
    int n = 2 + (int)(rng() % 7);
    Graph g = random_forest(rng, n);

    // Two-level coassociativity.
    auto l = random_composition(rng, n);
    int M = (int)l.size();
    auto m = random_composition(rng, M);
    std::vector<int> K;
    {
      int pos = 0;
      for (int mi : m) {
        int s = 0;
        for (int t = 0; t < mi; ++t) s += l[pos++];
        K.push_back(s);
      }
    }
    auto fine = cocompose(g, l);
    auto coarse = cocompose(g, K);
    auto two = cocompose(fine.outer, m);
    ok = ok && two.outer == coarse.outer;
    int pos = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      std::vector<int> slice(l.begin() + pos, l.begin() + pos + m[i]);
      auto inner_co = cocompose(coarse.inner[i], slice);
      ok = ok && two.inner[i] == inner_co.outer;
      for (int j = 0; j < m[i]; ++j)
        ok = ok && fine.inner[pos + j] == inner_co.inner[j];
      pos += m[i];
    }

    // Coequivariance.
    auto q = random_composition(rng, n);
    int k = (int)q.size();
    auto sigma = random_perm(rng, k);
    std::vector<int> sigma_inv(k);
    for (int i = 1; i <= k; ++i) sigma_inv[sigma[i - 1] - 1] = i;
    std::vector<std::vector<int>> taus;
    for (int qi : q) taus.push_back(random_perm(rng, qi));
    auto co = cocompose(g, q);
    auto full = block_permutation(sigma, taus);
    std::vector<int> q_perm(k);
    for (int j = 1; j <= k; ++j) q_perm[j - 1] = q[sigma_inv[j - 1] - 1];
    auto co2 = cocompose(permute_graph(g, full), q_perm);
    ok = ok && co2.outer == permute_graph(co.outer, sigma);
    for (int j = 1; j <= k; ++j) {
      int src = sigma_inv[j - 1];
      ok = ok && co2.inner[j - 1] ==
                     permute_graph(co.inner[src - 1], taus[src - 1]);
    }

    // Edge-count bijection.
    int total = co.outer.n_edges();
    for (const auto& gi : co.inner) total += gi.n_edges();
    ok = ok && total == (int)g.n_edges();

    // Component count of the clasped graph.
    int k0 = 1 + (int)(rng() % n);
    int mlen = 1 + (int)(rng() % (n - k0 + 1));
    auto rd = rho_permutation(g, k0, mlen);
    if (rd)
      ok = ok && (int)connected_components(g).size() == rd->s + rd->t - 1;
  }
  report(3, "cooperad coassociativity/coequivariance on 500 random instances",
         ok);
}

TEST_CASE("criterion 4") {
  bool ok = true;
  int instances = 0;
  auto boson = boson_n1();
  auto wd = build_example_W_d(make_abelian(1));
  for (const auto& alg : {boson, wd}) {
    auto mod = alg->module;
    HopfElement del = HopfElement::generator(mod->hopf, 1);
    OperadElement master = mod->kind == ModuleKind::symmetric_algebra
                               ? poisson_to_master(alg)
                               : lie_master(alg);
    OperadElement id = OperadElement::identity(mod);
    OperadElement D(mod, 1, 0,
                    [del](const Graph&, const std::vector<AlgebraElement>& v) {
                      return PseudoTensor::from_element(module_action(del, v[0]));
                    });
    OperadElement cls =
        OperadElement::from_class(AlgebraElement::generator(mod, 0));
    std::vector<OperadElement> pool = {master, id, D, cls};
    auto probes = probe_elements(mod, 2);
    auto tuples_of = [&](int arity) { return probe_tuples(probes, arity); };

    // Unity.
    for (const auto& Y : pool) {
      if (Y.arity() == 0) continue;
      auto tuples = tuples_of(Y.arity());
      ok = ok && check_equal(circle(id, Y, 1), Y, tuples).empty();
      ++instances;
      for (int k = 1; k <= Y.arity(); ++k) {
        ok = ok && check_equal(circle(Y, id, k), Y, tuples).empty();
        ++instances;
      }
    }

    // Associativity, nested slots: (Z o_i Y) o_{i+j-1} X = Z o_i (Y o_j X).
    for (const auto& Z : pool) {
      if (Z.arity() == 0) continue;
      for (const auto& Y : pool) {
        if (Y.arity() == 0) continue;
        for (const auto& X : pool) {
          int res = Z.arity() + Y.arity() + X.arity() - 2;
          if (res > 3 || res < 0) continue;
          auto tuples = tuples_of(res);
          for (int i = 1; i <= Z.arity(); ++i)
            for (int j = 1; j <= Y.arity(); ++j) {
              ok = ok && check_equal(circle(circle(Z, Y, i), X, i + j - 1),
                                     circle(Z, circle(Y, X, j), i), tuples)
                             .empty();
              ++instances;
            }
        }
      }
    }

    // Associativity, disjoint slots:
    // (Z o_i Y) o_j X = (-1)^{p(Y)p(X)} (Z o_j X) o_{i+arity(X)-1} Y, j < i.
    for (const auto& Y : pool) {
      for (const auto& X : pool) {
        int res = 2 + Y.arity() + X.arity() - 2;
        if (res > 3) continue;
        auto tuples = tuples_of(res);
        Rational sign = ((Y.parity() * X.parity()) % 2) ? -1 : 1;
        ok = ok &&
             check_equal(circle(circle(master, Y, 2), X, 1),
                         circle(circle(master, X, 1), Y, 1 + X.arity()) * sign,
                         tuples)
                 .empty();
        ++instances;
      }
    }

    // Equivariance: Y^sigma o_i X^tau = (Y o_{sigma(i)} X)^{sigma o_i tau}.
    std::vector<int> swap2{2, 1}, id2{1, 2}, id1{1};
    for (const auto& X : {master, D}) {
      std::vector<std::vector<int>> xperms =
          X.arity() == 2 ? std::vector<std::vector<int>>{id2, swap2}
                         : std::vector<std::vector<int>>{id1};
      for (const auto& sigma : {id2, swap2})
        for (const auto& tau : xperms)
          for (int i = 1; i <= 2; ++i) {
            std::vector<std::vector<int>> taus{{1}, {1}};
            taus[i - 1] = tau;
            auto lhs = circle(symmetric_action(master, sigma),
                              symmetric_action(X, tau), i);
            auto rhs = symmetric_action(circle(master, X, sigma[i - 1]),
                                        block_permutation(sigma, taus));
            ok = ok && check_equal(lhs, rhs, tuples_of(lhs.arity())).empty();
            ++instances;
          }
    }
  }
  ok = ok && instances >= 100;
  report(4, "operad unity/associativity/equivariance on 100+ instances", ok);
}

TEST_CASE("criterion 5") {
  bool ok = true;
  auto nonab = make_lie_algebra(
      2, {{{0, 0}, {0, 1}}, {{0, -1}, {0, 0}}});  // [d1,d2] = d2
  std::vector<PseudoAlgebraPtr> algs = {
      build_example_W_d(make_abelian(1)),
      build_example_W_d(make_abelian(2)),
      build_example_W_d(nonab),
      boson_n1(),
      fermion_one_odd(),
      affine_rank1(),
      build_example_type_W(make_abelian(1),
                           {{HopfElement::generator(make_abelian(1), 1)}}),
      build_example_type_K(1, 1)};
  for (const auto& a : algs)
    ok = ok && check_skewsymmetry(*a).empty() && check_jacobi(*a).empty();
  report(5, "skewsymmetry and Jacobi exact on all built-in families", ok);
}

TEST_CASE("criterion 6") {
  bool ok = true;
  std::vector<PseudoAlgebraPtr> algs = {boson_n1(), fermion_one_odd(),
                                        affine_rank1()};
  for (const auto& alg : algs) {
    ok = ok && check_leibniz(*alg).empty() && check_right_leibniz(*alg).empty();

    // Iterated Leibniz on products of up to two atoms.
    auto mod = alg->module;
    HopfElement del = HopfElement::generator(mod->hopf, 1);
    AlgebraElement g0 = AlgebraElement::generator(mod, 0);
    std::vector<AlgebraElement> atoms = {g0, module_action(del, g0)};
    std::vector<std::vector<AlgebraElement>> lists;
    for (const auto& a : atoms) lists.push_back({a});
    for (const auto& a : atoms)
      for (const auto& b : atoms)
        if (!super_multiply(a, b).is_zero()) lists.push_back({a, b});
    auto parity_of = [](const AlgebraElement& e) { return e.parity(); };
    for (const auto& as : lists)
      for (const auto& bs : lists) {
        AlgebraElement A = AlgebraElement::unit(mod), B = A;
        for (const auto& a : as) A = super_multiply(A, a);
        for (const auto& b : bs) B = super_multiply(B, b);
        PseudoTensor lhs = bracket(*alg, A, B);
        PseudoTensor rhs = PseudoTensor::zero(mod, 2);
        for (size_t i = 0; i < as.size(); ++i)
          for (size_t j = 0; j < bs.size(); ++j) {
            int e = 0;
            for (size_t t = i + 1; t < as.size(); ++t)
              e += parity_of(as[i]) * parity_of(as[t]);
            for (size_t t = 0; t < j; ++t)
              e += parity_of(bs[j]) * parity_of(bs[t]);
            AlgebraElement arest = AlgebraElement::unit(mod);
            for (size_t t = 0; t < as.size(); ++t)
              if (t != i) arest = super_multiply(arest, as[t]);
            AlgebraElement brest = AlgebraElement::unit(mod);
            for (size_t t = 0; t < bs.size(); ++t)
              if (t != j) brest = super_multiply(brest, bs[t]);
            PseudoTensor term = multiply_right_by_V(
                multiply_left_by_V(arest, bracket(*alg, as[i], bs[j])), brest);
            rhs = rhs + term * ((e % 2) ? Rational(-1) : Rational(1));
          }
        ok = ok && lhs == rhs;
      }
  }

  // Mixed-product chain identity (aB)c = a(Bc) on random instances.
  std::mt19937_64 rng(61);
  auto mod = boson_n1()->module;
  int chain = 0;
  for (int it = 0; it < 100; ++it) {
    std::vector<std::pair<HTensor, AlgebraElement>> raw;
    int terms = 1 + (int)(rng() % 2);
    for (int t = 0; t < terms; ++t)
      raw.emplace_back(
          HTensor::monomial(mod->hopf,
                            {{(int)(rng() % 3)}, {(int)(rng() % 3)}},
                            (long)(rng() % 5) + 1),
          random_module_element(mod, rng, 2));
    PseudoTensor B = normalize(mod, raw);
    AlgebraElement a = random_module_element(mod, rng, 2);
    AlgebraElement c = random_module_element(mod, rng, 2);
    ok = ok && multiply_right_by_V(multiply_left_by_V(a, B), c) ==
                   multiply_left_by_V(a, multiply_right_by_V(B, c));
    ++chain;
  }
  ok = ok && chain == 100;
  report(6, "Leibniz rules, iterated Leibniz, and mixed-product chain identity",
         ok);
}

TEST_CASE("criterion 7") {
  bool ok = check_master(boson_n1()).empty() &&
            check_master(fermion_one_odd()).empty() &&
            check_master(affine_rank1()).empty();
  auto broken = jacobi_breaker();
  ok = ok && check_skewsymmetry(*broken).empty() &&
       !check_jacobi(*broken).empty();
  auto failures = check_master(broken);
  ok = ok && !failures.empty();
  // A Jacobi corruption must fire on the edgeless orbit and nowhere else.
  for (const auto& f : failures) ok = ok && f.graph == "3;";
  report(7, "master equation on all 19 acyclic 3-graphs with negative control",
         ok);
}

TEST_CASE("criterion 8") {
  std::mt19937_64 rng(81);
  auto mod = boson_n1()->module;
  bool ok = true;
  int count = 0;
  for (int it = 0; it < 100; ++it) {
    LambdaBracket L;
    int n = 1 + (int)(rng() % 4);
    for (int t = 0; t < n; ++t) {
      MultiIndex key{(int)(rng() % 4)};
      auto cur =
          L.coeffs.count(key) ? L.coeffs[key] : AlgebraElement::zero(mod);
      auto next = cur + random_module_element(mod, rng, 2);
      if (next.is_zero())
        L.coeffs.erase(key);
      else
        L.coeffs[key] = next;
    }
    auto back = to_lambda_bracket(mod, from_lambda_bracket(mod, L));
    ok = ok && back.coeffs == L.coeffs;
    ++count;
  }
  ok = ok && count == 100;
  auto alg = boson_n1();
  AlgebraElement u = AlgebraElement::generator(mod, 0);
  auto lb = to_lambda_bracket(mod, bracket(*alg, u, u));
  ok = ok && lambda_bracket_str(mod, lb) == "-1 * l[1]";
  report(8, "lambda dictionary round trip and the boson bracket -lambda", ok);
}

TEST_CASE("criterion 9") {
  std::mt19937_64 rng(91);
  auto alg = boson_n1();
  auto mod = alg->module;
  OperadElement X = poisson_to_master(alg);
  HopfElement del = HopfElement::generator(mod->hopf, 1);
  AlgebraElement u = AlgebraElement::generator(mod, 0);
  AlgebraElement uu = super_multiply(u, u);
  bool ok = true;

  // The differential squares to zero on random cochains of degree -1 and 0.
  int count = 0;
  auto small_tuples = [&](int arity) { return probe_tuples({u, uu}, arity); };
  for (int it = 0; it < 10; ++it) {
    OperadElement f =
        OperadElement::from_class(random_module_element(mod, rng, 2));
    OperadElement ddf = classical_differential(X, classical_differential(X, f));
    ok = ok && check_zero(ddf, small_tuples(ddf.arity())).empty();
    ++count;
    OperadElement g =
        derivation_cochain(mod, {random_module_element(mod, rng, 2)});
    OperadElement ddg = classical_differential(X, classical_differential(X, g));
    ok = ok && check_zero(ddg, small_tuples(ddg.arity())).empty();
    ++count;
  }
  ok = ok && count == 20;

  // Grade decomposition of the master element.
  OperadElement X0 = grade_part(X, 0);
  OperadElement X1 = grade_part(X, 1);
  auto triples = small_tuples(3);
  ok = ok && check_zero(box_product(X0, X0), triples).empty();
  ok = ok && check_zero(box_product(X1, X1), triples).empty();
  ok = ok &&
       check_zero(box_product(X0, X1) + box_product(X1, X0), triples).empty();
  ok = ok && check_equal(X0 + X1, X, probe_tuples(probe_elements(mod, 2), 2))
                 .empty();

  // Slot Leibniz acceptance and rejection.
  AlgebraElement du = module_action(del, u);
  std::vector<AlgebraElement> mults{u, du, uu};
  OperadElement D(mod, 1, 0,
                  [del](const Graph&, const std::vector<AlgebraElement>& v) {
                    return PseudoTensor::from_element(module_action(del, v[0]));
                  });
  ok = ok && check_variational_leibniz(X0, {u}, mults);
  ok = ok && check_variational_leibniz(D, {u}, mults);
  HopfElement del2 = pbw_multiply(del, del);
  OperadElement D2(mod, 1, 0,
                   [del2](const Graph&, const std::vector<AlgebraElement>& v) {
                     return PseudoTensor::from_element(
                         module_action(del2, v[0]));
                   });
  ok = ok && !check_variational_leibniz(D2, {u}, mults);

  // The edgeless embedding intertwines the two differentials.
  for (const auto& f : {D, X0, OperadElement::from_class(u)}) {
    OperadElement cl = grade_part(classical_differential(X, f), 0);
    OperadElement va = variational_differential(X0, f);
    ok = ok && check_equal(cl, va, small_tuples(cl.arity())).empty();
  }
  report(9, "differential squares to zero, grading, and Leibniz subcomplex",
         ok);
}

TEST_CASE("criterion 10") {
  int r1 = std::system(
      "./pclh selftest --seed 42 --format json > acceptance_selftest_1.json");
  int r2 = std::system(
      "./pclh selftest --seed 42 --format json > acceptance_selftest_2.json");
  auto slurp = [](const char* p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  std::string a = slurp("acceptance_selftest_1.json");
  std::string b = slurp("acceptance_selftest_2.json");
  bool ok = r1 == 0 && r2 == 0 && !a.empty() && a == b;
  report(10, "selftest with a fixed seed is byte-identical across runs", ok);
}

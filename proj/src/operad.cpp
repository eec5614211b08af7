#include "pcl/operad.hpp"

#include <algorithm>
#include <set>

namespace pcl {

namespace {

int pbar_of(const AlgebraElement& v) { return (v.parity() + 1) % 2; }

std::vector<int> inverse_table(const std::vector<int>& sigma) {
  std::vector<int> inv(sigma.size());
  for (int i = 1; i <= (int)sigma.size(); ++i) inv[sigma[i - 1] - 1] = i;
  return inv;
}

std::string tuple_str(const std::vector<AlgebraElement>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += " | ";
    out += v[i].str();
  }
  return out;
}

std::vector<Graph> graphs_of_arity(int n) {
  if (n == 0) return {Graph(0, {})};
  return enumerate_acyclic(n);
}

// Expand the product of per-slot elements into a tensor.
HTensor slots_to_tensor(const LieAlgebraPtr& hopf,
                        const std::vector<HopfElement>& slots) {
  HTensor acc = HTensor::scalar(hopf, 1);
  for (const auto& h : slots) {
    HTensor next(hopf, acc.arity() + 1);
    for (const auto& [key, c] : acc.terms()) {
      for (const auto& [I, ch] : h.terms()) {
        auto nk = key;
        nk.push_back(I);
        next.add_term(nk, c * ch);
      }
    }
    acc = next;
  }
  return acc;
}

AlgebraElement reduce_class(const AlgebraElement& v) {
  if (v.is_zero()) return v;
  return quotient_class(v, std::max(v.max_weight(), 1));
}

}  // namespace

OperadElement::OperadElement(ModulePtr mod, int arity, int parity, EvalFn fn)
    : mod_(std::move(mod)), arity_(arity), parity_(parity), fn_(std::move(fn)) {
  if (!mod_) throw error("operad element needs a module");
  if (arity_ < 0) throw error("operad element needs a nonnegative arity");
}

OperadElement OperadElement::zero(ModulePtr mod, int arity, int parity) {
  ModulePtr m = mod;
  return OperadElement(
      std::move(mod), arity, parity,
      [m](const Graph& g, const std::vector<AlgebraElement>&) {
        return PseudoTensor::zero(m, (int)connected_components(g).size());
      });
}

OperadElement OperadElement::identity(ModulePtr mod) {
  return OperadElement(std::move(mod), 1, 0,
                       [](const Graph&, const std::vector<AlgebraElement>& v) {
                         return PseudoTensor::from_element(v[0]);
                       });
}

OperadElement OperadElement::from_class(const AlgebraElement& rep) {
  if (!rep.module()) throw error("class element needs a module");
  AlgebraElement red = reduce_class(rep);
  int parity = red.is_zero() ? 0 : (red.parity() + 1) % 2;
  return OperadElement(rep.module(), 0, parity,
                       [red](const Graph&, const std::vector<AlgebraElement>&) {
                         return PseudoTensor::class_representative(red);
                       });
}

PseudoTensor OperadElement::eval(const Graph& g,
                                 const std::vector<AlgebraElement>& v) const {
  if (!fn_) throw error("evaluating an empty operad element");
  if (g.n_vertices != arity_)
    throw error("graph size does not match the operad element arity");
  if ((int)v.size() != arity_)
    throw error("argument count does not match the operad element arity");
  int s = (int)connected_components(g).size();
  PseudoTensor out = PseudoTensor::zero(mod_, s);
  if (!is_acyclic(g)) return out;
  // Expand into homogeneous argument tuples.
  std::vector<AlgebraElement> current(arity_);
  std::function<void(int)> run = [&](int i) {
    if (i == arity_) {
      out = out + fn_(g, current);
      return;
    }
    auto [even, odd] = v[i].parity_parts();
    if (!even.is_zero()) {
      current[i] = even;
      run(i + 1);
    }
    if (!odd.is_zero()) {
      current[i] = odd;
      run(i + 1);
    }
  };
  run(0);
  return out;
}

AlgebraElement OperadElement::class_value() const {
  if (arity_ != 0) throw error("class value needs an arity-0 element");
  return eval(Graph(0, {}), {}).element();
}

OperadElement OperadElement::operator+(const OperadElement& o) const {
  if (arity_ != o.arity_) throw error("operad sum needs equal arities");
  if (mod_ != o.mod_) throw error("operad sum needs a common module");
  OperadElement a = *this, b = o;
  return OperadElement(mod_, arity_, parity_,
                       [a, b](const Graph& g, const std::vector<AlgebraElement>& v) {
                         return a.eval(g, v) + b.eval(g, v);
                       });
}

OperadElement OperadElement::operator-(const OperadElement& o) const {
  return *this + (o * Rational(-1));
}

OperadElement OperadElement::operator*(const Rational& c) const {
  OperadElement a = *this;
  Rational cc = c;
  return OperadElement(mod_, arity_, parity_,
                       [a, cc](const Graph& g, const std::vector<AlgebraElement>& v) {
                         return a.eval(g, v) * cc;
                       });
}

OperadElement symmetric_action(const OperadElement& Y,
                               const std::vector<int>& sigma) {
  int n = Y.arity();
  if ((int)sigma.size() != n)
    throw error("permutation size does not match the arity");
  auto inv = inverse_table(sigma);
  OperadElement base = Y;
  return OperadElement(
      Y.module(), n, Y.parity(),
      [base, sigma, inv, n](const Graph& g, const std::vector<AlgebraElement>& v) {
        Graph sg = permute_graph(g, sigma);
        // Koszul sign of the argument reordering in reversed parity.
        int e = 0;
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            if (sigma[i - 1] > sigma[j - 1])
              e += pbar_of(v[i - 1]) * pbar_of(v[j - 1]);
        std::vector<AlgebraElement> w(n);
        for (int i = 1; i <= n; ++i) w[i - 1] = v[inv[i - 1] - 1];
        PseudoTensor t = base.eval(sg, w);
        if (e % 2) t = -t;
        if (t.arity() <= 1) return t;
        return permute_slots(induced_component_permutation(g, sigma), t);
      });
}

OperadElement circle(const OperadElement& Y, const OperadElement& X, int k) {
  if (Y.module() != X.module())
    throw error("circle product needs elements over the same module");
  int n = Y.arity(), m = X.arity();
  if (n < 1) throw error("circle product needs outer arity at least one");
  if (k < 1 || k > n) throw error("circle insertion slot out of range");
  ModulePtr mod = Y.module();
  const LieAlgebraPtr hopf = mod->hopf;
  int parity = (Y.parity() + X.parity()) % 2;

  if (m == 0) {
    AlgebraElement rep = X.class_value();
    int px = X.parity();
    OperadElement outer = Y;
    return OperadElement(
        mod, n - 1, parity,
        [outer, rep, px, k, n, mod](const Graph& g,
                                    const std::vector<AlgebraElement>& v) {
          int sG = (int)connected_components(g).size();
          std::vector<Edge> edges;
          for (auto [a, b] : g.edges)
            edges.push_back({a >= k ? a + 1 : a, b >= k ? b + 1 : b});
          Graph gp(g.n_vertices + 1, edges);
          std::vector<AlgebraElement> w;
          w.insert(w.end(), v.begin(), v.begin() + (k - 1));
          w.push_back(rep);
          w.insert(w.end(), v.begin() + (k - 1), v.end());
          int e = 0;
          for (int j = 0; j < k - 1; ++j) e += px * pbar_of(v[j]);
          PseudoTensor t = outer.eval(gp, w);
          auto comps = connected_components(gp);
          int sp = (int)comps.size();
          int c0 = 0;
          for (int c = 0; c < sp; ++c)
            if (std::find(comps[c].begin(), comps[c].end(), k) !=
                comps[c].end())
              c0 = c + 1;
          PseudoTensor out(mod, sG);
          if (c0 < sp) {
            for (const auto& [key, val] : t.terms()) {
              if (degree(key[c0 - 1]) != 0) continue;
              std::vector<MultiIndex> nk;
              for (int i = 0; i < sp - 1; ++i)
                if (i != c0 - 1) nk.push_back(key[i]);
              out.add_term(nk, val);
            }
          } else if (sp == 1) {
            out = PseudoTensor::class_representative(reduce_class(t.element()));
          } else {
            std::vector<std::pair<HTensor, AlgebraElement>> raw;
            for (const auto& [key, val] : t.terms())
              raw.emplace_back(HTensor::monomial(mod->hopf, key), val);
            if (!raw.empty()) out = normalize(mod, raw);
          }
          if (e % 2) out = -out;
          return out;
        });
  }

  OperadElement outer = Y, in = X;
  return OperadElement(
      mod, m + n - 1, parity,
      [outer, in, k, m, n, mod, hopf](const Graph& g,
                                      const std::vector<AlgebraElement>& v) {
        int sG = (int)connected_components(g).size();
        auto rd = rho_permutation(g, k, m);
        if (!rd) return PseudoTensor::zero(mod, sG);
        std::vector<int> part(n, 1);
        part[k - 1] = m;
        auto cc = cocompose(g, part);
        int s = rd->s, t = rd->t, q = rd->q;
        int e = 0;
        for (int j = 0; j < k - 1; ++j) e += in.parity() * pbar_of(v[j]);
        std::vector<AlgebraElement> xargs(v.begin() + (k - 1),
                                          v.begin() + (k - 1 + m));
        PseudoTensor tx = in.eval(cc.inner[k - 1], xargs);
        if (tx.is_zero()) return PseudoTensor::zero(mod, sG);
        // External groups per inner component, as outer argument positions.
        auto icomps = connected_components(cc.inner[k - 1]);
        std::vector<std::vector<int>> ext(s);
        for (int c = 0; c < s; ++c) {
          std::set<int> groups;
          for (int wl : icomps[c])
            for (int gr : externally_connected(g, part, k - 1 + wl))
              if (gr != k) groups.insert(gr);
          ext[c].assign(groups.begin(), groups.end());
        }
        MultiIndex zi(hopf->dim, 0);
        std::vector<std::pair<HTensor, AlgebraElement>> raw;
        for (const auto& [xkey, xval] : tx.terms()) {
          struct State {
            std::vector<HopfElement> f1;
            std::vector<AlgebraElement> w;
            Rational coef;
          };
          std::vector<AlgebraElement> w0(n);
          for (int j = 1; j <= n; ++j)
            w0[j - 1] = (j == k) ? xval : v[j < k ? j - 1 : j + m - 2];
          std::vector<State> states{State{{}, w0, Rational(1)}};
          for (int c = 0; c < s; ++c) {
            const MultiIndex& I = (c < s - 1) ? xkey[c] : zi;
            HopfElement f = HopfElement::monomial(hopf, I);
            const auto& E = ext[c];
            if (E.empty()) {
              for (auto& st : states) st.f1.push_back(f);
              continue;
            }
            HTensor tw = twisted_coproduct_right(f);
            std::vector<State> ns;
            for (const auto& st : states) {
              for (const auto& [legs, cl] : tw.terms()) {
                HTensor dist = iterated_coproduct(
                    HopfElement::monomial(hopf, legs[1]), (int)E.size() - 1);
                for (const auto& [dl, cd] : dist.terms()) {
                  State s2 = st;
                  s2.f1.push_back(HopfElement::monomial(hopf, legs[0]));
                  bool dead = false;
                  for (size_t a = 0; a < E.size(); ++a) {
                    auto& slot = s2.w[E[a] - 1];
                    slot = module_action(HopfElement::monomial(hopf, dl[a]),
                                         slot);
                    if (slot.is_zero()) {
                      dead = true;
                      break;
                    }
                  }
                  if (dead) continue;
                  s2.coef = st.coef * cl * cd;
                  ns.push_back(std::move(s2));
                }
              }
            }
            states = std::move(ns);
          }
          for (const auto& st : states) {
            PseudoTensor ty = outer.eval(cc.outer, st.w);
            for (const auto& [ykey, yval] : ty.terms()) {
              HopfElement gq = (q <= t - 1)
                                   ? HopfElement::monomial(hopf, ykey[q - 1])
                                   : HopfElement::one(hopf);
              HTensor cop = iterated_coproduct(gq, s - 1);
              for (const auto& [gl, cg] : cop.terms()) {
                std::vector<HopfElement> slots(s + t - 1);
                for (int j = 1; j <= t; ++j) {
                  if (j == q) continue;
                  HopfElement gj = (j <= t - 1)
                                       ? HopfElement::monomial(hopf, ykey[j - 1])
                                       : HopfElement::one(hopf);
                  int target =
                      (j < q) ? rd->rho[s + j - 1] : rd->rho[s + j - 2];
                  slots[target - 1] = gj;
                }
                for (int c = 0; c < s; ++c)
                  slots[rd->rho[c] - 1] = pbw_multiply(
                      st.f1[c], HopfElement::monomial(hopf, gl[c]));
                HTensor coef = slots_to_tensor(hopf, slots) * (st.coef * cg);
                if (coef.is_zero()) continue;
                raw.emplace_back(coef, yval);
              }
            }
          }
        }
        if (raw.empty()) return PseudoTensor::zero(mod, sG);
        PseudoTensor out = normalize(mod, raw);
        if (e % 2) out = -out;
        return out;
      });
}

OperadElement compose(const OperadElement& Y,
                      const std::vector<OperadElement>& Xs) {
  if ((int)Xs.size() != Y.arity())
    throw error("composition needs one element per input slot");
  OperadElement acc = Y;
  int offset = 0;
  for (const auto& x : Xs) {
    acc = circle(acc, x, offset + 1);
    offset += x.arity();
  }
  return acc;
}

OperadElement box_product(const OperadElement& f, const OperadElement& g) {
  int af = f.arity(), ag = g.arity();
  if (af + ag < 1) throw error("box product needs a positive total arity");
  int N = af + ag - 1;
  int parity = (f.parity() + g.parity()) % 2;
  if (af == 0) return OperadElement::zero(f.module(), N, parity);
  OperadElement base = circle(f, g, 1);
  // Shuffles with ascending runs of lengths ag and af - 1.
  std::vector<bool> pick(N, false);
  std::fill(pick.begin(), pick.begin() + ag, true);
  std::sort(pick.begin(), pick.end());
  OperadElement sum = OperadElement::zero(f.module(), N, parity);
  do {
    std::vector<int> first, second;
    for (int i = 1; i <= N; ++i) (pick[i - 1] ? first : second).push_back(i);
    std::vector<int> sigma;
    sigma.insert(sigma.end(), first.begin(), first.end());
    sigma.insert(sigma.end(), second.begin(), second.end());
    sum = sum + symmetric_action(base, inverse_table(sigma));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return sum;
}

OperadElement cochain_bracket(const OperadElement& f, const OperadElement& g) {
  OperadElement fg = box_product(f, g);
  OperadElement gf = box_product(g, f);
  if ((f.parity() * g.parity()) % 2) return fg + gf;
  return fg - gf;
}

OperadElement classical_differential(const OperadElement& X,
                                     const OperadElement& f) {
  return cochain_bracket(X, f);
}

OperadElement grade_part(const OperadElement& Y, int edge_count) {
  OperadElement base = Y;
  return OperadElement(
      Y.module(), Y.arity(), Y.parity(),
      [base, edge_count](const Graph& g, const std::vector<AlgebraElement>& v) {
        if (g.n_edges() != edge_count)
          return PseudoTensor::zero(base.module(),
                                    (int)connected_components(g).size());
        return base.eval(g, v);
      });
}

OperadElement variational_differential(const OperadElement& Xstar,
                                       const OperadElement& f) {
  return grade_part(cochain_bracket(Xstar, f), 0);
}

std::vector<AlgebraElement> probe_elements(const ModulePtr& mod,
                                           int max_degree) {
  std::vector<AlgebraElement> out;
  int ng = (int)mod->generators.size();
  for (int i = 0; i < ng; ++i) out.push_back(AlgebraElement::generator(mod, i));
  if (max_degree >= 2) {
    for (int i = 0; i < ng; ++i)
      for (int j = 1; j <= mod->hopf->dim; ++j) {
        MultiIndex I(mod->hopf->dim, 0);
        I[j - 1] = 1;
        out.push_back(AlgebraElement::atom(mod, I, i));
      }
    if (mod->kind == ModuleKind::symmetric_algebra) {
      for (int i = 0; i < ng; ++i)
        for (int j = i; j < ng; ++j) {
          AlgebraElement p = super_multiply(AlgebraElement::generator(mod, i),
                                            AlgebraElement::generator(mod, j));
          if (!p.is_zero()) out.push_back(p);
        }
    }
  }
  return out;
}

std::vector<std::vector<AlgebraElement>> probe_tuples(
    const std::vector<AlgebraElement>& probes, int n) {
  std::vector<std::vector<AlgebraElement>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<AlgebraElement>> next;
    for (const auto& t : out)
      for (const auto& p : probes) {
        auto nt = t;
        nt.push_back(p);
        next.push_back(std::move(nt));
      }
    out = std::move(next);
  }
  return out;
}

OperadReport check_zero(const OperadElement& Y,
                        const std::vector<std::vector<AlgebraElement>>& tuples) {
  OperadReport report;
  for (const auto& g : graphs_of_arity(Y.arity()))
    for (const auto& t : tuples) {
      PseudoTensor val = Y.eval(g, t);
      if (!val.is_zero()) report.push_back({g.str(), tuple_str(t), val.str()});
    }
  return report;
}

OperadReport check_equal(const OperadElement& A, const OperadElement& B,
                         const std::vector<std::vector<AlgebraElement>>& tuples) {
  if (A.arity() != B.arity())
    throw error("extensional comparison needs equal arities");
  return check_zero(A - B, tuples);
}

bool is_invariant(const OperadElement& Y,
                  const std::vector<std::vector<AlgebraElement>>& tuples) {
  int n = Y.arity();
  for (int i = 1; i < n; ++i) {
    std::vector<int> tau(n);
    for (int j = 1; j <= n; ++j) tau[j - 1] = j;
    std::swap(tau[i - 1], tau[i]);
    if (!check_equal(symmetric_action(Y, tau), Y, tuples).empty()) return false;
  }
  return true;
}

OperadReport check_cycle_condition(
    const OperadElement& Y, int cycle_bound,
    const std::vector<std::vector<AlgebraElement>>& tuples) {
  int n = Y.arity();
  OperadReport report;
  std::set<Graph> seen;
  for (const auto& base : graphs_of_arity(n)) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (a == b) continue;
        auto edges = base.edges;
        edges.push_back({a, b});
        Graph g(n, edges);
        if (!seen.insert(g).second) continue;
        auto cycles = oriented_cycles(g, cycle_bound);
        for (const auto& cyc : cycles) {
          for (const auto& t : tuples) {
            // Removing one cycle edge never changes the components, so all
            // the summands share an arity.
            PseudoTensor sum = PseudoTensor::zero(
                Y.module(), (int)connected_components(g).size());
            for (int ei : cyc) {
              auto rem = g.edges;
              rem.erase(rem.begin() + ei);
              sum = sum + Y.eval(Graph(n, rem), t);
            }
            if (!sum.is_zero())
              report.push_back({g.str(), tuple_str(t), sum.str()});
          }
        }
      }
  }
  return report;
}

OperadReport check_component_linearity(
    const OperadElement& Y,
    const std::vector<std::vector<AlgebraElement>>& tuples,
    const std::vector<HopfElement>& hs) {
  OperadReport report;
  for (const auto& g : graphs_of_arity(Y.arity())) {
    auto comps = connected_components(g);
    for (const auto& t : tuples) {
      PseudoTensor base = Y.eval(g, t);
      for (int k = 1; k <= (int)comps.size(); ++k) {
        for (const auto& h : hs) {
          HTensor dist = iterated_coproduct(h, (int)comps[k - 1].size() - 1);
          PseudoTensor lhs = PseudoTensor::zero(Y.module(), base.arity());
          for (const auto& [legs, c] : dist.terms()) {
            auto args = t;
            for (size_t a = 0; a < comps[k - 1].size(); ++a) {
              int w = comps[k - 1][a];
              args[w - 1] = module_action(
                  HopfElement::monomial(Y.module()->hopf, legs[a]),
                  args[w - 1]);
            }
            lhs = lhs + Y.eval(g, args) * c;
          }
          PseudoTensor rhs = act_component(h, k, base);
          PseudoTensor res = lhs - rhs;
          if (!res.is_zero())
            report.push_back({g.str() + " component " + std::to_string(k),
                              tuple_str(t), res.str()});
        }
      }
    }
  }
  return report;
}

OperadElement poisson_to_master(const PseudoAlgebraPtr& alg) {
  if (alg->module->kind != ModuleKind::symmetric_algebra)
    throw error("master element needs a symmetric algebra module");
  PseudoAlgebraPtr a = alg;
  ModulePtr mod = alg->module;
  return OperadElement(
      mod, 2, 1,
      [a](const Graph& g, const std::vector<AlgebraElement>& v) {
        Rational sign = (v[0].parity() % 2) ? -1 : 1;
        if (g.edges.empty()) return bracket(*a, v[0], v[1]) * sign;
        AlgebraElement prod = super_multiply(v[0], v[1]) * sign;
        if (g.edges[0] == Edge{1, 2}) return PseudoTensor::from_element(prod);
        return PseudoTensor::from_element(-prod);
      });
}

OperadElement lie_master(const PseudoAlgebraPtr& alg) {
  PseudoAlgebraPtr a = alg;
  ModulePtr mod = alg->module;
  return OperadElement(
      mod, 2, 1,
      [a, mod](const Graph& g, const std::vector<AlgebraElement>& v) {
        if (!g.edges.empty())
          return PseudoTensor::zero(mod, (int)connected_components(g).size());
        Rational sign = (v[0].parity() % 2) ? -1 : 1;
        return bracket(*a, v[0], v[1]) * sign;
      });
}

AlgebraElement master_product(const OperadElement& X, const AlgebraElement& a,
                              const AlgebraElement& b) {
  Graph edge(2, {{1, 2}});
  AlgebraElement out = AlgebraElement::zero(X.module());
  auto [ae, ao] = a.parity_parts();
  for (const auto& part : {ae, ao}) {
    if (part.is_zero()) continue;
    Rational sign = (part.parity() % 2) ? -1 : 1;
    out = out + X.eval(edge, {part, b}).element() * sign;
  }
  return out;
}

PseudoTensor master_bracket(const OperadElement& X, const AlgebraElement& a,
                            const AlgebraElement& b) {
  Graph edgeless(2, {});
  PseudoTensor out = PseudoTensor::zero(X.module(), 2);
  auto [ae, ao] = a.parity_parts();
  for (const auto& part : {ae, ao}) {
    if (part.is_zero()) continue;
    Rational sign = (part.parity() % 2) ? -1 : 1;
    out = out + X.eval(edgeless, {part, b}) * sign;
  }
  return out;
}

OperadReport check_master(const PseudoAlgebraPtr& alg) {
  OperadElement X = poisson_to_master(alg);
  OperadElement B = box_product(X, X);
  std::vector<AlgebraElement> gens;
  for (int i = 0; i < (int)alg->module->generators.size(); ++i)
    gens.push_back(AlgebraElement::generator(alg->module, i));
  return check_zero(B, probe_tuples(gens, 3));
}

PseudoTensor slot_multiply(const AlgebraElement& b, int i,
                           const PseudoTensor& A) {
  int n = A.arity();
  if (i < 1 || i > n) throw error("slot multiplication index out of range");
  PseudoTensor out(A.module(), n);
  const LieAlgebraPtr& hopf = A.module()->hopf;
  for (const auto& [key, val] : A.terms()) {
    if (i == n) {
      AlgebraElement nv = super_multiply(b, val);
      if (!nv.is_zero()) out.add_term(key, nv);
      continue;
    }
    HTensor tw =
        twisted_coproduct_right(HopfElement::monomial(hopf, key[i - 1]));
    for (const auto& [legs, c] : tw.terms()) {
      AlgebraElement nb =
          module_action(HopfElement::monomial(hopf, legs[1]), b);
      AlgebraElement nv = super_multiply(nb, val) * c;
      if (nv.is_zero()) continue;
      auto nk = key;
      nk[i - 1] = legs[0];
      out.add_term(nk, nv);
    }
  }
  return out;
}

bool check_variational_leibniz(const OperadElement& f,
                               const std::vector<AlgebraElement>& args,
                               const std::vector<AlgebraElement>& mults,
                               OperadReport* report) {
  int n = f.arity();
  if (n == 0) return true;
  if (f.module()->kind != ModuleKind::symmetric_algebra)
    throw error("slot Leibniz checks need a symmetric algebra module");
  int pY = (f.parity() + n - 1) % 2;
  Graph edgeless(n, {});
  bool ok = true;
  for (const auto& t : probe_tuples(args, n)) {
    int prefix = 0;
    for (int i = 1; i <= n; ++i) {
      for (const auto& b : mults) {
        AlgebraElement ba = super_multiply(b, t[i - 1]);
        auto lt = t;
        lt[i - 1] = ba;
        PseudoTensor lhs = f.eval(edgeless, lt);
        int body = (pY + prefix + (n - i)) % 2;
        PseudoTensor t1 = slot_multiply(b, i, f.eval(edgeless, t));
        if ((b.parity() * body) % 2) t1 = -t1;
        auto bt = t;
        bt[i - 1] = b;
        PseudoTensor t2 = slot_multiply(t[i - 1], i, f.eval(edgeless, bt));
        if ((t[i - 1].parity() * (b.parity() + body)) % 2) t2 = -t2;
        PseudoTensor res = lhs - t1 - t2;
        if (!res.is_zero()) {
          ok = false;
          if (report)
            report->push_back({"slot " + std::to_string(i),
                               b.str() + " into " + tuple_str(t), res.str()});
        }
      }
      prefix = (prefix + t[i - 1].parity()) % 2;
    }
  }
  return ok;
}

}  // namespace pcl

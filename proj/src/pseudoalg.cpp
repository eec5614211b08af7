#include "pcl/pseudoalg.hpp"

#include <algorithm>
#include <sstream>

namespace pcl {

namespace {

int gen_parity(const ModuleSpec& mod, int g) { return mod.generators[g].parity; }

MultiIndex zero_index(const LieAlgebraPtr& alg) {
  return MultiIndex(alg->dim, 0);
}

MultiIndex unit_index(const LieAlgebraPtr& alg, int i) {
  MultiIndex I(alg->dim, 0);
  I[i - 1] = 1;
  return I;
}

// [u_j * u_i] = -(-1)^{p_i p_j} (sigma (x) 1) [u_i * u_j].
PseudoTensor flip_bracket(const ModuleSpec& mod, int i, int j,
                          const PseudoTensor& T) {
  int s = (gen_parity(mod, i) && gen_parity(mod, j)) ? 1 : -1;
  return permute_slots({2, 1}, T) * Rational(s);
}

}  // namespace

PseudoAlgebraPtr make_pseudoalgebra(
    ModulePtr module,
    const std::map<std::pair<int, int>, PseudoTensor>& table) {
  if (!module) throw error("pseudoalgebra needs a module");
  int n = (int)module->generators.size();
  auto alg = std::make_shared<PseudoAlgebra>();
  alg->module = module;
  alg->table.assign(n, std::vector<PseudoTensor>(n, PseudoTensor::zero(module, 2)));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (const auto& [key, value] : table) {
    auto [i, j] = key;
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw error("bracket table index out of range");
    if (value.arity() != 2) throw error("bracket table values must have arity 2");
    if (value.module() && value.module() != module)
      throw error("bracket table value on a different module");
    int want = gen_parity(*module, i) ^ gen_parity(*module, j);
    for (const auto& [k, v] : value.terms())
      for (const auto& [m, c] : v.terms())
        if (monomial_parity(*module, m) != want)
          throw error("bracket table value has the wrong parity");
    alg->table[i][j] = value;
    given[i][j] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!given[i][j] && given[j][i])
        alg->table[i][j] = flip_bracket(*module, j, i, alg->table[j][i]);
  return alg;
}

PseudoTensor bracket(const PseudoAlgebra& alg, const AlgebraElement& a,
                     const AlgebraElement& b) {
  const ModulePtr& mod = alg.module;
  const LieAlgebraPtr& hopf = mod->hopf;
  PseudoTensor r(mod, 2);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int m = (int)ma.size();
      int nn = (int)mb.size();
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < nn; ++j) {
          PseudoTensor base = alg.table[ma[i].gen][mb[j].gen];
          if (degree(mb[j].I) > 0)
            base = act_component(HopfElement::monomial(hopf, mb[j].I), 2, base);
          if (degree(ma[i].I) > 0)
            base = act_component(HopfElement::monomial(hopf, ma[i].I), 1, base);
          Monomial comp_b = mb;
          comp_b.erase(comp_b.begin() + j);
          if (!comp_b.empty()) {
            AlgebraElement cbv(mod);
            cbv.add_term(comp_b, 1);
            base = multiply_right_by_V(base, cbv);
          }
          Monomial comp_a = ma;
          comp_a.erase(comp_a.begin() + i);
          if (!comp_a.empty()) {
            AlgebraElement cav(mod);
            cav.add_term(comp_a, 1);
            base = multiply_left_by_V(cav, base);
          }
          int sign = 0;
          for (int k = i + 1; k < m; ++k)
            sign += gen_parity(*mod, ma[i].gen) * gen_parity(*mod, ma[k].gen);
          for (int k = 0; k < j; ++k)
            sign += gen_parity(*mod, mb[j].gen) * gen_parity(*mod, mb[k].gen);
          r = r + base * (ca * cb * ((sign & 1) ? -1 : 1));
        }
    }
  return r;
}

PseudoTensor compose_bracket_right(const PseudoAlgebra& alg,
                                   const PseudoTensor& T,
                                   const AlgebraElement& c) {
  if (T.arity() != 2) throw error("compose_bracket_right needs arity 2");
  const ModulePtr& mod = alg.module;
  const LieAlgebraPtr& hopf = mod->hopf;
  PseudoTensor r(mod, 3);
  for (const auto& [key, e] : T.terms()) {
    HopfElement f = HopfElement::monomial(hopf, key[0]);
    PseudoTensor inner = bracket(alg, e, c);
    for (const auto& [ikey, e2] : inner.terms()) {
      HTensor cop = coproduct(HopfElement::monomial(hopf, ikey[0]));
      for (const auto& [legs, cl] : cop.terms()) {
        HopfElement s1 =
            pbw_multiply(f, HopfElement::monomial(hopf, legs[0]));
        for (const auto& [J, cj] : s1.terms())
          r.add_term({J, legs[1]}, e2 * (cl * cj));
      }
    }
  }
  return r;
}

PseudoTensor compose_bracket_left(const PseudoAlgebra& alg,
                                  const AlgebraElement& a,
                                  const PseudoTensor& T) {
  if (T.arity() != 2) throw error("compose_bracket_left needs arity 2");
  const ModulePtr& mod = alg.module;
  PseudoTensor r(mod, 3);
  for (const auto& [key, d] : T.terms()) {
    PseudoTensor inner = bracket(alg, a, d);
    for (const auto& [ikey, d2] : inner.terms())
      r.add_term({ikey[0], key[0]}, d2);
  }
  return r;
}

namespace {

std::string pair_args(const ModuleSpec& mod, const AlgebraElement& a,
                      const AlgebraElement& b) {
  return "a = " + a.str() + ", b = " + b.str();
}

// Single atoms d^I u_g with |I| <= 1.
std::vector<AlgebraElement> small_atoms(const ModulePtr& mod) {
  std::vector<AlgebraElement> out;
  for (int g = 0; g < (int)mod->generators.size(); ++g) {
    out.push_back(AlgebraElement::generator(mod, g));
    for (int i = 1; i <= mod->hopf->dim; ++i)
      out.push_back(AlgebraElement::atom(mod, unit_index(mod->hopf, i), g));
  }
  return out;
}

// Monomials of at most two small atoms (including the unit), symmetric only.
std::vector<AlgebraElement> small_monomials(const ModulePtr& mod) {
  std::vector<AlgebraElement> out{AlgebraElement::unit(mod)};
  auto atoms = small_atoms(mod);
  for (const auto& x : atoms) out.push_back(x);
  for (size_t i = 0; i < atoms.size(); ++i)
    for (size_t j = i; j < atoms.size(); ++j) {
      AlgebraElement p = super_multiply(atoms[i], atoms[j]);
      if (!p.is_zero()) out.push_back(p);
    }
  return out;
}

}  // namespace

CheckReport check_skewsymmetry(const PseudoAlgebra& alg) {
  CheckReport report;
  const ModulePtr& mod = alg.module;
  int n = (int)mod->generators.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      AlgebraElement a = AlgebraElement::generator(mod, i);
      AlgebraElement b = AlgebraElement::generator(mod, j);
      PseudoTensor residual =
          bracket(alg, b, a) - flip_bracket(*mod, i, j, bracket(alg, a, b));
      if (!residual.is_zero())
        report.push_back({"skewsymmetry", pair_args(*mod, a, b),
                          residual.str()});
    }
  return report;
}

CheckReport check_jacobi(const PseudoAlgebra& alg) {
  CheckReport report;
  const ModulePtr& mod = alg.module;
  int n = (int)mod->generators.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        AlgebraElement a = AlgebraElement::generator(mod, i);
        AlgebraElement b = AlgebraElement::generator(mod, j);
        AlgebraElement c = AlgebraElement::generator(mod, k);
        int s = (gen_parity(*mod, i) && gen_parity(*mod, j)) ? -1 : 1;
        PseudoTensor residual =
            compose_bracket_left(alg, a, bracket(alg, b, c)) -
            permute_slots({2, 1, 3},
                          compose_bracket_left(alg, b, bracket(alg, a, c))) *
                Rational(s) -
            compose_bracket_right(alg, bracket(alg, a, b), c);
        if (!residual.is_zero())
          report.push_back({"jacobi",
                            "a = " + a.str() + ", b = " + b.str() +
                                ", c = " + c.str(),
                            residual.str()});
      }
  return report;
}

CheckReport check_leibniz(const PseudoAlgebra& alg) {
  const ModulePtr& mod = alg.module;
  if (mod->kind != ModuleKind::symmetric_algebra)
    throw error("Leibniz checks need a symmetric algebra");
  CheckReport report;
  auto as = small_monomials(mod);
  auto atoms = small_atoms(mod);
  for (const auto& a : as)
    for (const auto& b : atoms)
      for (const auto& c : atoms) {
        int s = (b.parity() && c.parity()) ? -1 : 1;
        PseudoTensor residual =
            bracket(alg, a, super_multiply(b, c)) -
            multiply_right_by_V(bracket(alg, a, b), c) -
            multiply_right_by_V(bracket(alg, a, c), b) * Rational(s);
        if (!residual.is_zero())
          report.push_back({"left Leibniz",
                            "a = " + a.str() + ", b = " + b.str() +
                                ", c = " + c.str(),
                            residual.str()});
      }
  return report;
}

CheckReport check_right_leibniz(const PseudoAlgebra& alg) {
  const ModulePtr& mod = alg.module;
  if (mod->kind != ModuleKind::symmetric_algebra)
    throw error("Leibniz checks need a symmetric algebra");
  CheckReport report;
  auto atoms = small_atoms(mod);
  auto cs = small_monomials(mod);
  for (const auto& a : atoms)
    for (const auto& b : atoms)
      for (const auto& c : cs) {
        int s = (a.parity() && b.parity()) ? -1 : 1;
        PseudoTensor residual =
            bracket(alg, super_multiply(a, b), c) -
            multiply_left_by_V(a, bracket(alg, b, c)) -
            multiply_left_by_V(b, bracket(alg, a, c)) * Rational(s);
        if (!residual.is_zero())
          report.push_back({"right Leibniz",
                            "a = " + a.str() + ", b = " + b.str() +
                                ", c = " + c.str(),
                            residual.str()});
      }
  return report;
}

LambdaBracket to_lambda_bracket(const ModulePtr& mod, const PseudoTensor& T) {
  if (!mod->hopf->is_abelian())
    throw error("the lambda dictionary needs an abelian Lie algebra");
  if (T.arity() != 2) throw error("the lambda dictionary needs arity 2");
  LambdaBracket L;
  for (const auto& [key, e] : T.terms()) {
    int s = (degree(key[0]) & 1) ? -1 : 1;
    AlgebraElement v = e * Rational(s);
    auto it = L.coeffs.find(key[0]);
    if (it == L.coeffs.end()) {
      L.coeffs.emplace(key[0], v);
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) L.coeffs.erase(it);
    }
  }
  return L;
}

PseudoTensor from_lambda_bracket(const ModulePtr& mod, const LambdaBracket& L) {
  if (!mod->hopf->is_abelian())
    throw error("the lambda dictionary needs an abelian Lie algebra");
  PseudoTensor T(mod, 2);
  for (const auto& [I, e] : L.coeffs) {
    int s = (degree(I) & 1) ? -1 : 1;
    T.add_term({I}, e * Rational(s));
  }
  return T;
}

std::string lambda_bracket_str(const ModulePtr& mod, const LambdaBracket& L) {
  if (L.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [I, e] : L.coeffs) {
    if (!out.empty()) out += " + ";
    std::string vs = e.str();
    if (vs.find(" + ") != std::string::npos) vs = "(" + vs + ")";
    if (degree(I) == 0) {
      out += vs;
      continue;
    }
    std::string lam = "l[";
    for (size_t i = 0; i < I.size(); ++i) {
      if (i) lam += ",";
      lam += std::to_string(I[i]);
    }
    lam += "]";
    out += (vs == "1") ? lam : vs + " * " + lam;
  }
  return out;
}

namespace {

// Validates that every term of h has multi-index degree exactly 1.
void require_primitive(const HopfElement& h, const std::string& what) {
  for (const auto& [I, c] : h.terms())
    if (degree(I) != 1) throw error(what + " must take values in the Lie algebra");
}

std::vector<GeneratorSpec> numbered_generators(const std::string& stem, int n) {
  std::vector<GeneratorSpec> g;
  for (int i = 1; i <= n; ++i) g.push_back({stem + std::to_string(i), 0});
  return g;
}

void check_matrix_shape(const ModuleSpec& mod, size_t rows,
                        const std::string& what) {
  if (rows != mod.generators.size())
    throw error(what + " matrix must be square over the generators");
}

}  // namespace

PseudoAlgebraPtr build_example_W_d(const LieAlgebraPtr& d) {
  int N = d->dim;
  ModulePtr mod =
      make_module(d, numbered_generators("a", N), ModuleKind::free_module);
  std::map<std::pair<int, int>, PseudoTensor> table;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      AlgebraElement lie(mod);
      for (int k = 0; k < N; ++k) {
        Rational c = d->structure_constants[i][j][k];
        if (c != 0) lie = lie + AlgebraElement::generator(mod, k) * c;
      }
      std::vector<std::pair<HTensor, AlgebraElement>> raw;
      if (!lie.is_zero()) raw.push_back({HTensor::one(d, 2), lie});
      raw.push_back({HTensor::monomial(d, {unit_index(d, j + 1), zero_index(d)}),
                     AlgebraElement::generator(mod, i)});
      raw.push_back({HTensor::monomial(d, {zero_index(d), unit_index(d, i + 1)}),
                     -AlgebraElement::generator(mod, j)});
      table.emplace(std::make_pair(i, j), normalize(mod, raw));
    }
  return make_pseudoalgebra(mod, table);
}

PseudoAlgebraPtr build_example_boson(const LieAlgebraPtr& d,
                                     std::vector<GeneratorSpec> generators,
                                     std::vector<std::vector<HopfElement>> beta,
                                     const Rational& K) {
  ModulePtr mod =
      make_module(d, std::move(generators), ModuleKind::symmetric_algebra);
  int n = (int)mod->generators.size();
  check_matrix_shape(*mod, beta.size(), "beta");
  for (const auto& row : beta) check_matrix_shape(*mod, row.size(), "beta");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      require_primitive(beta[i][j], "beta");
      int pi = mod->generators[i].parity, pj = mod->generators[j].parity;
      if (pi != pj && !beta[i][j].is_zero())
        throw error("beta must vanish across parities");
      HopfElement sym = beta[j][i] * Rational((pi && pj) ? -1 : 1);
      if (!(beta[i][j] == sym))
        throw error("beta must be supersymmetric");
    }
  std::map<std::pair<int, int>, PseudoTensor> table;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PseudoTensor T(mod, 2);
      for (const auto& [I, c] : beta[i][j].terms())
        T.add_term({I}, AlgebraElement::unit(mod) * (c * K));
      table.emplace(std::make_pair(i, j), T);
    }
  return make_pseudoalgebra(mod, table);
}

PseudoAlgebraPtr build_example_fermion(const LieAlgebraPtr& d,
                                       std::vector<GeneratorSpec> generators,
                                       std::vector<std::vector<Rational>> gamma,
                                       const Rational& K) {
  ModulePtr mod =
      make_module(d, std::move(generators), ModuleKind::symmetric_algebra);
  int n = (int)mod->generators.size();
  check_matrix_shape(*mod, gamma.size(), "gamma");
  for (const auto& row : gamma) check_matrix_shape(*mod, row.size(), "gamma");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int pi = mod->generators[i].parity, pj = mod->generators[j].parity;
      if (pi != pj && gamma[i][j] != 0)
        throw error("gamma must vanish across parities");
      if (gamma[i][j] != gamma[j][i] * Rational((pi && pj) ? 1 : -1))
        throw error("gamma must be super skewsymmetric");
    }
  std::map<std::pair<int, int>, PseudoTensor> table;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PseudoTensor T(mod, 2);
      if (gamma[i][j] != 0)
        T.add_term({zero_index(d)}, AlgebraElement::unit(mod) * (gamma[i][j] * K));
      table.emplace(std::make_pair(i, j), T);
    }
  return make_pseudoalgebra(mod, table);
}

PseudoAlgebraPtr build_example_affine(const LieAlgebraPtr& d,
                                      const LieAlgebraPtr& g,
                                      std::vector<std::vector<HopfElement>> beta,
                                      const Rational& K) {
  int n = g->dim;
  ModulePtr mod = make_module(d, numbered_generators("t", n),
                              ModuleKind::symmetric_algebra);
  check_matrix_shape(*mod, beta.size(), "beta");
  for (const auto& row : beta) check_matrix_shape(*mod, row.size(), "beta");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      require_primitive(beta[i][j], "beta");
      if (!(beta[i][j] == beta[j][i])) throw error("beta must be symmetric");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        HopfElement lhs(d), rhs(d);
        for (int l = 0; l < n; ++l) {
          lhs = lhs + beta[l][k] * g->structure_constants[i][j][l];
          rhs = rhs + beta[i][l] * g->structure_constants[j][k][l];
        }
        if (!(lhs == rhs)) throw error("beta must be invariant");
      }
  std::map<std::pair<int, int>, PseudoTensor> table;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PseudoTensor T(mod, 2);
      AlgebraElement lie(mod);
      for (int k = 0; k < n; ++k) {
        Rational c = g->structure_constants[i][j][k];
        if (c != 0) lie = lie + AlgebraElement::generator(mod, k) * c;
      }
      if (!lie.is_zero()) T.add_term({zero_index(d)}, lie);
      for (const auto& [I, c] : beta[i][j].terms())
        T.add_term({I}, AlgebraElement::unit(mod) * (c * K));
      table.emplace(std::make_pair(i, j), T);
    }
  return make_pseudoalgebra(mod, table);
}

PseudoAlgebraPtr build_example_type_W(const LieAlgebraPtr& d,
                                      std::vector<std::vector<HopfElement>> beta,
                                      const Rational& C) {
  int N = d->dim;
  ModulePtr mod = make_module(d, numbered_generators("a", N),
                              ModuleKind::symmetric_algebra);
  check_matrix_shape(*mod, beta.size(), "beta");
  for (const auto& row : beta) check_matrix_shape(*mod, row.size(), "beta");
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      require_primitive(beta[i][j], "beta");
      if (!(beta[i][j] == beta[j][i])) throw error("beta must be symmetric");
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        HopfElement lhs(d), rhs(d);
        for (int l = 0; l < N; ++l) {
          lhs = lhs + beta[l][k] * d->structure_constants[i][j][l];
          rhs = rhs + beta[i][l] * d->structure_constants[j][k][l];
        }
        if (!(lhs == rhs)) throw error("beta must be invariant");
      }
  std::map<std::pair<int, int>, PseudoTensor> table;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      AlgebraElement lie(mod);
      for (int k = 0; k < N; ++k) {
        Rational c = d->structure_constants[i][j][k];
        if (c != 0) lie = lie + AlgebraElement::generator(mod, k) * c;
      }
      std::vector<std::pair<HTensor, AlgebraElement>> raw;
      if (!lie.is_zero()) raw.push_back({HTensor::one(d, 2), lie});
      raw.push_back({HTensor::monomial(d, {unit_index(d, j + 1), zero_index(d)}),
                     AlgebraElement::generator(mod, i)});
      raw.push_back({HTensor::monomial(d, {zero_index(d), unit_index(d, i + 1)}),
                     -AlgebraElement::generator(mod, j)});
      HTensor bt(d, 2);
      for (const auto& [I, c] : beta[i][j].terms())
        bt.add_term({I, zero_index(d)}, c);
      if (!bt.is_zero()) raw.push_back({bt, AlgebraElement::unit(mod) * C});
      table.emplace(std::make_pair(i, j), normalize(mod, raw));
    }
  return make_pseudoalgebra(mod, table);
}

PseudoAlgebraPtr build_example_type_K(int M, const Rational& c) {
  if (M < 1) throw error("type K needs M >= 1");
  LieAlgebraPtr d = make_heisenberg(M);
  ModulePtr mod = make_module(d, {{"e", 0}}, ModuleKind::symmetric_algebra);
  HTensor alpha(d, 2);
  alpha.add_term({zero_index(d), unit_index(d, 1)}, 1);
  alpha.add_term({unit_index(d, 1), zero_index(d)}, -1);
  for (int i = 1; i <= M; ++i) {
    alpha.add_term({unit_index(d, 1 + i), unit_index(d, 1 + M + i)}, 1);
    alpha.add_term({unit_index(d, 1 + M + i), unit_index(d, 1 + i)}, -1);
  }
  std::vector<std::pair<HTensor, AlgebraElement>> raw;
  raw.push_back({alpha, AlgebraElement::generator(mod, 0)});
  if (c != 0)
    raw.push_back({HTensor::monomial(d, {unit_index(d, 1), zero_index(d)}),
                   AlgebraElement::unit(mod) * c});
  std::map<std::pair<int, int>, PseudoTensor> table;
  table.emplace(std::make_pair(0, 0), normalize(mod, raw));
  return make_pseudoalgebra(mod, table);
}

}  // namespace pcl

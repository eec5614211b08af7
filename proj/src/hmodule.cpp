#include "pcl/hmodule.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pcl {

int ModuleSpec::generator_index(const std::string& name) const {
  for (int i = 0; i < (int)generators.size(); ++i)
    if (generators[i].name == name) return i;
  throw error("unknown generator '" + name + "'");
}

ModulePtr make_module(LieAlgebraPtr hopf, std::vector<GeneratorSpec> generators,
                      ModuleKind kind) {
  if (!hopf) throw error("module needs a Lie algebra spec");
  if (generators.empty()) throw error("module needs at least one generator");
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.name.empty()) throw error("generator symbols must be nonempty");
    if (!names.insert(g.name).second)
      throw error("duplicate generator symbol '" + g.name + "'");
    if (g.parity != 0 && g.parity != 1)
      throw error("generator parity must be 0 or 1");
  }
  auto spec = std::make_shared<ModuleSpec>();
  spec->hopf = std::move(hopf);
  spec->generators = std::move(generators);
  spec->kind = kind;
  return spec;
}

int atom_weight(const Atom& a) { return degree(a.I) + 1; }

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (const auto& a : m) w += atom_weight(a);
  return w;
}

int monomial_parity(const ModuleSpec& mod, const Monomial& m) {
  int p = 0;
  for (const auto& a : m) p ^= mod.generators[a.gen].parity;
  return p;
}

// Sorts a monomial in place, returning the Koszul sign, or 0 if an odd atom
// repeats.
static int sort_monomial(const ModuleSpec& mod, Monomial& m) {
  int sign = 1;
  for (size_t i = 1; i < m.size(); ++i)
    for (size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
      if (mod.generators[m[j].gen].parity && mod.generators[m[j - 1].gen].parity)
        sign = -sign;
      std::swap(m[j], m[j - 1]);
    }
  for (size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1] && mod.generators[m[i].gen].parity) return 0;
  return sign;
}

AlgebraElement AlgebraElement::unit(ModulePtr mod) {
  if (mod->kind != ModuleKind::symmetric_algebra)
    throw error("free modules have no unit element");
  AlgebraElement v(std::move(mod));
  v.add_term({}, 1);
  return v;
}

AlgebraElement AlgebraElement::generator(ModulePtr mod, int i) {
  if (i < 0 || i >= (int)mod->generators.size())
    throw error("generator index out of range");
  MultiIndex I(mod->hopf->dim, 0);
  return atom(std::move(mod), I, i);
}

AlgebraElement AlgebraElement::generator(ModulePtr mod, const std::string& name) {
  int i = mod->generator_index(name);
  return generator(std::move(mod), i);
}

AlgebraElement AlgebraElement::atom(ModulePtr mod, const MultiIndex& I, int i,
                                    const Rational& coef) {
  if (i < 0 || i >= (int)mod->generators.size())
    throw error("generator index out of range");
  MultiIndex J = I;
  J.resize(mod->hopf->dim, 0);
  AlgebraElement v(std::move(mod));
  v.add_term({Atom{J, i}}, coef);
  return v;
}

void AlgebraElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (!mod_) throw error("operation on an uninitialized algebra element");
  if (mod_->kind == ModuleKind::free_module && m.size() != 1)
    throw error("free module elements are single atoms");
  if (!std::is_sorted(m.begin(), m.end()))
    throw error("internal: unsorted monomial");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int AlgebraElement::parity() const {
  if (terms_.empty()) return 0;
  int p = monomial_parity(*mod_, terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_parity(*mod_, m) != p)
      throw error("parity of a non-homogeneous element");
  return p;
}

bool AlgebraElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int p = monomial_parity(*mod_, terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_parity(*mod_, m) != p) return false;
  return true;
}

std::pair<AlgebraElement, AlgebraElement> AlgebraElement::parity_parts() const {
  AlgebraElement even(mod_), odd(mod_);
  for (const auto& [m, c] : terms_)
    (monomial_parity(*mod_, m) ? odd : even).add_term(m, c);
  return {even, odd};
}

int AlgebraElement::max_weight() const {
  int w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, monomial_weight(m));
  return w;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  if (!r.mod_) r.mod_ = o.mod_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + o * Rational(-1);
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
  AlgebraElement r(mod_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

AlgebraElement module_action(const HopfElement& h, const AlgebraElement& v) {
  const ModulePtr& mod = v.module();
  AlgebraElement r(mod);
  if (!mod) return r;
  const LieAlgebraPtr& alg = mod->hopf;
  for (const auto& [m, cm] : v.terms()) {
    int n = (int)m.size();
    for (const auto& [Ih, ch] : h.terms()) {
      // Distribute h over the n atoms via the iterated coproduct; each leg
      // multiplies the H-part of one atom.
      HTensor dist = iterated_coproduct(HopfElement::monomial(alg, Ih), n - 1);
      for (const auto& [legs, cl] : dist.terms()) {
        // legs has n entries (n = 0: scalar counit term, key empty).
        std::vector<Monomial> partial{{}};
        std::vector<Rational> coefs{cm * ch * cl};
        for (int i = 0; i < n; ++i) {
          HopfElement prod = pbw_multiply(HopfElement::monomial(alg, legs[i]),
                                          HopfElement::monomial(alg, m[i].I));
          std::vector<Monomial> np;
          std::vector<Rational> nc;
          for (size_t t = 0; t < partial.size(); ++t)
            for (const auto& [J, cj] : prod.terms()) {
              auto mon = partial[t];
              mon.push_back(Atom{J, m[i].gen});
              np.push_back(std::move(mon));
              nc.push_back(coefs[t] * cj);
            }
          partial = std::move(np);
          coefs = std::move(nc);
        }
        for (size_t t = 0; t < partial.size(); ++t) {
          int sign = sort_monomial(*mod, partial[t]);
          if (sign) r.add_term(partial[t], coefs[t] * sign);
        }
      }
    }
  }
  return r;
}

AlgebraElement super_multiply(const AlgebraElement& a, const AlgebraElement& b) {
  const ModulePtr& mod = a.module() ? a.module() : b.module();
  if (mod && mod->kind != ModuleKind::symmetric_algebra)
    throw error("free modules carry no product");
  AlgebraElement r(mod);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      int sign = sort_monomial(*mod, m);
      if (sign) r.add_term(m, ca * cb * sign);
    }
  return r;
}

PseudoTensor::PseudoTensor(ModulePtr mod, int arity)
    : mod_(std::move(mod)), arity_(arity) {
  if (arity < 0) throw error("pseudo-tensor arity must be nonnegative");
}

PseudoTensor PseudoTensor::zero(ModulePtr mod, int arity) {
  return PseudoTensor(std::move(mod), arity);
}

PseudoTensor PseudoTensor::from_element(const AlgebraElement& v) {
  PseudoTensor t(v.module(), 1);
  t.add_term({}, v);
  return t;
}

PseudoTensor PseudoTensor::class_representative(const AlgebraElement& v) {
  PseudoTensor t(v.module(), 0);
  t.add_term({}, v);
  return t;
}

AlgebraElement PseudoTensor::element() const {
  if (arity_ > 1) throw error("element() needs arity 0 or 1");
  if (terms_.empty()) return AlgebraElement::zero(mod_);
  return terms_.begin()->second;
}

void PseudoTensor::add_term(const std::vector<MultiIndex>& key,
                            const AlgebraElement& v) {
  if ((int)key.size() != std::max(arity_ - 1, 0))
    throw error("pseudo-tensor key arity mismatch");
  if (v.is_zero()) return;
  if (!mod_) mod_ = v.module();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, v);
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PseudoTensor PseudoTensor::operator+(const PseudoTensor& o) const {
  if (arity_ != o.arity_) throw error("pseudo-tensor arity mismatch in sum");
  PseudoTensor r = *this;
  if (!r.mod_) r.mod_ = o.mod_;
  for (const auto& [k, v] : o.terms_) r.add_term(k, v);
  return r;
}

PseudoTensor PseudoTensor::operator-(const PseudoTensor& o) const {
  return *this + o * Rational(-1);
}

PseudoTensor PseudoTensor::operator*(const Rational& c) const {
  PseudoTensor r(mod_, arity_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

PseudoTensor normalize(
    ModulePtr mod, const std::vector<std::pair<HTensor, AlgebraElement>>& raw) {
  if (raw.empty()) throw error("normalize needs at least one term (use zero)");
  int n = raw.front().first.arity();
  if (n < 1) throw error("normalize needs arity >= 1");
  const LieAlgebraPtr& alg = mod->hopf;
  PseudoTensor r(mod, n);
  for (const auto& [coef, v] : raw) {
    if (coef.arity() != n) throw error("normalize: mixed arities");
    for (const auto& [key, c] : coef.terms()) {
      HTensor dist =
          iterated_coproduct(HopfElement::monomial(alg, key[n - 1]), n - 1);
      for (const auto& [legs, cl] : dist.terms()) {
        // Slot i of the result is h_i S(leg_i); the last leg acts on v.
        std::vector<std::vector<MultiIndex>> keys{{}};
        std::vector<Rational> coefs{c * cl};
        for (int i = 0; i + 1 < n; ++i) {
          HopfElement s = antipode(HopfElement::monomial(alg, legs[i]));
          HopfElement slot =
              pbw_multiply(HopfElement::monomial(alg, key[i]), s);
          std::vector<std::vector<MultiIndex>> nk;
          std::vector<Rational> nc;
          for (size_t t = 0; t < keys.size(); ++t)
            for (const auto& [J, cj] : slot.terms()) {
              auto kk = keys[t];
              kk.push_back(J);
              nk.push_back(std::move(kk));
              nc.push_back(coefs[t] * cj);
            }
          keys = std::move(nk);
          coefs = std::move(nc);
        }
        AlgebraElement acted =
            module_action(HopfElement::monomial(alg, legs[n - 1]), v);
        for (size_t t = 0; t < keys.size(); ++t)
          r.add_term(keys[t], acted * coefs[t]);
      }
    }
  }
  return r;
}

// Expands the canonical tensor back to raw form with an explicit 1 in the
// last slot.
static std::vector<std::pair<HTensor, AlgebraElement>> to_raw(
    const PseudoTensor& T) {
  std::vector<std::pair<HTensor, AlgebraElement>> raw;
  const LieAlgebraPtr& alg = T.module()->hopf;
  for (const auto& [key, v] : T.terms()) {
    std::vector<MultiIndex> full = key;
    full.push_back(MultiIndex(alg->dim, 0));
    raw.push_back({HTensor::monomial(alg, full), v});
  }
  return raw;
}

PseudoTensor act_component(const HopfElement& h, int k, const PseudoTensor& T) {
  if (k < 1 || k > T.arity()) throw error("slot index out of range");
  const LieAlgebraPtr& alg = T.module()->hopf;
  HTensor factor(alg, T.arity());
  for (const auto& [I, c] : h.terms()) {
    std::vector<MultiIndex> key(T.arity(), MultiIndex(alg->dim, 0));
    key[k - 1] = I;
    factor.add_term(key, c);
  }
  auto raw = to_raw(T);
  for (auto& [coef, v] : raw) coef = htensor_multiply(factor, coef);
  if (raw.empty()) return PseudoTensor::zero(T.module(), T.arity());
  return normalize(T.module(), raw);
}

PseudoTensor permute_slots(const std::vector<int>& sigma,
                           const PseudoTensor& T) {
  if ((int)sigma.size() != T.arity())
    throw error("permutation size does not match the arity");
  auto raw = to_raw(T);
  for (auto& [coef, v] : raw) coef = htensor_permute(coef, sigma);
  if (raw.empty()) return PseudoTensor::zero(T.module(), T.arity());
  return normalize(T.module(), raw);
}

PseudoTensor multiply_right_by_V(const PseudoTensor& T,
                                 const AlgebraElement& c) {
  if (T.arity() != 2) throw error("multiply_right_by_V needs arity 2");
  PseudoTensor r(T.module(), 2);
  // Canonical second slot is 1, so g_(1) (x) g_(-2) = 1 (x) 1.
  for (const auto& [key, e] : T.terms())
    r.add_term(key, super_multiply(e, c));
  return r;
}

PseudoTensor multiply_left_by_V(const AlgebraElement& a,
                                const PseudoTensor& T) {
  if (T.arity() != 2) throw error("multiply_left_by_V needs arity 2");
  const LieAlgebraPtr& alg = T.module()->hopf;
  PseudoTensor r(T.module(), 2);
  for (const auto& [key, b] : T.terms()) {
    HTensor tw = twisted_coproduct_right(HopfElement::monomial(alg, key[0]));
    for (const auto& [legs, cl] : tw.terms()) {
      AlgebraElement acted =
          module_action(HopfElement::monomial(alg, legs[1]), a);
      r.add_term({legs[0]}, super_multiply(acted, b) * cl);
    }
  }
  return r;
}

namespace {

// All monomials of exactly the given weight, deterministic order.
void enumerate_multi_indices(int dim, int deg, MultiIndex& cur, int pos,
                             std::vector<MultiIndex>& out) {
  if (pos == dim - 1) {
    cur[pos] = deg;
    out.push_back(cur);
    return;
  }
  for (int d = 0; d <= deg; ++d) {
    cur[pos] = d;
    enumerate_multi_indices(dim, deg - d, cur, pos + 1, out);
  }
}

std::vector<Atom> atoms_of_weight(const ModuleSpec& mod, int w) {
  std::vector<Atom> out;
  if (w < 1) return out;
  std::vector<MultiIndex> idx;
  MultiIndex cur(mod.hopf->dim, 0);
  enumerate_multi_indices(mod.hopf->dim, w - 1, cur, 0, idx);
  for (int g = 0; g < (int)mod.generators.size(); ++g)
    for (const auto& I : idx) out.push_back(Atom{I, g});
  std::sort(out.begin(), out.end());
  return out;
}

void enumerate_monomials_rec(const ModuleSpec& mod,
                             const std::vector<std::vector<Atom>>& by_weight,
                             int remaining, bool has_min, Atom min_atom,
                             Monomial& cur, std::vector<Monomial>& out) {
  out.push_back(cur);
  for (int w = 1; w <= remaining; ++w)
    for (const auto& a : by_weight[w]) {
      if (has_min && a < min_atom) continue;
      if (!cur.empty() && cur.back() == a && mod.generators[a.gen].parity)
        continue;
      cur.push_back(a);
      enumerate_monomials_rec(mod, by_weight, remaining - w, true, a, cur, out);
      cur.pop_back();
    }
}

// All valid monomials of weight <= bound (including the empty one).
std::vector<Monomial> enumerate_monomials(const ModuleSpec& mod, int bound) {
  std::vector<std::vector<Atom>> by_weight(bound + 1);
  for (int w = 1; w <= bound; ++w) by_weight[w] = atoms_of_weight(mod, w);
  std::vector<Monomial> out;
  Monomial cur;
  enumerate_monomials_rec(mod, by_weight, bound, false, Atom{}, cur, out);
  return out;
}

}  // namespace

AlgebraElement quotient_class(const AlgebraElement& v, int degree_bound) {
  const ModulePtr& mod = v.module();
  if (!mod) return v;
  if (mod->kind == ModuleKind::free_module) {
    AlgebraElement r(mod);
    for (const auto& [m, c] : v.terms())
      if (degree(m[0].I) == 0) r.add_term(m, c);
    return r;
  }
  if (v.max_weight() > degree_bound)
    throw error("quotient bound exceeded: element weight " +
                std::to_string(v.max_weight()) + " > bound " +
                std::to_string(degree_bound));
  // Relations d_i * w are weight-homogeneous, so reduce weight by weight.
  // Build the relation list once and row-reduce v against it.
  std::vector<AlgebraElement> relations;
  for (const auto& w : enumerate_monomials(*mod, degree_bound - 1)) {
    AlgebraElement we(mod);
    we.add_term(w, 1);
    for (int i = 1; i <= mod->hopf->dim; ++i) {
      AlgebraElement rel =
          module_action(HopfElement::generator(mod->hopf, i), we);
      if (!rel.is_zero()) relations.push_back(rel);
    }
  }
  // Gaussian elimination: bring relations to echelon form over the monomial
  // order, then reduce v.
  std::map<Monomial, AlgebraElement> pivots;
  for (auto rel : relations) {
    while (!rel.is_zero()) {
      Monomial lead_m = rel.terms().begin()->first;
      Rational lead_c = rel.terms().begin()->second;
      auto it = pivots.find(lead_m);
      if (it == pivots.end()) {
        rel = rel * (Rational(1) / lead_c);
        pivots.emplace(lead_m, rel);
        break;
      }
      rel = rel - it->second * lead_c;
    }
  }
  AlgebraElement r = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [m, c] : r.terms()) {
      auto it = pivots.find(m);
      if (it != pivots.end()) {
        Rational coef = c;
        r = r - it->second * coef;
        changed = true;
        break;
      }
    }
  }
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string t;
    if (m.empty() || c != 1) t = to_string(c);
    for (const auto& a : m) {
      if (!t.empty()) t += " * ";
      t += multiindex_str(a.I) + " " + mod_->generators[a.gen].name;
    }
    out += t;
  }
  return out;
}

std::string PseudoTensor::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, v] : terms_) {
    if (!out.empty()) out += " + ";
    std::string vs = v.str();
    if (vs.find(" + ") != std::string::npos) vs = "(" + vs + ")";
    if (arity_ == 0) {
      out += "[" + vs + "]";
      continue;
    }
    std::string slots;
    for (const auto& I : key) {
      if (!slots.empty()) slots += "|";
      slots += (degree(I) == 0) ? "1" : multiindex_str(I);
    }
    if (!slots.empty()) slots += "|";
    slots += "1";
    out += "(" + slots + ") @ " + vs;
  }
  return out;
}

}  // namespace pcl

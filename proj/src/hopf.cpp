#include "pcl/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace pcl {

bool LieAlgebraSpec::is_abelian() const {
  for (const auto& a : structure_constants)
    for (const auto& b : a)
      for (const auto& c : b)
        if (c != 0) return false;
  return true;
}

LieAlgebraPtr make_lie_algebra(
    int dim, std::vector<std::vector<std::vector<Rational>>> c) {
  if (dim <= 0) throw error("lie algebra dimension must be positive");
  if ((int)c.size() != dim) throw error("structure constant table has wrong size");
  for (auto& row : c) {
    if ((int)row.size() != dim) throw error("structure constant table has wrong size");
    for (auto& v : row)
      if ((int)v.size() != dim) throw error("structure constant table has wrong size");
  }
  // Antisymmetry.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (c[i][j][k] != -c[j][i][k])
          throw error("structure constants are not antisymmetric");
  // Jacobi: [[i,j],k] + [[j,k],i] + [[k,i],j] = 0.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int m = 0; m < dim; ++m) {
          Rational s = 0;
          for (int l = 0; l < dim; ++l) {
            s += c[i][j][l] * c[l][k][m];
            s += c[j][k][l] * c[l][i][m];
            s += c[k][i][l] * c[l][j][m];
          }
          if (s != 0) throw error("structure constants violate the Jacobi identity");
        }
  auto spec = std::make_shared<LieAlgebraSpec>();
  spec->dim = dim;
  spec->structure_constants = std::move(c);
  return spec;
}

LieAlgebraPtr make_abelian(int dim) {
  std::vector<std::vector<std::vector<Rational>>> c(
      dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, 0)));
  return make_lie_algebra(dim, std::move(c));
}

LieAlgebraPtr make_heisenberg(int M) {
  int dim = 2 * M + 1;
  std::vector<std::vector<std::vector<Rational>>> c(
      dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, 0)));
  for (int i = 1; i <= M; ++i) {
    c[i][M + i][0] = 1;
    c[M + i][i][0] = -1;
  }
  return make_lie_algebra(dim, std::move(c));
}

int degree(const MultiIndex& I) {
  int d = 0;
  for (int e : I) d += e;
  return d;
}

static void check_same(const LieAlgebraPtr& a, const LieAlgebraPtr& b) {
  if (!a || !b) throw error("operation on an uninitialized Hopf element");
  if (a != b && a->dim != b->dim)
    throw error("dimension mismatch between Lie algebra specs");
}

HopfElement::HopfElement(LieAlgebraPtr alg, std::map<MultiIndex, Rational> terms)
    : alg_(std::move(alg)) {
  for (auto& [I, c] : terms)
    if (c != 0) terms_.emplace(I, c);
}

HopfElement HopfElement::one(LieAlgebraPtr alg) {
  return monomial(std::move(alg), MultiIndex(), 1);
}

HopfElement HopfElement::monomial(LieAlgebraPtr alg, const MultiIndex& I,
                                  const Rational& coef) {
  MultiIndex J = I;
  J.resize(alg->dim, 0);
  HopfElement h(alg);
  h.add_term(J, coef);
  return h;
}

HopfElement HopfElement::generator(LieAlgebraPtr alg, int i) {
  if (i < 1 || i > alg->dim) throw error("generator index out of range");
  MultiIndex I(alg->dim, 0);
  I[i - 1] = 1;
  return monomial(std::move(alg), I, 1);
}

int HopfElement::max_degree() const {
  int d = 0;
  for (const auto& [I, c] : terms_) d = std::max(d, degree(I));
  return d;
}

void HopfElement::add_term(const MultiIndex& I, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(I);
  if (it == terms_.end()) {
    terms_.emplace(I, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HopfElement HopfElement::operator+(const HopfElement& o) const {
  check_same(alg_, o.alg_);
  HopfElement r = *this;
  if (!r.alg_) r.alg_ = o.alg_;
  for (const auto& [I, c] : o.terms_) r.add_term(I, c);
  return r;
}

HopfElement HopfElement::operator-(const HopfElement& o) const {
  return *this + o * Rational(-1);
}

HopfElement HopfElement::operator*(const Rational& c) const {
  HopfElement r(alg_);
  if (c == 0) return r;
  for (const auto& [I, v] : terms_) r.terms_.emplace(I, v * c);
  return r;
}

// [d_h, d_g] as an element of H (h, g 0-based).
static HopfElement basis_bracket(const LieAlgebraPtr& alg, int h, int g) {
  HopfElement r(alg);
  for (int k = 0; k < alg->dim; ++k) {
    const Rational& c = alg->structure_constants[h][g][k];
    if (c != 0) {
      MultiIndex I(alg->dim, 0);
      I[k] = 1;
      r = r + HopfElement::monomial(alg, I, c);
    }
  }
  return r;
}

static HopfElement mono_times_gen(const LieAlgebraPtr& alg, const MultiIndex& I,
                                  int g);

static HopfElement elem_times_gen(const HopfElement& a, int g) {
  HopfElement r(a.algebra());
  for (const auto& [I, c] : a.terms())
    r = r + mono_times_gen(a.algebra(), I, g) * c;
  return r;
}

// d^I * d_g in PBW normal form (g 0-based). Standard straightening: move d_g
// left past trailing generators with larger index via the commutation
// relation; terminates by induction on (degree, inversions).
static HopfElement mono_times_gen(const LieAlgebraPtr& alg, const MultiIndex& I,
                                  int g) {
  int h = -1;
  for (int k = alg->dim - 1; k > g; --k)
    if (I[k] > 0) {
      h = k;
      break;
    }
  if (h < 0) {
    MultiIndex J = I;
    J[g] += 1;
    return HopfElement::monomial(alg, J, 1);
  }
  MultiIndex J = I;
  J[h] -= 1;  // d^I = d^J d_h with h the largest occupied index
  HopfElement term1 = elem_times_gen(mono_times_gen(alg, J, g), h);
  HopfElement bracket = basis_bracket(alg, h, g);
  HopfElement term2(alg);
  if (!bracket.is_zero()) {
    HopfElement dJ = HopfElement::monomial(alg, J, 1);
    term2 = pbw_multiply(dJ, bracket);
  }
  return term1 + term2;
}

HopfElement pbw_multiply(const HopfElement& a, const HopfElement& b) {
  check_same(a.alg_, b.alg_);
  const LieAlgebraPtr& alg = a.alg_;
  HopfElement r(alg);
  for (const auto& [J, cb] : b.terms_) {
    // Multiply a by the generator word of d^J, one generator at a time.
    HopfElement cur = a;
    for (int g = 0; g < alg->dim; ++g)
      for (int rep = 0; rep < J[g]; ++rep) cur = elem_times_gen(cur, g);
    r = r + cur * cb;
  }
  return r;
}

HopfElement antipode(const HopfElement& h) {
  const LieAlgebraPtr& alg = h.algebra();
  HopfElement r(alg);
  for (const auto& [I, c] : h.terms()) {
    // S(d^I) = (-1)^{|I|} d_N^{i_N} ... d_1^{i_1}, then normal order.
    HopfElement cur = HopfElement::one(alg);
    for (int g = alg->dim - 1; g >= 0; --g)
      for (int rep = 0; rep < I[g]; ++rep)
        cur = pbw_multiply(cur, HopfElement::generator(alg, g + 1));
    Rational sign = (degree(I) % 2 == 0) ? 1 : -1;
    r = r + cur * (c * sign);
  }
  return r;
}

Rational counit(const HopfElement& h) {
  MultiIndex zero(h.algebra() ? h.algebra()->dim : 0, 0);
  auto it = h.terms().find(zero);
  return it == h.terms().end() ? Rational(0) : it->second;
}

HTensor::HTensor(LieAlgebraPtr alg, int arity,
                 std::map<std::vector<MultiIndex>, Rational> terms)
    : alg_(std::move(alg)), arity_(arity) {
  for (auto& [k, c] : terms)
    if (c != 0) terms_.emplace(k, c);
}

HTensor HTensor::scalar(LieAlgebraPtr alg, const Rational& c) {
  HTensor t(std::move(alg), 0);
  t.add_term({}, c);
  return t;
}

HTensor HTensor::one(LieAlgebraPtr alg, int arity) {
  std::vector<MultiIndex> key(arity, MultiIndex(alg->dim, 0));
  HTensor t(std::move(alg), arity);
  t.add_term(key, 1);
  return t;
}

HTensor HTensor::monomial(LieAlgebraPtr alg, std::vector<MultiIndex> key,
                          const Rational& coef) {
  HTensor t(alg, (int)key.size());
  for (auto& I : key) I.resize(alg->dim, 0);
  t.add_term(key, coef);
  return t;
}

void HTensor::add_term(const std::vector<MultiIndex>& key, const Rational& c) {
  if (c == 0) return;
  if ((int)key.size() != arity_) throw error("HTensor key arity mismatch");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HTensor HTensor::operator+(const HTensor& o) const {
  if (arity_ != o.arity_) throw error("HTensor arity mismatch in sum");
  HTensor r = *this;
  if (!r.alg_) r.alg_ = o.alg_;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

HTensor HTensor::operator-(const HTensor& o) const {
  return *this + o * Rational(-1);
}

HTensor HTensor::operator*(const Rational& c) const {
  HTensor r(alg_, arity_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

HTensor htensor_multiply(const HTensor& a, const HTensor& b) {
  if (a.arity() != b.arity()) throw error("HTensor arity mismatch in product");
  const LieAlgebraPtr& alg = a.algebra() ? a.algebra() : b.algebra();
  HTensor r(alg, a.arity());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      // Slotwise PBW products; expand the (generally non-monomial) results.
      std::vector<HopfElement> slots;
      slots.reserve(a.arity());
      for (int s = 0; s < a.arity(); ++s)
        slots.push_back(pbw_multiply(HopfElement::monomial(alg, ka[s]),
                                     HopfElement::monomial(alg, kb[s])));
      std::vector<std::vector<MultiIndex>> keys{{}};
      std::vector<Rational> coefs{ca * cb};
      for (const auto& slot : slots) {
        std::vector<std::vector<MultiIndex>> nkeys;
        std::vector<Rational> ncoefs;
        for (size_t t = 0; t < keys.size(); ++t)
          for (const auto& [I, c] : slot.terms()) {
            auto key = keys[t];
            key.push_back(I);
            nkeys.push_back(std::move(key));
            ncoefs.push_back(coefs[t] * c);
          }
        keys = std::move(nkeys);
        coefs = std::move(ncoefs);
      }
      for (size_t t = 0; t < keys.size(); ++t) r.add_term(keys[t], coefs[t]);
    }
  return r;
}

HTensor htensor_permute(const HTensor& a, const std::vector<int>& sigma) {
  if ((int)sigma.size() != a.arity())
    throw error("permutation size does not match HTensor arity");
  HTensor r(a.algebra(), a.arity());
  for (const auto& [k, c] : a.terms()) {
    std::vector<MultiIndex> nk(k.size());
    // Slot i of the result is slot sigma^{-1}(i) of the input, i.e. the input
    // slot j lands at sigma(j).
    for (int j = 0; j < (int)k.size(); ++j) nk[sigma[j] - 1] = k[j];
    r.add_term(nk, c);
  }
  return r;
}

HTensor iterated_coproduct(const HopfElement& h, int n) {
  if (n < -1) throw error("iterated coproduct needs n >= -1");
  const LieAlgebraPtr& alg = h.algebra();
  if (n == -1) return HTensor::scalar(alg, counit(h));
  HTensor r(alg, n + 1);
  for (const auto& [I, c] : h.terms()) {
    // Delta^{(n)} is an algebra homomorphism and the generators are
    // primitive: expand the product of (sum over slots of d_g) per generator.
    HTensor cur = HTensor::one(alg, n + 1);
    for (int g = 0; g < alg->dim; ++g)
      for (int rep = 0; rep < I[g]; ++rep) {
        HTensor prim(alg, n + 1);
        for (int s = 0; s <= n; ++s) {
          std::vector<MultiIndex> key(n + 1, MultiIndex(alg->dim, 0));
          key[s][g] = 1;
          prim.add_term(key, 1);
        }
        cur = htensor_multiply(cur, prim);
      }
    r = r + cur * c;
  }
  return r;
}

HTensor coproduct(const HopfElement& h) { return iterated_coproduct(h, 1); }

HTensor twisted_coproduct_right(const HopfElement& h) {
  const LieAlgebraPtr& alg = h.algebra();
  HTensor d = coproduct(h);
  HTensor r(alg, 2);
  for (const auto& [k, c] : d.terms()) {
    HopfElement s = antipode(HopfElement::monomial(alg, k[1]));
    for (const auto& [J, cs] : s.terms()) r.add_term({k[0], J}, c * cs);
  }
  return r;
}

HTensor twisted_coproduct_left(const HopfElement& h) {
  const LieAlgebraPtr& alg = h.algebra();
  HTensor d = coproduct(h);
  HTensor r(alg, 2);
  for (const auto& [k, c] : d.terms()) {
    HopfElement s = antipode(HopfElement::monomial(alg, k[0]));
    for (const auto& [J, cs] : s.terms()) r.add_term({J, k[1]}, c * cs);
  }
  return r;
}

std::string multiindex_str(const MultiIndex& I) {
  std::ostringstream os;
  os << "d[";
  for (size_t i = 0; i < I.size(); ++i) {
    if (i) os << ",";
    os << I[i];
  }
  os << "]";
  return os.str();
}

static std::string hopf_term_str(const MultiIndex& I, const Rational& c) {
  std::string coef = to_string(c);
  if (degree(I) == 0) return coef;
  if (c == 1) return multiindex_str(I);
  if (c == -1) return "-" + multiindex_str(I);
  return coef + " * " + multiindex_str(I);
}

std::string HopfElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [I, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += hopf_term_str(I, c);
  }
  return out;
}

std::string HTensor::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string t = to_string(c);
    for (const auto& I : k) t += " (x) " + multiindex_str(I);
    out += t;
  }
  return out;
}

}  // namespace pcl

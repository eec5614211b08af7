#pragma once

// Left H-modules V: free modules H (x) V0 and symmetric superalgebras
// S(H (x) g), their elements in normal form, the H-action, the
// supercommutative product, pseudo-tensor spaces H^(x)n (x)_H V with a
// canonical form (last slot normalized to 1), slot actions and permutations,
// the two mixed V-multiplications, and the quotient V/H+V under a truncation
// bound.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcl/hopf.hpp"

namespace pcl {

enum class ModuleKind { free_module, symmetric_algebra };

struct GeneratorSpec {
  std::string name;
  int parity = 0;  // 0 even, 1 odd
};

struct ModuleSpec {
  LieAlgebraPtr hopf;
  std::vector<GeneratorSpec> generators;
  ModuleKind kind = ModuleKind::free_module;

  // 0-based index; throws if unknown.
  int generator_index(const std::string& name) const;
};

using ModulePtr = std::shared_ptr<const ModuleSpec>;

ModulePtr make_module(LieAlgebraPtr hopf, std::vector<GeneratorSpec> generators,
                      ModuleKind kind);

// One factor d^I (x) u_gen of a monomial.
struct Atom {
  MultiIndex I;
  int gen = 0;  // 0-based generator index

  bool operator==(const Atom& o) const = default;
  bool operator<(const Atom& o) const {
    if (gen != o.gen) return gen < o.gen;
    return I < o.I;
  }
};

// Sorted product of atoms; empty = the unit of S(H (x) g).
using Monomial = std::vector<Atom>;

int atom_weight(const Atom& a);       // |I| + 1
int monomial_weight(const Monomial& m);
int monomial_parity(const ModuleSpec& mod, const Monomial& m);

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(ModulePtr mod) : mod_(std::move(mod)) {}

  static AlgebraElement zero(ModulePtr mod) { return AlgebraElement(mod); }
  // Empty monomial; symmetric_algebra only.
  static AlgebraElement unit(ModulePtr mod);
  // d^0 (x) u_i.
  static AlgebraElement generator(ModulePtr mod, int i);
  static AlgebraElement generator(ModulePtr mod, const std::string& name);
  // Single atom d^I (x) u_i.
  static AlgebraElement atom(ModulePtr mod, const MultiIndex& I, int i,
                             const Rational& coef = 1);

  const ModulePtr& module() const { return mod_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Parity if homogeneous; throws on mixed parity.
  int parity() const;
  bool is_homogeneous() const;
  // [even part, odd part].
  std::pair<AlgebraElement, AlgebraElement> parity_parts() const;
  int max_weight() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const Rational& c) const;
  AlgebraElement operator-() const { return *this * Rational(-1); }
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator<(const AlgebraElement& o) const { return terms_ < o.terms_; }

  void add_term(const Monomial& m, const Rational& c);
  std::string str() const;

 private:
  ModulePtr mod_;
  std::map<Monomial, Rational> terms_;
};

// H-action; for the symmetric algebra it distributes over atoms via the
// iterated coproduct, so that h(ab) = (h_(1)a)(h_(2)b).
AlgebraElement module_action(const HopfElement& h, const AlgebraElement& v);

// Supercommutative product with Koszul signs; symmetric_algebra only.
AlgebraElement super_multiply(const AlgebraElement& a, const AlgebraElement& b);

// Element of H^(x)n (x)_H V in canonical form: the n-th slot is 1, so terms
// are keyed by (n-1)-tuples of multi-indices with AlgebraElement values.
// Arity 1 is V itself; arity 0 holds a class representative in V.
class PseudoTensor {
 public:
  PseudoTensor() : arity_(1) {}
  PseudoTensor(ModulePtr mod, int arity);

  static PseudoTensor zero(ModulePtr mod, int arity);
  // Arity 1 wrapper around v.
  static PseudoTensor from_element(const AlgebraElement& v);
  // Arity 0 class representative.
  static PseudoTensor class_representative(const AlgebraElement& v);

  const ModulePtr& module() const { return mod_; }
  int arity() const { return arity_; }
  const std::map<std::vector<MultiIndex>, AlgebraElement>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  // The unique value at arity <= 1 (zero element if empty).
  AlgebraElement element() const;

  PseudoTensor operator+(const PseudoTensor& o) const;
  PseudoTensor operator-(const PseudoTensor& o) const;
  PseudoTensor operator*(const Rational& c) const;
  PseudoTensor operator-() const { return *this * Rational(-1); }
  bool operator==(const PseudoTensor& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  void add_term(const std::vector<MultiIndex>& key, const AlgebraElement& v);
  std::string str() const;

 private:
  ModulePtr mod_;
  int arity_;
  std::map<std::vector<MultiIndex>, AlgebraElement> terms_;
};

// Canonicalize a raw presentation: each entry is an arity-n HTensor
// coefficient with a V-value; (h1 (x) ... (x) hn) (x)_H v is rewritten as
// sum (h1 S(hn_(1)) (x) ... (x) h_{n-1} S(hn_(n-1))) (x)_H (hn_(n) v).
PseudoTensor normalize(
    ModulePtr mod,
    const std::vector<std::pair<HTensor, AlgebraElement>>& raw);

// Multiply slot k (1-based) by h, renormalizing if k is the last slot.
PseudoTensor act_component(const HopfElement& h, int k, const PseudoTensor& T);

// Permute the coefficient slots (same convention as htensor_permute) and
// renormalize. H is even, so no sign.
PseudoTensor permute_slots(const std::vector<int>& sigma, const PseudoTensor& T);

// B c = sum (f (x) g_(1)) (x)_H b (g_(-2) c) on arity-2 tensors.
PseudoTensor multiply_right_by_V(const PseudoTensor& T, const AlgebraElement& c);
// a B = sum (f_(1) (x) g) (x)_H (f_(-2) a) b on arity-2 tensors.
PseudoTensor multiply_left_by_V(const AlgebraElement& a, const PseudoTensor& T);

// Canonical representative of v modulo H+V. Free modules apply the counit to
// the coefficient; symmetric algebras reduce by exact row reduction over all
// relations d_i * w with monomial w of weight <= degree_bound - 1. Throws a
// bound-exceeded error if v has weight above the bound.
AlgebraElement quotient_class(const AlgebraElement& v, int degree_bound);

}  // namespace pcl

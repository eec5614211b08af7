#pragma once

// Exact arithmetic in the universal enveloping algebra H = U(d) of a
// finite-dimensional Lie algebra d given by structure constants, in PBW
// normal form, together with the coalgebra operations (coproduct, counit,
// antipode and their iterated/twisted variants).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pcl/rational.hpp"

namespace pcl {

// Lie algebra with basis d_1,...,d_N and [d_i, d_j] = sum_k c[i][j][k] d_k
// (all indices 1-based in the API, 0-based in storage).
struct LieAlgebraSpec {
  int dim;
  // c[i][j][k], 0-based; antisymmetry and Jacobi are validated at build.
  std::vector<std::vector<std::vector<Rational>>> structure_constants;

  bool is_abelian() const;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebraSpec>;

// Validates antisymmetry and the Jacobi identity of the constants.
LieAlgebraPtr make_lie_algebra(int dim,
                               std::vector<std::vector<std::vector<Rational>>> c);
LieAlgebraPtr make_abelian(int dim);
// dim = 2M+1, basis d_1 = central, [d_{1+i}, d_{1+M+i}] = d_1 for 1<=i<=M.
LieAlgebraPtr make_heisenberg(int M);

using MultiIndex = std::vector<int>;

int degree(const MultiIndex& I);

class HTensor;

// Element of H in PBW normal form: finite map from multi-indices to nonzero
// rational coefficients. Immutable value semantics.
class HopfElement {
 public:
  HopfElement() = default;
  explicit HopfElement(LieAlgebraPtr alg) : alg_(std::move(alg)) {}
  HopfElement(LieAlgebraPtr alg, std::map<MultiIndex, Rational> terms);

  static HopfElement zero(LieAlgebraPtr alg) { return HopfElement(alg); }
  static HopfElement one(LieAlgebraPtr alg);
  static HopfElement monomial(LieAlgebraPtr alg, const MultiIndex& I,
                              const Rational& coef = 1);
  // Generator d_i, 1-based.
  static HopfElement generator(LieAlgebraPtr alg, int i);

  const LieAlgebraPtr& algebra() const { return alg_; }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;

  HopfElement operator+(const HopfElement& o) const;
  HopfElement operator-(const HopfElement& o) const;
  HopfElement operator*(const Rational& c) const;
  HopfElement operator-() const { return *this * Rational(-1); }
  bool operator==(const HopfElement& o) const { return terms_ == o.terms_; }

  friend HopfElement pbw_multiply(const HopfElement& a, const HopfElement& b);

  std::string str() const;

 private:
  void add_term(const MultiIndex& I, const Rational& c);

  LieAlgebraPtr alg_;
  std::map<MultiIndex, Rational> terms_;
};

HopfElement pbw_multiply(const HopfElement& a, const HopfElement& b);
HopfElement antipode(const HopfElement& h);
Rational counit(const HopfElement& h);

// Element of H^{tensor n}: map from n-tuples of multi-indices to nonzero
// rationals. Arity 0 is a bare scalar (single empty key).
class HTensor {
 public:
  HTensor() : arity_(0) {}
  HTensor(LieAlgebraPtr alg, int arity) : alg_(std::move(alg)), arity_(arity) {}
  HTensor(LieAlgebraPtr alg, int arity,
          std::map<std::vector<MultiIndex>, Rational> terms);

  static HTensor scalar(LieAlgebraPtr alg, const Rational& c);
  static HTensor one(LieAlgebraPtr alg, int arity);
  static HTensor monomial(LieAlgebraPtr alg, std::vector<MultiIndex> key,
                          const Rational& coef = 1);

  const LieAlgebraPtr& algebra() const { return alg_; }
  int arity() const { return arity_; }
  const std::map<std::vector<MultiIndex>, Rational>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  HTensor operator+(const HTensor& o) const;
  HTensor operator-(const HTensor& o) const;
  HTensor operator*(const Rational& c) const;
  bool operator==(const HTensor& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  std::string str() const;

  void add_term(const std::vector<MultiIndex>& key, const Rational& c);

 private:
  LieAlgebraPtr alg_;
  int arity_;
  std::map<std::vector<MultiIndex>, Rational> terms_;
};

// Slotwise PBW product; arities must match.
HTensor htensor_multiply(const HTensor& a, const HTensor& b);
// Right action: slot k of the result is slot sigma^{-1}(k) of the input.
// sigma is given as a 1-based image table: sigma[i-1] = sigma(i).
HTensor htensor_permute(const HTensor& a, const std::vector<int>& sigma);

HTensor coproduct(const HopfElement& h);
// Delta^{(n)}: H -> H^{tensor n+1}; n = 0 is the identity, n = -1 the counit.
HTensor iterated_coproduct(const HopfElement& h, int n);
// (id x S)Delta(h) = h_(1) x h_(-2).
HTensor twisted_coproduct_right(const HopfElement& h);
// (S x id)Delta(h) = h_(-1) x h_(2).
HTensor twisted_coproduct_left(const HopfElement& h);

std::string multiindex_str(const MultiIndex& I);

}  // namespace pcl

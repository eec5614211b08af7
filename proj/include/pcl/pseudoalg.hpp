#pragma once

// Lie and Poisson pseudoalgebra structures on an H-module V: bracket tables
// on generators, extension by H-bilinearity and the iterated Leibniz rule,
// bracket compositions, axiom checkers, the lambda-bracket dictionary for
// polynomial H, and builders for the standard example families.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcl/hmodule.hpp"

namespace pcl {

struct PseudoAlgebra {
  ModulePtr module;
  // table[i][j] = [u_i * u_j], arity-2 canonical tensors, 0-based.
  std::vector<std::vector<PseudoTensor>> table;
};

using PseudoAlgebraPtr = std::shared_ptr<const PseudoAlgebra>;

// Pairs missing from the table are completed by skewsymmetry; explicitly
// given pairs are kept verbatim (so deliberately inconsistent tables can be
// built for negative controls). Values must be parity-homogeneous with
// parity(value) = parity(u_i) + parity(u_j).
PseudoAlgebraPtr make_pseudoalgebra(
    ModulePtr module,
    const std::map<std::pair<int, int>, PseudoTensor>& table);

// H-bilinear extension on free modules; additionally the iterated Leibniz
// extension on symmetric algebras. Brackets with the empty monomial are 0.
PseudoTensor bracket(const PseudoAlgebra& alg, const AlgebraElement& a,
                     const AlgebraElement& b);

// [[a*b]*c] from T = [a*b]: sum (f_i f_ij(1) (x) g_i f_ij(2) (x) g_ij) (x) e_ij.
PseudoTensor compose_bracket_right(const PseudoAlgebra& alg,
                                   const PseudoTensor& T,
                                   const AlgebraElement& c);
// [a*[b*c]] from T = [b*c]: sum (h_ij (x) h_i l_ij(1) (x) l_i l_ij(2)) (x) d_ij.
PseudoTensor compose_bracket_left(const PseudoAlgebra& alg,
                                  const AlgebraElement& a,
                                  const PseudoTensor& T);

struct CheckFailure {
  std::string identity;
  std::string arguments;
  std::string residual;
};
using CheckReport = std::vector<CheckFailure>;

// Skewsymmetry on all generator pairs.
CheckReport check_skewsymmetry(const PseudoAlgebra& alg);
// Jacobi on all generator triples.
CheckReport check_jacobi(const PseudoAlgebra& alg);
// [a*bc] = [a*b]c + (-1)^{p(b)p(c)}[a*c]b, a over monomials of at most two
// atoms, b and c over single atoms (multi-index degree <= 1 throughout).
CheckReport check_leibniz(const PseudoAlgebra& alg);
// [ab*c] = a[b*c] + (-1)^{p(a)p(b)}b[a*c], mirrored argument ranges.
CheckReport check_right_leibniz(const PseudoAlgebra& alg);

// Lambda-polynomial image of an arity-2 tensor for abelian H:
// sum (f_i (x) 1) (x) e_i maps to sum f_i(-lambda) e_i.
struct LambdaBracket {
  std::map<MultiIndex, AlgebraElement> coeffs;
};

LambdaBracket to_lambda_bracket(const ModulePtr& mod, const PseudoTensor& T);
PseudoTensor from_lambda_bracket(const ModulePtr& mod, const LambdaBracket& L);
std::string lambda_bracket_str(const ModulePtr& mod, const LambdaBracket& L);

// Example families. beta/gamma matrices are indexed by generators; d-valued
// entries are degree-1 HopfElements.
PseudoAlgebraPtr build_example_W_d(const LieAlgebraPtr& d);
PseudoAlgebraPtr build_example_boson(const LieAlgebraPtr& d,
                                     std::vector<GeneratorSpec> generators,
                                     std::vector<std::vector<HopfElement>> beta,
                                     const Rational& K = 1);
PseudoAlgebraPtr build_example_fermion(const LieAlgebraPtr& d,
                                       std::vector<GeneratorSpec> generators,
                                       std::vector<std::vector<Rational>> gamma,
                                       const Rational& K = 1);
PseudoAlgebraPtr build_example_affine(const LieAlgebraPtr& d,
                                      const LieAlgebraPtr& g,
                                      std::vector<std::vector<HopfElement>> beta,
                                      const Rational& K = 1);
PseudoAlgebraPtr build_example_type_W(const LieAlgebraPtr& d,
                                      std::vector<std::vector<HopfElement>> beta,
                                      const Rational& C = 1);
PseudoAlgebraPtr build_example_type_K(int M, const Rational& c);

}  // namespace pcl

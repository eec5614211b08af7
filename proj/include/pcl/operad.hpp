#pragma once

// The operad of graph-indexed maps on an H-module: elements assign to every
// acyclic n-graph a pseudo-tensor-valued multilinear map, with the symmetric
// group action, insertion (circle) products, full composition, the box
// product and bracket on symmetric-group invariants, the master element of a
// Poisson pseudoalgebra, the induced differentials, the edge-count grading,
// and extensional checkers for all the structure identities.

#include <functional>
#include <string>
#include <vector>

#include "pcl/graphs.hpp"
#include "pcl/pseudoalg.hpp"

namespace pcl {

// An arity-n element: for each acyclic graph on n vertices, a multilinear map
// from n module elements to a pseudo-tensor whose arity is the number of
// connected components of the graph. Cyclic graphs evaluate to zero. The
// stored parity is the reversed parity (parity as a map on the
// parity-reversed module). Arity-0 elements hold a class representative in
// the quotient by the augmentation submodule and evaluate on the empty graph.
class OperadElement {
 public:
  using EvalFn =
      std::function<PseudoTensor(const Graph&, const std::vector<AlgebraElement>&)>;

  OperadElement() = default;
  OperadElement(ModulePtr mod, int arity, int parity, EvalFn fn);

  static OperadElement zero(ModulePtr mod, int arity, int parity = 0);
  // The arity-1 unit: identity on the one-vertex graph.
  static OperadElement identity(ModulePtr mod);
  // Arity-0 element with the given homogeneous class representative.
  static OperadElement from_class(const AlgebraElement& rep);

  const ModulePtr& module() const { return mod_; }
  int arity() const { return arity_; }
  int parity() const { return parity_; }  // reversed parity

  // g must have arity() vertices and v arity() entries. Cyclic graphs give
  // zero; arguments are expanded into homogeneous parity parts first.
  PseudoTensor eval(const Graph& g, const std::vector<AlgebraElement>& v) const;
  // The class representative of an arity-0 element.
  AlgebraElement class_value() const;

  OperadElement operator+(const OperadElement& o) const;
  OperadElement operator-(const OperadElement& o) const;
  OperadElement operator*(const Rational& c) const;
  OperadElement operator-() const { return *this * Rational(-1); }

 private:
  ModulePtr mod_;
  int arity_ = 0;
  int parity_ = 0;
  EvalFn fn_;
};

// Right symmetric group action Y -> Y^sigma: evaluate Y on the relabeled
// graph and permuted (Koszul-signed, reversed parity) arguments, then permute
// the coefficient slots by the induced component permutation. sigma is a
// 1-based image table of size arity.
OperadElement symmetric_action(const OperadElement& Y,
                               const std::vector<int>& sigma);

// Insertion of X at slot k of Y (1-based). Supports arity(X) = 0 via
// evaluation at the class representative followed by the counit on the slot
// of the inserted vertex's component.
OperadElement circle(const OperadElement& Y, const OperadElement& X, int k);

// Full composition: insert Xs[j] at the j-th input block of Y.
OperadElement compose(const OperadElement& Y,
                      const std::vector<OperadElement>& Xs);

// Box product of invariant elements: sum over shuffles of the actions of
// circle(f, g, 1). Inputs are assumed invariant (see is_invariant).
OperadElement box_product(const OperadElement& f, const OperadElement& g);
// [f, g] = box(f, g) - (-1)^{parity(f) parity(g)} box(g, f).
OperadElement cochain_bracket(const OperadElement& f, const OperadElement& g);
// The differential ad_X f = [X, f].
OperadElement classical_differential(const OperadElement& X,
                                     const OperadElement& f);
// Restriction to graphs with exactly edge_count edges, extended by zero.
OperadElement grade_part(const OperadElement& Y, int edge_count);
// [Xstar, f] restricted to edgeless graphs; Xstar and f are expected to be
// supported on edgeless graphs.
OperadElement variational_differential(const OperadElement& Xstar,
                                       const OperadElement& f);

// Probe elements: the generators, and with max_degree >= 2 also the atoms
// d_i u_j and (for symmetric algebras) the quadratic products.
std::vector<AlgebraElement> probe_elements(const ModulePtr& mod,
                                           int max_degree);
// All n-tuples over the probes.
std::vector<std::vector<AlgebraElement>> probe_tuples(
    const std::vector<AlgebraElement>& probes, int n);

struct OperadFailure {
  std::string graph;
  std::string arguments;
  std::string residual;
};
using OperadReport = std::vector<OperadFailure>;

// Evaluate Y on every acyclic graph of its arity and every tuple; report the
// nonzero values.
OperadReport check_zero(const OperadElement& Y,
                        const std::vector<std::vector<AlgebraElement>>& tuples);
// Same, for the difference of two elements of equal arity.
OperadReport check_equal(const OperadElement& A, const OperadElement& B,
                         const std::vector<std::vector<AlgebraElement>>& tuples);
// Y^sigma = Y for the adjacent transpositions, extensionally on the tuples.
bool is_invariant(const OperadElement& Y,
                  const std::vector<std::vector<AlgebraElement>>& tuples);
// For every graph made of an acyclic graph plus one extra edge, and every
// oriented cycle C of length <= cycle_bound in it, the sum over e in C of the
// evaluations on the graph minus e must vanish.
OperadReport check_cycle_condition(
    const OperadElement& Y, int cycle_bound,
    const std::vector<std::vector<AlgebraElement>>& tuples);
// Acting by h on all vertices of component k of the graph (via the iterated
// coproduct) matches acting by h on coefficient slot k of the value.
OperadReport check_component_linearity(
    const OperadElement& Y,
    const std::vector<std::vector<AlgebraElement>>& tuples,
    const std::vector<HopfElement>& hs);

// The odd invariant arity-2 element of a Poisson pseudoalgebra: the signed
// bracket on the edgeless 2-graph and the signed product (with opposite signs
// for the two orientations) on the one-edge graphs. Requires a symmetric
// algebra module.
OperadElement poisson_to_master(const PseudoAlgebraPtr& alg);
// The edgeless part alone (the signed bracket); works for any module kind.
OperadElement lie_master(const PseudoAlgebraPtr& alg);
// The product and bracket recovered from a master element on generators.
AlgebraElement master_product(const OperadElement& X, const AlgebraElement& a,
                              const AlgebraElement& b);
PseudoTensor master_bracket(const OperadElement& X, const AlgebraElement& a,
                            const AlgebraElement& b);
// box(X, X) evaluated on all acyclic 3-graphs at all generator triples.
OperadReport check_master(const PseudoAlgebraPtr& alg);

// Multiply b into coefficient slot i: the slot coefficient g is split as
// g_(1) (x) g_(-2) with g_(1) kept in the slot and (g_(-2) b) multiplied onto
// the value from the left.
PseudoTensor slot_multiply(const AlgebraElement& b, int i,
                           const PseudoTensor& A);

// The slot Leibniz conditions (equivalent to the left and right bracket
// Leibniz rules) for an element supported on edgeless graphs, checked on all
// slots with arguments from args and multipliers from mults. Failures are
// appended to report when given.
bool check_variational_leibniz(const OperadElement& f,
                               const std::vector<AlgebraElement>& args,
                               const std::vector<AlgebraElement>& mults,
                               OperadReport* report = nullptr);

}  // namespace pcl

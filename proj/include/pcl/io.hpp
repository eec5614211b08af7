#pragma once

// Text front end: parsing of module elements and pseudo-tensors in the
// printed grammar, JSON spec files for pseudoalgebras (Hopf data, generators,
// bracket table, central symbol substitution), and JSON cochain files for the
// differentials.

#include <map>
#include <string>

#include "pcl/operad.hpp"

namespace pcl {

// Parse an element in the printed grammar: terms joined by " + " or " - ",
// each an optional rational coefficient and atoms "d[i,j,...] name" joined by
// " * "; "1" is the unit monomial and a bare generator name is accepted.
AlgebraElement parse_element(const ModulePtr& mod, const std::string& s);

// Parse a pseudo-tensor: terms "(h1|h2|...|1) @ value" with optional leading
// rational or symbol factors, joined by " + " or " - "; arity-0 terms are
// "[value]". Non-canonical slot tuples are normalized. Symbols are replaced
// by their values from the map.
PseudoTensor parse_tensor(const ModulePtr& mod, int arity, const std::string& s,
                          const std::map<std::string, Rational>& symbols = {});

struct SpecData {
  PseudoAlgebraPtr algebra;
  std::map<std::string, Rational> central;
  std::string name;
};

// JSON schema: {"name": ..., "hopf": {"dim": N, "brackets": [{"i":..,"j":..,
// "terms":[{"k":..,"c":"rational"}]}]}, "generators": [{"name":..,
// "parity":0|1}], "kind": "free_module"|"symmetric_algebra",
// "central": {"K": "1"}, "bracket_table": [{"a":..,"b":..,"value":..}]}.
SpecData parse_spec(const std::string& json_text);
SpecData load_spec(const std::string& path);

// Arity-1 cochain extending the generator images H-linearly and as a
// superderivation on products.
OperadElement derivation_cochain(const ModulePtr& mod,
                                 const std::vector<AlgebraElement>& images);

// JSON cochain schema by degree:
//   -1: {"degree": -1, "value": "u"}
//    0: {"degree": 0, "values": [{"args": ["u"], "value": "d[1] u"}]}
//    1: {"degree": 1, "values": [{"a": "u", "b": "u", "value": "..."}]}
// Degree-1 tables must be parity-preserving and are completed by
// skewsymmetry like bracket tables.
OperadElement parse_cochain(const ModulePtr& mod, const std::string& json_text);
OperadElement load_cochain(const ModulePtr& mod, const std::string& path);

std::string read_file(const std::string& path);

}  // namespace pcl

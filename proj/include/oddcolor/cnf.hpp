#pragma once

#include <string>
#include <vector>

#include "oddcolor/coloring.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

/// What a CNF variable stands for.
struct CnfVariable {
  enum class Kind { Assign, Odd, Chain };
  Kind kind = Kind::Assign;
  Vertex vertex = 0;
  Color color = 0;
  int step = 0;  // Chain: prefix length within N(vertex)
};

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<CnfVariable> variables;  // index = variable id, [0] unused
};

/// Formula satisfiable iff g has an odd k-coloring. x(v,c) = (v-1)*k + c;
/// odd(v,c) is the XOR of x(u,c) over u in N(v), built as a chain of
/// Tseitin XOR gadgets.
Cnf encode_odd_coloring(const Graph& g, int k);

/// DIMACS text: "c" lines carrying the variable map, then "p cnf V C".
std::string to_dimacs(const Cnf& cnf);
inline std::string export_cnf(const Graph& g, int k) { return to_dimacs(encode_odd_coloring(g, k)); }

/// Reads the assignment variables out of a model (model[var] true/false,
/// index 0 unused).
Coloring decode_model(const Graph& g, int k, const std::vector<bool>& model);

}  // namespace oddcolor

#include "oddcolor/cnf.hpp"

#include <sstream>
#include <stdexcept>

namespace oddcolor {

namespace {

int add_var(Cnf& cnf, CnfVariable info) {
  cnf.variables.push_back(info);
  return ++cnf.num_vars;
}

// t <-> a XOR b
void xor_gadget(Cnf& cnf, int t, int a, int b) {
  cnf.clauses.push_back({-t, a, b});
  cnf.clauses.push_back({-t, -a, -b});
  cnf.clauses.push_back({t, -a, b});
  cnf.clauses.push_back({t, a, -b});
}

}  // namespace

Cnf encode_odd_coloring(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("encode_odd_coloring: k must be positive");
  const int n = g.order();
  Cnf cnf;
  cnf.variables.push_back({});
  auto x = [k](Vertex v, Color c) { return (v - 1) * k + c; };
  for (Vertex v = 1; v <= n; ++v)
    for (Color c = 1; c <= k; ++c) add_var(cnf, {CnfVariable::Kind::Assign, v, c, 0});

  for (Vertex v = 1; v <= n; ++v) {
    std::vector<int> alo;
    for (Color c = 1; c <= k; ++c) alo.push_back(x(v, c));
    cnf.clauses.push_back(std::move(alo));
    for (Color a = 1; a <= k; ++a)
      for (Color b = a + 1; b <= k; ++b) cnf.clauses.push_back({-x(v, a), -x(v, b)});
  }
  for (auto [u, v] : g.edges())
    for (Color c = 1; c <= k; ++c) cnf.clauses.push_back({-x(u, c), -x(v, c)});

  for (Vertex v = 1; v <= n; ++v) {
    const auto& nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    std::vector<int> some_odd;
    for (Color c = 1; c <= k; ++c) {
      int prefix = x(nbrs[0], c);
      for (std::size_t i = 1; i < nbrs.size(); ++i) {
        const bool last = i + 1 == nbrs.size();
        int t = add_var(cnf, {last ? CnfVariable::Kind::Odd : CnfVariable::Kind::Chain, v, c, static_cast<int>(i + 1)});
        xor_gadget(cnf, t, prefix, x(nbrs[i], c));
        prefix = t;
      }
      if (nbrs.size() == 1) {
        // odd(v,c) is x(u,c) itself; keep a named variable for the map.
        int t = add_var(cnf, {CnfVariable::Kind::Odd, v, c, 1});
        cnf.clauses.push_back({-t, prefix});
        cnf.clauses.push_back({t, -prefix});
        prefix = t;
      }
      some_odd.push_back(prefix);
    }
    cnf.clauses.push_back(std::move(some_odd));
  }
  return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream os;
  os << "c odd coloring encoding\n";
  for (int id = 1; id <= cnf.num_vars; ++id) {
    const CnfVariable& var = cnf.variables[id];
    switch (var.kind) {
      case CnfVariable::Kind::Assign:
        os << "c var " << id << " x " << var.vertex << ' ' << var.color << '\n';
        break;
      case CnfVariable::Kind::Odd:
        os << "c var " << id << " odd " << var.vertex << ' ' << var.color << '\n';
        break;
      case CnfVariable::Kind::Chain:
        os << "c var " << id << " aux " << var.vertex << ' ' << var.color << ' ' << var.step << '\n';
        break;
    }
  }
  os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

Coloring decode_model(const Graph& g, int k, const std::vector<bool>& model) {
  Coloring out(g.order(), k);
  for (Vertex v = 1; v <= g.order(); ++v)
    for (Color c = 1; c <= k; ++c) {
      std::size_t var = static_cast<std::size_t>((v - 1) * k + c);
      if (var < model.size() && model[var]) {
        if (out.assigned(v)) throw std::invalid_argument("model assigns two colors to a vertex");
        out.assign(v, c);
      }
    }
  return out;
}

}  // namespace oddcolor

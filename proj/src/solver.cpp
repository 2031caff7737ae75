#include "oddcolor/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oddcolor {

namespace {

class Search {
 public:
  Search(const Graph& g, int k, const SolveOptions& options)
      : g_(g), k_(k), options_(options), color_(g.order() + 1, kNoColor), parity_(g.order() + 1),
        open_(g.order() + 1, 0) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex v = 1; v <= g.order(); ++v) open_[v] = g.degree(v);
  }

  SolveStatus run() {
    if (g_.order() == 0) return SolveStatus::Found;
    if (k_ < 1) return SolveStatus::Exhausted;
    return descend(0, 0);
  }

  std::uint64_t nodes() const { return nodes_; }
  Coloring witness() const { return Coloring(k_, std::vector<Color>(color_.begin() + 1, color_.end())); }

 private:
  ColorSet allowed(Vertex x, int max_used) const {
    ColorSet out = ColorSet::palette(std::min(k_, max_used + 1));
    for (Vertex w : g_.neighbors(x)) {
      if (color_[w] != kNoColor) out.erase(color_[w]);
      // x is the last open slot of N(w): it must not cancel a unique odd color.
      if (options_.require_odd && open_[w] == 1 && parity_[w].size() == 1) out.erase(parity_[w].first());
    }
    return out;
  }

  void place(Vertex x, Color c) {
    color_[x] = c;
    for (Vertex w : g_.neighbors(x)) {
      --open_[w];
      parity_[w].toggle(c);
    }
  }

  void unplace(Vertex x) {
    Color c = color_[x];
    for (Vertex w : g_.neighbors(x)) {
      ++open_[w];
      parity_[w].toggle(c);
    }
    color_[x] = kNoColor;
  }

  SolveStatus descend(std::size_t depth, int max_used) {
    if (depth == order_.size()) return SolveStatus::Found;
    Vertex x = order_[depth];
    ColorSet options = allowed(x, max_used);
    for (Color c : options.to_vector()) {
      if (options_.node_budget != 0 && nodes_ >= options_.node_budget) return SolveStatus::BudgetExhausted;
      ++nodes_;
      place(x, c);
      SolveStatus s = descend(depth + 1, std::max(max_used, c));
      if (s != SolveStatus::Exhausted) return s;
      unplace(x);
    }
    return SolveStatus::Exhausted;
  }

  const Graph& g_;
  int k_;
  SolveOptions options_;
  std::vector<Vertex> order_;
  std::vector<Color> color_;
  std::vector<ColorSet> parity_;
  std::vector<int> open_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult find_odd_coloring(const Graph& g, int k, const SolveOptions& options) {
  if (k > kMaxPalette) throw std::invalid_argument("palette larger than " + std::to_string(kMaxPalette));
  auto start = std::chrono::steady_clock::now();
  SolveResult result;
  Search search(g, k, options);
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == SolveStatus::Found) {
    Coloring w = g.order() == 0 ? Coloring(0, std::max(k, 1)) : search.witness();
    bool ok = options.require_odd ? is_odd_coloring(g, w).verdict : is_proper(g, w);
    if (!ok) throw std::logic_error("find_odd_coloring: search produced an invalid witness");
    result.witness = std::move(w);
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

namespace {

ChromaticResult least_k(const Graph& g, int max_k, const SolveOptions& options) {
  ChromaticResult out;
  for (int k = 1; k <= max_k; ++k) {
    SolveOptions per_k = options;
    if (options.node_budget != 0) {
      if (out.nodes >= options.node_budget) {
        out.status = ChromaticResult::Status::BudgetExhausted;
        return out;
      }
      per_k.node_budget = options.node_budget - out.nodes;
    }
    SolveResult r = find_odd_coloring(g, k, per_k);
    out.nodes += r.nodes;
    if (r.status == SolveStatus::Found) {
      out.status = ChromaticResult::Status::Exact;
      out.value = k;
      out.witness = std::move(r.witness);
      return out;
    }
    if (r.status == SolveStatus::BudgetExhausted) {
      out.status = ChromaticResult::Status::BudgetExhausted;
      return out;
    }
  }
  out.status = ChromaticResult::Status::ExceedsBound;
  return out;
}

}  // namespace

ChromaticResult odd_chromatic_number(const Graph& g, int max_k, const SolveOptions& options) {
  SolveOptions o = options;
  o.require_odd = true;
  return least_k(g, max_k, o);
}

ChromaticResult chromatic_number(const Graph& g, int max_k, const SolveOptions& options) {
  SolveOptions o = options;
  o.require_odd = false;
  return least_k(g, max_k, o);
}

ChromaticResult brute_force_odd_chromatic(const Graph& g, int max_k) {
  const int n = g.order();
  const auto edges = g.edges();
  ChromaticResult out;
  for (int k = 1; k <= max_k; ++k) {
    double total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    if (total > 1e8) throw InstanceTooLarge("brute force: " + std::to_string(k) + "^" + std::to_string(n) + " > 1e8");
    std::vector<Color> col(n + 1, 1);
    while (true) {
      ++out.nodes;
      bool ok = true;
      for (auto [u, v] : edges)
        if (col[u] == col[v]) {
          ok = false;
          break;
        }
      for (Vertex v = 1; ok && v <= n; ++v) {
        if (g.degree(v) == 0) continue;
        std::vector<int> count(k + 1, 0);
        for (Vertex u : g.neighbors(v)) ++count[col[u]];
        ok = std::any_of(count.begin(), count.end(), [](int x) { return x % 2 == 1; });
      }
      if (ok) {
        out.status = ChromaticResult::Status::Exact;
        out.value = k;
        out.witness = Coloring(k, std::vector<Color>(col.begin() + 1, col.end()));
        return out;
      }
      int i = 1;
      while (i <= n && col[i] == k) col[i++] = 1;
      if (i > n) break;
      ++col[i];
    }
  }
  out.status = ChromaticResult::Status::ExceedsBound;
  return out;
}

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("ODDCHROM_BUDGET");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') throw std::invalid_argument("ODDCHROM_BUDGET must be a non-negative integer");
  return v;
}

}  // namespace oddcolor

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcolor/coloring.hpp"
#include "oddcolor/plane_graph.hpp"

namespace oddcolor {

inline constexpr int kNicePalette = 9;

enum class ReductionKind {
  DeleteOdd13,           // site {v}, d(v) in {1,3}
  Degree2Bridge,         // site {v, x, y}
  Degree4Contract,       // site {v, w}: contract vw
  FiveVertexTwoOddNbrs,  // site {v, u, w}: u, w odd-degree neighbors of the 5-vertex v
  C7Contract,            // site {v, vj, vj+1, vj+2}: identify vj and vj+2 in G - v
  C11Quad,               // site {v, A, B, C, D}: identify B and D in G - {v, A, C}
};

std::string to_string(ReductionKind kind);

struct Reduction {
  ReductionKind kind = ReductionKind::DeleteOdd13;
  std::vector<Vertex> site;
};

/// Every applicable reduction, in priority order (kind order above, then site
/// scan order).
std::vector<Reduction> candidate_reductions(const PlaneGraph& p);

/// The first entry of candidate_reductions, if any.
std::optional<Reduction> find_reduction(const PlaneGraph& p);

/// Colors an arbitrary (possibly disconnected) plane graph with <= 9 colors.
using Colorer = std::function<Coloring(const PlaneGraph&)>;

/// Applies r, colors the reduced graph with `colorer`, and extends the result
/// back to p. Returns std::nullopt when the inherited coloring does not extend
/// (possible for C7Contract and C11Quad). Throws std::logic_error if the
/// colorer hands back an invalid coloring. When `note` is given it receives
/// a short diagnostic, e.g. the color distribution that blocked an extension.
std::optional<Coloring> apply_and_extend(const PlaneGraph& p, const Reduction& r, const Colorer& colorer,
                                         std::string* note = nullptr);

struct TraceStep {
  std::string kind;  // a ReductionKind name, "Base", "Fallback", or "ExtensionFailed"
  std::vector<Vertex> site;
  int graph_size_before = 0;
  std::string note;
};

struct Color9Options {
  /// Node budget for the exact-search fallback.
  std::uint64_t fallback_budget = 50'000'000;
  /// Reduction sites tried per graph before falling back.
  int max_attempts = 12;
};

struct Color9Result {
  Coloring coloring;
  std::vector<TraceStep> trace;
  int fallbacks = 0;
};

/// Exact search at k = 9 proved no odd 9-coloring exists.
class CounterexampleFound : public std::runtime_error {
 public:
  CounterexampleFound(const std::string& graph6, std::uint64_t nodes)
      : std::runtime_error("no odd 9-coloring exists for " + graph6 + " (" + std::to_string(nodes) + " nodes)"),
        graph6_(graph6) {}
  const std::string& graph6() const { return graph6_; }

 private:
  std::string graph6_;
};

/// Odd coloring with at most 9 colors of a connected plane graph, built by
/// recursing through the reductions and extending. The result is verified
/// before it is returned.
Color9Result color9(const PlaneGraph& p, const Color9Options& options = {});

}  // namespace oddcolor

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "oddcolor/coloring.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

enum class SolveStatus { Found, Exhausted, BudgetExhausted };

struct SolveOptions {
  /// Maximum number of search nodes; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// When false the search only asks for a proper coloring.
  bool require_odd = true;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Exhausted;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{};
};

/// Backtracking search for an odd (or, with require_odd off, proper)
/// k-coloring. Vertices are taken by descending degree; color c is tried at
/// step i only if c <= 1 + the largest color used so far. A branch is cut as
/// soon as some vertex with a fully colored neighborhood has no odd color,
/// or the last open slot in a neighborhood could only cancel its unique odd
/// color.
SolveResult find_odd_coloring(const Graph& g, int k, const SolveOptions& options = {});

inline SolveResult find_proper_coloring(const Graph& g, int k, SolveOptions options = {}) {
  options.require_odd = false;
  return find_odd_coloring(g, k, options);
}

struct ChromaticResult {
  enum class Status { Exact, ExceedsBound, BudgetExhausted };
  Status status = Status::ExceedsBound;
  int value = 0;  // meaningful for Exact
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;

  bool exact() const { return status == Status::Exact; }
};

/// Least k <= max_k admitting an odd k-coloring.
ChromaticResult odd_chromatic_number(const Graph& g, int max_k, const SolveOptions& options = {});

/// Ordinary chromatic number by the same search with odd checks disabled.
ChromaticResult chromatic_number(const Graph& g, int max_k, const SolveOptions& options = {});

class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full enumeration of all k^n assignments, verified with is_odd_coloring.
/// Throws InstanceTooLarge once a k with k^n > 1e8 would have to be tried.
ChromaticResult brute_force_odd_chromatic(const Graph& g, int max_k);

/// Default node budget from the ODDCHROM_BUDGET environment variable (0 when unset).
std::uint64_t budget_from_env();

}  // namespace oddcolor

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

using Color = int;
inline constexpr Color kNoColor = 0;
inline constexpr int kMaxPalette = 63;

/// Set of colors 1..63 as a bit mask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t mask) : mask_(mask) {}
  static constexpr ColorSet palette(int k) { return ColorSet(k >= 63 ? ~std::uint64_t{1} : ((std::uint64_t{1} << (k + 1)) - 2)); }

  constexpr bool contains(Color c) const { return c >= 1 && c <= kMaxPalette && (mask_ >> c) & 1; }
  constexpr void insert(Color c) { mask_ |= std::uint64_t{1} << c; }
  constexpr void erase(Color c) { mask_ &= ~(std::uint64_t{1} << c); }
  constexpr void toggle(Color c) { mask_ ^= std::uint64_t{1} << c; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  /// Smallest member, or kNoColor.
  constexpr Color first() const { return mask_ == 0 ? kNoColor : std::countr_zero(mask_); }
  constexpr std::uint64_t mask() const { return mask_; }
  std::vector<Color> to_vector() const;

  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(mask_ | o.mask_); }
  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(mask_ & o.mask_); }
  constexpr ColorSet operator-(ColorSet o) const { return ColorSet(mask_ & ~o.mask_); }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

class ColoringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Partial or total map from vertices 1..n to colors 1..k.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int n, int k);
  Coloring(int k, std::vector<Color> colors_1_based);

  int order() const { return static_cast<int>(colors_.size()) - 1; }
  int palette() const { return k_; }
  Color operator[](Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }
  bool assigned(Vertex v) const { return (*this)[v] != kNoColor; }
  bool total() const;
  void assign(Vertex v, Color c);
  void clear(Vertex v) { colors_.at(static_cast<std::size_t>(v)) = kNoColor; }
  /// Number of distinct colors actually used.
  int colors_used() const;
  const std::vector<Color>& raw() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int k_ = 0;
  std::vector<Color> colors_{kNoColor};
};

bool is_proper(const Graph& g, const Coloring& c);

/// Colors with odd multiplicity on N(v). Requires N(v) fully colored.
ColorSet odd_colors(const Graph& g, const Coloring& c, Vertex v);

struct OddReport {
  bool proper = false;
  bool verdict = false;
  std::vector<ColorSet> odd;            // indexed by vertex; empty for isolated vertices
  std::vector<Vertex> failing;          // non-isolated vertices with no odd color
  std::vector<Edge> monochromatic;
};

OddReport is_odd_coloring(const Graph& g, const Coloring& c);

/// Colors c0 in 1..k such that coloring v with c0 (all other vertices kept)
/// leaves v improperly colored or leaves v or one of its neighbors without an
/// odd color. Requires every vertex other than v to be colored.
ColorSet forbidden_colors_at(const Graph& g, const Coloring& c, Vertex v);

/// Coloring serialization. JSON: {"k": K, "colors": {"1": c1, ...}}; text:
/// optional "# k K" line then one "v c" line per colored vertex.
std::string to_json(const Coloring& c);
Coloring coloring_from_json(std::string_view text, int n);
std::string to_text(const Coloring& c);
Coloring coloring_from_text(std::string_view text, int n);
/// Detects JSON by a leading '{'.
Coloring parse_coloring(std::string_view text, int n);

}  // namespace oddcolor

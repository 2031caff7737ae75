#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/plane_graph.hpp"

namespace oddcolor {

/// Malformed graph6 / planar_code input. offset() is the byte position of
/// the problem within the line (graph6) or stream (planar_code).
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6 -------------------------------------------------------------------

/// Decodes one graph6 line (a trailing newline is tolerated).
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// Reads graph6 lines, skipping blank lines and an optional ">>graph6<<" prefix.
std::vector<Graph> parse_graph6_stream(std::string_view text);

// planar_code --------------------------------------------------------------

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// Streaming reader for byte-sized planar_code: header once, then per graph
/// the vertex count followed by each vertex's neighbors in rotation order,
/// each list closed by 0.
class PlanarCodeReader {
 public:
  explicit PlanarCodeReader(std::istream& in);
  /// Next graph, or std::nullopt at a clean end of stream.
  std::optional<PlaneGraph> next();
  std::size_t offset() const { return offset_; }
  std::size_t records() const { return records_; }

 private:
  int get();
  std::istream& in_;
  std::size_t offset_ = 0;
  std::size_t records_ = 0;
};

std::vector<PlaneGraph> parse_planar_code(std::string_view bytes);

std::string encode_planar_code_record(const PlaneGraph& p);
std::string encode_planar_code(std::span<const PlaneGraph> graphs);

bool looks_like_planar_code(std::string_view bytes);

}  // namespace oddcolor

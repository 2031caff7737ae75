#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/plane_graph.hpp"

namespace oddcolor {

enum class Family { Cycle, Path, Complete, Kite, Wheel, SubdividedComplete, C5BlockTree, Icosahedron };

/// A non-root C5 block glued by its own first vertex onto vertex `index`
/// (1..5, cyclic order) of block `parent` (an earlier block, 0 = root).
struct BlockAttachment {
  int parent = 0;
  int index = 1;
};

struct FamilySpec {
  Family family = Family::Cycle;
  int n = 0;                            // cycle/path/complete/wheel rim/subdivided-complete
  std::vector<BlockAttachment> blocks;  // c5-block-tree: one entry per non-root block
};

struct Generated {
  Graph graph;
  std::optional<PlaneGraph> plane;  // present for planar-constructible members
};

/// Builds the named graph. Labeling:
///   cycle/path 1..n in order; kite = C4 1-2-3-4 plus chord 13;
///   wheel = rim 1..n plus hub n+1; subdivided-complete = K_n on 1..n then one
///   vertex per edge in lexicographic edge order; icosahedron = apex 1, rings
///   2..6 and 7..11, apex 12.
Generated make(const FamilySpec& spec);

/// Parses a family tag and its --param text ("5", "0:3,1:2", or empty).
FamilySpec parse_family(std::string_view tag, std::string_view param);
std::string family_tag(Family f);

/// Every shape of C5-block-tree with exactly `blocks` blocks: parent choices
/// times attachment indices.
std::vector<FamilySpec> all_c5_block_trees(int blocks);

/// Complete subdivision: edge uv becomes u - x_uv - v with x_uv = n + (edge index).
Graph subdivide(const Graph& g);
PlaneGraph subdivide(const PlaneGraph& p);

}  // namespace oddcolor

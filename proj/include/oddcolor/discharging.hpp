#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddcolor/plane_graph.hpp"

namespace oddcolor {

/// Charges in twelfths of a unit. vertex is indexed by vertex id (slot 0
/// unused), face by FaceSet id.
struct ChargeState {
  std::vector<long long> vertex;
  std::vector<long long> face;
  long long total = 0;
};

/// Vertex v gets 12(d(v) - 6), face f gets 12(2d(f) - 6). Sums to -144 on a
/// connected plane graph. Throws GraphError for disconnected input.
ChargeState initial_charges(const PlaneGraph& p, const FaceSet& fs);
ChargeState initial_charges(const PlaneGraph& p);

enum class Rule { R1, R2, R3 };
std::string to_string(Rule r);

struct Transfer {
  Rule rule = Rule::R1;
  bool from_face = true;  // source is a face id, otherwise a vertex
  int source = 0;
  Vertex sink = 0;
  long long amount = 0;
  std::optional<Edge> through;  // R3: the 6-6 edge the charge crosses
};

struct Discharge {
  ChargeState state;
  std::vector<Transfer> transfers;
};

/// R1: a 4+-face sends 12 to every distinct incident 5-vertex.
/// R2: an 8+-vertex u sends to an adjacent 5-vertex v when both faces along
///     uv are triangles: 4 if one of them has a second 5-vertex, else 6.
/// R3: a 4+-face f sends 6 across each boundary edge uw with d(u)=d(w)=6 to
///     the 5-vertex v of the triangle uvw on the other side, unless f is a
///     4-face with at least two 5-vertices.
/// All transfers are computed on the initial configuration.
Discharge apply_rules(const PlaneGraph& p, const FaceSet& fs, const ChargeState& initial);
Discharge apply_rules(const PlaneGraph& p, const ChargeState& initial);

struct FaceBound {
  int face = 0;
  int degree = 0;
  int fives = 0;  // 5-vertex occurrences along the walk
  int bound = 0;  // floor(2d/3)
};

struct ConvenientSlot {
  int index = 0;  // i: f_i lies along v_i v_{i+1}
  int face = 0;
  int face_degree = 0;
  bool convenient = false;
};

struct FiveVertexFan {
  Vertex v = 0;
  std::vector<Vertex> ring;  // rotation at v
  bool all_six = false;
  bool exactly_one_big = false;  // exactly one 8+-neighbor
  std::vector<ConvenientSlot> slots;
  int convenient_count() const;
};

struct NegativeFive {
  Vertex v = 0;
  long long charge = 0;
  bool only_triangles = false;
  int big_neighbors = 0;
  bool shared_five = false;  // with two 8+-neighbors: a common 5-vertex neighbor of all three
  bool fan_shape_holds() const;
};

struct StructureReport {
  bool min_degree_five = false;         // P1
  std::optional<Vertex> min_degree_witness;
  bool five_odd_neighbors_ok = false;   // P2
  std::optional<Vertex> five_odd_witness;
  bool face_bounds_ok = false;          // P3
  std::vector<FaceBound> face_bound_violations;
  std::vector<std::pair<Vertex, long long>> negative_big_vertices;
  std::vector<std::pair<int, long long>> negative_faces;
  std::vector<NegativeFive> negative_fives;
  std::vector<FiveVertexFan> fans;  // every 5-vertex surrounded by triangles

  bool hypotheses() const { return min_degree_five && five_odd_neighbors_ok; }
  /// Under P1 and P2 no 8+-vertex and no 4+-face ends negative.
  bool conditional_ok() const { return !hypotheses() || (negative_big_vertices.empty() && negative_faces.empty()); }
};

struct AuditResult {
  FaceSet faces;
  ChargeState initial;
  Discharge discharge;
  StructureReport report;
};

AuditResult audit(const PlaneGraph& p);

/// JSON report: faces, both charge tables, transfers, predicates.
std::string audit_json(const PlaneGraph& p, const AuditResult& a);

}  // namespace oddcolor

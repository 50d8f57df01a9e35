#pragma once

#include <unordered_map>
#include <vector>

#include "enrfem/mesh.hpp"

namespace enrfem {

enum class ScalingMode { None, Optimal };

/// Enrichment scaling factor s(zeta).
/// Optimal mode returns sqrt(2*zeta*(1-zeta)); None returns 1.
double scaling_factor(double zeta, ScalingMode mode);

/// Generalized DOF carrier collocated on the surface opposite its master
/// standard node.
struct EnrichedNode {
  int id = -1;        ///< index into the enriched-node list
  Vec2 coords{0, 0};
  int master = -1;    ///< standard node this enrichment mirrors
  int host_elem = -1;
  int host_edge = -1;    ///< local edge index of the host element
  double zeta = 0.0;     ///< coords = (1-zeta)*edge_start + zeta*edge_end
  double s = 1.0;        ///< scaling factor
  Vec2 normal{0, 0};     ///< target-segment normal, points toward master body
  double g0 = 0.0;       ///< initial gap along normal (contact only)
};

/// Coincident standard-node pair across the interface; enforced as a
/// direct tie rather than an enrichment.
struct NodeTie {
  int master = -1;     ///< node on the projecting surface
  int target = -1;     ///< coincident node on the opposite surface
  Vec2 normal{0, 0};
  double g0 = 0.0;
};

struct PairingResult {
  std::vector<EnrichedNode> enriched;
  std::vector<NodeTie> ties;
};

/// Mesh-coupling pairing: the two surfaces coincide geometrically.
/// Every hanging node on one surface yields an enriched node on the
/// opposite surface at the same coordinates (two passes). Nodes closer
/// than coincident_rtol * edge length to an opposite node become ties.
PairingResult collocate_interface_enrichments(
    const Mesh& mesh, const std::vector<Segment>& surface_a,
    const std::vector<Segment>& surface_b, double coincident_rtol = 1e-9);

/// Single projection pass: nodes of from_surface onto onto_surface only.
/// Used by the conventional single-pass tying scheme. Same conventions as
/// find_projections.
PairingResult project_one_pass(const Mesh& mesh, const std::vector<double>& U,
                               const std::vector<Segment>& from_surface,
                               const std::vector<Segment>& onto_surface,
                               double coincident_rtol = 1e-9);

/// Contact pairing by closest-point projection, two passes. U holds the
/// current nodal displacements (size >= 2*num_nodes; may be empty for the
/// undeformed state). Nodes whose projection misses every opposite
/// segment are skipped.
PairingResult find_projections(const Mesh& mesh,
                               const std::vector<double>& U,
                               const std::vector<Segment>& surface_a,
                               const std::vector<Segment>& surface_b,
                               double coincident_rtol = 1e-9);

/// Sets the scaling factor of every enriched node from its zeta.
void apply_scaling(std::vector<EnrichedNode>& enriched, ScalingMode mode);

/// Sub-triangle of a split parent element. Vertices are tagged with the
/// enriched-node id whose hat function is 1 there (-1 for geometric
/// vertices, i.e. parent corners).
struct IntegrationTri {
  std::array<Vec2, 3> x;
  std::array<int, 3> enr{-1, -1, -1};
  double area() const;
};

struct ParentSplit {
  std::vector<int> enriched_ids;  ///< enrichments supported on this parent
  std::vector<IntegrationTri> tris;
};

/// Parent element id -> integration sub-triangles.
class IntegrationHierarchy {
 public:
  std::unordered_map<int, ParentSplit> parents;

  bool is_split(int elem) const { return parents.count(elem) != 0; }
  const ParentSplit& split(int elem) const { return parents.at(elem); }
};

/// Splits each host element at its enriched nodes: a node on an edge cuts
/// the sub-triangle containing that edge toward the opposite vertex, in
/// (edge, zeta) order. Enrichment functions become hats on the final
/// partition: 1 at their own node, 0 at parent corners and other
/// enriched nodes.
IntegrationHierarchy split_elements(const Mesh& mesh,
                                    const std::vector<EnrichedNode>& enriched);

/// psi_i(p) for a point p inside the host element of `node`.
double enrichment_value(const EnrichedNode& node,
                        const IntegrationHierarchy& hierarchy, const Vec2& p);

}  // namespace enrfem

#pragma once

#include <utility>
#include <vector>

#include "isograph/graph.hpp"
#include "isograph/group.hpp"

namespace isograph {

struct EdgeImage {
  int edge = 0;
  int sign = 1;  // -1 when the coordinate is reversed
  bool operator==(const EdgeImage&) const = default;
};

struct GraphAction {
  GroupPtr group;
  std::vector<std::vector<int>> vertex_perm;       // [g][v]
  std::vector<std::vector<EdgeImage>> edge_map;    // [g][e]

  int vertex_image(int g, int v) const { return vertex_perm[g][v]; }
  const EdgeImage& edge_image(int g, int e) const { return edge_map[g][e]; }
  EdgeEnd end_image(int g, EdgeEnd end) const {
    const EdgeImage& im = edge_map[g][end.edge];
    return {im.edge, im.sign > 0 ? end.side : opposite(end.side)};
  }
};

// Completes an action from generator images by walking the Cayley graph.
// Throws InputError if the generator data is not consistent with the table.
GraphAction action_from_generators(const MetricGraph& g, const GroupPtr& group,
                                   const std::vector<int>& generators,
                                   const std::vector<std::vector<int>>& vertex_images,
                                   const std::vector<std::vector<EdgeImage>>& edge_images);

GraphAction trivial_action(const MetricGraph& g, const GroupPtr& group);

ValidationReport validate_action(const MetricGraph& g, const GraphAction& a);

struct OrbitData {
  Subgroup acting;
  std::vector<std::vector<int>> edge_orbits;    // members ascending, orbits by first member
  std::vector<std::vector<int>> vertex_orbits;
  std::vector<int> edge_orbit_of;
  std::vector<int> vertex_orbit_of;
  std::vector<int> edge_reps;                   // minimal id in each orbit
  std::vector<int> vertex_reps;
};

OrbitData orbits(const MetricGraph& g, const GraphAction& a, const Subgroup& acting);
OrbitData orbits(const MetricGraph& g, const GraphAction& a);

// Set-wise stabilizer; elements reversing the edge are included and can
// be listed with reversing_elements.
Subgroup edge_stabilizer(const GraphAction& a, int edge, const Subgroup& acting);
Subgroup vertex_stabilizer(const GraphAction& a, int vertex, const Subgroup& acting);
std::vector<int> reversing_elements(const GraphAction& a, int edge, const Subgroup& acting);

struct Freeness {
  bool free_on_edges = true;
  bool free_on_vertices = true;
};

Freeness is_free(const MetricGraph& g, const GraphAction& a, const Subgroup& acting);
Freeness is_free(const MetricGraph& g, const GraphAction& a);

struct ReadinessReport {
  bool no_vertex_to_neighbor = true;
  bool no_edge_reversed = true;
};

ReadinessReport quotient_readiness(const MetricGraph& g, const GraphAction& a, const Subgroup& acting);

// Subdivides, at their midpoints, exactly the edges whose endpoints lie in a
// common orbit; afterwards no element maps a vertex to a neighbour.
std::pair<MetricGraph, GraphAction> ensure_quotient_ready(const MetricGraph& g, const GraphAction& a,
                                                          const Subgroup& acting);
std::pair<MetricGraph, GraphAction> ensure_quotient_ready(const MetricGraph& g, const GraphAction& a);

}  // namespace isograph

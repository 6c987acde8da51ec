#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isograph/common.hpp"

namespace isograph {

enum class Side { tail = 0, head = 1 };

inline Side opposite(Side s) { return s == Side::tail ? Side::head : Side::tail; }
inline const char* side_name(Side s) { return s == Side::tail ? "tail" : "head"; }

struct EdgeEnd {
  int edge = 0;
  Side side = Side::tail;
  bool operator==(const EdgeEnd&) const = default;
};

// x runs from 0 at the tail to length at the head.
struct Edge {
  std::string id;
  int tail = 0;
  int head = 0;
  double length = 1.0;
};

// Column j of A and B acts on the edge-end ends[j]; derivatives are taken
// pointing out of the vertex.
struct Vertex {
  std::string id;
  std::vector<EdgeEnd> ends;
  CMatrix A;
  CMatrix B;
  int degree() const { return static_cast<int>(ends.size()); }
};

struct MetricGraph {
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool empty() const { return edges.empty() && vertices.empty(); }
  int endpoint(EdgeEnd end) const {
    return end.side == Side::tail ? edges[end.edge].tail : edges[end.edge].head;
  }
  int edge_index(const std::string& id) const;      // throws InputError
  int vertex_index(const std::string& id) const;    // throws InputError
  double total_length() const;
  double min_length() const;
  double max_length() const;
};

struct VertexCondition {
  CMatrix A;
  CMatrix B;
};

// Appends edge-ends to vertices in the order edges are added, so the column
// order of every vertex is the order in which its edges were created (tail
// before head for loops).
class GraphBuilder {
public:
  int add_vertex(std::string id);
  int add_edge(std::string id, int tail, int head, double length);
  void set_condition(int vertex, CMatrix a, CMatrix b);
  void set_dirichlet(int vertex);
  // Vertices without an explicit condition get Neumann conditions.
  MetricGraph build() const;

private:
  MetricGraph g_;
  std::vector<bool> explicit_;
};

VertexCondition neumann_condition(int d);
VertexCondition dirichlet_condition(int d = 1);

MetricGraph add_dummy_vertex(const MetricGraph& g, int edge, double t);
MetricGraph add_dummy_vertex(const MetricGraph& g, const std::string& edge_id, double t);
// Inverse of add_dummy_vertex: merges the two edges at a degree-two
// Neumann vertex whose ends are (first, head) and (second, tail).
MetricGraph remove_dummy_vertex(const MetricGraph& g, int vertex);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

ValidationReport validate(const MetricGraph& g, double rel_tol = 1e-10);

struct SelfAdjointReport {
  bool overall = true;
  std::vector<bool> per_vertex;
};

SelfAdjointReport is_self_adjoint(const MetricGraph& g, double tol = 1e-10);
bool is_self_adjoint_condition(const CMatrix& a, const CMatrix& b, double tol = 1e-10);

// Keeps c independent rows of (A B), chosen by column-pivoted QR of its
// transpose and listed in their original order. Throws VerificationError
// unless rank(A B) == c.
VertexCondition reduce_rows(const CMatrix& a, const CMatrix& b);

// If the condition is a direct sum of Neumann conditions over a partition
// of the ends, returns the block label of every end.
std::optional<std::vector<int>> neumann_partition(const CMatrix& a, const CMatrix& b);
bool is_neumann(const CMatrix& a, const CMatrix& b);

}  // namespace isograph

#include "isograph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "isograph/linalg.hpp"

namespace isograph {

int MetricGraph::edge_index(const std::string& id) const {
  for (int i = 0; i < edge_count(); ++i)
    if (edges[i].id == id)
      return i;
  throw InputError("unknown edge id '" + id + "'");
}

int MetricGraph::vertex_index(const std::string& id) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices[i].id == id)
      return i;
  throw InputError("unknown vertex id '" + id + "'");
}

double MetricGraph::total_length() const {
  double s = 0.0;
  for (const Edge& e : edges)
    s += e.length;
  return s;
}

double MetricGraph::min_length() const {
  double m = edges.empty() ? 0.0 : edges[0].length;
  for (const Edge& e : edges)
    m = std::min(m, e.length);
  return m;
}

double MetricGraph::max_length() const {
  double m = 0.0;
  for (const Edge& e : edges)
    m = std::max(m, e.length);
  return m;
}

int GraphBuilder::add_vertex(std::string id) {
  g_.vertices.push_back(Vertex{std::move(id), {}, {}, {}});
  explicit_.push_back(false);
  return g_.vertex_count() - 1;
}

int GraphBuilder::add_edge(std::string id, int tail, int head, double length) {
  if (tail < 0 || tail >= g_.vertex_count() || head < 0 || head >= g_.vertex_count())
    throw InputError("edge '" + id + "' refers to a missing vertex");
  int e = g_.edge_count();
  g_.edges.push_back(Edge{std::move(id), tail, head, length});
  g_.vertices[tail].ends.push_back({e, Side::tail});
  g_.vertices[head].ends.push_back({e, Side::head});
  return e;
}

void GraphBuilder::set_condition(int vertex, CMatrix a, CMatrix b) {
  g_.vertices[vertex].A = std::move(a);
  g_.vertices[vertex].B = std::move(b);
  explicit_[vertex] = true;
}

void GraphBuilder::set_dirichlet(int vertex) {
  VertexCondition c = dirichlet_condition(g_.vertices[vertex].degree());
  set_condition(vertex, c.A, c.B);
}

MetricGraph GraphBuilder::build() const {
  MetricGraph g = g_;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!explicit_[v]) {
      VertexCondition c = neumann_condition(g.vertices[v].degree());
      g.vertices[v].A = c.A;
      g.vertices[v].B = c.B;
    }
  return g;
}

VertexCondition neumann_condition(int d) {
  if (d < 1)
    throw InputError("Neumann condition needs degree >= 1");
  VertexCondition c{CMatrix::Zero(d, d), CMatrix::Zero(d, d)};
  for (int i = 0; i + 1 < d; ++i) {
    c.A(i, i) = 1.0;
    c.A(i, i + 1) = -1.0;
  }
  c.B.row(d - 1).setOnes();
  return c;
}

VertexCondition dirichlet_condition(int d) {
  if (d != 1)
    throw InputError("Dirichlet condition is only defined at degree-one vertices (degree " +
                     std::to_string(d) + " given)");
  return {CMatrix::Ones(1, 1), CMatrix::Zero(1, 1)};
}

MetricGraph add_dummy_vertex(const MetricGraph& g, int edge, double t) {
  if (edge < 0 || edge >= g.edge_count())
    throw InputError("add_dummy_vertex: edge index out of range");
  if (!(t > 0.0 && t < 1.0))
    throw InputError("add_dummy_vertex: split fraction must lie in (0, 1)");
  MetricGraph out = g;
  const Edge old = g.edges[edge];
  const int e2 = out.edge_count();
  const int m = out.vertex_count();
  out.edges[edge].length = t * old.length;
  out.edges[edge].head = m;
  out.edges.push_back(Edge{old.id + "~2", m, old.head, (1.0 - t) * old.length});
  for (EdgeEnd& end : out.vertices[old.head].ends)
    if (end == EdgeEnd{edge, Side::head})
      end = EdgeEnd{e2, Side::head};
  VertexCondition c = neumann_condition(2);
  out.vertices.push_back(Vertex{old.id + "~m", {{edge, Side::head}, {e2, Side::tail}}, c.A, c.B});
  return out;
}

MetricGraph add_dummy_vertex(const MetricGraph& g, const std::string& edge_id, double t) {
  return add_dummy_vertex(g, g.edge_index(edge_id), t);
}

MetricGraph remove_dummy_vertex(const MetricGraph& g, int vertex) {
  const Vertex& v = g.vertices.at(vertex);
  if (v.degree() != 2 || !is_neumann(v.A, v.B))
    throw InputError("vertex " + v.id + " is not a degree-two Neumann vertex");
  EdgeEnd first = v.ends[0], second = v.ends[1];
  if (first.side != Side::head)
    std::swap(first, second);
  if (first.side != Side::head || second.side != Side::tail || first.edge == second.edge)
    throw InputError("vertex " + v.id + " does not join a head to a tail");
  const int keep = first.edge, drop = second.edge;
  const Edge dropped = g.edges[drop];
  MetricGraph out;
  std::vector<int> edge_map(g.edge_count(), -1), vertex_map(g.vertex_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e)
    if (e != drop) {
      edge_map[e] = out.edge_count();
      out.edges.push_back(g.edges[e]);
    }
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != vertex) {
      vertex_map[u] = out.vertex_count();
      out.vertices.push_back(g.vertices[u]);
    }
  Edge& merged = out.edges[edge_map[keep]];
  merged.length += dropped.length;
  merged.head = dropped.head;
  for (Edge& e : out.edges) {
    e.tail = vertex_map[e.tail];
    e.head = vertex_map[e.head];
  }
  for (Vertex& u : out.vertices)
    for (EdgeEnd& end : u.ends) {
      if (end.edge == drop)
        end = EdgeEnd{keep, Side::head};
      end.edge = edge_map[end.edge];
    }
  return out;
}

ValidationReport validate(const MetricGraph& g, double rel_tol) {
  ValidationReport r;
  auto fail = [&](const std::string& msg) {
    r.ok = false;
    r.problems.push_back(msg);
  };
  for (const Edge& e : g.edges) {
    if (!(e.length > 0.0) || !std::isfinite(e.length))
      fail("edge " + e.id + " has non-positive length");
    if (e.tail < 0 || e.tail >= g.vertex_count() || e.head < 0 || e.head >= g.vertex_count())
      fail("edge " + e.id + " has an endpoint outside the vertex list");
  }
  std::vector<int> seen(2 * g.edges.size(), 0);
  for (int vi = 0; vi < g.vertex_count(); ++vi) {
    const Vertex& v = g.vertices[vi];
    const int d = v.degree();
    for (const EdgeEnd& end : v.ends) {
      if (end.edge < 0 || end.edge >= g.edge_count()) {
        fail("vertex " + v.id + " lists a missing edge");
        continue;
      }
      ++seen[2 * end.edge + static_cast<int>(end.side)];
      if (g.endpoint(end) != vi)
        fail("vertex " + v.id + " lists the " + side_name(end.side) + " of edge " +
             g.edges[end.edge].id + ", which belongs to another vertex");
    }
    if (v.A.rows() != d || v.A.cols() != d || v.B.rows() != d || v.B.cols() != d) {
      fail("vertex " + v.id + " has matrices of the wrong shape");
      continue;
    }
    if (d == 0)
      continue;
    CMatrix ab(d, 2 * d);
    ab << v.A, v.B;
    if (numerical_rank(ab, rel_tol) != d)
      fail("vertex " + v.id +
           ": (A B) is not of maximal rank, as the Kostrykin-Schrader criterion requires");
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 1)
      fail("edge " + g.edges[i / 2].id + " " + side_name(static_cast<Side>(i % 2)) + " end appears " +
           std::to_string(seen[i]) + " times");
  return r;
}

bool is_self_adjoint_condition(const CMatrix& a, const CMatrix& b, double tol) {
  CMatrix abh = a * b.adjoint();
  double scale = std::max(1.0, max_norm(a) * max_norm(b));
  return max_norm(abh - abh.adjoint()) <= tol * scale;
}

SelfAdjointReport is_self_adjoint(const MetricGraph& g, double tol) {
  SelfAdjointReport r;
  for (const Vertex& v : g.vertices) {
    bool ok = is_self_adjoint_condition(v.A, v.B, tol);
    r.per_vertex.push_back(ok);
    r.overall = r.overall && ok;
  }
  return r;
}

VertexCondition reduce_rows(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index c = a.cols();
  CMatrix ab(a.rows(), 2 * c);
  ab << a, b;
  const int rank = numerical_rank(ab);
  if (rank != c) {
    std::ostringstream msg;
    msg << "vertex condition (A B) has rank " << rank << ", expected " << c
        << "; by Kostrykin-Schrader the vertex condition must have maximal rank";
    throw VerificationError(msg.str());
  }
  Eigen::ColPivHouseholderQR<CMatrix> qr(ab.transpose());
  std::vector<int> rows;
  for (Eigen::Index i = 0; i < c; ++i)
    rows.push_back(qr.colsPermutation().indices()(i));
  std::sort(rows.begin(), rows.end());
  VertexCondition out{CMatrix(c, c), CMatrix(c, c)};
  for (Eigen::Index i = 0; i < c; ++i) {
    out.A.row(i) = a.row(rows[i]);
    out.B.row(i) = b.row(rows[i]);
  }
  return out;
}

std::optional<std::vector<int>> neumann_partition(const CMatrix& a, const CMatrix& b) {
  const int d = static_cast<int>(a.cols());
  CMatrix sol = solution_space(a, b);
  if (sol.cols() != d)
    return std::nullopt;
  CMatrix x = sol.topRows(d);
  double scale = std::max(1e-300, max_norm(x));
  std::vector<int> label(d, -1);
  int blocks = 0;
  for (int i = 0; i < d; ++i) {
    if (label[i] >= 0)
      continue;
    label[i] = blocks;
    for (int j = i + 1; j < d; ++j)
      if (label[j] < 0 && max_norm(x.row(i) - x.row(j)) < 1e-8 * scale)
        label[j] = blocks;
    ++blocks;
  }
  // Direct sum of Neumann conditions on the blocks.
  CMatrix na = CMatrix::Zero(d, d), nb = CMatrix::Zero(d, d);
  int row = 0;
  for (int blk = 0; blk < blocks; ++blk) {
    std::vector<int> members;
    for (int i = 0; i < d; ++i)
      if (label[i] == blk)
        members.push_back(i);
    for (size_t k = 0; k + 1 < members.size(); ++k, ++row) {
      na(row, members[k]) = 1.0;
      na(row, members[k + 1]) = -1.0;
    }
    for (int m : members)
      nb(row, m) = 1.0;
    ++row;
  }
  if (solution_space_distance(a, b, na, nb) > 1e-8)
    return std::nullopt;
  return label;
}

bool is_neumann(const CMatrix& a, const CMatrix& b) {
  VertexCondition n = neumann_condition(static_cast<int>(a.cols()));
  return solution_space_distance(a, b, n.A, n.B) < 1e-8;
}

}  // namespace isograph

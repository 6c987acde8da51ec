#include "isograph/action.hpp"

#include <algorithm>
#include <deque>

#include "isograph/linalg.hpp"

namespace isograph {

GraphAction action_from_generators(const MetricGraph& g, const GroupPtr& group,
                                   const std::vector<int>& generators,
                                   const std::vector<std::vector<int>>& vertex_images,
                                   const std::vector<std::vector<EdgeImage>>& edge_images) {
  const int n = group->order();
  const int nv = g.vertex_count(), ne = g.edge_count();
  if (generators.size() != vertex_images.size() || generators.size() != edge_images.size())
    throw InputError("one vertex and one edge map per generator required");
  for (size_t s = 0; s < generators.size(); ++s)
    if (static_cast<int>(vertex_images[s].size()) != nv || static_cast<int>(edge_images[s].size()) != ne)
      throw InputError("generator " + group->name(generators[s]) + " does not map every vertex and edge");
  GraphAction a{group, std::vector<std::vector<int>>(n), std::vector<std::vector<EdgeImage>>(n)};
  std::vector<bool> known(n, false);
  const int e0 = group->identity();
  a.vertex_perm[e0].resize(nv);
  a.edge_map[e0].resize(ne);
  for (int v = 0; v < nv; ++v)
    a.vertex_perm[e0][v] = v;
  for (int e = 0; e < ne; ++e)
    a.edge_map[e0][e] = {e, 1};
  known[e0] = true;
  std::deque<int> queue{e0};
  auto compose = [&](int x, size_t s, std::vector<int>& vp, std::vector<EdgeImage>& em) {
    // act(x s) = act(x) o act(s)
    vp.resize(nv);
    em.resize(ne);
    for (int v = 0; v < nv; ++v)
      vp[v] = a.vertex_perm[x][vertex_images[s][v]];
    for (int e = 0; e < ne; ++e) {
      const EdgeImage& first = edge_images[s][e];
      const EdgeImage& second = a.edge_map[x][first.edge];
      em[e] = {second.edge, first.sign * second.sign};
    }
  };
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (size_t s = 0; s < generators.size(); ++s) {
      int y = group->mul(x, generators[s]);
      std::vector<int> vp;
      std::vector<EdgeImage> em;
      compose(x, s, vp, em);
      if (!known[y]) {
        known[y] = true;
        a.vertex_perm[y] = std::move(vp);
        a.edge_map[y] = std::move(em);
        queue.push_back(y);
      } else if (a.vertex_perm[y] != vp || a.edge_map[y] != em) {
        throw InputError("generator images are inconsistent with the group table at " + group->name(y));
      }
    }
  }
  for (int x = 0; x < n; ++x)
    if (!known[x])
      throw InputError("the given generators do not generate the group");
  return a;
}

GraphAction trivial_action(const MetricGraph& g, const GroupPtr& group) {
  std::vector<int> vp(g.vertex_count());
  std::vector<EdgeImage> em(g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    vp[v] = v;
  for (int e = 0; e < g.edge_count(); ++e)
    em[e] = {e, 1};
  return GraphAction{group, std::vector<std::vector<int>>(group->order(), vp),
                     std::vector<std::vector<EdgeImage>>(group->order(), em)};
}

ValidationReport validate_action(const MetricGraph& g, const GraphAction& a) {
  ValidationReport r;
  auto fail = [&](const std::string& msg) {
    r.ok = false;
    r.problems.push_back(msg);
  };
  const FiniteGroup& grp = *a.group;
  const int n = grp.order(), nv = g.vertex_count(), ne = g.edge_count();
  if (static_cast<int>(a.vertex_perm.size()) != n || static_cast<int>(a.edge_map.size()) != n) {
    fail("action does not list every group element");
    return r;
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(a.vertex_perm[x].size()) != nv || static_cast<int>(a.edge_map[x].size()) != ne) {
      fail("element " + grp.name(x) + " does not map every vertex and edge");
      return r;
    }
    std::vector<bool> hit_v(nv, false), hit_e(ne, false);
    for (int v : a.vertex_perm[x]) {
      if (v < 0 || v >= nv || hit_v[v]) {
        fail("element " + grp.name(x) + " does not permute the vertices");
        return r;
      }
      hit_v[v] = true;
    }
    for (const EdgeImage& im : a.edge_map[x]) {
      if (im.edge < 0 || im.edge >= ne || hit_e[im.edge] || (im.sign != 1 && im.sign != -1)) {
        fail("element " + grp.name(x) + " does not permute the edges");
        return r;
      }
      hit_e[im.edge] = true;
    }
  }
  const int id = grp.identity();
  for (int v = 0; v < nv; ++v)
    if (a.vertex_perm[id][v] != v)
      fail("identity moves vertex " + g.vertices[v].id);
  for (int e = 0; e < ne; ++e)
    if (a.edge_map[id][e] != EdgeImage{e, 1})
      fail("identity moves edge " + g.edges[e].id);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = grp.mul(x, y);
      bool ok = true;
      for (int v = 0; v < nv && ok; ++v)
        ok = a.vertex_perm[xy][v] == a.vertex_perm[x][a.vertex_perm[y][v]];
      for (int e = 0; e < ne && ok; ++e) {
        const EdgeImage& first = a.edge_map[y][e];
        const EdgeImage& second = a.edge_map[x][first.edge];
        ok = a.edge_map[xy][e] == EdgeImage{second.edge, first.sign * second.sign};
      }
      if (!ok) {
        fail("action is not a homomorphism at (" + grp.name(x) + ", " + grp.name(y) + ")");
        return r;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int e = 0; e < ne; ++e) {
      const Edge& src = g.edges[e];
      const EdgeImage& im = a.edge_map[x][e];
      const Edge& dst = g.edges[im.edge];
      if (std::abs(src.length - dst.length) > 1e-12 * std::max(1.0, src.length))
        fail("element " + grp.name(x) + " maps edge " + src.id + " to an edge of different length");
      int t = a.vertex_perm[x][src.tail], h = a.vertex_perm[x][src.head];
      bool ok = im.sign > 0 ? (t == dst.tail && h == dst.head) : (t == dst.head && h == dst.tail);
      if (!ok)
        fail("element " + grp.name(x) + " does not respect the endpoints of edge " + src.id);
    }
  if (!r.ok)
    return r;
  for (int x = 0; x < n; ++x)
    for (int v = 0; v < nv; ++v) {
      const Vertex& src = g.vertices[v];
      const Vertex& dst = g.vertices[a.vertex_perm[x][v]];
      const int d = src.degree();
      if (dst.degree() != d) {
        fail("element " + grp.name(x) + " maps vertex " + src.id + " to a vertex of another degree");
        continue;
      }
      CMatrix pa(d, d), pb(d, d);
      bool ok = true;
      for (int j = 0; j < d && ok; ++j) {
        EdgeEnd img = a.end_image(x, src.ends[j]);
        auto it = std::find(dst.ends.begin(), dst.ends.end(), img);
        if (it == dst.ends.end()) {
          ok = false;
          break;
        }
        auto k = it - dst.ends.begin();
        pa.col(j) = dst.A.col(k);
        pb.col(j) = dst.B.col(k);
      }
      if (!ok) {
        fail("element " + grp.name(x) + " does not map the ends of vertex " + src.id + " to one vertex");
        continue;
      }
      if (solution_space_distance(src.A, src.B, pa, pb) > 1e-8)
        fail("element " + grp.name(x) + " does not preserve the condition at vertex " + src.id);
    }
  return r;
}

OrbitData orbits(const MetricGraph& g, const GraphAction& a, const Subgroup& acting) {
  OrbitData d;
  d.acting = acting;
  d.edge_orbit_of.assign(g.edge_count(), -1);
  d.vertex_orbit_of.assign(g.vertex_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (d.edge_orbit_of[e] >= 0)
      continue;
    std::vector<int> orbit;
    for (int x : acting.elements)
      orbit.push_back(a.edge_map[x][e].edge);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (int m : orbit)
      d.edge_orbit_of[m] = static_cast<int>(d.edge_orbits.size());
    d.edge_reps.push_back(orbit.front());
    d.edge_orbits.push_back(std::move(orbit));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (d.vertex_orbit_of[v] >= 0)
      continue;
    std::vector<int> orbit;
    for (int x : acting.elements)
      orbit.push_back(a.vertex_perm[x][v]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (int m : orbit)
      d.vertex_orbit_of[m] = static_cast<int>(d.vertex_orbits.size());
    d.vertex_reps.push_back(orbit.front());
    d.vertex_orbits.push_back(std::move(orbit));
  }
  return d;
}

OrbitData orbits(const MetricGraph& g, const GraphAction& a) {
  return orbits(g, a, whole_group(a.group));
}

Subgroup edge_stabilizer(const GraphAction& a, int edge, const Subgroup& acting) {
  Subgroup s{acting.parent, {}};
  for (int x : acting.elements)
    if (a.edge_map[x][edge].edge == edge)
      s.elements.push_back(x);
  return s;
}

Subgroup vertex_stabilizer(const GraphAction& a, int vertex, const Subgroup& acting) {
  Subgroup s{acting.parent, {}};
  for (int x : acting.elements)
    if (a.vertex_perm[x][vertex] == vertex)
      s.elements.push_back(x);
  return s;
}

std::vector<int> reversing_elements(const GraphAction& a, int edge, const Subgroup& acting) {
  std::vector<int> out;
  for (int x : acting.elements)
    if (a.edge_map[x][edge] == EdgeImage{edge, -1})
      out.push_back(x);
  return out;
}

Freeness is_free(const MetricGraph& g, const GraphAction& a, const Subgroup& acting) {
  Freeness f;
  for (int e = 0; e < g.edge_count() && f.free_on_edges; ++e)
    f.free_on_edges = edge_stabilizer(a, e, acting).order() == 1;
  for (int v = 0; v < g.vertex_count() && f.free_on_vertices; ++v)
    f.free_on_vertices = vertex_stabilizer(a, v, acting).order() == 1;
  return f;
}

Freeness is_free(const MetricGraph& g, const GraphAction& a) {
  return is_free(g, a, whole_group(a.group));
}

ReadinessReport quotient_readiness(const MetricGraph& g, const GraphAction& a, const Subgroup& acting) {
  ReadinessReport r;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!reversing_elements(a, e, acting).empty())
      r.no_edge_reversed = false;
    const Edge& ed = g.edges[e];
    for (int x : acting.elements) {
      int t = a.vertex_perm[x][ed.tail], h = a.vertex_perm[x][ed.head];
      if (t == ed.head || h == ed.tail || (t == ed.tail && ed.tail == ed.head))
        r.no_vertex_to_neighbor = false;
    }
  }
  return r;
}

namespace {

std::pair<MetricGraph, GraphAction> subdivide(const MetricGraph& g, const GraphAction& a,
                                              const std::vector<int>& split) {
  MetricGraph out = g;
  const int ne = g.edge_count(), nv = g.vertex_count();
  std::vector<int> second(ne, -1), mid(ne, -1);
  for (int e : split) {
    const Edge old = g.edges[e];
    second[e] = out.edge_count();
    mid[e] = out.vertex_count();
    out.edges[e].length = 0.5 * old.length;
    out.edges[e].head = mid[e];
    out.edges.push_back(Edge{old.id + "~2", mid[e], old.head, 0.5 * old.length});
    VertexCondition c = neumann_condition(2);
    out.vertices.push_back(Vertex{old.id + "~m", {{e, Side::head}, {second[e], Side::tail}}, c.A, c.B});
  }
  for (int v = 0; v < nv; ++v)
    for (EdgeEnd& end : out.vertices[v].ends)
      if (end.side == Side::head && second[end.edge] >= 0)
        end.edge = second[end.edge];
  GraphAction b{a.group, a.vertex_perm, a.edge_map};
  for (int x = 0; x < a.group->order(); ++x) {
    b.vertex_perm[x].resize(out.vertex_count());
    b.edge_map[x].resize(out.edge_count());
    for (int e : split) {
      const EdgeImage im = a.edge_map[x][e];
      b.vertex_perm[x][mid[e]] = mid[im.edge];
      if (im.sign > 0) {
        b.edge_map[x][e] = {im.edge, 1};
        b.edge_map[x][second[e]] = {second[im.edge], 1};
      } else {
        b.edge_map[x][e] = {second[im.edge], -1};
        b.edge_map[x][second[e]] = {im.edge, -1};
      }
    }
  }
  return {std::move(out), std::move(b)};
}

}  // namespace

std::pair<MetricGraph, GraphAction> ensure_quotient_ready(const MetricGraph& g, const GraphAction& a,
                                                          const Subgroup& acting) {
  std::pair<MetricGraph, GraphAction> cur{g, a};
  for (int pass = 0; pass < 2; ++pass) {
    if (quotient_readiness(cur.first, cur.second, acting).no_vertex_to_neighbor)
      return cur;
    OrbitData od = orbits(cur.first, cur.second, acting);
    std::vector<int> split;
    for (int e = 0; e < cur.first.edge_count(); ++e) {
      const Edge& ed = cur.first.edges[e];
      if (od.vertex_orbit_of[ed.tail] == od.vertex_orbit_of[ed.head])
        split.push_back(e);
    }
    cur = subdivide(cur.first, cur.second, split);
  }
  ReadinessReport r = quotient_readiness(cur.first, cur.second, acting);
  if (!r.no_vertex_to_neighbor || !r.no_edge_reversed)
    throw VerificationError("midpoint subdivision did not make the action quotient ready");
  return cur;
}

std::pair<MetricGraph, GraphAction> ensure_quotient_ready(const MetricGraph& g, const GraphAction& a) {
  return ensure_quotient_ready(g, a, whole_group(a.group));
}

}  // namespace isograph

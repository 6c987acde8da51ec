#include <doctest.h>

#include <cmath>
#include <map>
#include <queue>

#include "helpers.hpp"
#include "isograph/catalog.hpp"
#include "isograph/irreps.hpp"

using namespace isograph;
using namespace testing_helpers;

namespace {

bool bipartite(const MetricGraph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] >= 0)
      continue;
    colour[s] = 0;
    std::queue<int> todo;
    todo.push(s);
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (const EdgeEnd& end : g.vertices[v].ends) {
        int w = g.endpoint({end.edge, opposite(end.side)});
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          todo.push(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::map<long, int> length_histogram(const MetricGraph& g) {
  std::map<long, int> h;
  for (const Edge& e : g.edges)
    ++h[std::lround(e.length * 1e6)];
  return h;
}

}  // namespace

TEST_CASE("every catalog entry is a valid self-adjoint symmetric graph") {
  for (const std::string& id : catalog_ids()) {
    CAPTURE(id);
    CatalogEntry e = catalog_entry(id);
    CHECK(e.id == id);
    CHECK(validate(e.graph).ok);
    CHECK(validate_action(e.graph, e.action).ok);
    CHECK(is_self_adjoint(e.graph).overall);
    for (const CatalogRep& r : e.reps)
      CHECK_NOTHROW(build_quotient(quotient_spec(e, r)));
  }
  CHECK_THROWS_AS(catalog_entry("no-such-entry"), InputError);
  CHECK_THROWS_AS(catalog_entry("d4-square", {1.0}), InputError);
  CHECK_THROWS_AS(d4_square_graph(1.0, -1.0, 2.0), InputError);
  CHECK_THROWS_AS(catalog_entry("d4-square").rep("R9"), InputError);
}

TEST_CASE("D4 square graph") {
  CatalogEntry e = d4_square_graph();
  CHECK(e.graph.vertex_count() == 20);
  CHECK(e.graph.edge_count() == 24);
  CHECK(e.action.group->order() == 8);
  for (const char* h : {"H1", "H2", "H3"})
    CHECK(e.subgroup(h).order() == 4);
  CHECK(length_histogram(e.graph).size() == 3);

  // The two reflection subgroups are not conjugate, yet R1 and R2 induce
  // the same representation.
  const FiniteGroup& g = *e.action.group;
  bool conjugate = false;
  for (int x = 0; x < g.order(); ++x)
    conjugate = conjugate || conjugate_subgroup(e.subgroup("H1"), x) == e.subgroup("H2");
  CHECK_FALSE(conjugate);

  CHECK(is_isomorphic(induce(e.rep("R1").rep), induce(e.rep("R2").rep)));
  CHECK(is_isomorphic(induce(e.rep("R1").rep), induce(e.rep("R3").rep)));
  CHECK(is_isomorphic(induce(e.rep("R1").rep), e.rep("R").rep));
  for (const char* name : {"theta=0", "theta=pi/6", "theta=pi/3", "theta=3pi/4", "R-pi/3", "R-complex"})
    CHECK(is_isomorphic(e.rep(name).rep, e.rep("R").rep));
}

TEST_CASE("D4 Cayley graph") {
  CatalogEntry e = d4_cayley_graph();
  CHECK(e.graph.vertex_count() == 8);
  CHECK(e.graph.edge_count() == 16);
  for (const Vertex& v : e.graph.vertices)
    CHECK(v.degree() == 4);
  Freeness f = is_free(e.graph, e.action);
  CHECK(f.free_on_edges);
  CHECK(f.free_on_vertices);
  // Three quotients with four edges each.
  for (const char* name : {"R1", "R2", "R3"})
    CHECK(build_quotient(quotient_spec(e, name)).graph.edge_count() == 4);
}

TEST_CASE("tetrahedron") {
  CatalogEntry e = tetrahedron_graph(2.0);
  CHECK(e.graph.vertex_count() == 10);
  CHECK(e.graph.edge_count() == 12);
  for (const Edge& ed : e.graph.edges)
    CHECK(ed.length == doctest::Approx(1.0));
  OrbitData o = orbits(e.graph, e.action);
  CHECK(o.edge_orbits.size() == 1);
  CHECK(o.vertex_orbits.size() == 2);
  CHECK(e.subgroup("S3").order() == 6);
}

TEST_CASE("cube graph") {
  CatalogEntry e = cube_graph();
  CHECK(e.graph.vertex_count() == 48);
  CHECK(e.graph.edge_count() == 72);
  for (const Vertex& v : e.graph.vertices)
    CHECK(v.degree() == 3);
  CHECK(bipartite(e.graph));
  std::map<long, int> h = length_histogram(e.graph);
  REQUIRE(h.size() == 3);
  for (const auto& [len, count] : h)
    CHECK(count == 24);
  CHECK(h.count(std::lround(2.0 * 1e6)) == 1);
  CHECK(e.action.group->order() == 48);
  CHECK(e.subgroup("O").order() == 24);
  CHECK(e.subgroup("Td").order() == 24);
  CHECK(is_isomorphic(induce(e.rep("R1").rep), induce(e.rep("R2").rep)));
}

TEST_CASE("D3 triangle graph") {
  CatalogEntry e = d3_triangle_graph();
  CHECK(e.graph.vertex_count() == 18);
  CHECK(e.graph.edge_count() == 30);
  Freeness f = is_free(e.graph, e.action);
  CHECK(f.free_on_edges);
  CHECK(f.free_on_vertices);

  const Subgroup& ks = e.subgroup("<s>");
  const Subgroup& kt = e.subgroup("<t>");
  const Subgroup& one = e.subgroup("1");
  IrrepTable t = irreps_dihedral(3);
  CHECK(decompose(induce(trivial_rep(ks)), t) == std::vector<int>{1, 1, 0});
  CHECK(decompose(induce(trivial_rep(kt)), t) == std::vector<int>{1, 0, 1});
  CHECK(decompose(induce(trivial_rep(one)), t) == std::vector<int>{1, 1, 2});
  CHECK(decompose(e.rep("family1").rep, t) == std::vector<int>{3, 1, 2});
  CHECK(is_isomorphic(e.rep("family1").rep, e.rep("family2").rep));

  for (const char* name : {"family1", "family2"}) {
    CAPTURE(name);
    QuotientGraph q = build_quotient(quotient_spec(e, name));
    for (const Vertex& v : q.graph.vertices)
      CHECK(neumann_partition(v.A, v.B).has_value());
  }
}

TEST_CASE("Z2 star has a non self-adjoint quotient") {
  CatalogEntry e = z2_star_graph();
  CHECK(validate_action(e.graph, e.action).ok);
  QuotientGraph q = build_quotient(quotient_spec(e, "trivial"));
  CHECK_FALSE(is_self_adjoint(q.graph).overall);
}

TEST_CASE("symmetric graph builder names images after group elements") {
  GroupPtr z2 = make_cyclic(2);
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2), flip(2, 2);
  flip << -1, 0, 0, 1;
  SymmetricGraphBuilder b(z2, {id, flip});
  Eigen::VectorXd o(2), p(2), mid(2);
  o << 0, 0;
  p << 1, 0;
  mid << 0.5, 0.1;
  b.add_vertex_orbit("o", o);
  b.add_vertex_orbit("p", p);
  b.add_edge_orbit("a", o, p, mid, 1.0);
  MetricGraph g = b.graph();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.vertex_index("p:" + z2->name(1)) >= 0);
  CHECK(g.edge_index("a:" + z2->name(1)) == 1);
  CHECK(validate_action(g, b.action()).ok);
}

#include <doctest.h>

#include "helpers.hpp"
#include "isograph/action.hpp"

using namespace isograph;
using namespace testing_helpers;

namespace {

// Triangle with Z3 rotating the vertices.
struct Triangle {
  MetricGraph g;
  GroupPtr z3 = make_cyclic(3);
  GraphAction a;
  Triangle() {
    GraphBuilder b;
    for (int i = 0; i < 3; ++i)
      b.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < 3; ++i)
      b.add_edge("e" + std::to_string(i), i, (i + 1) % 3, 1.0);
    g = b.build();
    a = action_from_generators(g, z3, {1}, {{1, 2, 0}}, {{{1, 1}, {2, 1}, {0, 1}}});
  }
};

// Star with three arms, Z2 swapping the first two.
struct Star {
  MetricGraph g;
  GroupPtr z2 = make_cyclic(2);
  GraphAction a;
  Star() {
    GraphBuilder b;
    int c = b.add_vertex("c");
    for (int i = 0; i < 3; ++i) {
      int leaf = b.add_vertex("l" + std::to_string(i));
      b.add_edge("e" + std::to_string(i), c, leaf, 1.0);
    }
    g = b.build();
    a = action_from_generators(g, z2, {1}, {{0, 2, 1, 3}}, {{{1, 1}, {0, 1}, {2, 1}}});
  }
};

}  // namespace

TEST_CASE("action completion and validation") {
  Triangle t;
  CHECK(validate_action(t.g, t.a).ok);
  CHECK(t.a.vertex_image(2, 0) == 2);
  Freeness f = is_free(t.g, t.a);
  CHECK(f.free_on_edges);
  CHECK(f.free_on_vertices);
  OrbitData od = orbits(t.g, t.a);
  CHECK(od.vertex_orbits.size() == 1);
  CHECK(od.edge_orbits.size() == 1);
}

TEST_CASE("inconsistent generators are rejected") {
  Triangle t;
  CHECK_THROWS_AS(action_from_generators(t.g, t.z3, {1}, {{1, 0, 2}}, {{{1, 1}, {0, 1}, {2, 1}}}),
                  InputError);
}

TEST_CASE("length mismatch fails validation") {
  Triangle t;
  t.g.edges[2].length = 2.0;
  CHECK_FALSE(validate_action(t.g, t.a).ok);
}

TEST_CASE("boundary conditions must be preserved") {
  Star s;
  CHECK(validate_action(s.g, s.a).ok);
  s.g.vertices[2].A = CMatrix::Constant(1, 1, 1.0);
  s.g.vertices[2].B = CMatrix::Zero(1, 1);
  ValidationReport r = validate_action(s.g, s.a);
  CHECK_FALSE(r.ok);
}

TEST_CASE("stabilizers and orbits of the star") {
  Star s;
  OrbitData od = orbits(s.g, s.a);
  CHECK(od.edge_orbits.size() == 2);
  CHECK(od.vertex_orbits.size() == 3);
  CHECK(od.edge_reps == std::vector<int>{0, 2});
  CHECK(edge_stabilizer(s.a, 2, whole_group(s.z2)).order() == 2);
  CHECK(edge_stabilizer(s.a, 0, whole_group(s.z2)).order() == 1);
  CHECK(vertex_stabilizer(s.a, 0, whole_group(s.z2)).order() == 2);
  CHECK_FALSE(is_free(s.g, s.a).free_on_edges);
  ReadinessReport r = quotient_readiness(s.g, s.a, whole_group(s.z2));
  CHECK(r.no_vertex_to_neighbor);
  CHECK(r.no_edge_reversed);
  auto [g2, a2] = ensure_quotient_ready(s.g, s.a);
  CHECK(g2.edge_count() == 3);
}

TEST_CASE("subdivision for quotient readiness") {
  Triangle t;
  CHECK_FALSE(quotient_readiness(t.g, t.a, whole_group(t.z3)).no_vertex_to_neighbor);
  auto [g2, a2] = ensure_quotient_ready(t.g, t.a);
  CHECK(g2.edge_count() == 6);
  CHECK(g2.vertex_count() == 6);
  CHECK(g2.total_length() == doctest::Approx(3.0));
  CHECK(validate(g2).ok);
  CHECK(validate_action(g2, a2).ok);
  ReadinessReport r = quotient_readiness(g2, a2, whole_group(t.z3));
  CHECK(r.no_vertex_to_neighbor);
  CHECK(r.no_edge_reversed);
}

TEST_CASE("reversing an edge forces subdivision") {
  GraphBuilder b;
  int u = b.add_vertex("u"), v = b.add_vertex("v");
  b.add_edge("a", u, v, 1.0);
  MetricGraph g = b.build();
  GroupPtr z2 = make_cyclic(2);
  GraphAction a = action_from_generators(g, z2, {1}, {{1, 0}}, {{{0, -1}}});
  CHECK(validate_action(g, a).ok);
  CHECK(reversing_elements(a, 0, whole_group(z2)) == std::vector<int>{1});
  auto [g2, a2] = ensure_quotient_ready(g, a);
  CHECK(g2.edge_count() == 2);
  CHECK(validate_action(g2, a2).ok);
  CHECK(a2.edge_image(1, 0) == EdgeImage{1, -1});
}

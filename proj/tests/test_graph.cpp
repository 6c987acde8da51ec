#include <doctest.h>

#include "helpers.hpp"
#include "isograph/graph.hpp"

using namespace isograph;
using namespace testing_helpers;

namespace {

MetricGraph path3() {
  GraphBuilder b;
  int u = b.add_vertex("u"), v = b.add_vertex("v"), w = b.add_vertex("w");
  b.add_edge("a", u, v, 1.0);
  b.add_edge("b", v, w, 2.0);
  return b.build();
}

}  // namespace

TEST_CASE("neumann matrices") {
  VertexCondition one = neumann_condition(1);
  CHECK(max_norm(one.A) == 0.0);
  CHECK(one.B(0, 0) == cplx(1.0));
  VertexCondition two = neumann_condition(2);
  CHECK(max_norm(two.A - mat2(1, -1, 0, 0)) == 0.0);
  CHECK(max_norm(two.B - mat2(0, 0, 1, 1)) == 0.0);
  CHECK(is_self_adjoint_condition(two.A, two.B));
  CHECK(is_neumann(two.A, two.B));
}

TEST_CASE("dirichlet only on degree one") {
  CHECK_THROWS_AS(dirichlet_condition(2), InputError);
  VertexCondition d = dirichlet_condition();
  CHECK(is_self_adjoint_condition(d.A, d.B));
  CHECK_FALSE(is_neumann(d.A, d.B));
}

TEST_CASE("builder and ends") {
  MetricGraph g = path3();
  CHECK(g.edge_count() == 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.vertices[1].degree() == 2);
  CHECK(g.vertices[1].ends[0] == EdgeEnd{0, Side::head});
  CHECK(g.vertices[1].ends[1] == EdgeEnd{1, Side::tail});
  CHECK(g.total_length() == doctest::Approx(3.0));
  CHECK(g.min_length() == doctest::Approx(1.0));
  CHECK(g.max_length() == doctest::Approx(2.0));
  CHECK(validate(g).ok);
  CHECK(is_self_adjoint(g).overall);
  CHECK_THROWS_AS(g.edge_index("zz"), InputError);
}

TEST_CASE("dummy vertex split and merge") {
  MetricGraph g = path3();
  MetricGraph s = add_dummy_vertex(g, "b", 0.25);
  CHECK(s.edge_count() == 3);
  CHECK(s.vertex_count() == 4);
  CHECK(s.edges[1].length == doctest::Approx(0.5));
  CHECK(s.edges[2].length == doctest::Approx(1.5));
  CHECK(s.total_length() == doctest::Approx(3.0));
  CHECK(validate(s).ok);
  MetricGraph m = remove_dummy_vertex(s, 3);
  CHECK(m.edge_count() == 2);
  CHECK(m.vertex_count() == 3);
  CHECK(m.edges[1].length == doctest::Approx(2.0));
  CHECK(m.edges[1].tail == 1);
  CHECK(m.edges[1].head == 2);
  CHECK(validate(m).ok);
}

TEST_CASE("validation catches degenerate conditions") {
  GraphBuilder b;
  int u = b.add_vertex("u"), v = b.add_vertex("v");
  b.add_edge("a", u, v, 1.0);
  b.set_condition(u, CMatrix::Zero(1, 1), CMatrix::Zero(1, 1));
  ValidationReport r = validate(b.build());
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.problems.empty());
}

TEST_CASE("self-adjointness of vertex conditions") {
  const cplx i(0, 1);
  CHECK_FALSE(is_self_adjoint_condition(CMatrix::Constant(1, 1, 1.0), CMatrix::Constant(1, 1, i)));
  CHECK(is_self_adjoint_condition(CMatrix::Constant(1, 1, 1.0), CMatrix::Constant(1, 1, 2.0)));
  // A f + B f' = 0 with a non-Hermitian A B^*
  CHECK_FALSE(is_self_adjoint_condition(mat2(1, -1, 0, 0), mat2(0, 0, 2, 1)));
  // delta coupling of strength 3 on two ends
  CHECK(is_self_adjoint_condition(mat2(1, -1, -3, 0), mat2(0, 0, 1, 1)));
}

TEST_CASE("row reduction keeps the solution space") {
  VertexCondition n = neumann_condition(2);
  CMatrix a(4, 2), bb(4, 2);
  a << n.A.row(0), n.A.row(0) * 2.0, n.A.row(1), n.A.row(0) * -1.0;
  bb << n.B.row(0), n.B.row(0) * 2.0, n.B.row(1), n.B.row(0) * -1.0;
  a.row(2) = n.A.row(1);
  bb.row(2) = n.B.row(1);
  VertexCondition r = reduce_rows(a, bb);
  CHECK(r.A.rows() == 2);
  CHECK(solution_space_distance(r.A, r.B, n.A, n.B) < 1e-12);
  CHECK_THROWS_AS(reduce_rows(n.A.topRows(1), n.B.topRows(1)), VerificationError);
}

TEST_CASE("neumann partitions") {
  VertexCondition n2 = neumann_condition(2), n1 = neumann_condition(1);
  CMatrix a = CMatrix::Zero(3, 3), b = CMatrix::Zero(3, 3);
  a.block(0, 0, 2, 2) = n2.A;
  b.block(0, 0, 2, 2) = n2.B;
  b(2, 2) = 1.0;
  auto part = neumann_partition(a, b);
  REQUIRE(part.has_value());
  CHECK((*part)[0] == (*part)[1]);
  CHECK((*part)[0] != (*part)[2]);
  CHECK_FALSE(is_neumann(a, b));
  CHECK(is_neumann(n1.A, n1.B));
  b(2, 2) = 0.0;
  a(2, 2) = 1.0;
  CHECK_FALSE(neumann_partition(a, b).has_value());
}

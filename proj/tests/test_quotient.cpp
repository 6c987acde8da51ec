#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "isograph/catalog.hpp"
#include "isograph/quotient.hpp"

using namespace isograph;
using namespace testing_helpers;

namespace {

const double s3 = std::sqrt(3.0);
const double s2 = std::sqrt(2.0);
const cplx I(0.0, 1.0);

const Vertex& quotient_vertex(const QuotientGraph& q, const std::string& id) {
  return q.graph.vertices[q.graph.vertex_index(id)];
}

double golden_distance(const QuotientGraph& q, const std::string& id, const CMatrix& a, const CMatrix& b) {
  const Vertex& v = quotient_vertex(q, id);
  return solution_space_distance_up_to_permutation(a, b, v.A, v.B);
}

// The D4 entry's parent spectrum is shared by several cases below.
const Spectrum& d4_parent_spectrum() {
  static const Spectrum s = [] {
    CatalogEntry e = d4_square_graph();
    return eigenvalues(e.graph, 6.0);
  }();
  return s;
}

}  // namespace

TEST_CASE("trivial group gives back the parent graph") {
  GraphBuilder b;
  int c = b.add_vertex("c");
  int p = b.add_vertex("p");
  int r = b.add_vertex("r");
  b.add_edge("x", c, p, 1.0);
  b.add_edge("y", c, r, 1.7);
  b.add_edge("z", p, c, 0.6);
  b.set_dirichlet(r);
  MetricGraph g = b.build();
  GroupPtr one = make_cyclic(1);
  QuotientSpec spec{g, trivial_action(g, one), trivial_rep(whole_group(one)), {}, {}, {}, {}};
  QuotientGraph q = build_quotient(spec);
  REQUIRE(q.graph.edge_count() == 3);
  REQUIRE(q.graph.vertex_count() == 3);
  for (int e = 0; e < 3; ++e)
    CHECK(q.graph.edges[e].length == doctest::Approx(g.edges[e].length));
  for (int v = 0; v < 3; ++v)
    CHECK(solution_space_distance(q.graph.vertices[v].A, q.graph.vertices[v].B, g.vertices[v].A,
                                  g.vertices[v].B) < 1e-12);
  CHECK(compare_spectra(eigenvalues(q.graph, 10.0), eigenvalues(g, 10.0), 1e-9).match);

  Spectrum sq = eigenvalues(q.graph, 5.0);
  for (int i = 0; i < 3 && i < static_cast<int>(sq.entries.size()); ++i) {
    Eigenfunction f = eigenfunctions(q.graph, sq.entries[i].k).front();
    std::vector<Eigenfunction> lifted = decode(q, f);
    REQUIRE(lifted.size() == 1);
    for (int e = 0; e < 3; ++e) {
      CHECK(std::abs(lifted[0].coeffs[e][0] - f.coeffs[e][0]) < 1e-12);
      CHECK(std::abs(lifted[0].coeffs[e][1] - f.coeffs[e][1]) < 1e-12);
    }
  }
}

TEST_CASE("golden vertex conditions of the D4 square quotients") {
  CatalogEntry e = d4_square_graph();

  SUBCASE("second orthogonal form of the two-dimensional irrep") {
    QuotientGraph q = build_quotient(quotient_spec(e, "R-pi/3"));
    CHECK(golden_distance(q, "v4", mat2(1 - s3 / 2, 0.5, 0, 0), mat2(0, 0, -1 - s3 / 2, 0.5)) < 1e-10);
    for (const char* id : {"v1", "v2"})
      CHECK(golden_distance(q, id, mat2(1.5, s3 / 2, 0, 0), mat2(0, 0, -0.5, s3 / 2)) < 1e-10);
  }
  SUBCASE("theta = 3 pi / 4") {
    QuotientGraph q = build_quotient(quotient_spec(e, "theta=3pi/4"));
    CHECK(golden_distance(q, "v4", mat2(2, 0, 0, 0), mat2(0, 0, 0, 2)) < 1e-10);
    for (const char* id : {"v1", "v2"})
      CHECK(golden_distance(q, id, mat2(1, -1, 0, 0), mat2(0, 0, 1, 1)) < 1e-10);
  }
  SUBCASE("complex one-dimensional rep of the rotations") {
    QuotientGraph q = build_quotient(quotient_spec(e, "R3"));
    int matched = 0;
    for (const Vertex& v : q.graph.vertices)
      if (v.degree() == 2 &&
          solution_space_distance_up_to_permutation(mat2(1, -I, 0, 0), mat2(0, 0, 1, I), v.A, v.B) < 1e-10)
        ++matched;
    CHECK(matched >= 1);
  }
}

TEST_CASE("tetrahedron quotients") {
  CatalogEntry e = tetrahedron_graph();
  QuotientGraph sign = build_quotient(quotient_spec(e, "sign"));
  CHECK(sign.graph.empty());
  CHECK(eigenvalues(sign.graph, 5.0).count() == 0);

  QuotientGraph perm = build_quotient(quotient_spec(e, "perm"));
  CHECK(perm.orbits.edge_orbits.size() == 1);
  CHECK(perm.graph.edge_count() == 3);
  CHECK(perm.d == std::vector<int>{3});
  // The trivial-component copy decouples with a Neumann end; the other two
  // copies carry the expected 2x2 condition.
  CMatrix a = CMatrix::Zero(3, 3), b = CMatrix::Zero(3, 3);
  b(0, 0) = 1;
  a.block(1, 1, 2, 2) = mat2(s2, -1, 0, 0);
  b.block(1, 1, 2, 2) = mat2(0, 0, 1, s2);
  CHECK(golden_distance(perm, "v1", a, b) < 1e-10);
}

TEST_CASE("Cayley graph quotient by R1 has the golden conditions") {
  CatalogEntry e = d4_cayley_graph();
  QuotientGraph q = build_quotient(quotient_spec(e, "R1"));
  CMatrix a = CMatrix::Zero(4, 4), b = CMatrix::Zero(4, 4);
  a << 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0;
  b.row(3) << 1, -1, -1, -1;
  int matched = 0;
  for (const Vertex& v : q.graph.vertices)
    if (v.degree() == 4 && solution_space_distance_up_to_permutation(a, b, v.A, v.B) < 1e-10)
      ++matched;
  CHECK(matched >= 1);
}

TEST_CASE("quotient spectra equal R-spectra") {
  CatalogEntry e = d4_square_graph();
  for (const char* name : {"R1", "R2", "R3", "R"}) {
    CAPTURE(name);
    QuotientGraph q = build_quotient(quotient_spec(e, name));
    Spectrum sq = eigenvalues(q.graph, 6.0);
    Spectrum rs = r_spectrum(q.parent, q.action, q.rep, d4_parent_spectrum());
    SpectrumComparison c = compare_spectra(sq, rs, 1e-7);
    CHECK(c.match);
    CHECK(c.compared >= 10);
  }

  CatalogEntry t = tetrahedron_graph();
  QuotientGraph q = build_quotient(quotient_spec(t, "perm"));
  SpectrumComparison c = compare_spectra(eigenvalues(q.graph, 15.0), r_spectrum(t.graph, t.action, q.rep, 15.0));
  CHECK(c.match);
  CHECK(c.compared >= 6);
}

TEST_CASE("theta family quotients are isospectral") {
  CatalogEntry e = d4_square_graph();
  Spectrum ref = eigenvalues(build_quotient(quotient_spec(e, "theta=0")).graph, 6.0);
  for (const char* name : {"theta=pi/6", "theta=pi/3", "theta=3pi/4", "R-complex"}) {
    CAPTURE(name);
    Spectrum s = eigenvalues(build_quotient(quotient_spec(e, name)).graph, 6.0);
    CHECK(compare_spectra(ref, s, 1e-7).match);
  }
}

TEST_CASE("other orbit representatives give an isospectral quotient") {
  CatalogEntry e = d4_square_graph();
  for (const char* name : {"R1", "R3"}) {
    CAPTURE(name);
    QuotientSpec spec = resolve_spec(quotient_spec(e, name));
    const std::vector<int>& h = spec.rep.domain().elements;
    QuotientSpec moved = spec;
    moved.edge_bases.clear();
    moved.global_basis = CMatrix();
    // Shift every representative by a different group element.
    for (size_t i = 0; i < moved.edge_reps.size(); ++i)
      moved.edge_reps[i] = spec.action.edge_image(h[(i + 1) % h.size()], spec.edge_reps[i]).edge;
    for (size_t i = 0; i < moved.vertex_reps.size(); ++i)
      moved.vertex_reps[i] = spec.action.vertex_image(h[(i + 3) % h.size()], spec.vertex_reps[i]);
    Spectrum s1 = eigenvalues(build_quotient(spec).graph, 6.0);
    Spectrum s2 = eigenvalues(build_quotient(moved).graph, 6.0);
    CHECK(compare_spectra(s1, s2, 1e-7).match);
  }
}

TEST_CASE("quotient by a direct sum is the disjoint union") {
  CatalogEntry e = d3_triangle_graph();
  const double k = 2.0;
  Spectrum whole = eigenvalues(build_quotient(quotient_spec(e, "family1")).graph, k);
  Spectrum reg = eigenvalues(build_quotient(quotient_spec(e, "regular")).graph, k);
  Spectrum triv = eigenvalues(build_quotient(quotient_spec(e, "trivial")).graph, k);
  SpectrumComparison c = compare_spectra(whole, merge_spectra({reg, triv, triv}));
  CHECK(c.match);
  CHECK(c.compared >= 10);
}

TEST_CASE("free action with a one-dimensional rep needs no row reduction") {
  CatalogEntry e = d3_triangle_graph();
  QuotientGraph q = build_quotient(quotient_spec(e, "trivial"));
  for (const QuotientVertexInfo& v : q.vertices) {
    CHECK(v.a_full.rows() == v.a_full.cols());
    Eigen::MatrixXd tp = v.theta_prime.cwiseAbs();
    for (int r = 0; r < tp.rows(); ++r)
      CHECK(tp.row(r).sum() == doctest::Approx(1.0));
  }
}

TEST_CASE("self-adjointness predictions agree with the built quotients") {
  for (const std::string& id : catalog_ids()) {
    CatalogEntry e = catalog_entry(id);
    for (const CatalogRep& r : e.reps) {
      CAPTURE(id);
      CAPTURE(r.name);
      SelfAdjointPrediction p = check_quotient_self_adjoint(quotient_spec(e, r));
      CHECK(p.consistent);
      if (id == "d3-triangle")
        CHECK(p.branch == "free");
      if (id == "z2-star") {
        REQUIRE(p.predicted.has_value());
        CHECK_FALSE(*p.predicted);
        CHECK_FALSE(p.built_self_adjoint);
      } else if (p.predicted) {
        CHECK(*p.predicted);
      }
    }
  }
  SelfAdjointPrediction sign = check_quotient_self_adjoint(quotient_spec(tetrahedron_graph(), "sign"));
  CHECK(sign.branch == "neumann");
  REQUIRE(sign.predicted.has_value());
  CHECK(*sign.predicted);
}

TEST_CASE("decode and encode are mutually inverse on eigenfunctions") {
  CatalogEntry e = d4_square_graph();
  for (const char* name : {"R", "R3", "R1"}) {
    CAPTURE(name);
    QuotientGraph q = build_quotient(quotient_spec(e, name));
    Spectrum s = eigenvalues(q.graph, 6.0);
    int tested = 0;
    for (const SpectrumEntry& en : s.entries) {
      for (const Eigenfunction& f : eigenfunctions(q.graph, en.k, en.multiplicity)) {
        if (tested == 10)
          break;
        std::vector<Eigenfunction> lifted = decode(q, f);
        REQUIRE(static_cast<int>(lifted.size()) == q.rep.dim());
        for (const Eigenfunction& l : lifted)
          CHECK(residual(q.parent, l) < 1e-8);
        Eigenfunction back = encode(q, lifted);
        for (size_t j = 0; j < f.coeffs.size(); ++j) {
          CHECK(std::abs(back.coeffs[j][0] - f.coeffs[j][0]) < 1e-10);
          CHECK(std::abs(back.coeffs[j][1] - f.coeffs[j][1]) < 1e-10);
        }
        ++tested;
      }
    }
    CHECK(tested == 10);
  }
}

TEST_CASE("encode rejects functions that do not transform by the rep") {
  CatalogEntry e = d4_square_graph();
  QuotientGraph q = build_quotient(quotient_spec(e, "R1"));
  Spectrum s = eigenvalues(e.graph, 2.0);
  Eigenfunction f = eigenfunctions(e.graph, s.entries.front().k).front();
  CHECK_THROWS_AS(encode(q, {f}), VerificationError);
}

#include <doctest.h>

#include <numbers>
#include <random>

#include "helpers.hpp"
#include "isograph/irreps.hpp"

using namespace isograph;
using namespace testing_helpers;

namespace {

struct D4Setup {
  GroupPtr g = make_dihedral(4);
  int s = g->element("s"), t = g->element("t");
  Subgroup h1 = subgroup_generated(g, {g->element("t"), g->element("ts^2")});
  Subgroup h2 = subgroup_generated(g, {g->element("ts"), g->element("ts^3")});
  Subgroup h3 = subgroup_generated(g, {g->element("s")});

  MatrixRep repform1() const {
    return rep_from_generators(whole_group(g), {s, t},
                               {mat2(0, 1, -1, 0), mat2(-1, 0, 0, 1)}, "repform1");
  }
  MatrixRep r1() const {
    return rep_from_generators(h1, {t, g->element("ts^2")},
                               {CMatrix::Constant(1, 1, -1.0), CMatrix::Constant(1, 1, 1.0)});
  }
  MatrixRep r2() const {
    return rep_from_generators(h2, {g->element("ts"), g->element("ts^3")},
                               {CMatrix::Constant(1, 1, 1.0), CMatrix::Constant(1, 1, -1.0)});
  }
};

CMatrix rotation(double th) { return mat2(std::cos(th), -std::sin(th), std::sin(th), std::cos(th)); }

MatrixRep random_rep(const IrrepTable& table, std::mt19937& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(table.irreps.size()) - 1);
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::vector<MatrixRep> parts;
  int n = terms(rng);
  for (int i = 0; i < n; ++i)
    parts.push_back(table.irreps[pick(rng)]);
  MatrixRep sum = direct_sum(parts);
  std::normal_distribution<double> nd(0.0, 0.3);
  CMatrix s = CMatrix::Identity(sum.dim(), sum.dim());
  for (int i = 0; i < sum.dim(); ++i)
    for (int j = 0; j < sum.dim(); ++j)
      s(i, j) += cplx(nd(rng), nd(rng));
  return change_basis(sum, s, "random basis");
}

}  // namespace

TEST_CASE("characters of basic representations") {
  D4Setup d;
  Character triv = character(trivial_rep(whole_group(d.g)));
  for (cplx v : triv.values)
    CHECK(std::abs(v - 1.0) < 1e-15);
  Character reg = character(regular_rep(d.g));
  CHECK(reg.values[0] == cplx(8.0));
  for (int x = 1; x < 8; ++x)
    CHECK(reg.values[x] == cplx(0.0));
  Character c = character(d.repform1());
  CHECK(std::abs(c(d.s)) < 1e-15);
  CHECK(std::abs(c(d.g->element("s^2")) + 2.0) < 1e-15);
  CHECK(std::abs(c(d.t)) < 1e-15);
  CHECK(is_class_function(c));
}

TEST_CASE("irreducible tables are orthonormal and complete") {
  std::vector<IrrepTable> tables;
  for (int n = 1; n <= 8; ++n)
    tables.push_back(irreps_dihedral(n));
  for (int n : {1, 2, 5, 6})
    tables.push_back(irreps_cyclic(n));
  tables.push_back(irreps_symmetric(3));
  tables.push_back(irreps_symmetric(4));
  tables.push_back(builtin_irreps(builtin_group("D4xD4")));
  for (const auto& t : tables) {
    int sum_sq = 0;
    for (size_t i = 0; i < t.irreps.size(); ++i) {
      sum_sq += t.irreps[i].dim() * t.irreps[i].dim();
      for (size_t j = 0; j < t.irreps.size(); ++j) {
        cplx ip = char_inner(character(t.irreps[i]), character(t.irreps[j]));
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    }
    CHECK(sum_sq == t.group->order());
  }
}

TEST_CASE("regular representation inner products") {
  auto t = irreps_symmetric(4);
  Character reg = character(regular_rep(t.group));
  for (const auto& s : t.irreps)
    CHECK(std::abs(char_inner(reg, character(s)) - static_cast<double>(s.dim())) < 1e-12);
  auto d4 = irreps_dihedral(4);
  CHECK(decompose(regular_rep(d4.group), d4) == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("restriction") {
  D4Setup d;
  MatrixRep r = d.repform1();
  MatrixRep same = restrict(r, whole_group(d.g));
  for (int x = 0; x < 8; ++x)
    CHECK(max_norm(same(x) - r(x)) == 0.0);
  MatrixRep res = restrict(r, d.h3);
  CHECK(res.dim() == 2);
  CHECK(max_norm(res(d.s) - mat2(0, 1, -1, 0)) == 0.0);
  CHECK_THROWS_AS(res(d.t), InputError);
  MatrixRep triv = restrict(trivial_rep(whole_group(d.g)), d.h1);
  CHECK(triv.domain() == d.h1);
}

TEST_CASE("induction from H1") {
  D4Setup d;
  MatrixRep ind = induce(d.r1());
  CHECK(ind.dim() == 2);
  CHECK(max_norm(ind(d.t) - mat2(-1, 0, 0, 1)) < 1e-15);
  Character c = induced_character(character(d.r1()));
  // e, s, s^2, t, ts
  std::vector<double> expected{2, 0, -2, 0, 0};
  std::vector<int> reps{0, d.s, d.g->element("s^2"), d.t, d.g->element("ts")};
  for (size_t i = 0; i < reps.size(); ++i)
    CHECK(c(reps[i]) == cplx(expected[i]));
  CHECK(characters_equal(c, character(ind)));
  CHECK(is_isomorphic(ind, induce(d.r2())));
  auto table = irreps_dihedral(4);
  CHECK(std::abs(char_inner(character(ind), character(table.irreps[4])) - 1.0) < 1e-12);
  CHECK(std::abs(char_inner(character(ind), character(d.repform1())) - 1.0) < 1e-12);

  MatrixRep from_whole = induce(d.repform1());
  for (int x = 0; x < 8; ++x)
    CHECK(max_norm(from_whole(x) - d.repform1()(x)) == 0.0);
}

TEST_CASE("inducing the trivial rep of the trivial subgroup gives the regular rep") {
  auto s3 = make_symmetric(3);
  MatrixRep ind = induce(trivial_rep(trivial_subgroup(s3)));
  MatrixRep reg = regular_rep(s3);
  for (int x = 0; x < s3->order(); ++x)
    CHECK(max_norm(ind(x) - reg(x)) == 0.0);
}

TEST_CASE("induced character agrees with the character of the induced rep") {
  std::mt19937 rng(7);
  std::vector<IrrepTable> tables{irreps_dihedral(4), irreps_dihedral(6), irreps_symmetric(3),
                                 irreps_symmetric(4), irreps_cyclic(6)};
  for (int trial = 0; trial < 20; ++trial) {
    const IrrepTable& t = tables[trial % tables.size()];
    std::uniform_int_distribution<int> el(0, t.group->order() - 1);
    Subgroup h = subgroup_generated(t.group, {el(rng)});
    MatrixRep r = restrict(random_rep(t, rng), h);
    CHECK(characters_equal(induced_character(character(r)), character(induce(r)), 1e-9));
  }
}

TEST_CASE("decomposition of random direct sums") {
  std::mt19937 rng(11);
  auto t = irreps_symmetric(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> mult(t.irreps.size(), 0);
    std::vector<MatrixRep> parts;
    for (size_t i = 0; i < t.irreps.size(); ++i) {
      mult[i] = static_cast<int>(rng() % 3);
      for (int k = 0; k < mult[i]; ++k)
        parts.push_back(t.irreps[i]);
    }
    if (parts.empty())
      continue;
    CHECK(decompose(direct_sum(parts), t) == mult);
  }
  CHECK_FALSE(is_isomorphic(t.irreps[0], t.irreps[1]));
}

TEST_CASE("change of basis") {
  D4Setup d;
  MatrixRep r = d.repform1();
  MatrixRep same = change_basis(r, CMatrix::Identity(2, 2), "same");
  for (int x = 0; x < 8; ++x)
    CHECK(max_norm(same(x) - r(x)) == 0.0);
  CHECK(is_isomorphic(r, change_basis(r, mat2(1, 2, 0, 1))));

  const double r3 = std::sqrt(3.0);
  MatrixRep form2 = change_basis(r, rotation(std::numbers::pi / 3), "repform2");
  CHECK(max_norm(form2(d.g->element("ts^2")) - 0.5 * mat2(-1, -r3, -r3, 1)) < 1e-14);

  for (double th : {0.3, 1.1, 2.5}) {
    MatrixRep rt = change_basis(r, rotation(th));
    double c = std::cos(th), s = std::sin(th);
    CHECK(max_norm(rt(d.g->element("ts^3")) - mat2(2 * c * s, c * c - s * s, c * c - s * s, -2 * c * s)) <
          1e-14);
  }
  CHECK_THROWS_AS(change_basis(r, mat2(1, 1, 1, 1)), InputError);
}

TEST_CASE("unitarization") {
  std::mt19937 rng(3);
  auto t = irreps_dihedral(5);
  MatrixRep r = random_rep(t, rng);
  CHECK_FALSE(is_unitary(r));
  MatrixRep u = unitarize(r);
  CHECK(is_unitary(u, 1e-10));
  CHECK(characters_equal(character(r), character(u), 1e-10));
  MatrixRep already = unitarize(t.irreps.back());
  CHECK(characters_equal(character(already), character(t.irreps.back())));
}

TEST_CASE("trivial component bases") {
  auto s4 = make_symmetric(4);
  Subgroup stab = subgroup_generated(s4, {s4->element("(3 4)")});
  CHECK(trivial_component_basis(sign_rep(s4), stab).d_triv == 0);

  MatrixRep perm = permutation_rep(s4);
  TrivialComponent tc = trivial_component_basis(perm, stab);
  REQUIRE(tc.d_triv == 3);
  CMatrix p = averaging_projector(perm, stab);
  CHECK(max_norm(p * tc.basis.leftCols(3) - tc.basis.leftCols(3)) < 1e-12);
  CHECK(max_norm(p * tc.basis.rightCols(1)) < 1e-12);
  // the adapted vectors of the tetrahedron example, up to mixing
  const double h = 1.0 / std::sqrt(2.0);
  CMatrix expected_trivial = CMatrix::Zero(4, 3);
  expected_trivial(0, 0) = 1;
  expected_trivial(1, 1) = 1;
  expected_trivial(2, 2) = h;
  expected_trivial(3, 2) = h;
  CMatrix expected_rest = CMatrix::Zero(4, 1);
  expected_rest(2, 0) = h;
  expected_rest(3, 0) = -h;
  CHECK(subspace_distance(tc.basis.leftCols(3), expected_trivial) < 1e-12);
  CHECK(subspace_distance(tc.basis.rightCols(1), expected_rest) < 1e-12);

  D4Setup d;
  TrivialComponent free = trivial_component_basis(d.repform1(), trivial_subgroup(d.g));
  CHECK(free.d_triv == 2);
  CHECK(max_norm(free.basis - CMatrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("sums and products") {
  D4Setup d;
  MatrixRep r = d.repform1();
  Character c2 = character(direct_sum({r, r}));
  Character c = character(r);
  for (int x = 0; x < 8; ++x)
    CHECK(std::abs(c2(x) - 2.0 * c(x)) < 1e-15);
  auto prod = direct_product(d.g, d.g);
  MatrixRep tp = tensor_product(r, d.repform1(), prod);
  Character ct = character(tp);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      CHECK(std::abs(ct(a * 8 + b) - c(a) * c(b)) < 1e-14);

  // induced tensor products from H_i x H_j
  std::vector<MatrixRep> inductions;
  for (auto [x, y] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    MatrixRep rx = x == 1 ? d.r1() : d.r2();
    MatrixRep ry = y == 1 ? d.r1() : d.r2();
    inductions.push_back(induce(tensor_product(rx, ry, prod)));
  }
  for (size_t i = 1; i < inductions.size(); ++i)
    CHECK(is_isomorphic(inductions[0], inductions[i]));
}

TEST_CASE("Frobenius reciprocity on random draws") {
  std::mt19937 rng(2024);
  std::vector<IrrepTable> tables{irreps_dihedral(3), irreps_dihedral(4), irreps_dihedral(8),
                                 irreps_symmetric(4), irreps_cyclic(5)};
  for (int trial = 0; trial < 30; ++trial) {
    const IrrepTable& t = tables[trial % tables.size()];
    std::uniform_int_distribution<int> el(0, t.group->order() - 1);
    Subgroup h = subgroup_generated(t.group, {el(rng), el(rng)});
    MatrixRep r1 = random_rep(t, rng);
    MatrixRep r2 = restrict(random_rep(t, rng), h);
    cplx lhs = char_inner(character(restrict(r1, h)), character(r2));
    cplx rhs = char_inner(character(r1), character(induce(r2)));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"

using namespace isograph;
using namespace testing_helpers;

TEST_CASE("dihedral group relations") {
  auto d4 = make_dihedral(4);
  CHECK(d4->order() == 8);
  CHECK(d4->identity() == 0);
  int s = d4->element("s"), t = d4->element("t");
  CHECK(d4->element_order(s) == 4);
  CHECK(d4->element_order(t) == 2);
  CHECK(d4->mul(t, s) == d4->mul(d4->inv(s), t));
  CHECK(d4->mul(t, s) == d4->element("ts"));
  CHECK(d4->mul(t, d4->mul(s, s)) == d4->element("ts^2"));

  auto d1 = make_dihedral(1);
  CHECK(d1->order() == 2);
  CHECK(d1->element_order(1) == 2);
  CHECK_THROWS_AS(make_dihedral(0), InputError);
}

TEST_CASE("named subgroups of D4") {
  auto d4 = make_dihedral(4);
  auto names = [&](const Subgroup& h) {
    std::set<std::string> out;
    for (int x : h.elements)
      out.insert(d4->name(x));
    return out;
  };
  auto h1 = subgroup_generated(d4, {d4->element("t"), d4->element("ts^2")});
  CHECK(names(h1) == std::set<std::string>{"e", "t", "ts^2", "s^2"});
  auto h2 = subgroup_generated(d4, {d4->element("ts"), d4->element("ts^3")});
  CHECK(names(h2) == std::set<std::string>{"e", "ts", "ts^3", "s^2"});
  auto h3 = subgroup_generated(d4, {d4->element("s")});
  CHECK(names(h3) == std::set<std::string>{"e", "s", "s^2", "s^3"});
  CHECK(subgroup_generated(d4, {}).elements == std::vector<int>{0});
}

TEST_CASE("symmetric groups") {
  auto s3 = make_symmetric(3);
  CHECK(s3->order() == 6);
  auto s4 = make_symmetric(4);
  CHECK(s4->order() == 24);
  CHECK(s4->name(0) == "e");
  CHECK(s4->element_order(s4->element("(3 4)")) == 2);
  CHECK(conjugacy_classes(*s4).size() == 5);
  CHECK_THROWS_WITH_AS(make_symmetric(9), doctest::Contains("n <= 8"), InputError);
  // composition applies the right factor first
  int a = s4->element("(1 2)"), b = s4->element("(2 3)");
  CHECK(s4->name(s4->mul(a, b)) == "(1 2 3)");
}

TEST_CASE("direct products") {
  auto d4 = make_dihedral(4);
  auto p = direct_product(d4, d4);
  CHECK(p->order() == 64);
  CHECK(p->name(9) == "(s,s)");
  auto trivial = make_cyclic(1);
  auto q = direct_product(d4, trivial);
  CHECK(q->same_table(*d4));
  auto z2 = make_cyclic(2);
  CHECK(conjugacy_classes(*direct_product(z2, z2)).size() == 4);
}

TEST_CASE("cosets") {
  auto d4 = make_dihedral(4);
  auto h1 = subgroup_generated(d4, {d4->element("t"), d4->element("ts^2")});
  auto c = left_cosets(h1);
  CHECK(c.index() == 2);
  CHECK(c.representatives == std::vector<int>{0, 1});
  auto whole = left_cosets(whole_group(d4));
  CHECK(whole.representatives == std::vector<int>{0});

  auto s4 = make_symmetric(4);
  auto h = subgroup_generated(s4, {s4->element("(3 4)")});
  auto cs = left_cosets(h);
  CHECK(cs.index() == 12);
  // each representative is minimal in its coset and the cosets partition
  std::vector<int> seen(24, 0);
  for (int r : cs.representatives)
    for (int x : h.elements) {
      int y = s4->mul(r, x);
      CHECK(y >= r);
      ++seen[y];
    }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
  auto rc = right_cosets(h);
  CHECK(rc.index() == 12);
}

TEST_CASE("double cosets") {
  auto d4 = make_dihedral(4);
  auto h1 = subgroup_generated(d4, {d4->element("t"), d4->element("ts^2")});
  auto h2 = subgroup_generated(d4, {d4->element("ts"), d4->element("ts^3")});

  auto trivial = double_cosets(trivial_subgroup(d4), h1);
  CHECK(trivial.representatives == left_cosets(h1).representatives);
  CHECK(double_cosets(whole_group(d4), h1).count() == 1);

  auto dc = double_cosets(h1, h2);
  std::vector<int> cover(8, 0);
  int total_refined = 0;
  for (int k = 0; k < dc.count(); ++k) {
    for (int x : dc.elements_of(k))
      ++cover[x];
    total_refined += static_cast<int>(dc.refined[k].size());
    CHECK(dc.refined[k][0] == dc.representatives[k]);
    for (int t : dc.refined[k]) {
      // t lies in K t_k, i.e. t t_k^-1 in K
      CHECK(h1.contains(d4->mul(t, d4->inv(dc.representatives[k]))));
    }
  }
  CHECK(std::all_of(cover.begin(), cover.end(), [](int v) { return v == 1; }));
  CHECK(total_refined == 2);
  // refined representatives form a complete set of left-coset representatives
  auto lc = left_cosets(h2);
  std::set<int> cosets_hit;
  for (auto& row : dc.refined)
    for (int t : row)
      cosets_hit.insert(lc.coset_of[t]);
  CHECK(cosets_hit.size() == 2);
}

TEST_CASE("conjugacy classes agree with brute force") {
  auto d4 = make_dihedral(4);
  auto classes = conjugacy_classes(*d4);
  CHECK(classes.size() == 5);
  CHECK(classes[0] == std::vector<int>{0});
  auto s4 = make_symmetric(4);
  std::vector<int> sizes;
  for (auto& c : conjugacy_classes(*s4)) {
    sizes.push_back(static_cast<int>(c.size()));
    CHECK(24 % c.size() == 0);
  }
  CHECK(sizes == brute_class_sizes(*s4));
  std::multiset<int> as_set(sizes.begin(), sizes.end());
  CHECK(as_set == std::multiset<int>{1, 6, 3, 8, 6});
  auto z6 = make_cyclic(6);
  CHECK(conjugacy_classes(*z6).size() == 6);
}

TEST_CASE("group table validation") {
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), InputError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 0}, {"a", "a"}), InputError);
  FiniteGroup z2(2, {0, 1, 1, 0}, {"e", "x"});
  CHECK(z2.inv(1) == 1);
  CHECK(builtin_group("Dn:5")->order() == 10);
  CHECK(builtin_group("D4xD4")->order() == 64);
  CHECK_THROWS_AS(builtin_group("Q8"), InputError);
}

TEST_CASE("matrix groups") {
  Eigen::MatrixXd rot(2, 2), refl(2, 2);
  rot << 0, -1, 1, 0;
  refl << 1, 0, 0, -1;
  std::vector<Eigen::MatrixXd> mats;
  auto g = group_from_matrices({rot, refl}, &mats, {"r", "f"});
  CHECK(g->order() == 8);
  CHECK(conjugacy_classes(*g).size() == 5);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      CHECK((mats[a] * mats[b] - mats[g->mul(a, b)]).norm() < 1e-12);
}

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "helpers.hpp"
#include "isograph/irreps.hpp"
#include "isograph/spectral.hpp"

using namespace isograph;
using namespace testing_helpers;

namespace {

constexpr double pi = std::numbers::pi;

MetricGraph interval(double l, bool dirichlet) {
  GraphBuilder b;
  int u = b.add_vertex("u"), v = b.add_vertex("v");
  b.add_edge("e", u, v, l);
  if (dirichlet) {
    b.set_dirichlet(u);
    b.set_dirichlet(v);
  }
  return b.build();
}

MetricGraph star(const std::vector<double>& lengths) {
  GraphBuilder b;
  int c = b.add_vertex("c");
  for (size_t i = 0; i < lengths.size(); ++i) {
    int leaf = b.add_vertex("l" + std::to_string(i));
    b.add_edge("e" + std::to_string(i), c, leaf, lengths[i]);
  }
  return b.build();
}

// Roots of sum_i sin(k l_i) prod_{j != i} cos(k l_j), the Neumann star
// condition with the poles of the tangent form cleared, by sign changes on
// a fine grid and bisection.
std::vector<double> star_oracle(const std::vector<double>& l, int count) {
  auto f = [&](double k) {
    double s = 0.0;
    for (size_t i = 0; i < l.size(); ++i) {
      double t = std::sin(k * l[i]);
      for (size_t j = 0; j < l.size(); ++j)
        if (j != i)
          t *= std::cos(k * l[j]);
      s += t;
    }
    return s;
  };
  std::vector<double> roots;
  const double step = 1e-6;
  double a = step, fa = f(a);
  while (static_cast<int>(roots.size()) < count) {
    double b = a + step, fb = f(b);
    if (fa == 0.0 || fa * fb < 0) {
      double lo = a, hi = b;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (f(lo) * f(mid) <= 0 ? hi : lo) = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

double simpson(const std::function<double(double)>& f, double l, int n = 2000) {
  double h = l / n, s = f(0) + f(l);
  for (int i = 1; i < n; ++i)
    s += f(i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

cplx eval(const Eigenfunction& f, int e, double x) {
  return f.coeffs[e][0] * std::cos(f.k * x) + f.coeffs[e][1] * std::sin(f.k * x);
}

}  // namespace

TEST_CASE("dirichlet interval") {
  Spectrum s = eigenvalues(interval(1.0, true), 20.0);
  REQUIRE(s.entries.size() == 6);
  for (int n = 1; n <= 6; ++n) {
    CHECK(s.entries[n - 1].k == doctest::Approx(n * pi).epsilon(1e-11));
    CHECK(s.entries[n - 1].multiplicity == 1);
  }
  CHECK(s.warnings.empty());
  CMatrix m = secular_matrix(interval(1.0, true), 2.0);
  CHECK(std::abs(m.determinant()) == doctest::Approx(std::abs(std::sin(2.0))).epsilon(1e-12));
}

TEST_CASE("neumann interval has the constant mode") {
  Spectrum s = eigenvalues(interval(2.0, false), 10.0);
  REQUIRE(s.entries.size() == 7);
  CHECK(s.entries[0].k == 0.0);
  CHECK(s.entries[0].multiplicity == 1);
  for (int n = 1; n < 7; ++n)
    CHECK(s.entries[n].k == doctest::Approx(n * pi / 2).epsilon(1e-11));
}

TEST_CASE("two disjoint edges double every eigenvalue") {
  GraphBuilder b;
  for (int i = 0; i < 2; ++i) {
    int u = b.add_vertex("u" + std::to_string(i)), v = b.add_vertex("v" + std::to_string(i));
    b.add_edge("e" + std::to_string(i), u, v, 1.0);
  }
  Spectrum s = eigenvalues(b.build(), 12.0);
  REQUIRE(s.entries.size() == 4);
  for (const SpectrumEntry& e : s.entries)
    CHECK(e.multiplicity == 2);
}

TEST_CASE("equilateral star") {
  Spectrum s = eigenvalues(star({1, 1, 1}), 10.0);
  std::vector<double> flat = s.flat();
  std::vector<double> expect{0, pi / 2, pi / 2, pi, 3 * pi / 2, 3 * pi / 2, 2 * pi, 5 * pi / 2, 5 * pi / 2, 3 * pi};
  REQUIRE(flat.size() == expect.size());
  for (size_t i = 0; i < flat.size(); ++i)
    CHECK(flat[i] == doctest::Approx(expect[i]).epsilon(1e-10));
  CHECK(weyl_check(star({1, 1, 1}), s).ok);
}

TEST_CASE("generic star against the dense-scan oracle") {
  std::vector<double> l{1.0, std::sqrt(2.0), std::sqrt(3.0)};
  std::vector<double> oracle = star_oracle(l, 20);
  Spectrum s = eigenvalues(star(l), oracle.back() + 0.01);
  std::vector<double> flat = s.flat();
  REQUIRE(flat.size() == 21);
  CHECK(flat[0] == 0.0);
  for (int i = 0; i < 20; ++i)
    CHECK(std::abs(flat[i + 1] - oracle[i]) < 1e-8);
  CHECK(weyl_check(star(l), s).ok);
}

TEST_CASE("row scaling and splitting do not move eigenvalues") {
  std::vector<double> l{1.0, std::sqrt(2.0), std::sqrt(3.0)};
  MetricGraph g = star(l);
  Spectrum base = eigenvalues(g, 12.0);
  MetricGraph scaled = g;
  scaled.vertices[0].A.row(1) *= cplx(3.0, -2.0);
  scaled.vertices[0].B.row(1) *= cplx(3.0, -2.0);
  CHECK(compare_spectra(base, eigenvalues(scaled, 12.0), 1e-9).match);
  CHECK(compare_spectra(base, eigenvalues(add_dummy_vertex(g, 1, 0.3), 12.0), 1e-9).match);
  Spectrum iv = eigenvalues(interval(1.0, false), 15.0);
  Spectrum split = eigenvalues(add_dummy_vertex(interval(1.0, false), 0, 0.5), 15.0);
  CHECK(compare_spectra(iv, split, 1e-9).match);
}

TEST_CASE("eigenfunctions") {
  MetricGraph d = interval(2.0, true);
  auto fs = eigenfunctions(d, pi / 2);
  REQUIRE(fs.size() == 1);
  CHECK(std::abs(fs[0].coeffs[0][0]) < 1e-10);
  CHECK(std::abs(fs[0].coeffs[0][1]) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(eigenfunctions(d, 1.0), InputError);

  MetricGraph s = star({1, 1, 1});
  auto pair = eigenfunctions(s, 1.5 * pi);
  REQUIRE(pair.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(residual(s, pair[i]) < 1e-8);
    for (size_t j = 0; j < 2; ++j) {
      cplx q = 0.0;
      for (int e = 0; e < 3; ++e) {
        auto re = [&](double x) { return std::real(std::conj(eval(pair[i], e, x)) * eval(pair[j], e, x)); };
        auto im = [&](double x) { return std::imag(std::conj(eval(pair[i], e, x)) * eval(pair[j], e, x)); };
        q += cplx(simpson(re, 1.0), simpson(im, 1.0));
      }
      CHECK(std::abs(q - (i == j ? 1.0 : 0.0)) < 1e-8);
      CHECK(std::abs(inner_product(s, pair[i], pair[j]) - q) < 1e-8);
    }
  }
  auto zero = eigenfunctions(s, 0.0);
  REQUIRE(zero.size() == 1);
  CHECK(std::abs(zero[0].coeffs[0][0]) == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("negative eigenvalue from an attractive Robin end") {
  GraphBuilder b;
  int u = b.add_vertex("u"), v = b.add_vertex("v");
  b.add_edge("e", u, v, 5.0);
  b.set_condition(u, CMatrix::Constant(1, 1, 2.0), CMatrix::Constant(1, 1, 1.0));
  MetricGraph g = b.build();
  CHECK(is_self_adjoint(g).overall);
  SpectralOptions opts;
  opts.negative = true;
  Spectrum s = eigenvalues(g, 4.0, opts);
  REQUIRE(!s.entries.empty());
  double lo = 1.5, hi = 2.5;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    (mid * std::tanh(5 * mid) < 2.0 ? lo : hi) = mid;
  }
  CHECK(s.entries[0].k == doctest::Approx(-lo).epsilon(1e-10));
  CHECK(s.entries[0].lambda() < 0);
  auto fs = eigenfunctions(g, s.entries[0].k);
  REQUIRE(fs.size() == 1);
  CHECK(residual(g, fs[0]) < 1e-8);
  CHECK(std::abs(inner_product(g, fs[0], fs[0]) - 1.0) < 1e-10);
  CHECK(eigenvalues(g, 4.0).entries.front().k > 0);
}

TEST_CASE("r-spectrum of the rotated star") {
  MetricGraph s = star({1, 1, 1});
  GroupPtr z3 = make_cyclic(3);
  GraphAction a = action_from_generators(s, z3, {1}, {{0, 2, 3, 1}}, {{{1, 1}, {2, 1}, {0, 1}}});
  REQUIRE(validate_action(s, a).ok);
  Spectrum full = eigenvalues(s, 10.0);
  IrrepTable table = builtin_irreps(z3);
  std::vector<Spectrum> parts;
  for (const MatrixRep& r : table.irreps)
    parts.push_back(r_spectrum(s, a, r, full));
  for (const Spectrum& p : parts)
    CHECK(p.warnings.empty());
  // trivial: k = 0 and n pi; the two others: the odd multiples of pi/2
  REQUIRE(parts[0].entries.size() == 4);
  CHECK(parts[0].entries[0].k == 0.0);
  CHECK(parts[0].entries[1].k == doctest::Approx(pi));
  CHECK(parts[1].count() == 3);
  CHECK(parts[2].count() == 3);
  for (const SpectrumEntry& e : full.entries) {
    int sum = 0;
    for (const Spectrum& p : parts)
      for (const SpectrumEntry& q : p.entries)
        if (std::abs(q.k - e.k) < 1e-9)
          sum += q.multiplicity;
    CHECK(sum == e.multiplicity);
  }
  Spectrum all = r_spectrum(s, trivial_action(s, make_cyclic(1)), trivial_rep(whole_group(make_cyclic(1))), full);
  CHECK(compare_spectra(all, full, 1e-12).match);
}

TEST_CASE("comparison") {
  Spectrum a, b;
  a.k_max = b.k_max = 10;
  a.entries = {{pi, 1}};
  b.entries = {{pi + 2e-7, 1}};
  CHECK(compare_spectra(a, a, 1e-7).match);
  SpectrumComparison c = compare_spectra(a, b, 1e-7);
  CHECK_FALSE(c.match);
  CHECK(c.mismatches.size() == 2);
  b.entries = {{pi, 2}};
  CHECK_FALSE(compare_spectra(a, b, 1e-7).match);
}

TEST_CASE("close pairs are recovered by the winding audit") {
  GraphBuilder b;
  for (int i = 0; i < 2; ++i) {
    int u = b.add_vertex("u" + std::to_string(i)), v = b.add_vertex("v" + std::to_string(i));
    b.add_edge("e" + std::to_string(i), u, v, i == 0 ? 1.0 : 1.0001);
    b.set_dirichlet(u);
    b.set_dirichlet(v);
  }
  MetricGraph g = b.build();
  Spectrum s = eigenvalues(g, 10.0);
  std::vector<double> flat = s.flat();
  REQUIRE(flat.size() == 6);
  for (int n = 1; n <= 3; ++n) {
    CHECK(flat[2 * n - 2] == doctest::Approx(n * pi / 1.0001).epsilon(1e-11));
    CHECK(flat[2 * n - 1] == doctest::Approx(n * pi).epsilon(1e-11));
  }
  SpectralOptions plain;
  plain.winding_check = false;
  CHECK(eigenvalues(g, 10.0, plain).count() == 3);
}

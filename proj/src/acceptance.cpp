#include "isograph/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "isograph/catalog.hpp"
#include "isograph/irreps.hpp"
#include "isograph/linalg.hpp"
#include "isograph/transplant.hpp"

namespace isograph {

namespace {

constexpr double kTolK = 1e-7;

std::string fmt(double x, int digits = 3) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

CMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Scans until at least n eigenvalues (with multiplicity) lie below k_max.
Spectrum spectrum_with(const MetricGraph& g, int n) {
  double k = std::numbers::pi * (n + 2) / g.total_length();
  for (;;) {
    Spectrum s = eigenvalues(g, k);
    if (s.count() >= n + 1)
      return s;
    k *= 1.3;
  }
}

// Accumulates named checks into one criterion result.
struct Checks {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
  std::string detail() const {
    std::string out;
    for (const std::string& n : notes)
      out += (out.empty() ? "" : "; ") + n;
    return out;
  }
};

std::string comparison_note(const std::string& label, const SpectrumComparison& c) {
  return label + ": " + std::to_string(c.compared) + " entries, max dk " + fmt(c.max_dk);
}

// Compares everything below the common k_max, which must hold at least n
// eigenvalues counted with multiplicity.
struct Leading {
  SpectrumComparison cmp;
  int eigenvalues = 0;
  bool ok = false;
};

Leading compare_leading(const Spectrum& a, const Spectrum& b, int n) {
  Leading r;
  r.cmp = compare_spectra(a, b, kTolK);
  const double k = std::min(a.k_max, b.k_max) - kTolK;
  for (const SpectrumEntry& e : a.entries)
    if (e.k <= k)
      r.eigenvalues += e.multiplicity;
  r.ok = r.cmp.match && r.eigenvalues >= n;
  return r;
}

std::string leading_note(const std::string& label, const Leading& l) {
  return label + ": " + std::to_string(l.eigenvalues) + " eigenvalues, max dk " + fmt(l.cmp.max_dk);
}

// Shared expensive objects, built on first use.
class Context {
public:
  const CatalogEntry& d4() {
    if (!d4_)
      d4_ = d4_square_graph();
    return *d4_;
  }
  const QuotientGraph& d4_quotient(const std::string& rep) {
    auto it = quotients_.find(rep);
    if (it == quotients_.end())
      it = quotients_.emplace(rep, build_quotient(quotient_spec(d4(), rep))).first;
    return it->second;
  }
  const Spectrum& d4_quotient_spectrum(const std::string& rep, int n) {
    auto it = spectra_.find(rep);
    if (it == spectra_.end() || it->second.count() < n + 1)
      it = spectra_.insert_or_assign(rep, spectrum_with(d4_quotient(rep).graph, n)).first;
    return it->second;
  }

private:
  std::optional<CatalogEntry> d4_;
  std::map<std::string, QuotientGraph> quotients_;
  std::map<std::string, Spectrum> spectra_;
};

// Criterion 1
Checks d4_pair(Context& ctx) {
  Checks c;
  const Spectrum& s1 = ctx.d4_quotient_spectrum("R1", 25);
  const Spectrum& s2 = ctx.d4_quotient_spectrum("R2", 25);
  Leading l = compare_leading(s1, s2, 25);
  c.require(l.ok, "first 25 of Gamma/R1 and Gamma/R2 agree");
  c.note(leading_note("R1 vs R2", l));
  return c;
}

// Criterion 2
Checks d4_triple(Context& ctx) {
  Checks c;
  const QuotientGraph& q3 = ctx.d4_quotient("R3");
  bool complex_conditions = false;
  for (const Vertex& v : q3.graph.vertices)
    complex_conditions = complex_conditions || v.A.imag().cwiseAbs().maxCoeff() > 0.1 ||
                         v.B.imag().cwiseAbs().maxCoeff() > 0.1;
  c.require(complex_conditions, "Gamma/R3 carries complex vertex conditions");
  const Spectrum& s3 = ctx.d4_quotient_spectrum("R3", 25);
  for (const char* other : {"R1", "R2"}) {
    Leading l = compare_leading(s3, ctx.d4_quotient_spectrum(other, 25), 25);
    c.require(l.ok, std::string("Gamma/R3 matches Gamma/") + other);
    c.note(leading_note(std::string("R3 vs ") + other, l));
  }
  return c;
}

// Criterion 3
Checks quotient_definition(Context& ctx) {
  Checks c;
  double k = 0.0;
  for (const char* rep : {"R1", "R2", "R3"})
    k = std::max(k, ctx.d4_quotient_spectrum(rep, 15).k_max);
  Spectrum parent = eigenvalues(ctx.d4().graph, k);
  c.note("parent scanned to k=" + fmt(k) + ", " + std::to_string(parent.count()) + " eigenvalues");
  for (const char* rep : {"R1", "R2", "R3"}) {
    const QuotientGraph& q = ctx.d4_quotient(rep);
    Spectrum rs = r_spectrum(q.parent, q.action, q.rep, parent);
    Spectrum qs = eigenvalues(q.graph, k);
    SpectrumComparison cmp = compare_spectra(qs, rs, kTolK);
    c.require(cmp.match && qs.count() >= 15 && rs.warnings.empty(),
              std::string("R-spectrum equals the spectrum of Gamma/") + rep);
    c.note(comparison_note(rep, cmp));
  }
  return c;
}

// Criterion 4
Checks theta_family(Context& ctx) {
  Checks c;
  const char* names[] = {"theta=0", "theta=pi/6", "theta=pi/3", "theta=3pi/4"};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) {
      Leading l = compare_leading(ctx.d4_quotient_spectrum(names[i], 20), ctx.d4_quotient_spectrum(names[j], 20), 20);
      c.require(l.ok, std::string(names[i]) + " vs " + names[j]);
    }
  const QuotientGraph& q = ctx.d4_quotient("theta=3pi/4");
  const Vertex& v4 = q.graph.vertices[q.graph.vertex_index("v4")];
  double dist = solution_space_distance_up_to_permutation(mat2(2, 0, 0, 0), mat2(0, 0, 0, 2), v4.A, v4.B);
  c.require(dist < 1e-10, "theta=3pi/4 gives A=[[2,0],[0,0]], B=[[0,0],[0,2]] at v4");
  c.note("six pairs agree on at least 20 eigenvalues; v4 distance " + fmt(dist));
  return c;
}

// Criterion 5
Checks golden_conditions(Context& ctx) {
  Checks c;
  const double r3 = std::sqrt(3.0), r2 = std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  double worst = 0.0;
  auto at_vertex = [&](const QuotientGraph& q, const std::string& id, const CMatrix& a, const CMatrix& b,
                       const std::string& what) {
    const Vertex& v = q.graph.vertices[q.graph.vertex_index(id)];
    double d = solution_space_distance_up_to_permutation(a, b, v.A, v.B);
    worst = std::max(worst, d);
    c.require(d < 1e-10, what);
  };
  auto somewhere = [&](const QuotientGraph& q, const CMatrix& a, const CMatrix& b, const std::string& what) {
    double best = 1.0;
    for (const Vertex& v : q.graph.vertices)
      if (v.degree() == a.cols())
        best = std::min(best, solution_space_distance_up_to_permutation(a, b, v.A, v.B));
    worst = std::max(worst, best);
    c.require(best < 1e-10, what);
  };

  const QuotientGraph& qr = ctx.d4_quotient("R-pi/3");
  at_vertex(qr, "v4", mat2(1 - r3 / 2, 0.5, 0, 0), mat2(0, 0, -1 - r3 / 2, 0.5), "merged vertex v4");
  for (const char* id : {"v1", "v2"})
    at_vertex(qr, id, mat2(1.5, r3 / 2, 0, 0), mat2(0, 0, -0.5, r3 / 2), std::string("vertex ") + id);

  somewhere(ctx.d4_quotient("R3"), mat2(1, -i, 0, 0), mat2(0, 0, 1, i), "Gamma/R3 merged vertex");

  CatalogEntry t = tetrahedron_graph();
  QuotientGraph perm = build_quotient(quotient_spec(t, "perm"));
  // The trivial-component copy decouples with a Neumann end next to the
  // expected 2x2 block.
  CMatrix a = CMatrix::Zero(3, 3), b = CMatrix::Zero(3, 3);
  b(0, 0) = 1;
  a.block(1, 1, 2, 2) = mat2(r2, -1, 0, 0);
  b.block(1, 1, 2, 2) = mat2(0, 0, 1, r2);
  at_vertex(perm, "v1", a, b, "tetrahedron quotient corner");

  CatalogEntry cay = d4_cayley_graph();
  CMatrix ca = CMatrix::Zero(4, 4), cb = CMatrix::Zero(4, 4);
  ca << 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0;
  cb.row(3) << 1, -1, -1, -1;
  somewhere(build_quotient(quotient_spec(cay, "R1")), ca, cb, "Cayley graph quotient by R1");
  c.note("largest subspace distance " + fmt(worst));
  return c;
}

// Criterion 6
Checks induced_character_from_h1() {
  Checks c;
  GroupPtr g = make_dihedral(4);
  const FiniteGroup& d4 = *g;
  Subgroup h1 = subgroup_generated(g, {d4.element("t"), d4.element("ts^2")});
  MatrixRep r1 = rep_from_generators(h1, {d4.element("t"), d4.element("ts^2")},
                                     {CMatrix::Constant(1, 1, -1.0), CMatrix::Constant(1, 1, 1.0)});
  Character ind = induced_character(character(r1));
  const std::vector<std::string> classes = {"e", "s", "s^2", "t", "ts"};
  const std::vector<double> expected = {2, 0, -2, 0, 0};
  std::string got;
  for (size_t k = 0; k < classes.size(); ++k) {
    cplx v = ind(d4.element(classes[k]));
    c.require(v == cplx(expected[k]), "value at " + classes[k]);
    got += (k ? "," : "") + fmt(v.real());
  }
  c.note("character (" + got + ")");
  return c;
}

MatrixRep random_rep(const IrrepTable& table, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(table.irreps.size()) - 1);
  std::uniform_int_distribution<int> terms(1, 3);
  std::vector<MatrixRep> parts;
  for (int n = terms(rng); n > 0; --n)
    parts.push_back(table.irreps[pick(rng)]);
  MatrixRep sum = direct_sum(parts);
  std::normal_distribution<double> nd(0.0, 0.3);
  CMatrix s = CMatrix::Identity(sum.dim(), sum.dim());
  for (int i = 0; i < sum.dim(); ++i)
    for (int j = 0; j < sum.dim(); ++j)
      s(i, j) += cplx(nd(rng), nd(rng));
  return change_basis(sum, s, "random");
}

// Criterion 7
Checks frobenius(unsigned seed) {
  Checks c;
  std::mt19937 rng(seed);
  std::vector<IrrepTable> tables = {irreps_cyclic(6), irreps_dihedral(3), irreps_dihedral(4), irreps_dihedral(5),
                                    irreps_symmetric(3), irreps_symmetric(4), builtin_irreps(builtin_group("D4xD4"))};
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const IrrepTable& t = tables[std::uniform_int_distribution<size_t>(0, tables.size() - 1)(rng)];
    std::uniform_int_distribution<int> el(0, t.group->order() - 1);
    std::vector<int> gens = {el(rng)};
    if (rng() % 2)
      gens.push_back(el(rng));
    Subgroup h = subgroup_generated(t.group, gens);
    MatrixRep r1 = random_rep(t, rng);
    MatrixRep r2 = restrict(random_rep(t, rng), h);
    cplx lhs = char_inner(character(restrict(r1, h)), character(r2));
    cplx rhs = char_inner(character(r1), character(induce(r2)));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  c.require(worst < 1e-10, "reciprocity on 100 draws");
  c.note("largest deviation " + fmt(worst) + " (seed " + std::to_string(seed) + ")");
  return c;
}

// Criterion 8
Checks tetrahedron() {
  Checks c;
  const double l = 1.0;
  CatalogEntry t = tetrahedron_graph(l);
  QuotientGraph sign = build_quotient(quotient_spec(t, "sign"));
  c.require(sign.graph.empty(), "Gamma/S is empty");
  QuotientGraph perm = build_quotient(quotient_spec(t, "perm"));
  Spectrum qs = spectrum_with(perm.graph, 15);
  const double k = std::max(20.0 / l, qs.k_max);
  Spectrum parent = eigenvalues(t.graph, k);
  Spectrum ss = r_spectrum(t.graph, t.action, sign.rep, parent);
  int sign_mult = 0;
  for (const SpectrumEntry& e : ss.entries)
    if (e.k <= 20.0 / l)
      sign_mult += e.multiplicity;
  c.require(sign_mult == 0 && ss.warnings.empty(), "sign multiplicity vanishes for k <= 20/l");
  Spectrum ps = r_spectrum(t.graph, t.action, perm.rep, parent);
  Leading lead = compare_leading(qs, ps, 15);
  c.require(lead.ok, "permutation quotient spectrum equals its R-spectrum");
  c.note(std::to_string(parent.count()) + " parent eigenvalues below k=" + fmt(k) + "; " + leading_note("perm", lead));
  return c;
}

// Criterion 9
Checks self_adjointness() {
  Checks c;
  int total = 0, predicted = 0;
  for (const std::string& id : catalog_ids()) {
    CatalogEntry e = catalog_entry(id);
    for (const CatalogRep& r : e.reps) {
      SelfAdjointPrediction p = check_quotient_self_adjoint(quotient_spec(e, r));
      ++total;
      if (p.predicted)
        ++predicted;
      c.require(p.consistent, id + "/" + r.name + " prediction agrees with the built quotient");
      if (id == "z2-star") {
        c.require(p.predicted.has_value() && !*p.predicted && !p.built_self_adjoint,
                  "counterexample quotient is predicted and found non-self-adjoint");
      }
    }
  }
  c.note(std::to_string(total) + " quotients, " + std::to_string(predicted) + " with a definite prediction");
  return c;
}

// Criterion 10
Checks d3_free() {
  Checks c;
  CatalogEntry e = d3_triangle_graph();
  c.require(is_free(e.graph, e.action).free_on_edges && is_free(e.graph, e.action).free_on_vertices,
            "D3 acts freely");
  std::map<std::string, Spectrum> part;
  const int n = 25;
  for (const char* name : {"family1", "family2"}) {
    QuotientGraph q = build_quotient(quotient_spec(e, name));
    for (const Vertex& v : q.graph.vertices)
      c.require(v.degree() == 0 || neumann_partition(v.A, v.B).has_value(),
                std::string(name) + " vertex " + v.id + " is Neumann-equivalent");
    part[name] = spectrum_with(q.graph, n);
  }
  Leading fam = compare_leading(part["family1"], part["family2"], n);
  c.require(fam.ok, "the two families are isospectral");
  c.note(leading_note("families", fam));

  const double k = std::min(part["family1"].k_max, part["family2"].k_max);
  std::map<std::string, Spectrum> blocks;
  for (const char* name : {"regular", "trivial", "ind<s>", "ind<t>"})
    blocks[name] = eigenvalues(build_quotient(quotient_spec(e, name)).graph, k);
  SpectrumComparison u1 =
      compare_spectra(merge_spectra({blocks["regular"], blocks["trivial"], blocks["trivial"]}), part["family1"], kTolK);
  SpectrumComparison u2 =
      compare_spectra(merge_spectra({blocks["ind<t>"], blocks["ind<t>"], blocks["ind<s>"]}), part["family2"], kTolK);
  c.require(u1.match && u2.match, "union of the block quotients equals the quotient by the sum");
  c.note(comparison_note("union of blocks, first family", u1));
  c.note(comparison_note("second family", u2));
  return c;
}

bool half_sqrt2_pattern(const TransplantMap& m, double tol) {
  const double h = 1.0 / std::sqrt(2.0);
  if (max_norm(m.reversed) > tol)
    return false;
  for (int r = 0; r < m.direct.rows(); ++r) {
    int support = 0;
    for (int s = 0; s < m.direct.cols(); ++s) {
      cplx v = m.direct(r, s);
      if (std::abs(v) < tol)
        continue;
      if (std::abs(v.imag()) > tol || std::abs(std::abs(v.real()) - h) > tol)
        return false;
      ++support;
    }
    if (support != 2)
      return false;
  }
  return true;
}

// Criterion 11
Checks transplantation(Context& ctx) {
  Checks c;
  const CatalogEntry& e = ctx.d4();
  TransplantReport basis = verify_transplant(
      basis_change_transplant(ctx.d4_quotient("theta=0"), ctx.d4_quotient("theta=3pi/4")), 10);
  c.require(basis.ok && basis.checked == 10, "theta family basis change");

  CatalogEntry cube = cube_graph();
  QuotientSpec spec = resolve_spec(quotient_spec(cube, "R1"));
  const std::vector<int>& o = spec.rep.domain().elements;
  std::vector<int> moves;
  for (size_t i = 0; i < spec.edge_reps.size(); ++i)
    moves.push_back(o[(5 * i + 7) % o.size()]);
  TransplantReport reps = verify_transplant(
      representative_change_transplant(build_quotient(spec), build_quotient(move_representatives(spec, moves)), moves),
      10);
  c.require(reps.ok && reps.checked == 10, "cube representative change");

  const MatrixRep& r1 = e.rep("R1").rep;
  const MatrixRep& r2 = e.rep("R2").rep;
  CosetDecomposition c1 = left_cosets(r1.domain()), c2 = left_cosets(r2.domain());
  auto [sub1, ind1] = induction_specs(e.graph, e.action, r1, c1);
  auto [sub2, ind2] = induction_specs(e.graph, e.action, r2, c2);
  QuotientGraph qs1 = build_quotient(sub1), qi1 = build_quotient(ind1);
  QuotientGraph qs2 = build_quotient(sub2), qi2 = build_quotient(ind2);
  CMatrix s = (mat2(1, 1, -1, 1) / std::sqrt(2.0)).inverse();
  TransplantMap total = compose(compose(induction_transplant(qs1, qi1, c1), basis_change_transplant(qi1, qi2, s)),
                                inverse(induction_transplant(qs2, qi2, c2)));
  TransplantReport ind = verify_transplant(total, 10);
  c.require(ind.ok && ind.checked == 10, "D4 induction transplant");
  c.require(half_sqrt2_pattern(total, 1e-12) && half_sqrt2_pattern(inverse(total), 1e-12),
            "coefficients are +-1/sqrt2 with two terms per edge");
  for (const auto& [label, r] : {std::pair<const char*, const TransplantReport&>{"basis", basis}, {"reps", reps},
                                 {"induction", ind}}) {
    double res = 0.0;
    for (const TransplantCheck& t : r.eigenvalues)
      res = std::max(res, t.max_residual);
    c.note(std::string(label) + " residual " + fmt(res));
  }
  return c;
}

// Criterion 12
Checks drum_identities() {
  Checks c;
  GroupPtr d4 = make_dihedral(4);
  const FiniteGroup& g = *d4;
  Subgroup h1 = subgroup_generated(d4, {g.element("t"), g.element("ts^2")});
  Subgroup h2 = subgroup_generated(d4, {g.element("ts"), g.element("ts^3")});
  MatrixRep r1 = rep_from_generators(h1, {g.element("t"), g.element("ts^2")},
                                     {CMatrix::Constant(1, 1, -1.0), CMatrix::Constant(1, 1, 1.0)});
  MatrixRep r2 = rep_from_generators(h2, {g.element("ts"), g.element("ts^3")},
                                     {CMatrix::Constant(1, 1, 1.0), CMatrix::Constant(1, 1, -1.0)});
  GroupPtr prod = direct_product(d4, d4);
  std::vector<Character> torus;
  for (const MatrixRep* a : {&r1, &r2})
    for (const MatrixRep* b : {&r1, &r2})
      torus.push_back(character(induce(tensor_product(*a, *b, prod))));
  for (size_t i = 1; i < torus.size(); ++i)
    c.require(characters_equal(torus[0], torus[i]), "D4 x D4 induction " + std::to_string(i + 1));

  CatalogEntry cube = cube_graph();
  c.require(characters_equal(character(induce(cube.rep("R1").rep)), character(induce(cube.rep("R2").rep))),
            "cube inductions from O and Td");

  CatalogEntry tri = d3_triangle_graph();
  IrrepTable t = irreps_dihedral(3);
  const std::vector<std::pair<std::string, std::vector<int>>> remark = {
      {"1", {1, 1, 2}}, {"<s>", {1, 1, 0}}, {"<t>", {1, 0, 1}}};
  c.require(decompose(induce(trivial_rep(whole_group(tri.action.group))), t) == std::vector<int>{1, 0, 0},
            "Ind from D3 of 1 is S1");
  for (const auto& [name, expected] : remark) {
    Character ind = character(induce(trivial_rep(tri.subgroup(name))));
    std::vector<MatrixRep> parts;
    for (size_t k = 0; k < expected.size(); ++k)
      for (int m = 0; m < expected[k]; ++m)
        parts.push_back(t.irreps[k]);
    c.require(characters_equal(ind, character(direct_sum(parts))), "Ind from " + name + " of 1");
  }
  c.note("4 torus inductions, cube pair and 4 D3 identities compared by character");
  return c;
}

// Criterion 13
Checks solver_soundness() {
  Checks c;
  const double l = 1.3, pi = std::numbers::pi;
  double worst = 0.0;
  for (int kind = 0; kind < 3; ++kind) {
    GraphBuilder b;
    int u = b.add_vertex("u"), v = b.add_vertex("v");
    b.add_edge("e", u, v, l);
    if (kind != 1)
      b.set_dirichlet(u);
    if (kind == 0)
      b.set_dirichlet(v);
    std::vector<double> exact;
    for (int n = 0; exact.size() < 10; ++n) {
      if (kind == 0 && n > 0)
        exact.push_back(n * pi / l);
      if (kind == 1)
        exact.push_back(n * pi / l);
      if (kind == 2)
        exact.push_back((n + 0.5) * pi / l);
    }
    Spectrum s = eigenvalues(b.build(), exact.back() + 0.5 * pi / l);
    std::vector<double> flat = s.flat();
    bool ok = flat.size() == exact.size();
    for (size_t i = 0; ok && i < flat.size(); ++i) {
      worst = std::max(worst, std::abs(flat[i] - exact[i]));
      ok = std::abs(flat[i] - exact[i]) < 1e-10;
    }
    const char* names[] = {"Dirichlet", "Neumann", "mixed"};
    c.require(ok, std::string(names[kind]) + " interval spectrum");
  }
  c.note("interval error " + fmt(worst));

  for (const std::string& id : catalog_ids()) {
    CatalogEntry e = catalog_entry(id);
    // about twenty eigenvalues of the parent, fewer on the large cube graph
    const int n = e.graph.edge_count() > 50 ? 8 : 20;
    const double k = std::numbers::pi * n / e.graph.total_length();
    Spectrum a = eigenvalues(e.graph, k);
    Spectrum b = eigenvalues(add_dummy_vertex(e.graph, e.graph.edge_count() - 1, 0.37), k);
    SpectrumComparison cmp = compare_spectra(a, b, kTolK);
    c.require(cmp.match && a.count() > 0, "dummy vertex leaves the spectrum of " + id + " unchanged");
  }

  CatalogEntry e = d4_square_graph();
  const double k = 12.0;
  SpectralOptions coarse;
  coarse.oversample = 1;
  coarse.winding_check = false;
  Spectrum fine = eigenvalues(e.graph, k);
  Spectrum poor = eigenvalues(e.graph, k, coarse);
  WeylReport wf = weyl_check(e.graph, fine), wp = weyl_check(e.graph, poor);
  c.require(wf.ok, "Weyl count accepts the full scan");
  c.require(!wp.ok, "Weyl count flags the under-sampled scan");
  c.note("Weyl counts " + std::to_string(wf.counted) + " and " + std::to_string(wp.counted) + " against " +
         fmt(wf.predicted, 4) + " +- " + fmt(wf.allowance));
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& report) {
  Context ctx;
  struct Item {
    int id;
    const char* title;
    std::function<Checks()> run;
  };
  const std::vector<Item> items = {
      {1, "D4 isospectral pair", [&] { return d4_pair(ctx); }},
      {2, "complex quotient joins the pair", [&] { return d4_triple(ctx); }},
      {3, "quotient spectra equal R-spectra", [&] { return quotient_definition(ctx); }},
      {4, "theta family", [&] { return theta_family(ctx); }},
      {5, "golden vertex conditions", [&] { return golden_conditions(ctx); }},
      {6, "induced character from H1", [] { return induced_character_from_h1(); }},
      {7, "Frobenius reciprocity", [&] { return frobenius(opts.seed); }},
      {8, "tetrahedron", [] { return tetrahedron(); }},
      {9, "self-adjointness predictions", [] { return self_adjointness(); }},
      {10, "free D3 action", [] { return d3_free(); }},
      {11, "transplantation", [&] { return transplantation(ctx); }},
      {12, "induction identities", [] { return drum_identities(); }},
      {13, "solver soundness", [] { return solver_soundness(); }},
  };
  std::set<int> wanted(opts.only.begin(), opts.only.end());
  if (opts.quick && wanted.empty())
    wanted = {1};
  std::vector<CriterionResult> out;
  for (const Item& it : items) {
    if (!wanted.empty() && !wanted.count(it.id))
      continue;
    CriterionResult r{it.id, it.title, false, "", 0.0};
    auto start = std::chrono::steady_clock::now();
    try {
      Checks c = it.run();
      r.pass = c.ok;
      r.detail = c.detail();
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report)
      report(r);
    out.push_back(r);
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title << "  (" << r.detail << ", "
    << std::fixed << std::setprecision(1) << r.seconds << " s)";
  return s.str();
}

}  // namespace isograph

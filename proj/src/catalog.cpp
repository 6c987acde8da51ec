#include "isograph/catalog.hpp"

#include <cmath>
#include <numbers>

#include "isograph/irreps.hpp"

namespace isograph {

namespace {

constexpr double kMatchTol = 1e-9;

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs)
    v(i++) = x;
  return v;
}

void require_positive(const std::vector<double>& xs, const std::string& what) {
  for (double x : xs)
    if (!(x > 0.0) || !std::isfinite(x))
      throw InputError(what + ": lengths must be positive");
}

CMatrix scalar(cplx z) { return CMatrix::Constant(1, 1, z); }

CMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = static_cast<Eigen::Index>(rows.begin()->size());
  CMatrix m(r, c);
  Eigen::Index i = 0;
  for (auto row : rows) {
    Eigen::Index j = 0;
    for (double x : row)
      m(i, j++) = x;
    ++i;
  }
  return m;
}

std::vector<Eigen::MatrixXd> dihedral_plane_matrices(int n) {
  const double a = 2.0 * std::numbers::pi / n;
  Eigen::Matrix2d r;
  r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  Eigen::Matrix2d t;
  t << 1, 0, 0, -1;
  std::vector<Eigen::MatrixXd> m(2 * n);
  Eigen::Matrix2d p = Eigen::Matrix2d::Identity();
  for (int k = 0; k < n; ++k) {
    m[k] = p;
    m[n + k] = t * p;
    p = p * r;
  }
  return m;
}

}  // namespace

const CatalogRep& CatalogEntry::rep(const std::string& name) const {
  for (const CatalogRep& r : reps)
    if (r.name == name)
      return r;
  throw InputError("catalog entry " + id + " has no representation '" + name + "'");
}

const Subgroup& CatalogEntry::subgroup(const std::string& name) const {
  for (const NamedSubgroup& s : subgroups)
    if (s.name == name)
      return s.subgroup;
  throw InputError("catalog entry " + id + " has no subgroup '" + name + "'");
}

SymmetricGraphBuilder::SymmetricGraphBuilder(GroupPtr group, std::vector<Eigen::MatrixXd> matrices)
    : group_(std::move(group)), mats_(std::move(matrices)) {
  if (static_cast<int>(mats_.size()) != group_->order())
    throw InputError("one matrix per group element required");
}

int SymmetricGraphBuilder::find_vertex(const Eigen::VectorXd& p) const {
  for (size_t i = 0; i < vpos_.size(); ++i)
    if ((vpos_[i] - p).norm() < kMatchTol)
      return static_cast<int>(i);
  return -1;
}

int SymmetricGraphBuilder::find_edge(const Eigen::VectorXd& interior) const {
  for (size_t i = 0; i < epos_.size(); ++i)
    if ((epos_[i] - interior).norm() < kMatchTol)
      return static_cast<int>(i);
  return -1;
}

void SymmetricGraphBuilder::add_vertex_orbit(const std::string& id, const Eigen::VectorXd& point) {
  for (int x = 0; x < group_->order(); ++x) {
    Eigen::VectorXd p = mats_[x] * point;
    if (find_vertex(p) >= 0)
      continue;
    vpos_.push_back(p);
    std::string name = x == group_->identity() ? id : id + ":" + group_->name(x);
    g_.vertices.push_back(Vertex{name, {}, {}, {}});
  }
}

void SymmetricGraphBuilder::add_edge_orbit(const std::string& id, const Eigen::VectorXd& tail,
                                           const Eigen::VectorXd& head, const Eigen::VectorXd& interior,
                                           double length) {
  for (int x = 0; x < group_->order(); ++x) {
    Eigen::VectorXd m = mats_[x] * interior;
    if (find_edge(m) >= 0)
      continue;
    int t = find_vertex(mats_[x] * tail);
    int h = find_vertex(mats_[x] * head);
    if (t < 0 || h < 0)
      throw InputError("edge " + id + " ends at a point that is not a vertex");
    epos_.push_back(m);
    std::string name = x == group_->identity() ? id : id + ":" + group_->name(x);
    g_.edges.push_back(Edge{name, t, h, length});
  }
}

MetricGraph SymmetricGraphBuilder::graph() const {
  GraphBuilder b;
  for (const Vertex& v : g_.vertices)
    b.add_vertex(v.id);
  for (const Edge& e : g_.edges)
    b.add_edge(e.id, e.tail, e.head, e.length);
  return b.build();
}

GraphAction SymmetricGraphBuilder::action() const {
  GraphAction a;
  a.group = group_;
  const int n = group_->order();
  a.vertex_perm.assign(n, std::vector<int>(vpos_.size()));
  a.edge_map.assign(n, std::vector<EdgeImage>(epos_.size()));
  for (int x = 0; x < n; ++x) {
    for (size_t v = 0; v < vpos_.size(); ++v) {
      int w = find_vertex(mats_[x] * vpos_[v]);
      if (w < 0)
        throw InputError("vertex set is not closed under the group");
      a.vertex_perm[x][v] = w;
    }
    for (size_t e = 0; e < epos_.size(); ++e) {
      int f = find_edge(mats_[x] * epos_[e]);
      if (f < 0)
        throw InputError("edge set is not closed under the group");
      int tail_image = a.vertex_perm[x][g_.edges[e].tail];
      a.edge_map[x][e] = {f, g_.edges[f].tail == tail_image ? 1 : -1};
    }
  }
  return a;
}

MatrixRep d4_theta_rep(const GroupPtr& d4, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  CMatrix ts2 = real_matrix({{c * c - s * s, -2 * c * s}, {-2 * c * s, -c * c + s * s}});
  CMatrix ts3 = real_matrix({{2 * c * s, c * c - s * s}, {c * c - s * s, -2 * c * s}});
  return rep_from_generators(whole_group(d4), {d4->element("ts^2"), d4->element("ts^3")}, {ts2, ts3},
                             "theta = " + std::to_string(theta));
}

namespace {

void add_d4_reps(CatalogEntry& e, const GroupPtr& d4) {
  const int t = d4->element("t"), s = d4->element("s");
  const int ts = d4->element("ts"), ts2 = d4->element("ts^2"), ts3 = d4->element("ts^3");
  Subgroup h1 = subgroup_generated(d4, {t, ts2});
  Subgroup h2 = subgroup_generated(d4, {ts, ts3});
  Subgroup h3 = subgroup_generated(d4, {s});
  e.subgroups = {{"G", whole_group(d4)}, {"H1", h1}, {"H2", h2}, {"H3", h3}};
  e.reps.push_back({"R1", rep_from_generators(h1, {t, ts2}, {scalar(-1.0), scalar(1.0)}, "R1"), {}, false, {}, {}, ""});
  e.reps.push_back({"R2", rep_from_generators(h2, {ts, ts3}, {scalar(1.0), scalar(-1.0)}, "R2"), {}, false, {}, {}, ""});
  e.reps.push_back({"R3", rep_from_generators(h3, {s}, {scalar(cplx(0.0, 1.0))}, "R3"), {}, false, {}, {}, ""});
  e.reps.push_back({"R", rep_from_generators(whole_group(d4), {s, t},
                                             {real_matrix({{0, 1}, {-1, 0}}), real_matrix({{-1, 0}, {0, 1}})},
                                             "first orthogonal form"),
                    {}, false, {}, {}, "2-dimensional irrep"});
  e.reps.push_back({"R-pi/3", d4_theta_rep(d4, std::numbers::pi / 3), {}, false, {}, {}, "second orthogonal form"});
  CMatrix sig(2, 2), tau(2, 2);
  sig << cplx(0, 1), 0, 0, cplx(0, -1);
  tau << 0, -1, -1, 0;
  e.reps.push_back({"R-complex", rep_from_generators(whole_group(d4), {s, t}, {sig, tau}, "diagonal rotation"),
                    {}, false, {}, {}, "unitary form giving the R3 quotient"});
  e.reps.push_back({"trivial", trivial_rep(whole_group(d4)), {}, false, {}, {}, ""});
}

}  // namespace

CatalogEntry d4_square_graph(double a, double b, double c) {
  require_positive({a, b, c}, "d4-square");
  GroupPtr d4 = make_dihedral(4);
  SymmetricGraphBuilder sb(d4, dihedral_plane_matrices(4));
  Eigen::VectorXd w0 = vec({0.4, 1.2}), v1 = vec({0.0, 1.0}), v2 = vec({0.0, 2.0}), v4 = vec({1.5, 1.5});
  sb.add_vertex_orbit("w0", w0);
  sb.add_vertex_orbit("v1", v1);
  sb.add_vertex_orbit("v2", v2);
  sb.add_vertex_orbit("v4", v4);
  sb.add_edge_orbit("a", w0, v1, (w0 + v1) / 2, a);
  sb.add_edge_orbit("b", w0, v2, (w0 + v2) / 2, b);
  sb.add_edge_orbit("c", w0, v4, (w0 + v4) / 2, c);
  CatalogEntry e;
  e.id = "d4-square";
  e.params = {a, b, c};
  e.graph = sb.graph();
  e.action = sb.action();
  add_d4_reps(e, d4);
  // A rotation quotient needs a quarter of the square: the eighth of w0
  // and its mirror image across the vertical axis.
  for (CatalogRep& r : e.reps)
    if (r.name == "R3") {
      r.edge_reps = {"a", "b", "c", "a:ts^2", "b:ts^2", "c:ts^2"};
      r.vertex_reps = {"w0", "w0:ts^2", "v1", "v2", "v4"};
    }
  const double pi = std::numbers::pi;
  for (auto [name, th] : {std::pair{"theta=0", 0.0}, {"theta=pi/6", pi / 6}, {"theta=pi/3", pi / 3},
                          {"theta=3pi/4", 3 * pi / 4}})
    e.reps.push_back({name, d4_theta_rep(d4, th), {}, false, {}, {}, "orthogonal family"});
  e.notes = "square-symmetric graph: 20 vertices, 24 edges in three orbits of eight";
  return e;
}

CatalogEntry d4_cayley_graph(double sigma_length, double tau_length) {
  require_positive({sigma_length, tau_length}, "d4-cayley");
  GroupPtr d4 = make_dihedral(4);
  const int n = d4->order();
  const int gens[2] = {d4->element("s"), d4->element("t")};
  const double lengths[2] = {sigma_length, tau_length};
  GraphBuilder b;
  for (int x = 0; x < n; ++x)
    b.add_vertex(d4->name(x));
  // edge index 2 * x + k is (x, x s_k)
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < 2; ++k) {
      int y = d4->mul(x, gens[k]);
      b.add_edge("(" + d4->name(x) + "," + d4->name(y) + ")", x, y, lengths[k]);
    }
  CatalogEntry e;
  e.id = "d4-cayley";
  e.params = {sigma_length, tau_length};
  e.graph = b.build();
  e.action.group = d4;
  e.action.vertex_perm.assign(n, std::vector<int>(n));
  e.action.edge_map.assign(n, std::vector<EdgeImage>(2 * n));
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x) {
      e.action.vertex_perm[h][x] = d4->mul(h, x);
      for (int k = 0; k < 2; ++k)
        e.action.edge_map[h][2 * x + k] = {2 * d4->mul(h, x) + k, 1};
    }
  add_d4_reps(e, d4);
  for (CatalogRep& r : e.reps) {
    if (r.name == "R1" || r.name == "R2") {
      r.edge_reps = {"(e,s)", "(s^3,e)", "(e,t)", "(s,ts^3)"};
      r.vertex_reps = {"e", "s"};
    } else if (r.name == "R3") {
      r.edge_reps = {"(e,s)", "(ts^3,t)", "(t,e)", "(e,t)"};
      r.vertex_reps = {"e", "t"};
    }
  }
  e.notes = "Cayley graph of D4 for generators s, t with one directed edge (g, g s) per pair";
  return e;
}

CatalogEntry tetrahedron_graph(double l) {
  require_positive({l}, "tetrahedron");
  GroupPtr s4 = make_symmetric(4);
  MatrixRep perm = permutation_rep(s4);
  std::vector<Eigen::MatrixXd> mats;
  for (int x = 0; x < s4->order(); ++x)
    mats.push_back(perm(x).real());
  SymmetricGraphBuilder sb(s4, mats);
  Eigen::VectorXd v1 = vec({1, 0, 0, 0}), v5 = vec({0.5, 0.5, 0, 0});
  sb.add_vertex_orbit("v1", v1);
  sb.add_vertex_orbit("v5", v5);
  sb.add_edge_orbit("e1", v1, v5, (v1 + v5) / 2, l / 2);
  CatalogEntry e;
  e.id = "tetrahedron";
  e.params = {l};
  e.graph = sb.graph();
  e.action = sb.action();
  e.subgroups = {{"G", whole_group(s4)},
                 {"S3", subgroup_generated(s4, {s4->element("(2 3)"), s4->element("(2 3 4)")})}};
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix adapted = real_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, r, r}, {0, 0, r, -r}});
  e.reps.push_back({"sign", sign_rep(s4), {}, false, {}, {}, ""});
  e.reps.push_back({"perm", perm, adapted, true, {}, {}, "basis adapted to the stabilizer of e1"});
  e.reps.push_back({"trivial", trivial_rep(whole_group(s4)), {}, false, {}, {}, ""});
  e.notes = "equilateral tetrahedron with midpoint vertices; S4 permutes the corners";
  return e;
}

CatalogEntry cube_graph(double a, double b, double c) {
  require_positive({a, b, c}, "cube");
  Eigen::MatrixXd r4(3, 3), r3(3, 3), inv = -Eigen::MatrixXd::Identity(3, 3);
  r4 << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  r3 << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  std::vector<Eigen::MatrixXd> mats;
  GroupPtr oh = group_from_matrices({r4, r3, inv}, &mats, {"r4", "r3", "i"});
  SymmetricGraphBuilder sb(oh, mats);
  Eigen::VectorXd p = vec({0.75, 0.5, 0.25});
  Eigen::VectorXd pxy = vec({0.5, 0.75, 0.25}), pyz = vec({0.75, 0.25, 0.5}), pz = vec({0.75, 0.5, -0.25});
  sb.add_vertex_orbit("p", p);
  sb.add_edge_orbit("a", p, pxy, (p + pxy) / 2, 2 * a);
  sb.add_edge_orbit("b", p, pyz, (p + pyz) / 2, 2 * b);
  sb.add_edge_orbit("c", p, pz, (p + pz) / 2, 2 * c);
  CatalogEntry e;
  e.id = "cube";
  e.params = {a, b, c};
  e.graph = sb.graph();
  e.action = sb.action();

  std::vector<int> rot, td;
  for (int x = 0; x < oh->order(); ++x) {
    if (mats[x].determinant() > 0)
      rot.push_back(x);
    double prod = 1.0;
    for (int i = 0; i < 3; ++i)
      prod *= mats[x].row(i).sum();
    if (prod > 0)
      td.push_back(x);
  }
  Subgroup o = make_subgroup(oh, rot), tdg = make_subgroup(oh, td);
  e.subgroups = {{"Oh", whole_group(oh)}, {"O", o}, {"Td", tdg}};
  // The axis permutation of a signed permutation matrix, seen on the plane
  // of coordinate-sum zero.
  CMatrix q(3, 2);
  q << 1 / std::sqrt(2.0), 1 / std::sqrt(6.0), -1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 0, -2 / std::sqrt(6.0);
  std::vector<CMatrix> axis(oh->order());
  for (int x = 0; x < oh->order(); ++x)
    axis[x] = q.adjoint() * mats[x].cwiseAbs().cast<cplx>() * q;
  MatrixRep full(whole_group(oh), axis, "axis permutation");
  e.reps.push_back({"R1", restrict(full, o), {}, false, {}, {}, "2-dimensional irrep of O"});
  e.reps.push_back({"R2", restrict(full, tdg), {}, false, {}, {}, "2-dimensional irrep of Td"});
  e.reps.push_back({"E", full, {}, false, {}, {}, "axis permutation rep of Oh"});
  e.notes = "48 three-edge stars, one per tetrahedral cell of the cube, joined across interior faces";
  return e;
}

CatalogEntry d3_triangle_graph(double a, double b, double c, double loop) {
  require_positive({a, b, c, loop}, "d3-triangle");
  GroupPtr d3 = make_dihedral(3);
  std::vector<Eigen::MatrixXd> mats(6);
  const double ang = 2.0 * std::numbers::pi / 3.0;
  Eigen::Matrix3d r, t;
  r << std::cos(ang), -std::sin(ang), 0, std::sin(ang), std::cos(ang), 0, 0, 0, 1;
  t << -1, 0, 0, 0, 1, 0, 0, 0, -1;
  Eigen::Matrix3d pw = Eigen::Matrix3d::Identity();
  for (int k = 0; k < 3; ++k) {
    mats[k] = pw;
    mats[3 + k] = t * pw;
    pw = pw * r;
  }
  const double h = 0.3;
  Eigen::Vector3d c0(0, 1, 0);
  Eigen::Vector3d c1 = r * c0;
  Eigen::VectorXd u = c0 + Eigen::Vector3d(0, 0, h);
  Eigen::VectorXd u1 = c1 + Eigen::Vector3d(0, 0, h);
  Eigen::VectorXd lower = c0 - Eigen::Vector3d(0, 0, h);
  Eigen::VectorXd q = u + 0.3 * (u1 - u), p = u + 0.7 * (u1 - u);
  // the mirror image of p under the half turn swapping c0 and c1 sits
  // below q
  Eigen::VectorXd below_q = q - Eigen::Vector3d(0, 0, 2 * h);
  SymmetricGraphBuilder sb(d3, mats);
  sb.add_vertex_orbit("u", u);
  sb.add_vertex_orbit("q", q);
  sb.add_vertex_orbit("p", p);
  sb.add_edge_orbit("a", u, q, (u + q) / 2, a);
  sb.add_edge_orbit("b", q, p, (q + p) / 2, b);
  sb.add_edge_orbit("c", p, u1, (p + u1) / 2, c);
  sb.add_edge_orbit("loop", u, lower, Eigen::Vector3d(h, 1, 0), loop / 2);
  sb.add_edge_orbit("rung", q, below_q, (q + below_q) / 2, loop);
  CatalogEntry e;
  e.id = "d3-triangle";
  e.params = {a, b, c, loop};
  e.graph = sb.graph();
  e.action = sb.action();
  const int s = d3->element("s"), tt = d3->element("t");
  Subgroup ks = subgroup_generated(d3, {s}), kt = subgroup_generated(d3, {tt});
  e.subgroups = {{"G", whole_group(d3)}, {"<s>", ks}, {"<t>", kt}, {"1", trivial_subgroup(d3)}};
  MatrixRep reg = regular_rep(d3), triv = trivial_rep(whole_group(d3));
  MatrixRep ind_s = induce(trivial_rep(ks)), ind_t = induce(trivial_rep(kt));
  e.reps.push_back({"regular", reg, {}, false, {}, {}, "S1+S2+2S3"});
  e.reps.push_back({"trivial", triv, {}, false, {}, {}, "S1"});
  e.reps.push_back({"ind<s>", ind_s, {}, false, {}, {}, "S1+S2"});
  e.reps.push_back({"ind<t>", ind_t, {}, false, {}, {}, "S1+S3"});
  e.reps.push_back({"family1", direct_sum({reg, triv, triv}), {}, false, {}, {}, "regular + S1 + S1"});
  e.reps.push_back({"family2", direct_sum({ind_t, ind_t, ind_s}), {}, false, {}, {}, "(S1+S3) + (S1+S3) + (S1+S2)"});
  e.notes = "triangle doubled above and below its plane, vertical loops at the corners, rungs on the sides";
  return e;
}

CatalogEntry z2_star_graph(double a, double b) {
  require_positive({a, b}, "z2-star");
  GroupPtr z2 = make_cyclic(2);
  Eigen::MatrixXd flip(2, 2);
  flip << 1, 0, 0, -1;
  SymmetricGraphBuilder sb(z2, {Eigen::MatrixXd::Identity(2, 2), flip});
  Eigen::VectorXd o = vec({0, 0}), p = vec({1, 1}), r = vec({-1, 0});
  sb.add_vertex_orbit("o", o);
  sb.add_vertex_orbit("p", p);
  sb.add_vertex_orbit("r", r);
  sb.add_edge_orbit("a", o, p, (o + p) / 2, a);
  sb.add_edge_orbit("c", o, r, (o + r) / 2, b);
  CatalogEntry e;
  e.id = "z2-star";
  e.params = {a, b};
  e.graph = sb.graph();
  e.action = sb.action();
  e.subgroups = {{"G", whole_group(z2)}};
  e.reps.push_back({"trivial", trivial_rep(whole_group(z2)), {}, false, {}, {}, ""});
  e.notes = "star whose centre is fixed while two of its edges are swapped";
  return e;
}

std::vector<std::string> catalog_ids() {
  return {"d4-square", "d4-cayley", "tetrahedron", "cube", "d3-triangle", "z2-star"};
}

CatalogEntry catalog_entry(const std::string& id, const std::vector<double>& params) {
  auto need = [&](size_t n) {
    if (!params.empty() && params.size() != n)
      throw InputError(id + " takes " + std::to_string(n) + " length parameters");
    return !params.empty();
  };
  if (id == "d4-square")
    return need(3) ? d4_square_graph(params[0], params[1], params[2]) : d4_square_graph();
  if (id == "d4-cayley")
    return need(2) ? d4_cayley_graph(params[0], params[1]) : d4_cayley_graph();
  if (id == "tetrahedron")
    return need(1) ? tetrahedron_graph(params[0]) : tetrahedron_graph();
  if (id == "cube")
    return need(3) ? cube_graph(params[0], params[1], params[2]) : cube_graph();
  if (id == "d3-triangle")
    return need(4) ? d3_triangle_graph(params[0], params[1], params[2], params[3]) : d3_triangle_graph();
  if (id == "z2-star")
    return need(2) ? z2_star_graph(params[0], params[1]) : z2_star_graph();
  throw InputError("unknown catalog id '" + id + "'");
}

QuotientSpec quotient_spec(const CatalogEntry& entry, const std::string& rep_name) {
  return quotient_spec(entry, entry.rep(rep_name));
}

QuotientSpec quotient_spec(const CatalogEntry& entry, const CatalogRep& r) {
  QuotientSpec s{entry.graph, entry.action, r.rep, {}, r.global_basis, {}, {}};
  const Subgroup& h = r.rep.domain();
  if (!quotient_readiness(s.graph, s.action, h).no_edge_reversed)
    std::tie(s.graph, s.action) = ensure_quotient_ready(s.graph, s.action, h);
  OrbitData od = orbits(s.graph, s.action, h);
  std::vector<int> er = od.edge_reps, vr = od.vertex_reps;
  for (const std::string& id : r.edge_reps) {
    int e = s.graph.edge_index(id);
    er[od.edge_orbit_of[e]] = e;
  }
  for (const std::string& id : r.vertex_reps) {
    int v = s.graph.vertex_index(id);
    vr[od.vertex_orbit_of[v]] = v;
  }
  s.edge_reps = er;
  s.vertex_reps = vr;
  if (r.edge_bases_follow_global)
    s.edge_bases.assign(od.edge_orbits.size(), r.global_basis);
  return s;
}

}  // namespace isograph

#include "isograph/quotient.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "isograph/linalg.hpp"

namespace isograph {

namespace {

std::vector<int> reorder_reps(const std::vector<int>& given, const std::vector<int>& orbit_of,
                              const std::vector<int>& defaults, const char* what) {
  if (given.empty())
    return defaults;
  std::vector<int> out(defaults.size(), -1);
  for (int x : given) {
    if (x < 0 || x >= static_cast<int>(orbit_of.size()))
      throw InputError(std::string(what) + " representative out of range");
    int o = orbit_of[x];
    if (out[o] >= 0)
      throw InputError(std::string("two ") + what + " representatives in one orbit");
    out[o] = x;
  }
  for (int x : out)
    if (x < 0)
      throw InputError(std::string("missing ") + what + " representative for an orbit");
  return out;
}

int trivial_dim(const MatrixRep& rep, const Subgroup& stab) {
  return static_cast<int>(std::lround(averaging_projector(rep, stab).trace().real()));
}

// Minimal element mapping `from` onto `to`, preferring orientation +1.
std::pair<int, int> carrier(const GraphAction& a, const Subgroup& h, int from, int to) {
  int best_neg = -1;
  for (int x : h.elements) {
    const EdgeImage& im = a.edge_map[x][from];
    if (im.edge != to)
      continue;
    if (im.sign > 0)
      return {x, 1};
    if (best_neg < 0)
      best_neg = x;
  }
  if (best_neg < 0)
    throw VerificationError("no group element carries the representative to an edge of its orbit");
  return {best_neg, -1};
}

}  // namespace

QuotientSpec resolve_spec(const QuotientSpec& spec) {
  QuotientSpec s = spec;
  const Subgroup& h = s.rep.domain();
  if (!same_group(h.parent, s.action.group))
    throw InputError("representation and action use different groups");
  ValidationReport vr = validate(s.graph);
  if (!vr.ok)
    throw InputError("parent graph is invalid: " + vr.problems.front());
  if (!quotient_readiness(s.graph, s.action, h).no_edge_reversed)
    throw InputError("an edge is reversed onto itself; subdivide with ensure_quotient_ready first");
  OrbitData od = orbits(s.graph, s.action, h);
  s.edge_reps = reorder_reps(s.edge_reps, od.edge_orbit_of, od.edge_reps, "edge");
  s.vertex_reps = reorder_reps(s.vertex_reps, od.vertex_orbit_of, od.vertex_reps, "vertex");
  const int d = s.rep.dim();
  const int norb = static_cast<int>(od.edge_orbits.size());
  if (s.global_basis.size() == 0 || s.edge_bases.empty()) {
    CMatrix u;
    MatrixRep unitary = unitarize(s.rep, &u);
    if (s.global_basis.size() == 0)
      s.global_basis = u;
    if (s.edge_bases.empty())
      for (int i = 0; i < norb; ++i)
        s.edge_bases.push_back(u * trivial_component_basis(unitary, edge_stabilizer(s.action, s.edge_reps[i], h)).basis);
  }
  if (static_cast<int>(s.edge_bases.size()) != norb)
    throw InputError("expected one basis per edge orbit (" + std::to_string(norb) + ")");
  auto check_invertible = [&](const CMatrix& m, const std::string& what) {
    if (m.rows() != d || m.cols() != d)
      throw InputError(what + " has the wrong shape");
    if (condition_number(m) > 1e12)
      throw InputError(what + " is not invertible");
  };
  check_invertible(s.global_basis, "global basis");
  for (int i = 0; i < norb; ++i) {
    const CMatrix& b = s.edge_bases[i];
    const std::string what = "basis of edge orbit " + s.graph.edges[s.edge_reps[i]].id;
    check_invertible(b, what);
    Subgroup stab = edge_stabilizer(s.action, s.edge_reps[i], h);
    CMatrix p = averaging_projector(s.rep, stab);
    int di = trivial_dim(s.rep, stab);
    double scale = std::max(1.0, max_norm(b));
    if (max_norm(p * b.leftCols(di) - b.leftCols(di)) > 1e-10 * scale ||
        max_norm(p * b.rightCols(d - di)) > 1e-10 * scale)
      throw InputError(what + " does not list the trivial component of the stabilizer first");
  }
  return s;
}

QuotientSpec spec_of(const QuotientGraph& q) {
  return {q.parent, q.action, q.rep, q.edge_bases, q.global_basis, q.orbits.edge_reps, q.orbits.vertex_reps};
}

CMatrix mixed_matrix(const QuotientGraph& q, int orbit, int element) {
  const FiniteGroup& g = *q.rep.group();
  return q.edge_bases[orbit].inverse() * q.rep(g.inv(element)) * q.global_basis;
}

QuotientGraph build_quotient(const QuotientSpec& input) {
  QuotientSpec s = resolve_spec(input);
  const Subgroup& h = s.rep.domain();
  const int d = s.rep.dim();
  QuotientGraph q{MetricGraph{}, {}, {}, s.graph, s.action, s.rep, orbits(s.graph, s.action, h),
                  s.edge_bases, s.global_basis, {}, {}};
  const int norb = static_cast<int>(q.orbits.edge_orbits.size());
  q.orbits.edge_reps = s.edge_reps;
  q.orbits.vertex_reps = s.vertex_reps;
  for (int i = 0; i < norb; ++i)
    q.d.push_back(trivial_dim(s.rep, edge_stabilizer(s.action, s.edge_reps[i], h)));

  // quotient edges
  q.first_edge.assign(norb, -1);
  for (int i = 0; i < norb; ++i)
    for (int j = 0; j < q.d[i]; ++j) {
      if (j == 0)
        q.first_edge[i] = q.graph.edge_count();
      const Edge& pe = s.graph.edges[s.edge_reps[i]];
      q.graph.edges.push_back(Edge{"(" + pe.id + "," + std::to_string(j + 1) + ")", -1, -1, pe.length});
      q.edges.push_back({i, s.edge_reps[i], j});
    }

  // quotient vertices
  const int nvorb = static_cast<int>(q.orbits.vertex_orbits.size());
  for (int k = 0; k < nvorb; ++k) {
    QuotientVertexInfo info;
    info.orbit = k;
    info.parent_vertex = s.vertex_reps[k];
    const Vertex& pv = s.graph.vertices[info.parent_vertex];
    const int n = pv.degree();
    // distinct (orbit, side) pairs in lexicographic order
    std::map<std::pair<int, int>, int> groups;
    for (const EdgeEnd& end : pv.ends) {
      int orbit = q.orbits.edge_orbit_of[end.edge];
      auto [g, sign] = carrier(s.action, h, s.edge_reps[orbit], end.edge);
      Side side = sign > 0 ? end.side : opposite(end.side);
      info.ends.push_back({end, g, orbit, side});
      groups[{orbit, static_cast<int>(side)}] = 0;
    }
    int gi = 0, cols = 0;
    std::vector<std::pair<int, int>> group_list;
    std::map<std::pair<int, int>, int> first_col;
    for (auto& [key, idx] : groups) {
      idx = gi++;
      group_list.push_back(key);
      first_col[key] = cols;
      cols += q.d[key.first];
    }
    info.theta_prime = CMatrix::Zero(n, gi);
    info.theta = CMatrix::Zero(n * d, cols);
    CMatrix dt = CMatrix::Zero(n * d, n * d);
    for (int l = 0; l < n; ++l) {
      const EndAssignment& ea = info.ends[l];
      std::pair<int, int> key{ea.orbit, static_cast<int>(ea.side)};
      info.theta_prime(l, groups[key]) = 1.0;
      for (int j = 0; j < q.d[ea.orbit]; ++j)
        info.theta(l * d + j, first_col[key] + j) = 1.0;
      dt.block(l * d, l * d, d, d) = mixed_matrix(q, ea.orbit, ea.element).transpose();
    }
    CMatrix id = CMatrix::Identity(d, d);
    info.a_full = kron(pv.A, id) * dt * info.theta;
    info.b_full = kron(pv.B, id) * dt * info.theta;
    if (cols > 0) {
      info.quotient_vertex = q.graph.vertex_count();
      VertexCondition vc = reduce_rows(info.a_full, info.b_full);
      Vertex qv{pv.id, {}, vc.A, vc.B};
      for (const auto& key : group_list)
        for (int j = 0; j < q.d[key.first]; ++j) {
          int qe = q.first_edge[key.first] + j;
          Side side = static_cast<Side>(key.second);
          qv.ends.push_back({qe, side});
          (side == Side::tail ? q.graph.edges[qe].tail : q.graph.edges[qe].head) = info.quotient_vertex;
        }
      q.graph.vertices.push_back(std::move(qv));
    }
    q.vertices.push_back(std::move(info));
  }
  for (const Edge& e : q.graph.edges)
    if (e.tail < 0 || e.head < 0)
      throw VerificationError("quotient edge " + e.id + " is missing an endpoint");
  return q;
}

SelfAdjointPrediction check_quotient_self_adjoint(const QuotientSpec& input) {
  QuotientSpec s = resolve_spec(input);
  QuotientGraph q = build_quotient(s);
  const Subgroup& h = s.rep.domain();
  SelfAdjointPrediction out;
  out.built_self_adjoint = is_self_adjoint(q.graph).overall;
  bool unitary = true;
  for (int i = 0; i < static_cast<int>(q.edge_bases.size()) && unitary; ++i)
    for (int x : h.elements) {
      CMatrix m = mixed_matrix(q, i, x);
      if (max_norm(m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())) > 1e-8) {
        unitary = false;
        out.notes.push_back("mixed-basis matrices of orbit " + s.graph.edges[s.edge_reps[i]].id +
                            " are not unitary");
        break;
      }
    }
  Freeness f = is_free(s.graph, s.action, h);
  bool neumann = true;
  for (const Vertex& v : s.graph.vertices)
    neumann = neumann && is_neumann(v.A, v.B);
  if (unitary && f.free_on_edges && f.free_on_vertices && is_self_adjoint(s.graph).overall) {
    out.branch = "free";
    out.predicted = true;
  } else if (unitary && neumann) {
    out.branch = "neumann";
    bool all = true;
    for (int v : s.vertex_reps) {
      Subgroup stab = vertex_stabilizer(s.action, v, h);
      bool a = trivial_dim(s.rep, stab) == 0;
      bool b = true;
      int order = -1;
      for (const EdgeEnd& end : s.graph.vertices[v].ends) {
        int o = edge_stabilizer(s.action, end.edge, h).order();
        if (order >= 0 && o != order)
          b = false;
        order = o;
      }
      const std::string& id = s.graph.vertices[v].id;
      if (a)
        out.notes.push_back(id + ": no trivial component over the vertex stabilizer");
      else if (b)
        out.notes.push_back(id + ": incident edge stabilizers of equal order");
      else
        out.notes.push_back(id + ": neither condition holds");
      all = all && (a || b);
    }
    out.predicted = all;
  } else {
    out.branch = "undetermined";
  }
  out.consistent = !out.predicted || *out.predicted == out.built_self_adjoint;
  return out;
}

namespace {

double pair_diff(const std::array<cplx, 2>& a, const std::array<cplx, 2>& b) {
  return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

}  // namespace

std::vector<Eigenfunction> decode(const QuotientGraph& q, const Eigenfunction& f, double tol) {
  if (static_cast<int>(f.coeffs.size()) != q.graph.edge_count())
    throw InputError("function does not live on the quotient graph");
  const int d = q.rep.dim();
  const Subgroup& h = q.rep.domain();
  std::vector<Eigenfunction> out(d);
  for (Eigenfunction& g : out) {
    g.k = f.k;
    g.coeffs.assign(q.parent.edge_count(), {0.0, 0.0});
  }
  double scale = 0.0;
  for (const auto& c : f.coeffs)
    scale = std::max({scale, std::abs(c[0]), std::abs(c[1])});
  std::vector<bool> done(q.parent.edge_count(), false);
  for (int i = 0; i < static_cast<int>(q.d.size()); ++i) {
    const int rep_edge = q.orbits.edge_reps[i];
    for (int x : h.elements) {
      const EdgeImage& im = q.action.edge_map[x][rep_edge];
      CMatrix m = mixed_matrix(q, i, x);
      for (int mm = 0; mm < d; ++mm) {
        std::array<cplx, 2> c{0.0, 0.0};
        for (int j = 0; j < q.d[i]; ++j) {
          const auto& src = f.coeffs[q.first_edge[i] + j];
          c[0] += src[0] * m(j, mm);
          c[1] += src[1] * m(j, mm);
        }
        if (im.sign < 0)
          c = reverse_coefficients(c, f.k, q.parent.edges[rep_edge].length);
        auto& dst = out[mm].coeffs[im.edge];
        if (done[im.edge] && pair_diff(dst, c) > tol * std::max(scale, 1e-300))
          throw VerificationError("decoding is inconsistent on parent edge " + q.parent.edges[im.edge].id);
        dst = c;
      }
      done[im.edge] = true;
    }
  }
  return out;
}

Eigenfunction encode(const QuotientGraph& q, const std::vector<Eigenfunction>& fs, double tol) {
  const int d = q.rep.dim();
  if (static_cast<int>(fs.size()) != d)
    throw InputError("encode needs one function per basis vector of the rep");
  const double k = fs[0].k;
  for (const Eigenfunction& f : fs)
    if (static_cast<int>(f.coeffs.size()) != q.parent.edge_count() || f.k != k)
      throw InputError("functions do not live on the parent graph at a common k");
  double scale = 0.0;
  for (const Eigenfunction& f : fs)
    for (const auto& c : f.coeffs)
      scale = std::max({scale, std::abs(c[0]), std::abs(c[1])});
  CMatrix binv = q.global_basis.inverse();
  for (int x : q.rep.domain().elements) {
    CMatrix rho = binv * q.rep(x) * q.global_basis;
    for (int m = 0; m < d; ++m) {
      Eigenfunction moved = transport(q.parent, q.action, x, fs[m]);
      for (int e = 0; e < q.parent.edge_count(); ++e) {
        std::array<cplx, 2> expect{0.0, 0.0};
        for (int i = 0; i < d; ++i) {
          expect[0] += rho(i, m) * fs[i].coeffs[e][0];
          expect[1] += rho(i, m) * fs[i].coeffs[e][1];
        }
        if (pair_diff(moved.coeffs[e], expect) > tol * std::max(scale, 1e-300))
          throw VerificationError("functions do not transform according to the representation");
      }
    }
  }
  Eigenfunction out;
  out.k = k;
  out.coeffs.assign(q.graph.edge_count(), {0.0, 0.0});
  for (const QuotientEdgeInfo& info : q.edges) {
    CMatrix c = binv * q.edge_bases[info.orbit];
    std::array<cplx, 2> v{0.0, 0.0};
    for (int m = 0; m < d; ++m) {
      v[0] += fs[m].coeffs[info.parent_edge][0] * c(m, info.basis_index);
      v[1] += fs[m].coeffs[info.parent_edge][1] * c(m, info.basis_index);
    }
    out.coeffs[&info - q.edges.data()] = v;
  }
  return out;
}

}  // namespace isograph

#include "isograph/transplant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "isograph/linalg.hpp"

namespace isograph {

namespace {

// Functions on the parent graph written as linear combinations of the
// edge restrictions of a source quotient function: per parent edge, one
// row per source edge and one column per function in the tuple.
struct ParentTuple {
  std::vector<CMatrix> dir;
  std::vector<CMatrix> rev;
  int width = 0;
};

ParentTuple zero_tuple(int parent_edges, int source_edges, int width) {
  ParentTuple t;
  t.width = width;
  t.dir.assign(parent_edges, CMatrix::Zero(source_edges, width));
  t.rev = t.dir;
  return t;
}

// The decoded tuple in the stored basis of q.rep: on x * e, the row of
// source edge (i, j) is row j of B_i^-1 rho(x^-1).
ParentTuple decode_stored(const QuotientGraph& q) {
  const FiniteGroup& g = *q.rep.group();
  const int d = q.rep.dim();
  ParentTuple t = zero_tuple(q.parent.edge_count(), q.graph.edge_count(), d);
  for (int i = 0; i < static_cast<int>(q.d.size()); ++i) {
    const int rep_edge = q.orbits.edge_reps[i];
    CMatrix binv = q.edge_bases[i].inverse();
    for (int x : q.rep.domain().elements) {
      const EdgeImage& im = q.action.edge_map[x][rep_edge];
      CMatrix rows = binv * q.rep(g.inv(x));
      for (int j = 0; j < q.d[i]; ++j) {
        const int s = q.first_edge[i] + j;
        (im.sign > 0 ? t.dir : t.rev)[im.edge].row(s) = rows.row(j);
        (im.sign > 0 ? t.rev : t.dir)[im.edge].row(s).setZero();
      }
    }
  }
  return t;
}

// Block k of the result is t_k applied to the tuple.
ParentTuple lift_tuple(const ParentTuple& in, const GraphAction& a, const CosetDecomposition& cosets) {
  const int n = cosets.index(), d = in.width;
  const int edges = static_cast<int>(in.dir.size());
  ParentTuple out = zero_tuple(edges, static_cast<int>(in.dir.empty() ? 0 : in.dir[0].rows()), n * d);
  for (int k = 0; k < n; ++k) {
    const int t = cosets.representatives[k];
    for (int e = 0; e < edges; ++e) {
      const EdgeImage& im = a.edge_map[t][e];
      out.dir[im.edge].middleCols(k * d, d) = im.sign > 0 ? in.dir[e] : in.rev[e];
      out.rev[im.edge].middleCols(k * d, d) = im.sign > 0 ? in.rev[e] : in.dir[e];
    }
  }
  return out;
}

void multiply(ParentTuple& t, const CMatrix& s) {
  for (CMatrix& m : t.dir)
    m = m * s;
  for (CMatrix& m : t.rev)
    m = m * s;
  t.width = static_cast<int>(s.cols());
}

// Inverse of lift_tuple on tuples that transform by the induced rep.
void drop_tuple(ParentTuple& t, const MatrixRep& rep, const CosetDecomposition& cosets) {
  const FiniteGroup& g = *rep.group();
  const int d = rep.dim();
  const int k0 = cosets.coset_of[g.identity()];
  CMatrix back = rep(cosets.representatives[k0]).inverse();
  for (CMatrix& m : t.dir)
    m = m.middleCols(k0 * d, d) * back;
  for (CMatrix& m : t.rev)
    m = m.middleCols(k0 * d, d) * back;
  t.width = d;
}

TransplantMap encode_tuple(const ParentTuple& t, const QuotientGraph& from, const QuotientGraph& to) {
  TransplantMap m;
  m.source = from.graph;
  m.target = to.graph;
  m.direct = CMatrix::Zero(to.graph.edge_count(), from.graph.edge_count());
  m.reversed = m.direct;
  for (int e = 0; e < to.graph.edge_count(); ++e) {
    const QuotientEdgeInfo& info = to.edges[e];
    CVector col = to.edge_bases[info.orbit].col(info.basis_index);
    m.direct.row(e) = (t.dir[info.parent_edge] * col).transpose();
    m.reversed.row(e) = (t.rev[info.parent_edge] * col).transpose();
  }
  return m;
}

void check_same_parent(const QuotientGraph& a, const QuotientGraph& b) {
  if (!same_group(a.action.group, b.action.group))
    throw InputError("the quotients come from actions of different groups");
  if (a.parent.edge_count() != b.parent.edge_count() || a.action.edge_map != b.action.edge_map)
    throw InputError("the quotients come from different parent graphs or actions");
  for (int e = 0; e < a.parent.edge_count(); ++e)
    if (std::abs(a.parent.edges[e].length - b.parent.edges[e].length) > 1e-12 * a.parent.edges[e].length)
      throw InputError("the quotients come from parents with different edge lengths");
}

bool same_rep(const MatrixRep& a, const MatrixRep& b, double tol = kTolRep) {
  if (!(a.domain() == b.domain()) || a.dim() != b.dim())
    return false;
  for (int x : a.domain().elements)
    if (max_norm(a(x) - b(x)) > tol)
      return false;
  return true;
}

double scale_of(const CMatrix& m) { return std::max(1.0, max_norm(m)); }

}  // namespace

std::vector<TransplantMap::Term> TransplantMap::terms(int source_edge, double tol) const {
  std::vector<Term> out;
  for (int t = 0; t < direct.rows(); ++t) {
    if (std::abs(direct(t, source_edge)) > tol)
      out.push_back({t, direct(t, source_edge), false});
    if (std::abs(reversed(t, source_edge)) > tol)
      out.push_back({t, reversed(t, source_edge), true});
  }
  return out;
}

Eigenfunction apply(const TransplantMap& m, const Eigenfunction& f) {
  if (static_cast<int>(f.coeffs.size()) != m.source.edge_count())
    throw InputError("function does not live on the source graph of the transplant");
  Eigenfunction out;
  out.k = f.k;
  out.coeffs.assign(m.target.edge_count(), {0.0, 0.0});
  for (int s = 0; s < m.source.edge_count(); ++s) {
    const std::array<cplx, 2> back = reverse_coefficients(f.coeffs[s], f.k, m.source.edges[s].length);
    for (int t = 0; t < m.target.edge_count(); ++t) {
      const cplx a = m.direct(t, s), b = m.reversed(t, s);
      out.coeffs[t][0] += a * f.coeffs[s][0] + b * back[0];
      out.coeffs[t][1] += a * f.coeffs[s][1] + b * back[1];
    }
  }
  return out;
}

TransplantMap identity_transplant(const MetricGraph& g) {
  const int n = g.edge_count();
  return {g, g, CMatrix::Identity(n, n), CMatrix::Zero(n, n), "identity", {}};
}

TransplantMap compose(const TransplantMap& first, const TransplantMap& second) {
  if (first.target.edge_count() != second.source.edge_count())
    throw InputError("transplants do not compose: edge counts differ");
  TransplantMap m;
  m.source = first.source;
  m.target = second.target;
  // The reversal is an involution that commutes with mixing equal lengths.
  m.direct = second.direct * first.direct + second.reversed * first.reversed;
  m.reversed = second.direct * first.reversed + second.reversed * first.direct;
  m.kind = "composite";
  m.provenance = first.provenance;
  m.provenance.push_back("then " + (second.kind.empty() ? std::string("map") : second.kind));
  m.provenance.insert(m.provenance.end(), second.provenance.begin(), second.provenance.end());
  return m;
}

TransplantMap inverse(const TransplantMap& m) {
  if (m.direct.rows() != m.direct.cols())
    throw VerificationError("a transplant between different edge counts is not invertible");
  // Even and odd parts under the reversal are mapped by direct +- reversed.
  CMatrix plus = m.direct + m.reversed, minus = m.direct - m.reversed;
  if (condition_number(plus) > 1e12 || condition_number(minus) > 1e12)
    throw VerificationError("transplant is singular");
  CMatrix p = plus.inverse(), q = minus.inverse();
  TransplantMap out{m.target, m.source, (p + q) / 2.0, (p - q) / 2.0, m.kind + " (inverse)", m.provenance};
  return out;
}

double coefficient_distance(const TransplantMap& a, const TransplantMap& b) {
  if (a.direct.rows() != b.direct.rows() || a.direct.cols() != b.direct.cols())
    return std::numeric_limits<double>::infinity();
  return std::max(max_norm(a.direct - b.direct), max_norm(a.reversed - b.reversed));
}

TransplantMap parent_transplant(const QuotientGraph& from, const QuotientGraph& to, const CMatrix& s,
                                const CosetDecomposition* lift, const CosetDecomposition* drop) {
  check_same_parent(from, to);
  auto induced = [](const MatrixRep& r, const CosetDecomposition* c) {
    if (!c)
      return r;
    if (!(c->subgroup == r.domain()))
      throw InputError("coset decomposition does not belong to the rep's subgroup");
    return induce(r, *c);
  };
  MatrixRep a = induced(from.rep, lift), b = induced(to.rep, drop);
  if (!(a.domain() == b.domain()))
    throw InputError("the two reps act on different subgroups");
  if (s.rows() != a.dim() || s.cols() != b.dim())
    throw InputError("intertwiner has the wrong shape");
  for (int x : a.domain().elements)
    if (max_norm(a(x) * s - s * b(x)) > 1e-9 * scale_of(s))
      throw InputError("matrix does not intertwine the two reps at " + a.group()->name(x));

  ParentTuple t = decode_stored(from);
  if (lift)
    t = lift_tuple(t, from.action, *lift);
  multiply(t, s);
  if (drop)
    drop_tuple(t, to.rep, *drop);
  TransplantMap m = encode_tuple(t, from, to);
  m.kind = "parent";
  return m;
}

TransplantMap basis_change_transplant(const QuotientGraph& q1, const QuotientGraph& q2, const CMatrix& s) {
  check_same_parent(q1, q2);
  if (!(q1.rep.domain() == q2.rep.domain()))
    throw InputError("basis change needs reps of the same subgroup");
  if (q1.orbits.edge_reps != q2.orbits.edge_reps)
    throw InputError("basis change needs identical edge representatives");
  CMatrix link = s;
  if (link.size() == 0)
    link = same_rep(q1.rep, q2.rep) ? CMatrix::Identity(q1.rep.dim(), q1.rep.dim()) : intertwiner(q1.rep, q2.rep);
  TransplantMap m = parent_transplant(q1, q2, link);
  m.kind = "basis";
  if (!same_rep(q1.rep, q2.rep))
    m.provenance.push_back("rep matrices related by an intertwiner");
  for (size_t i = 0; i < q1.d.size(); ++i) {
    std::ostringstream os;
    os << "orbit " << q1.parent.edges[q1.orbits.edge_reps[i]].id << ": coordinates of the new basis "
       << "in the old one, first " << q1.d[i] << " columns";
    m.provenance.push_back(os.str());
  }
  return m;
}

QuotientSpec move_representatives(const QuotientSpec& resolved, const std::vector<int>& elements) {
  if (elements.size() != resolved.edge_reps.size() || resolved.edge_bases.size() != elements.size())
    throw InputError("need one element and one basis per edge orbit");
  QuotientSpec out = resolved;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (!resolved.rep.domain().contains(elements[i]))
      throw InputError("representative change by an element outside the rep's subgroup");
    out.edge_reps[i] = resolved.action.edge_map[elements[i]][resolved.edge_reps[i]].edge;
    out.edge_bases[i] = resolved.rep(elements[i]) * resolved.edge_bases[i];
  }
  return out;
}

TransplantMap representative_change_transplant(const QuotientGraph& q1, const QuotientGraph& q2,
                                               const std::vector<int>& elements) {
  check_same_parent(q1, q2);
  if (!same_rep(q1.rep, q2.rep))
    throw InputError("representative change needs the same representation on both sides");
  const int norb = static_cast<int>(q1.d.size());
  if (static_cast<int>(elements.size()) != norb)
    throw InputError("need one group element per edge orbit");
  const FiniteGroup& g = *q1.rep.group();
  TransplantMap m;
  m.source = q1.graph;
  m.target = q2.graph;
  m.direct = CMatrix::Zero(q2.graph.edge_count(), q1.graph.edge_count());
  m.reversed = m.direct;
  m.kind = "representatives";
  for (int i = 0; i < norb; ++i) {
    const int x = elements[i];
    if (!q1.rep.domain().contains(x))
      throw InputError("element " + g.name(x) + " is outside the rep's subgroup");
    const EdgeImage& im = q1.action.edge_map[x][q1.orbits.edge_reps[i]];
    if (q2.orbits.edge_reps[i] != im.edge)
      throw InputError("representative of orbit " + std::to_string(i) + " is not moved by " + g.name(x));
    const CMatrix moved = q1.rep(x) * q1.edge_bases[i];
    if (max_norm(q2.edge_bases[i] - moved) > 1e-9 * scale_of(moved))
      throw InputError("basis of orbit " + std::to_string(i) + " is not the transported one");
    for (int j = 0; j < q1.d[i]; ++j)
      (im.sign > 0 ? m.direct : m.reversed)(q2.first_edge[i] + j, q1.first_edge[i] + j) = 1.0;
    m.provenance.push_back("orbit " + q1.parent.edges[q1.orbits.edge_reps[i]].id + " moved by " + g.name(x) +
                           (im.sign > 0 ? "" : " (reversed)"));
  }
  TransplantMap check = parent_transplant(q1, q2, CMatrix::Identity(q1.rep.dim(), q1.rep.dim()));
  if (coefficient_distance(m, check) > 1e-9)
    throw VerificationError("representative change does not agree with the map through the parent");
  return m;
}

TransplantMap induction_transplant(const QuotientGraph& sub, const QuotientGraph& ind,
                                   const CosetDecomposition& cosets) {
  check_same_parent(sub, ind);
  if (!same_rep(induce(sub.rep, cosets), ind.rep))
    throw InputError("the second quotient is not built from the induced representation");
  TransplantMap m = parent_transplant(sub, ind, CMatrix::Identity(ind.rep.dim(), ind.rep.dim()), &cosets);
  m.kind = "induction";

  // With coordinated choices every edge is identified with exactly one other.
  const int n = static_cast<int>(m.direct.rows());
  bool identification = m.direct.cols() == n;
  for (int t = 0; identification && t < n; ++t) {
    int hits = 0;
    for (int s = 0; s < m.direct.cols(); ++s)
      for (const CMatrix* part : {&m.direct, &m.reversed}) {
        cplx c = (*part)(t, s);
        if (std::abs(c) < 1e-10)
          continue;
        ++hits;
        identification = identification && std::abs(c - 1.0) < 1e-10;
      }
    identification = identification && hits == 1;
  }
  if (!identification)
    throw InputError("the quotients were not built with the coordinated representatives and bases");

  const FiniteGroup& g = *sub.rep.group();
  const Subgroup& h = sub.rep.domain();
  const Subgroup all = whole_group(sub.rep.group());
  for (size_t i = 0; i < ind.d.size(); ++i) {
    const int eps = ind.orbits.edge_reps[i];
    Subgroup ge = edge_stabilizer(ind.action, eps, all);
    for (int e : sub.orbits.edge_reps) {
      int t = -1;
      for (int x = 0; x < g.order() && t < 0; ++x)
        if (ind.action.edge_map[x][e].edge == eps)
          t = x;
      if (t < 0)
        continue;
      std::vector<int> dc;
      for (int a : ge.elements)
        for (int b : h.elements)
          dc.push_back(g.mul(g.mul(a, t), b));
      std::sort(dc.begin(), dc.end());
      dc.erase(std::unique(dc.begin(), dc.end()), dc.end());
      const int nk = static_cast<int>(dc.size()) / h.order();
      const int he = edge_stabilizer(sub.action, e, h).order();
      if (ge.order() != nk * he)
        throw VerificationError("stabilizer orders do not match the double coset sizes");
      m.provenance.push_back("edge " + sub.parent.edges[e].id + " = " + g.name(g.inv(t)) + " * " +
                             ind.parent.edges[eps].id + ", |G_e| = " + std::to_string(nk) + " * " +
                             std::to_string(he));
    }
  }
  return m;
}

std::pair<QuotientSpec, QuotientSpec> induction_specs(const MetricGraph& g, const GraphAction& a,
                                                      const MatrixRep& rep, const CosetDecomposition& cosets) {
  if (!(cosets.subgroup == rep.domain()) || cosets.side != CosetDecomposition::Side::left)
    throw InputError("coset decomposition does not match the representation's subgroup");
  const FiniteGroup& grp = *rep.group();
  const Subgroup& h = rep.domain();
  const Subgroup all = whole_group(rep.group());
  if (!quotient_readiness(g, a, all).no_edge_reversed)
    throw InputError("an edge is reversed onto itself; subdivide with ensure_quotient_ready first");
  MatrixRep r = is_unitary(rep) ? rep : unitarize(rep);
  MatrixRep ind = induce(r, cosets);
  const int d = r.dim(), n = cosets.index();

  OrbitData og = orbits(g, a, all), oh = orbits(g, a, h);
  QuotientSpec sub{g, a, r, std::vector<CMatrix>(oh.edge_orbits.size()), CMatrix::Identity(d, d), {}, {}};
  QuotientSpec big{g, a, ind, {}, CMatrix::Identity(n * d, n * d), og.edge_reps, {}};

  for (int eps : og.edge_reps) {
    Subgroup ge = edge_stabilizer(a, eps, all);
    DoubleCosetDecomposition dc = double_cosets(ge, h);
    CMatrix triv(n * d, 0);
    for (int k = 0; k < dc.count(); ++k) {
      const int tk = dc.representatives[k];
      const int e = a.edge_map[grp.inv(tk)][eps].edge;
      TrivialComponent tc = trivial_component_basis(r, edge_stabilizer(a, e, h));
      sub.edge_reps.push_back(e);
      sub.edge_bases[oh.edge_orbit_of[e]] = tc.basis;
      const double nk = static_cast<double>(dc.refined[k].size());
      for (int j = 0; j < tc.d_triv; ++j) {
        CVector v = CVector::Zero(n * d);
        for (int t : dc.refined[k]) {
          const int c = cosets.coset_of[t];
          const int hh = grp.mul(grp.inv(cosets.representatives[c]), t);
          v.segment(c * d, d) += r(hh) * tc.basis.col(j) / nk;
        }
        triv.conservativeResize(Eigen::NoChange, triv.cols() + 1);
        triv.col(triv.cols() - 1) = v;
      }
    }
    CMatrix p = averaging_projector(ind, ge);
    if (max_norm(p * triv - triv) > 1e-9)
      throw VerificationError("averaged basis is not invariant under the edge stabilizer");
    CMatrix rest = orthonormal_columns(CMatrix::Identity(n * d, n * d) - p);
    if (triv.cols() + rest.cols() != n * d)
      throw VerificationError("averaged basis does not span the trivial component of the stabilizer");
    CMatrix basis(n * d, n * d);
    basis << triv, rest;
    big.edge_bases.push_back(basis);
  }
  return {sub, big};
}

TransplantReport verify_transplant(const TransplantMap& m, int count, const SpectralOptions& opts,
                                   double tol_residual, double tol_gram) {
  TransplantReport rep;
  if (m.source.edge_count() == 0) {
    rep.ok = m.target.edge_count() == 0;
    if (!rep.ok)
      rep.problems.push_back("empty source mapped to a nonempty target");
    return rep;
  }
  double k_max = std::numbers::pi * (count + 3) / m.source.total_length();
  Spectrum src = eigenvalues(m.source, k_max, opts);
  while (static_cast<int>(src.entries.size()) < count) {
    k_max *= 1.6;
    src = eigenvalues(m.source, k_max, opts);
  }
  Spectrum tgt = eigenvalues(m.target, k_max, opts);
  for (int i = 0; i < count; ++i) {
    const SpectrumEntry& en = src.entries[i];
    TransplantCheck c;
    c.k = en.k;
    c.multiplicity = en.multiplicity;
    for (const SpectrumEntry& te : tgt.entries)
      if (std::abs(te.k - en.k) < 1e-7 && te.multiplicity == en.multiplicity)
        c.target_has_k = true;
    std::vector<Eigenfunction> images;
    for (const Eigenfunction& f : eigenfunctions(m.source, en.k, en.multiplicity, src.tol_null)) {
      Eigenfunction img = apply(m, f);
      c.max_residual = std::max(c.max_residual, residual(m.target, img));
      images.push_back(std::move(img));
    }
    const int nimg = static_cast<int>(images.size());
    CMatrix gram(nimg, nimg);
    for (int a = 0; a < nimg; ++a)
      for (int b = 0; b < nimg; ++b)
        gram(a, b) = inner_product(m.target, images[a], images[b]);
    Eigen::VectorXd norms = gram.diagonal().real().cwiseMax(0.0).cwiseSqrt();
    if (norms.minCoeff() > 1e-300) {
      for (int a = 0; a < nimg; ++a)
        for (int b = 0; b < nimg; ++b)
          gram(a, b) /= norms(a) * norms(b);
      c.gram_det = std::abs(gram.determinant());
    }
    c.ok = c.target_has_k && c.max_residual < tol_residual && c.gram_det > tol_gram;
    if (!c.ok) {
      std::ostringstream os;
      os << "k=" << en.k << ": ";
      if (!c.target_has_k)
        os << "missing from the target spectrum; ";
      if (c.max_residual >= tol_residual)
        os << "residual " << c.max_residual << "; ";
      if (c.gram_det <= tol_gram)
        os << "images dependent (Gram determinant " << c.gram_det << ")";
      rep.problems.push_back(os.str());
    }
    rep.ok = rep.ok && c.ok;
    rep.eigenvalues.push_back(c);
    ++rep.checked;
  }
  return rep;
}

}  // namespace isograph

#include "isograph/rep.hpp"

#include <cmath>
#include <deque>
#include <random>
#include <sstream>

#include "isograph/linalg.hpp"

namespace isograph {

MatrixRep::MatrixRep(Subgroup domain, std::vector<CMatrix> matrices, std::string basis_label,
                     double tol_rep)
    : domain_(std::move(domain)), matrices_(std::move(matrices)), label_(std::move(basis_label)) {
  const FiniteGroup& g = *domain_.parent;
  if (static_cast<int>(matrices_.size()) != g.order())
    throw InputError("representation needs one matrix slot per group element");
  dim_ = static_cast<int>(matrices_[domain_.elements.front()].rows());
  for (int x : domain_.elements) {
    const CMatrix& m = matrices_[x];
    if (m.rows() != dim_ || m.cols() != dim_)
      throw InputError("matrix for element " + g.name(x) + " has the wrong shape");
  }
  if (max_norm(matrices_[g.identity()] - CMatrix::Identity(dim_, dim_)) > tol_rep)
    throw InputError("identity element is not represented by the identity matrix");
  for (int a : domain_.elements)
    for (int b : domain_.elements)
      if (max_norm(matrices_[a] * matrices_[b] - matrices_[g.mul(a, b)]) > tol_rep)
        throw InputError("matrices are not a homomorphism at (" + g.name(a) + ", " + g.name(b) +
                         ")");
  for (int x = 0; x < g.order(); ++x)
    if (!domain_.contains(x))
      matrices_[x] = CMatrix();
}

const CMatrix& MatrixRep::operator()(int g) const {
  if (!domain_.contains(g))
    throw InputError("element " + domain_.parent->name(g) + " is outside the representation's domain");
  return matrices_[g];
}

MatrixRep trivial_rep(const Subgroup& domain) {
  std::vector<CMatrix> mats(domain.parent->order(), CMatrix::Identity(1, 1));
  return MatrixRep(domain, std::move(mats), "trivial");
}

MatrixRep regular_rep(const GroupPtr& g) {
  const int n = g->order();
  std::vector<CMatrix> mats(n, CMatrix::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      mats[a](g->mul(a, x), x) = 1.0;
  return MatrixRep(whole_group(g), std::move(mats), "regular basis {g}");
}

MatrixRep rep_from_generators(const Subgroup& domain, const std::vector<int>& generators,
                              const std::vector<CMatrix>& generator_matrices,
                              std::string basis_label) {
  const FiniteGroup& g = *domain.parent;
  if (generators.size() != generator_matrices.size() || generators.empty())
    throw InputError("one matrix per generator required");
  const Eigen::Index d = generator_matrices[0].rows();
  std::vector<CMatrix> mats(g.order());
  std::vector<bool> known(g.order(), false);
  mats[g.identity()] = CMatrix::Identity(d, d);
  known[g.identity()] = true;
  std::deque<int> queue{g.identity()};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (size_t s = 0; s < generators.size(); ++s) {
      int y = g.mul(x, generators[s]);
      if (!known[y]) {
        known[y] = true;
        mats[y] = mats[x] * generator_matrices[s];
        queue.push_back(y);
      }
    }
  }
  for (int x : domain.elements)
    if (!known[x])
      throw InputError("generators do not generate the domain");
  for (int x = 0; x < g.order(); ++x)
    if (known[x] && !domain.contains(x))
      throw InputError("generators leave the domain");
  return MatrixRep(domain, std::move(mats), std::move(basis_label));
}

Character character(const MatrixRep& rep) {
  Character c{rep.domain(), std::vector<cplx>(rep.group()->order(), 0.0)};
  for (int x : rep.domain().elements)
    c.values[x] = rep(x).trace();
  return c;
}

cplx char_inner(const Character& c1, const Character& c2) {
  if (!(c1.domain == c2.domain))
    throw InputError("character inner product needs characters of the same group");
  cplx s = 0.0;
  for (int x : c1.domain.elements)
    s += c1.values[x] * std::conj(c2.values[x]);
  return s / static_cast<double>(c1.domain.order());
}

bool is_class_function(const Character& c, double tol) {
  const FiniteGroup& g = *c.domain.parent;
  for (int x : c.domain.elements)
    for (int y : c.domain.elements)
      if (std::abs(c.values[g.conj(y, x)] - c.values[x]) > tol)
        return false;
  return true;
}

Character restrict(const Character& c, const Subgroup& h) {
  Character out{h, std::vector<cplx>(c.values.size(), 0.0)};
  for (int x : h.elements) {
    if (!c.domain.contains(x))
      throw InputError("restriction target is not a subgroup of the character's group");
    out.values[x] = c.values[x];
  }
  return out;
}

MatrixRep restrict(const MatrixRep& rep, const Subgroup& h) {
  if (!same_group(h.parent, rep.group()))
    throw InputError("restriction to a subgroup of a different group");
  std::vector<CMatrix> mats(rep.group()->order());
  for (int x : h.elements) {
    if (!rep.domain().contains(x))
      throw InputError("restriction target is not contained in the representation's domain");
    mats[x] = rep(x);
  }
  return MatrixRep(h, std::move(mats), rep.basis_label());
}

MatrixRep induce(const MatrixRep& rep, const CosetDecomposition& cosets) {
  if (!(cosets.subgroup == rep.domain()) || cosets.side != CosetDecomposition::Side::left)
    throw InputError("coset decomposition does not match the representation's subgroup");
  const FiniteGroup& g = *rep.group();
  const int d = rep.dim();
  const int n = cosets.index();
  std::vector<CMatrix> mats(g.order());
  for (int x = 0; x < g.order(); ++x) {
    CMatrix m = CMatrix::Zero(d * n, d * n);
    for (int i = 0; i < n; ++i) {
      int xt = g.mul(x, cosets.representatives[i]);
      int j = cosets.coset_of[xt];
      int h = g.mul(g.inv(cosets.representatives[j]), xt);
      m.block(j * d, i * d, d, d) = rep(h);
    }
    mats[x] = std::move(m);
  }
  std::ostringstream label;
  label << "induced basis {t_i b_j}, t = {";
  for (int i = 0; i < n; ++i)
    label << (i ? ", " : "") << g.name(cosets.representatives[i]);
  label << "}, b = " << (rep.basis_label().empty() ? "stored basis" : rep.basis_label());
  return MatrixRep(whole_group(rep.group()), std::move(mats), label.str());
}

MatrixRep induce(const MatrixRep& rep) { return induce(rep, left_cosets(rep.domain())); }

Character induced_character(const Character& c) {
  const FiniteGroup& g = *c.domain.parent;
  CosetDecomposition cosets = left_cosets(c.domain);
  Character out{whole_group(c.domain.parent), std::vector<cplx>(g.order(), 0.0)};
  for (int x = 0; x < g.order(); ++x)
    for (int t : cosets.representatives) {
      int y = g.mul(g.mul(g.inv(t), x), t);
      if (c.domain.contains(y))
        out.values[x] += c.values[y];
    }
  return out;
}

bool characters_equal(const Character& c1, const Character& c2, double tol) {
  if (!(c1.domain == c2.domain))
    return false;
  for (int x : c1.domain.elements)
    if (std::abs(c1.values[x] - c2.values[x]) > tol)
      return false;
  return true;
}

bool is_isomorphic(const MatrixRep& r1, const MatrixRep& r2, double tol) {
  if (!(r1.domain() == r2.domain()))
    throw InputError("isomorphism test needs representations of the same group");
  return r1.dim() == r2.dim() && characters_equal(character(r1), character(r2), tol);
}

CMatrix intertwiner(const MatrixRep& r1, const MatrixRep& r2) {
  if (!is_isomorphic(r1, r2))
    throw InputError("representations are not isomorphic");
  const int d = r1.dim();
  const FiniteGroup& g = *r1.group();
  std::mt19937 rng(12345);
  std::normal_distribution<double> normal;
  CMatrix x = CMatrix::Identity(d, d);
  for (int attempt = 0; attempt < 20; ++attempt) {
    CMatrix s = CMatrix::Zero(d, d);
    for (int h : r1.domain().elements)
      s += r1(h) * x * r2(g.inv(h));
    if (s.norm() > 1e-8 && condition_number(s) < 1e8)
      return s * (std::sqrt(static_cast<double>(d)) / s.norm());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        x(i, j) = cplx(normal(rng), normal(rng));
  }
  throw VerificationError("no invertible intertwiner found");
}

std::vector<int> decompose(const Character& c, const IrrepTable& table) {
  if (!same_group(c.domain.parent, table.group) || !c.domain.is_whole())
    throw InputError("irreducible table belongs to a different group");
  std::vector<int> out;
  for (size_t i = 0; i < table.irreps.size(); ++i) {
    Character ci = character(table.irreps[i]);
    ci.domain = c.domain;
    cplx m = char_inner(c, ci);
    double r = std::round(m.real());
    if (std::abs(m - cplx(r, 0.0)) > 1e-6 || r < 0)
      throw VerificationError("non-integral multiplicity " + std::to_string(m.real()) + " of " +
                              table.names[i]);
    out.push_back(static_cast<int>(r));
  }
  return out;
}

std::vector<int> decompose(const MatrixRep& rep, const IrrepTable& table) {
  return decompose(character(rep), table);
}

bool is_unitary(const MatrixRep& rep, double tol) {
  const int d = rep.dim();
  for (int x : rep.domain().elements)
    if (max_norm(rep(x) * rep(x).adjoint() - CMatrix::Identity(d, d)) > tol)
      return false;
  return true;
}

MatrixRep unitarize(const MatrixRep& rep, CMatrix* basis) {
  const int d = rep.dim();
  CMatrix gram = CMatrix::Zero(d, d);
  for (int x : rep.domain().elements)
    gram += rep(x).adjoint() * rep(x);
  gram /= static_cast<double>(rep.domain().order());
  CMatrix u = inverse_sqrt_hermitian(gram);
  if (basis)
    *basis = u;
  std::string label = rep.basis_label().empty() ? "unitarized" : rep.basis_label() + ", unitarized";
  return change_basis(rep, u, label);
}

MatrixRep change_basis(const MatrixRep& rep, const CMatrix& s, std::string label) {
  const int d = rep.dim();
  if (s.rows() != d || s.cols() != d)
    throw InputError("change of basis matrix has the wrong shape");
  Eigen::FullPivLU<CMatrix> lu(s);
  if (!lu.isInvertible() || condition_number(s) > 1e12)
    throw InputError("change of basis matrix is singular (condition number " +
                     std::to_string(condition_number(s)) + ")");
  CMatrix sinv = lu.inverse();
  std::vector<CMatrix> mats(rep.group()->order());
  for (int x : rep.domain().elements)
    mats[x] = sinv * rep(x) * s;
  if (label.empty())
    label = rep.basis_label() + ", changed basis";
  return MatrixRep(rep.domain(), std::move(mats), std::move(label), 1e-8);
}

CMatrix averaging_projector(const MatrixRep& rep, const Subgroup& stab) {
  CMatrix p = CMatrix::Zero(rep.dim(), rep.dim());
  for (int x : stab.elements)
    p += rep(x);
  return p / static_cast<double>(stab.order());
}

TrivialComponent trivial_component_basis(const MatrixRep& rep, const Subgroup& stab) {
  const int d = rep.dim();
  CMatrix p = averaging_projector(rep, stab);
  CMatrix q = CMatrix::Identity(d, d) - p;
  // rounding noise in a vanishing projector must not count as a direction
  if (max_norm(p) < kTolRep)
    p.setZero();
  if (max_norm(q) < kTolRep)
    q.setZero();
  CMatrix image = orthonormal_columns(p);
  CMatrix kernel = orthonormal_columns(q);
  if (image.cols() + kernel.cols() != d)
    throw VerificationError("projector image and kernel do not complement each other");
  TrivialComponent out;
  out.d_triv = static_cast<int>(image.cols());
  out.basis.resize(d, d);
  out.basis << image, kernel;
  return out;
}

MatrixRep direct_sum(const std::vector<MatrixRep>& reps) {
  if (reps.empty())
    throw InputError("direct sum of no representations");
  const Subgroup& dom = reps[0].domain();
  int total = 0;
  for (const MatrixRep& r : reps) {
    if (!(r.domain() == dom))
      throw InputError("direct sum of representations of different groups");
    total += r.dim();
  }
  std::vector<CMatrix> mats(dom.parent->order());
  for (int x : dom.elements) {
    CMatrix m = CMatrix::Zero(total, total);
    int off = 0;
    for (const MatrixRep& r : reps) {
      m.block(off, off, r.dim(), r.dim()) = r(x);
      off += r.dim();
    }
    mats[x] = std::move(m);
  }
  std::string label = "direct sum";
  return MatrixRep(dom, std::move(mats), label);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixRep tensor_product(const MatrixRep& r1, const MatrixRep& r2, const GroupPtr& product) {
  Subgroup dom = product_subgroup(product, r1.domain(), r2.domain());
  const int n2 = r2.group()->order();
  std::vector<CMatrix> mats(product->order());
  for (int x : dom.elements)
    mats[x] = kron(r1(x / n2), r2(x % n2));
  return MatrixRep(dom, std::move(mats), "tensor product");
}

}  // namespace isograph

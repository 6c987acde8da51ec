#include "isograph/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace isograph {

namespace {

Eigen::BDCSVD<CMatrix> full_svd(const CMatrix& m) {
  return Eigen::BDCSVD<CMatrix>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

double max_norm(const CMatrix& m) {
  if (m.size() == 0)
    return 0.0;
  return m.cwiseAbs().maxCoeff();
}

int numerical_rank(const CMatrix& m, double rel_tol) {
  if (m.size() == 0)
    return 0;
  Eigen::VectorXd s = Eigen::BDCSVD<CMatrix>(m).singularValues();
  if (s.size() == 0 || s(0) == 0.0)
    return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0))
      ++r;
  return r;
}

CMatrix nullspace(const CMatrix& m, double rel_tol) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0)
    return CMatrix::Identity(n, n);
  auto svd = full_svd(m);
  Eigen::VectorXd s = svd.singularValues();
  int r = 0;
  if (s.size() > 0 && s(0) > 0.0)
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > rel_tol * s(0))
        ++r;
  return svd.matrixV().rightCols(n - r);
}

CMatrix orthonormal_columns(const CMatrix& m, double tol) {
  double scale = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    scale = std::max(scale, m.col(j).norm());
  std::vector<CVector> kept;
  if (scale > 0.0) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      CVector v = m.col(j);
      for (int pass = 0; pass < 2; ++pass)
        for (const CVector& q : kept)
          v -= q.dot(v) * q;
      double nv = v.norm();
      if (nv > tol * scale)
        kept.push_back(v / nv);
    }
  }
  CMatrix out(m.rows(), static_cast<Eigen::Index>(kept.size()));
  for (size_t j = 0; j < kept.size(); ++j)
    out.col(static_cast<Eigen::Index>(j)) = kept[j];
  return out;
}

double subspace_distance(const CMatrix& u, const CMatrix& v) {
  if (u.cols() != v.cols() || u.rows() != v.rows())
    return 1.0;
  if (u.cols() == 0)
    return 0.0;
  CMatrix diff = u * u.adjoint() - v * v.adjoint();
  return Eigen::BDCSVD<CMatrix>(diff).singularValues()(0);
}

CMatrix inverse_sqrt_hermitian(const CMatrix& g) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= 0.0)
      throw VerificationError("Gram form is not positive definite");
    ev(i) = 1.0 / std::sqrt(ev(i));
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double condition_number(const CMatrix& m) {
  Eigen::VectorXd s = Eigen::BDCSVD<CMatrix>(m).singularValues();
  if (s.size() == 0)
    return 1.0;
  double smin = s(s.size() - 1);
  if (smin == 0.0)
    return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

CMatrix solution_space(const CMatrix& a, const CMatrix& b, double rel_tol) {
  CMatrix ab(a.rows(), a.cols() + b.cols());
  ab << a, b;
  return nullspace(ab, rel_tol);
}

double solution_space_distance(const CMatrix& a1, const CMatrix& b1,
                               const CMatrix& a2, const CMatrix& b2) {
  return subspace_distance(solution_space(a1, b1), solution_space(a2, b2));
}

double solution_space_distance_up_to_permutation(const CMatrix& a1, const CMatrix& b1,
                                                 const CMatrix& a2, const CMatrix& b2,
                                                 std::vector<int>* best_perm) {
  const int n = static_cast<int>(a2.cols());
  if (a1.cols() != n || b1.cols() != n || b2.cols() != n)
    return 1.0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CMatrix s1 = solution_space(a1, b1);
  double best = std::numeric_limits<double>::infinity();
  do {
    CMatrix pa(a2.rows(), n), pb(b2.rows(), n);
    for (int j = 0; j < n; ++j) {
      pa.col(perm[j]) = a2.col(j);
      pb.col(perm[j]) = b2.col(j);
    }
    double d = subspace_distance(s1, solution_space(pa, pb));
    if (d < best) {
      best = d;
      if (best_perm)
        *best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace isograph

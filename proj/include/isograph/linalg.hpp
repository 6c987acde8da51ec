#pragma once

#include <vector>

#include "isograph/common.hpp"

namespace isograph {

double max_norm(const CMatrix& m);

// Numerical rank: singular values above rel_tol times the largest one.
int numerical_rank(const CMatrix& m, double rel_tol = 1e-10);

// Orthonormal basis of the right nullspace, same threshold convention.
CMatrix nullspace(const CMatrix& m, double rel_tol = 1e-10);

// Sequential Gram-Schmidt over the columns of m. Columns whose residual
// falls below tol times the largest column norm are skipped, so the
// result spans the column space with columns in first-come order.
CMatrix orthonormal_columns(const CMatrix& m, double tol = 1e-10);

// Spectral-norm distance between the orthogonal projectors onto the column
// spans of u and v (both assumed orthonormal). Different dimensions give 1.
double subspace_distance(const CMatrix& u, const CMatrix& v);

CMatrix inverse_sqrt_hermitian(const CMatrix& g);

double condition_number(const CMatrix& m);

// The solution set {(x, y) : A x + B y = 0} as an orthonormal basis.
CMatrix solution_space(const CMatrix& a, const CMatrix& b, double rel_tol = 1e-10);

double solution_space_distance(const CMatrix& a1, const CMatrix& b1,
                               const CMatrix& a2, const CMatrix& b2);

// Smallest solution_space_distance over simultaneous column permutations
// of (a2, b2). Meant for small hand-written vertex matrices.
double solution_space_distance_up_to_permutation(const CMatrix& a1, const CMatrix& b1,
                                                 const CMatrix& a2, const CMatrix& b2,
                                                 std::vector<int>* best_perm = nullptr);

}  // namespace isograph

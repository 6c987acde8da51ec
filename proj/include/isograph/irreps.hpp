#pragma once

#include "isograph/rep.hpp"

namespace isograph {

IrrepTable irreps_cyclic(int n);
// Order: A1 (trivial), A2 (tau -> -1), then B1, B2 for even n, then the
// two-dimensional E1, ..., with sigma a rotation by 2 pi j / n and tau
// the reflection diag(1, -1).
IrrepTable irreps_dihedral(int n);
// Order: trivial, sign, standard, then for S4 standard x sign and the
// two-dimensional irrep pulled back from S3.
IrrepTable irreps_symmetric(int n);
IrrepTable irreps_product(const IrrepTable& t1, const IrrepTable& t2, const GroupPtr& product);

// Table for a group whose multiplication table matches one of the built-ins
// (Z_n, D_n with n <= 8, S3, S4, D4 x D4). Throws InputError otherwise.
IrrepTable builtin_irreps(const GroupPtr& g);

// Permutation representation of make_symmetric(n) on C^n: e_i -> e_p(i).
MatrixRep permutation_rep(const GroupPtr& sym);
MatrixRep sign_rep(const GroupPtr& sym);

}  // namespace isograph

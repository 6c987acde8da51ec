#pragma once

#include <string>
#include <vector>

#include "isograph/common.hpp"
#include "isograph/group.hpp"

namespace isograph {

// A matrix representation of a subgroup H of some parent group. Matrices
// are stored by parent element index; entries outside H are empty.
class MatrixRep {
public:
  // Throws InputError if the matrices do not form a homomorphism on the
  // domain within tol_rep (max-norm).
  MatrixRep(Subgroup domain, std::vector<CMatrix> matrices, std::string basis_label = "",
            double tol_rep = kTolRep);

  const Subgroup& domain() const { return domain_; }
  const GroupPtr& group() const { return domain_.parent; }
  int dim() const { return dim_; }
  const CMatrix& operator()(int g) const;
  const std::vector<CMatrix>& matrices() const { return matrices_; }
  const std::string& basis_label() const { return label_; }

private:
  Subgroup domain_;
  std::vector<CMatrix> matrices_;
  std::string label_;
  int dim_ = 0;
};

struct Character {
  Subgroup domain;
  std::vector<cplx> values;  // by parent element index, zero outside the domain

  cplx operator()(int g) const { return values[g]; }
};

struct IrrepTable {
  GroupPtr group;
  std::vector<std::string> names;
  std::vector<MatrixRep> irreps;
};

struct TrivialComponent {
  CMatrix basis;  // columns: trivial component first, then the completion
  int d_triv = 0;
};

MatrixRep trivial_rep(const Subgroup& domain);
MatrixRep regular_rep(const GroupPtr& g);
// Completes a representation from matrices of generators of the domain.
MatrixRep rep_from_generators(const Subgroup& domain, const std::vector<int>& generators,
                              const std::vector<CMatrix>& generator_matrices,
                              std::string basis_label = "");

Character character(const MatrixRep& rep);
cplx char_inner(const Character& c1, const Character& c2);
bool is_class_function(const Character& c, double tol = kTolRep);
Character restrict(const Character& c, const Subgroup& h);
MatrixRep restrict(const MatrixRep& rep, const Subgroup& h);
// Block (sigma(i), i) of the image of g is rho(h_i), g t_i = t_sigma(i) h_i.
MatrixRep induce(const MatrixRep& rep, const CosetDecomposition& cosets);
MatrixRep induce(const MatrixRep& rep);  // canonical left cosets
Character induced_character(const Character& c);
bool is_isomorphic(const MatrixRep& r1, const MatrixRep& r2, double tol = kTolRep);
bool characters_equal(const Character& c1, const Character& c2, double tol = kTolRep);
std::vector<int> decompose(const MatrixRep& rep, const IrrepTable& table);
std::vector<int> decompose(const Character& c, const IrrepTable& table);
// An invertible S with r1(x) S = S r2(x) on the common domain, scaled to
// Frobenius norm sqrt(dim). Throws InputError if the reps are not isomorphic.
CMatrix intertwiner(const MatrixRep& r1, const MatrixRep& r2);
// Returns the conjugated rep; when given, *basis receives the matrix U with
// new matrices U^-1 rho U.
MatrixRep unitarize(const MatrixRep& rep, CMatrix* basis = nullptr);
bool is_unitary(const MatrixRep& rep, double tol = kTolRep);
MatrixRep change_basis(const MatrixRep& rep, const CMatrix& s, std::string label = "");
TrivialComponent trivial_component_basis(const MatrixRep& rep, const Subgroup& stab);
// Averaging projector (1/|stab|) sum rho(h).
CMatrix averaging_projector(const MatrixRep& rep, const Subgroup& stab);
MatrixRep direct_sum(const std::vector<MatrixRep>& reps);
MatrixRep tensor_product(const MatrixRep& r1, const MatrixRep& r2, const GroupPtr& product);
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace isograph

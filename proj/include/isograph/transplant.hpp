#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isograph/quotient.hpp"
#include "isograph/spectral.hpp"

namespace isograph {

// An edge-wise linear map between functions on two graphs:
//   phi|_t = sum_s direct(t, s) f|_s + reversed(t, s) (f|_s read backwards).
// Nonzero entries only join edges of equal length.
struct TransplantMap {
  MetricGraph source;
  MetricGraph target;
  CMatrix direct;    // target edges x source edges
  CMatrix reversed;
  std::string kind;
  std::vector<std::string> provenance;

  struct Term {
    int target_edge = 0;
    cplx coefficient;
    bool reversed = false;
  };
  // Nonzero coefficients fed by one source edge.
  std::vector<Term> terms(int source_edge, double tol = 1e-14) const;
};

Eigenfunction apply(const TransplantMap& m, const Eigenfunction& f);

TransplantMap identity_transplant(const MetricGraph& g);
// The map applying `first` and then `second`.
TransplantMap compose(const TransplantMap& first, const TransplantMap& second);
// Throws VerificationError if the map is singular.
TransplantMap inverse(const TransplantMap& m);
double coefficient_distance(const TransplantMap& a, const TransplantMap& b);

// Both quotients must come from the same parent and representatives; only
// their bases may differ. Two different matrix forms of one rep are related
// by the intertwiner s (rho1(x) s = s rho2(x)), found automatically when
// s is empty. Throws InputError otherwise.
TransplantMap basis_change_transplant(const QuotientGraph& q1, const QuotientGraph& q2,
                                      const CMatrix& s = CMatrix());

// q2 must be built with representative elements[i] * (q1 representative)
// and basis rho(elements[i]) times the q1 basis on every edge orbit i.
// The result only identifies edges, possibly reversing them.
TransplantMap representative_change_transplant(const QuotientGraph& q1, const QuotientGraph& q2,
                                               const std::vector<int>& elements);
// The spec of such a q2; `resolved` must come from resolve_spec.
QuotientSpec move_representatives(const QuotientSpec& resolved, const std::vector<int>& elements);

// Both quotients built over one parent: `sub` for a rep R of H, `ind` for
// induce(R, cosets). The result is an edge identification when the two were
// built with the coordinated choices of induction_specs; otherwise it is
// rejected with InputError.
TransplantMap induction_transplant(const QuotientGraph& sub, const QuotientGraph& ind,
                                   const CosetDecomposition& cosets);

// Coordinated specs for the quotients by R and by induce(R, cosets): the
// representatives of the H-orbits are t^-1 times those of the G-orbits,
// with t running over double coset representatives, and each Ind basis
// averages the translates of the corresponding R basis.
std::pair<QuotientSpec, QuotientSpec> induction_specs(const MetricGraph& g, const GraphAction& a,
                                                      const MatrixRep& rep, const CosetDecomposition& cosets);

// General construction through the parent graph. The source tuple of
// functions is optionally induced along `lift`, multiplied by the
// intertwiner s (rho_from(x) s = s rho_to(x)), and optionally restricted
// back from an induction along `drop` to the target rep's subgroup.
TransplantMap parent_transplant(const QuotientGraph& from, const QuotientGraph& to, const CMatrix& s,
                                const CosetDecomposition* lift = nullptr,
                                const CosetDecomposition* drop = nullptr);

struct TransplantCheck {
  double k = 0.0;
  int multiplicity = 0;
  double max_residual = 0.0;
  double gram_det = 0.0;
  bool target_has_k = false;
  bool ok = true;
};

struct TransplantReport {
  bool ok = true;
  int checked = 0;
  std::vector<TransplantCheck> eigenvalues;
  std::vector<std::string> problems;
};

// Maps every eigenfunction of the first `count` source eigenvalues and
// checks the target vertex conditions, the target spectrum and the
// independence of the images.
TransplantReport verify_transplant(const TransplantMap& m, int count = 10, const SpectralOptions& opts = {},
                                   double tol_residual = 1e-6, double tol_gram = 1e-8);

}  // namespace isograph

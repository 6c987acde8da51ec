#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isograph/action.hpp"
#include "isograph/graph.hpp"
#include "isograph/rep.hpp"
#include "isograph/spectral.hpp"

namespace isograph {

// Input of the quotient construction. The acting group is the domain of
// rep. Empty bases or representative lists select the defaults: unitarize
// the rep with matrix U, take U as the global basis and U times the
// trivial-component basis of each edge stabilizer as orbit basis; minimal
// ids as representatives.
struct QuotientSpec {
  MetricGraph graph;
  GraphAction action;
  MatrixRep rep;
  std::vector<CMatrix> edge_bases;  // one per edge orbit, columns over the stored basis
  CMatrix global_basis;
  std::vector<int> edge_reps;       // one parent edge per orbit, any order
  std::vector<int> vertex_reps;
};

// Edge-end of the parent vertex v~ that lies on g * (representative of
// orbit), meeting that representative at `side`.
struct EndAssignment {
  EdgeEnd parent_end;
  int element = 0;
  int orbit = 0;
  Side side = Side::tail;
};

struct QuotientEdgeInfo {
  int orbit = 0;
  int parent_edge = 0;
  int basis_index = 0;  // j - 1
};

struct QuotientVertexInfo {
  int orbit = 0;
  int parent_vertex = 0;
  int quotient_vertex = -1;  // -1 when no copies of any incident edge survive
  std::vector<EndAssignment> ends;
  CMatrix theta_prime;        // ends x distinct (orbit, side)
  CMatrix theta;              // (ends * d) x quotient degree
  CMatrix a_full, b_full;     // before row reduction
};

struct QuotientGraph {
  MetricGraph graph;
  std::vector<QuotientEdgeInfo> edges;       // by quotient edge
  std::vector<QuotientVertexInfo> vertices;  // by parent vertex orbit
  MetricGraph parent;
  GraphAction action;
  MatrixRep rep;
  OrbitData orbits;
  std::vector<CMatrix> edge_bases;  // by orbit
  CMatrix global_basis;
  std::vector<int> d;               // trivial dimension per edge orbit
  std::vector<int> first_edge;      // quotient edge of (orbit, j = 1), -1 if none
};

// Fills in all defaults and checks the basis invariants.
QuotientSpec resolve_spec(const QuotientSpec& spec);

QuotientGraph build_quotient(const QuotientSpec& spec);

// The resolved spec a quotient was built from.
QuotientSpec spec_of(const QuotientGraph& q);

// Matrix [rho(g^-1)] from the global basis to the basis of an edge orbit.
CMatrix mixed_matrix(const QuotientGraph& q, int orbit, int element);

struct SelfAdjointPrediction {
  std::optional<bool> predicted;
  std::string branch;  // "free", "neumann" or "undetermined"
  std::vector<std::string> notes;
  bool built_self_adjoint = false;
  bool consistent = true;
};

SelfAdjointPrediction check_quotient_self_adjoint(const QuotientSpec& spec);

// d functions on the parent, in the global basis, from one quotient function.
std::vector<Eigenfunction> decode(const QuotientGraph& q, const Eigenfunction& f, double tol = 1e-8);
// Inverse of decode; throws VerificationError if the functions do not
// transform according to the rep.
Eigenfunction encode(const QuotientGraph& q, const std::vector<Eigenfunction>& fs, double tol = 1e-8);

}  // namespace isograph

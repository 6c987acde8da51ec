#pragma once

#include <string>
#include <vector>

#include "isograph/action.hpp"
#include "isograph/graph.hpp"
#include "isograph/quotient.hpp"
#include "isograph/rep.hpp"

namespace isograph {

struct NamedSubgroup {
  std::string name;
  Subgroup subgroup;
};

// A representation together with the construction data used to build its
// quotient. Empty fields select the quotient defaults. Representatives are
// edge and vertex ids of the entry's graph.
struct CatalogRep {
  std::string name;
  MatrixRep rep;
  CMatrix global_basis;
  bool edge_bases_follow_global = false;
  std::vector<std::string> edge_reps;
  std::vector<std::string> vertex_reps;
  std::string note;
};

struct CatalogEntry {
  std::string id;
  std::vector<double> params;
  MetricGraph graph;
  GraphAction action;
  std::vector<NamedSubgroup> subgroups;
  std::vector<CatalogRep> reps;
  std::string notes;

  const CatalogRep& rep(const std::string& name) const;      // throws InputError
  const Subgroup& subgroup(const std::string& name) const;   // throws InputError
};

// Builds a graph and action from real orthogonal matrices indexed by group
// element. Every orbit is seeded by one point (or one edge, described by
// its tail, head and an interior point that identifies it among parallel
// edges). Seeds keep their own ids; an image first reached through element
// g is named "<seed>:<name of g>".
class SymmetricGraphBuilder {
public:
  SymmetricGraphBuilder(GroupPtr group, std::vector<Eigen::MatrixXd> matrices);

  void add_vertex_orbit(const std::string& id, const Eigen::VectorXd& point);
  void add_edge_orbit(const std::string& id, const Eigen::VectorXd& tail, const Eigen::VectorXd& head,
                      const Eigen::VectorXd& interior, double length);
  MetricGraph graph() const;
  GraphAction action() const;

private:
  int find_vertex(const Eigen::VectorXd& p) const;
  int find_edge(const Eigen::VectorXd& interior) const;

  GroupPtr group_;
  std::vector<Eigen::MatrixXd> mats_;
  std::vector<Eigen::VectorXd> vpos_;
  std::vector<Eigen::VectorXd> epos_;
  MetricGraph g_;
};

CatalogEntry d4_square_graph(double a = 1.0, double b = 1.4142135623730951, double c = 1.7320508075688772);
CatalogEntry d4_cayley_graph(double sigma_length = 1.0, double tau_length = 1.4142135623730951);
CatalogEntry tetrahedron_graph(double l = 1.0);
CatalogEntry cube_graph(double a = 1.0, double b = 1.4142135623730951, double c = 1.7320508075688772);
CatalogEntry d3_triangle_graph(double a = 1.0, double b = 1.4142135623730951, double c = 1.7320508075688772,
                               double loop = 0.7853981633974483);
// A star with one group element swapping two of its three edges; used as
// a self-adjointness counterexample.
CatalogEntry z2_star_graph(double a = 1.0, double b = 1.4142135623730951);

// The orthogonal D4 irrep parameterized by an angle; theta = pi/3 is the
// alternative orthogonal form of the 2-dimensional irrep.
MatrixRep d4_theta_rep(const GroupPtr& d4, double theta);

std::vector<std::string> catalog_ids();
// Builds an entry by id with its default parameters, or with `params` when
// non-empty. Throws InputError for unknown ids or bad parameter counts.
CatalogEntry catalog_entry(const std::string& id, const std::vector<double>& params = {});

// Quotient input for one of the entry's reps: subdivides the edges that
// the rep's domain maps between neighbours and resolves representative
// names, completing missing ones with the orbit minimum.
QuotientSpec quotient_spec(const CatalogEntry& entry, const std::string& rep_name);
QuotientSpec quotient_spec(const CatalogEntry& entry, const CatalogRep& rep);

}  // namespace isograph

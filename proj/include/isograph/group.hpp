#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isograph/common.hpp"

namespace isograph {

// A finite group stored as its full multiplication table over dense
// element indices.
class FiniteGroup {
public:
  // table[a * order + b] is the index of a*b. Throws InputError unless the
  // table defines a group; names default to "g0", "g1", ...
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int element_order(int a) const;
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;
  // Like find() but throws InputError naming the missing element.
  int element(std::string_view name) const;
  const std::vector<int>& table() const { return table_; }
  bool same_table(const FiniteGroup& other) const;

private:
  int order_;
  std::vector<int> table_;
  std::vector<std::string> names_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

bool same_group(const GroupPtr& a, const GroupPtr& b);

struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted ascending

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  bool is_whole() const { return order() == parent->order(); }
  bool operator==(const Subgroup& o) const;
};

struct CosetDecomposition {
  enum class Side { left, right };
  Subgroup subgroup;
  std::vector<int> representatives;
  Side side = Side::left;
  std::vector<int> coset_of;  // element -> index of its coset

  int index() const { return static_cast<int>(representatives.size()); }
};

struct DoubleCosetDecomposition {
  Subgroup left;   // K
  Subgroup right;  // H
  std::vector<int> representatives;          // t_k
  std::vector<std::vector<int>> refined;     // t_(k,m), refined[k][0] == t_k
  std::vector<int> elements_of(int k) const;  // K t_k H, sorted

  int count() const { return static_cast<int>(representatives.size()); }
};

GroupPtr make_cyclic(int n);
// sigma^a has index a, tau sigma^a has index n + a.
GroupPtr make_dihedral(int n);
// Permutations of {1..n} in lexicographic order of their one-line form;
// (p q)(i) = p(q(i)).
GroupPtr make_symmetric(int n);
GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2);
// Group generated by real matrices under multiplication, with the identity
// first and the rest in breadth-first order over the generators. The
// matrices themselves are returned through out_matrices when given.
GroupPtr group_from_matrices(const std::vector<Eigen::MatrixXd>& generators,
                             std::vector<Eigen::MatrixXd>* out_matrices = nullptr,
                             const std::vector<std::string>& generator_names = {});

// One-line form (values 1..n) of an element of make_symmetric(n).
std::vector<int> permutation_of(const FiniteGroup& sym, int element);

// "D4", "S3", "S4", "D4xD4", "Dn:<n>", "Zn:<n>", "Sn:<n>".
GroupPtr builtin_group(const std::string& id);

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
// Validates closure; throws InputError otherwise.
Subgroup make_subgroup(const GroupPtr& g, std::vector<int> elements);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup conjugate_subgroup(const Subgroup& h, int g);  // g H g^-1
// H1 x H2 inside the group built by direct_product(H1.parent, H2.parent).
Subgroup product_subgroup(const GroupPtr& product, const Subgroup& h1, const Subgroup& h2);

CosetDecomposition left_cosets(const Subgroup& h);
CosetDecomposition right_cosets(const Subgroup& h);
DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& h);
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

}  // namespace isograph

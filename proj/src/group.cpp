#include "isograph/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "isograph/common.hpp"

namespace isograph {

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ <= 0)
    throw InputError("group order must be positive");
  const size_t n = static_cast<size_t>(order_);
  if (table_.size() != n * n)
    throw InputError("group table must have order*order entries");
  for (int v : table_)
    if (v < 0 || v >= order_)
      throw InputError("group table entry out of range");
  if (names_.empty())
    for (int i = 0; i < order_; ++i)
      names_.push_back("g" + std::to_string(i));
  if (names_.size() != n)
    throw InputError("group names must match the order");
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != n)
    throw InputError("group element names must be unique");

  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok)
      identity_ = e;
  }
  if (identity_ < 0)
    throw InputError("group table has no identity element");
  inverse_.assign(n, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0)
      throw InputError("group element " + names_[a] + " has no inverse");
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw InputError("group table is not associative at (" + names_[a] + ", " +
                           names_[b] + ", " + names_[c] + ")");
    }
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a))
    ++k;
  return k;
}

std::optional<int> FiniteGroup::find(std::string_view name) const {
  for (int i = 0; i < order_; ++i)
    if (names_[i] == name)
      return i;
  return std::nullopt;
}

int FiniteGroup::element(std::string_view name) const {
  if (auto i = find(name))
    return *i;
  throw InputError("unknown group element '" + std::string(name) + "'");
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return order_ == other.order_ && table_ == other.table_;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::operator==(const Subgroup& o) const {
  return same_group(parent, o.parent) && elements == o.elements;
}

std::vector<int> DoubleCosetDecomposition::elements_of(int k) const {
  const FiniteGroup& g = *left.parent;
  std::set<int> out;
  for (int a : left.elements)
    for (int b : right.elements)
      out.insert(g.mul(g.mul(a, representatives[k]), b));
  return {out.begin(), out.end()};
}

GroupPtr make_cyclic(int n) {
  if (n < 1)
    throw InputError("cyclic group needs n >= 1");
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(names));
}

GroupPtr make_dihedral(int n) {
  if (n < 1)
    throw InputError("dihedral group needs n >= 1");
  const int order = 2 * n;
  auto md = [n](int x) { return ((x % n) + n) % n; };
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      bool rx = x >= n, ry = y >= n;
      int a = x % n, b = y % n;
      int r;
      if (!rx && !ry)
        r = md(a + b);
      else if (!rx && ry)
        r = n + md(b - a);
      else if (rx && !ry)
        r = n + md(a + b);
      else
        r = md(b - a);
      table[static_cast<size_t>(x) * order + y] = r;
    }
  std::vector<std::string> names;
  auto power = [](const std::string& base, int a) {
    if (a == 0)
      return std::string();
    return a == 1 ? base : base + "^" + std::to_string(a);
  };
  for (int a = 0; a < n; ++a)
    names.push_back(a == 0 ? "e" : power("s", a));
  for (int a = 0; a < n; ++a)
    names.push_back("t" + power("s", a));
  return std::make_shared<FiniteGroup>(order, std::move(table), std::move(names));
}

namespace {

std::string cycle_name(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i + 1)
      continue;
    std::string cyc = "(";
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      if (cyc.size() > 1)
        cyc += " ";
      cyc += std::to_string(j + 1);
      j = p[j] - 1;
    }
    out += cyc + ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

GroupPtr make_symmetric(int n) {
  if (n < 1)
    throw InputError("symmetric group needs n >= 1");
  if (n > 8)
    throw InputError("symmetric group limited to n <= 8 (order 40320), got n = " +
                     std::to_string(n));
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i)
    index[perms[i]] = i;
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<int> r(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i)
        r[i] = perms[a][perms[b][i] - 1];
      table[static_cast<size_t>(a) * order + b] = index.at(r);
    }
  std::vector<std::string> names;
  for (const auto& q : perms)
    names.push_back(cycle_name(q));
  return std::make_shared<FiniteGroup>(order, std::move(table), std::move(names));
}

std::vector<int> permutation_of(const FiniteGroup& sym, int element) {
  int n = 1;
  int fact = 1;
  while (fact < sym.order())
    fact *= ++n;
  if (fact != sym.order())
    throw InputError("group is not a symmetric group");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  for (int i = 0; i < element; ++i)
    std::next_permutation(p.begin(), p.end());
  return p;
}

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  const int n1 = g1->order(), n2 = g2->order();
  const int order = n1 * n2;
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      table[static_cast<size_t>(x) * order + y] =
          g1->mul(x / n2, y / n2) * n2 + g2->mul(x % n2, y % n2);
  std::vector<std::string> names;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      names.push_back("(" + g1->name(a) + "," + g2->name(b) + ")");
  return std::make_shared<FiniteGroup>(order, std::move(table), std::move(names));
}

GroupPtr group_from_matrices(const std::vector<Eigen::MatrixXd>& generators,
                             std::vector<Eigen::MatrixXd>* out_matrices,
                             const std::vector<std::string>& generator_names) {
  if (generators.empty())
    throw InputError("matrix group needs at least one generator");
  const Eigen::Index dim = generators[0].rows();
  auto key = [](const Eigen::MatrixXd& m) {
    std::vector<long long> k(static_cast<size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.size(); ++i)
      k[static_cast<size_t>(i)] = std::llround(m.data()[i] * 1e8);
    return k;
  };
  std::vector<Eigen::MatrixXd> mats{Eigen::MatrixXd::Identity(dim, dim)};
  std::vector<std::string> names{"e"};
  std::map<std::vector<long long>, int> index{{key(mats[0]), 0}};
  for (size_t head = 0; head < mats.size(); ++head) {
    for (size_t s = 0; s < generators.size(); ++s) {
      Eigen::MatrixXd m = mats[head] * generators[s];
      auto k = key(m);
      if (index.count(k))
        continue;
      if (mats.size() > 100000)
        throw InputError("matrix generators do not generate a small finite group");
      index[k] = static_cast<int>(mats.size());
      mats.push_back(m);
      std::string gname = s < generator_names.size() ? generator_names[s] : "m" + std::to_string(s);
      names.push_back(head == 0 ? gname : names[head] + "*" + gname);
    }
  }
  const int order = static_cast<int>(mats.size());
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      auto it = index.find(key(mats[a] * mats[b]));
      if (it == index.end())
        throw InputError("matrix group is not closed");
      table[static_cast<size_t>(a) * order + b] = it->second;
    }
  if (out_matrices)
    *out_matrices = mats;
  return std::make_shared<FiniteGroup>(order, std::move(table), std::move(names));
}

GroupPtr builtin_group(const std::string& id) {
  auto number_after = [&](const std::string& prefix) {
    try {
      size_t pos = 0;
      int n = std::stoi(id.substr(prefix.size()), &pos);
      if (pos + prefix.size() != id.size())
        throw InputError("");
      return n;
    } catch (const std::exception&) {
      throw InputError("malformed group id '" + id + "'");
    }
  };
  if (id == "D4")
    return make_dihedral(4);
  if (id == "D3")
    return make_dihedral(3);
  if (id == "S3")
    return make_symmetric(3);
  if (id == "S4")
    return make_symmetric(4);
  if (id == "D4xD4") {
    auto d4 = make_dihedral(4);
    return direct_product(d4, d4);
  }
  if (id.rfind("Dn:", 0) == 0)
    return make_dihedral(number_after("Dn:"));
  if (id.rfind("Zn:", 0) == 0)
    return make_cyclic(number_after("Zn:"));
  if (id.rfind("Sn:", 0) == 0)
    return make_symmetric(number_after("Sn:"));
  throw InputError("unknown built-in group id '" + id + "'");
}

Subgroup whole_group(const GroupPtr& g) {
  Subgroup h{g, {}};
  h.elements.resize(g->order());
  std::iota(h.elements.begin(), h.elements.end(), 0);
  return h;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {g->identity()}}; }

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
  std::set<int> elems{g->identity()};
  std::deque<int> queue{g->identity()};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      if (s < 0 || s >= g->order())
        throw InputError("generator index out of range");
      int y = g->mul(x, s);
      if (elems.insert(y).second)
        queue.push_back(y);
    }
  }
  return Subgroup{g, {elems.begin(), elems.end()}};
}

Subgroup make_subgroup(const GroupPtr& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h{g, elements};
  if (!h.contains(g->identity()))
    throw InputError("subgroup must contain the identity");
  for (int a : elements) {
    if (a < 0 || a >= g->order())
      throw InputError("subgroup element index out of range");
    for (int b : elements)
      if (!h.contains(g->mul(a, b)))
        throw InputError("element set is not closed under multiplication");
  }
  return h;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out{a.parent, {}};
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(out.elements));
  return out;
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  Subgroup out{h.parent, {}};
  for (int x : h.elements)
    out.elements.push_back(h.parent->conj(g, x));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

Subgroup product_subgroup(const GroupPtr& product, const Subgroup& h1, const Subgroup& h2) {
  const int n2 = h2.parent->order();
  if (product->order() != h1.parent->order() * n2)
    throw InputError("product group does not match the factors");
  Subgroup out{product, {}};
  for (int a : h1.elements)
    for (int b : h2.elements)
      out.elements.push_back(a * n2 + b);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

namespace {

CosetDecomposition cosets(const Subgroup& h, CosetDecomposition::Side side) {
  const FiniteGroup& g = *h.parent;
  CosetDecomposition d{h, {}, side, std::vector<int>(g.order(), -1)};
  for (int x = 0; x < g.order(); ++x) {
    if (d.coset_of[x] >= 0)
      continue;
    int idx = d.index();
    d.representatives.push_back(x);
    for (int y : h.elements)
      d.coset_of[side == CosetDecomposition::Side::left ? g.mul(x, y) : g.mul(y, x)] = idx;
  }
  return d;
}

}  // namespace

CosetDecomposition left_cosets(const Subgroup& h) {
  return cosets(h, CosetDecomposition::Side::left);
}

CosetDecomposition right_cosets(const Subgroup& h) {
  return cosets(h, CosetDecomposition::Side::right);
}

DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& h) {
  if (!same_group(k.parent, h.parent))
    throw InputError("double cosets need subgroups of one group");
  const FiniteGroup& g = *k.parent;
  CosetDecomposition left = left_cosets(h);
  DoubleCosetDecomposition d{k, h, {}, {}};
  std::vector<bool> covered(g.order(), false);
  for (int t = 0; t < g.order(); ++t) {
    if (covered[t])
      continue;
    d.representatives.push_back(t);
    std::vector<int> refined;
    std::set<int> seen_cosets;
    std::vector<int> ks{g.identity()};
    for (int a : k.elements)
      if (a != g.identity())
        ks.push_back(a);
    for (int a : ks) {
      int x = g.mul(a, t);
      if (seen_cosets.insert(left.coset_of[x]).second)
        refined.push_back(x);
      for (int b : h.elements)
        covered[g.mul(x, b)] = true;
    }
    d.refined.push_back(std::move(refined));
  }
  return d;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::set<int> cls;
    for (int y = 0; y < g.order(); ++y)
      cls.insert(g.conj(y, x));
    for (int c : cls)
      seen[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

}  // namespace isograph

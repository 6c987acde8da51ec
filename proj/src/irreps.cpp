#include "isograph/irreps.hpp"

#include <cmath>
#include <numbers>

#include "isograph/linalg.hpp"

namespace isograph {

namespace {

// Orthonormal basis of the complement of (1, ..., 1) in C^n.
CMatrix sum_zero_basis(int n) {
  CMatrix m(n, n - 1);
  for (int j = 0; j < n - 1; ++j) {
    m.col(j).setZero();
    m(j, j) = 1.0;
    m(j + 1, j) = -1.0;
  }
  return orthonormal_columns(m);
}

MatrixRep compress(const MatrixRep& rep, const CMatrix& q, const std::string& label) {
  std::vector<CMatrix> mats(rep.group()->order());
  for (int x : rep.domain().elements)
    mats[x] = q.adjoint() * rep(x) * q;
  return MatrixRep(rep.domain(), std::move(mats), label);
}

int parity(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

IrrepTable irreps_cyclic(int n) {
  GroupPtr g = make_cyclic(n);
  IrrepTable t{g, {}, {}};
  for (int j = 0; j < n; ++j) {
    std::vector<CMatrix> mats(n);
    for (int a = 0; a < n; ++a)
      mats[a] = CMatrix::Constant(1, 1, std::polar(1.0, 2.0 * std::numbers::pi * j * a / n));
    t.names.push_back("X" + std::to_string(j));
    t.irreps.emplace_back(whole_group(g), std::move(mats), "character " + std::to_string(j));
  }
  return t;
}

IrrepTable irreps_dihedral(int n) {
  GroupPtr g = make_dihedral(n);
  IrrepTable t{g, {}, {}};
  auto one_dim = [&](const std::string& name, double s, double r) {
    std::vector<CMatrix> mats(2 * n);
    for (int a = 0; a < n; ++a) {
      mats[a] = CMatrix::Constant(1, 1, std::pow(s, a));
      mats[n + a] = CMatrix::Constant(1, 1, r * std::pow(s, a));
    }
    t.names.push_back(name);
    t.irreps.emplace_back(whole_group(g), std::move(mats), name);
  };
  one_dim("A1", 1.0, 1.0);
  one_dim("A2", 1.0, -1.0);
  if (n % 2 == 0) {
    one_dim("B1", -1.0, 1.0);
    one_dim("B2", -1.0, -1.0);
  }
  for (int j = 1; 2 * j < n; ++j) {
    double phi = 2.0 * std::numbers::pi * j / n;
    CMatrix rot(2, 2), refl(2, 2);
    rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    refl << 1.0, 0.0, 0.0, -1.0;
    std::vector<CMatrix> mats(2 * n);
    CMatrix p = CMatrix::Identity(2, 2);
    for (int a = 0; a < n; ++a) {
      mats[a] = p;
      mats[n + a] = refl * p;
      p = p * rot;
    }
    std::string name = "E" + std::to_string(j);
    t.names.push_back(name);
    t.irreps.emplace_back(whole_group(g), std::move(mats), name);
  }
  return t;
}

MatrixRep permutation_rep(const GroupPtr& sym) {
  std::vector<CMatrix> mats(sym->order());
  for (int x = 0; x < sym->order(); ++x) {
    std::vector<int> p = permutation_of(*sym, x);
    const int n = static_cast<int>(p.size());
    mats[x] = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      mats[x](p[i] - 1, i) = 1.0;
  }
  return MatrixRep(whole_group(sym), std::move(mats), "standard basis {f_i}");
}

MatrixRep sign_rep(const GroupPtr& sym) {
  std::vector<CMatrix> mats(sym->order());
  for (int x = 0; x < sym->order(); ++x)
    mats[x] = CMatrix::Constant(1, 1, static_cast<double>(parity(permutation_of(*sym, x))));
  return MatrixRep(whole_group(sym), std::move(mats), "sign");
}

IrrepTable irreps_symmetric(int n) {
  if (n != 3 && n != 4)
    throw InputError("built-in symmetric group tables exist for n = 3 and n = 4 only");
  GroupPtr g = make_symmetric(n);
  IrrepTable t{g, {}, {}};
  MatrixRep sgn = sign_rep(g);
  MatrixRep std_rep = compress(permutation_rep(g), sum_zero_basis(n), "standard");
  t.names = {"trivial", "sign", "standard"};
  t.irreps = {trivial_rep(whole_group(g)), sgn, std_rep};
  if (n == 4) {
    std::vector<CMatrix> twisted(g->order());
    for (int x = 0; x < g->order(); ++x)
      twisted[x] = std_rep(x) * sgn(x)(0, 0);
    t.names.push_back("standard x sign");
    t.irreps.emplace_back(whole_group(g), std::move(twisted), "standard x sign");
    // S4 permutes the three ways of pairing {1,2,3,4}; pairing i is the
    // one that puts 1 together with i + 2.
    auto pairing_of = [](const std::vector<int>& p, int i) {
      int a = p[0], b = p[i + 1];
      if (a == 1 || b == 1)
        return (a == 1 ? b : a) - 2;
      for (int v = 2; v <= 4; ++v)
        if (v != a && v != b)
          return v - 2;
      return -1;
    };
    std::vector<CMatrix> pair_mats(g->order());
    CMatrix q = sum_zero_basis(3);
    for (int x = 0; x < g->order(); ++x) {
      std::vector<int> p = permutation_of(*g, x);
      CMatrix m = CMatrix::Zero(3, 3);
      for (int i = 0; i < 3; ++i)
        m(pairing_of(p, i), i) = 1.0;
      pair_mats[x] = q.adjoint() * m * q;
    }
    t.names.push_back("two-dimensional");
    t.irreps.emplace_back(whole_group(g), std::move(pair_mats), "two-dimensional");
  }
  return t;
}

IrrepTable irreps_product(const IrrepTable& t1, const IrrepTable& t2, const GroupPtr& product) {
  IrrepTable t{product, {}, {}};
  for (size_t i = 0; i < t1.irreps.size(); ++i)
    for (size_t j = 0; j < t2.irreps.size(); ++j) {
      t.names.push_back(t1.names[i] + " x " + t2.names[j]);
      t.irreps.push_back(tensor_product(t1.irreps[i], t2.irreps[j], product));
    }
  return t;
}

IrrepTable builtin_irreps(const GroupPtr& g) {
  const int n = g->order();
  auto relabel = [&](IrrepTable t) {
    // Rebind to the caller's group object so domains compare equal.
    IrrepTable out{g, t.names, {}};
    for (const MatrixRep& r : t.irreps)
      out.irreps.emplace_back(whole_group(g), r.matrices(), r.basis_label());
    return out;
  };
  if (make_cyclic(n)->same_table(*g))
    return relabel(irreps_cyclic(n));
  if (n % 2 == 0 && n / 2 <= 8 && make_dihedral(n / 2)->same_table(*g))
    return relabel(irreps_dihedral(n / 2));
  if (n == 6 && make_symmetric(3)->same_table(*g))
    return relabel(irreps_symmetric(3));
  if (n == 24 && make_symmetric(4)->same_table(*g))
    return relabel(irreps_symmetric(4));
  if (n == 64) {
    GroupPtr d4 = make_dihedral(4);
    GroupPtr prod = direct_product(d4, d4);
    if (prod->same_table(*g)) {
      IrrepTable t4 = irreps_dihedral(4);
      return relabel(irreps_product(t4, t4, prod));
    }
  }
  throw InputError("no built-in irreducible table for this group (order " + std::to_string(n) + ")");
}

}  // namespace isograph

#pragma once

#include <cmath>
#include <set>
#include <vector>

#include "isograph/group.hpp"
#include "isograph/linalg.hpp"
#include "isograph/rep.hpp"

namespace testing_helpers {

using namespace isograph;

inline CMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Brute-force conjugacy class sizes straight from the table, sorted by the
// smallest member, written without the library's class routine.
inline std::vector<int> brute_class_sizes(const FiniteGroup& g) {
  std::vector<int> sizes;
  std::vector<bool> seen(g.order(), false);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::set<int> cls;
    for (int y = 0; y < g.order(); ++y) {
      int yinv = 0;
      while (g.mul(y, yinv) != g.identity())
        ++yinv;
      cls.insert(g.mul(g.mul(y, x), yinv));
    }
    for (int c : cls)
      seen[c] = true;
    sizes.push_back(static_cast<int>(cls.size()));
  }
  return sizes;
}

}  // namespace testing_helpers

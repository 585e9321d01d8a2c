#pragma once

// Integer partitions (weakly increasing parts) and ordered partitions
// (compositions) with the symmetry factor prod 1/mul(i)!.

#include "ogw/rational.hpp"

#include <functional>
#include <map>
#include <vector>

namespace ogw {

using Parts = std::vector<int>;

/// All compositions of d into positive parts.
inline std::vector<Parts> ordered_partitions(int d) {
  std::vector<Parts> out;
  if (d <= 0) return out;
  Parts cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(d);
  return out;
}

/// All partitions of f with 1 <= f_1 <= f_2 <= ...
inline std::vector<Parts> partitions(int f) {
  std::vector<Parts> out;
  if (f <= 0) return out;
  Parts cur;
  std::function<void(int, int)> rec = [&](int rest, int min_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(f, 1);
  return out;
}

inline Rat symmetry_factor(const Parts& sigma) {
  std::map<int, unsigned long> mul;
  for (int p : sigma) ++mul[p];
  Int den = 1;
  for (const auto& [part, m] : mul) den *= factorial(m);
  return Rat(Int(1), den);
}

}  // namespace ogw

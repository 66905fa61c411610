#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "brunnian/pd.hpp"

namespace brunnian::testing {

// structure-preserving relabeling: permute edge ids and shuffle crossings
inline link_diagram random_relabel(const link_diagram& d, std::mt19937& rng) {
  int max_e = 0;
  for (const auto& x : d.crossings)
    for (int k = 0; k < 4; k++) max_e = std::max(max_e, x[k]);
  std::vector<edge_id> perm(max_e + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  link_diagram out = d;
  out.names.clear();
  for (auto& x : out.crossings)
    for (int k = 0; k < 4; k++) x[k] = perm[x[k]];
  std::shuffle(out.crossings.begin(), out.crossings.end(), rng);
  return out;
}

}  // namespace brunnian::testing

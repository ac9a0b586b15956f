#pragma once

#include <map>
#include <vector>

#include "wrc/wreath.hpp"

namespace wrc {

// Label of the basic commutator [b_k, a_{j1}, ..., a_{j_{i-1}}] with
// 1 <= k <= n and a sorted multi-index 1 <= j1 <= ... <= j_{i-1} <= m.
struct CommutatorLabel {
  int k;
  std::vector<int> js;

  bool operator<(const CommutatorLabel& o) const {
    return k != o.k ? k < o.k : js < o.js;
  }
  bool operator==(const CommutatorLabel& o) const { return k == o.k && js == o.js; }
};

// Image of an element of G_i in the free abelian quotient G_i / G_{i+1},
// written on the basic-commutator basis.
struct LcsCoordinates {
  int level = 2;
  std::map<CommutatorLabel, Int> coeffs;
};

inline constexpr int kDefaultLcsLevelCap = 8;

// b_k^{(a_{j1}-1)...(a_{j_{i-1}}-1)}
WreathElement basic_commutator(const GroupContext& ctx, int k, const std::vector<int>& js);

// g in G_i = N^{Delta^{i-1}} (i >= 2): top must vanish and every bottom
// coordinate must lie in Delta^{i-1} ZA.
bool in_lcs(const WreathElement& g, int level);

LcsCoordinates lcs_coords(const WreathElement& g, int level,
                          int level_cap = kDefaultLcsLevelCap);

// rank of G_i / G_{i+1}: n * C(m + i - 2, i - 1)
Int lcs_rank(const GroupContext& ctx, int level);

}  // namespace wrc

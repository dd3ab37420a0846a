#pragma once

// Independent reference computations used only by the tests.  Nothing here
// calls into the library's move generator or search code.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace ellab::oracle {

/// All partitions of `total` into exactly `parts` positive parts, each
/// descending, in descending lexicographic order.
inline std::vector<std::vector<int>> partitions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int, int)> rec = [&](int remaining, int slots, int cap) {
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int k = std::min(cap, remaining - (slots - 1)); k >= 1; --k) {
      current.push_back(k);
      rec(remaining - k, slots - 1, k);
      current.pop_back();
    }
  };
  rec(total, parts, total);
  return out;
}

/// Quotient configurations of `indices` by a p-isogeny, found by trying every
/// assignment of "divide by p" / "multiply by p" to the positions and keeping
/// those whose total is 12.  Returned as (divided positions, target) pairs,
/// ordered by divided positions.
struct OracleMove {
  std::vector<std::size_t> divided;
  std::vector<int> target;
};

inline std::vector<OracleMove> quotients_by_total(const std::vector<int>& indices, int p) {
  std::vector<OracleMove> out;
  const std::size_t n = indices.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    OracleMove m;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (std::size_t{1} << i)) {
        if (indices[i] % p != 0) ok = false;
        m.divided.push_back(i);
        m.target.push_back(indices[i] / p);
      } else {
        m.target.push_back(indices[i] * p);
      }
    }
    if (!ok || m.divided.empty()) continue;
    if (std::accumulate(m.target.begin(), m.target.end(), 0) == 12) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const OracleMove& a, const OracleMove& b) { return a.divided < b.divided; });
  return out;
}

/// Fixed points of x -> -x on a Kodaira fiber I_n (n = 0: smooth), counted on
/// the n-cycle model: component i goes to -i, the node between components j
/// and j+1 goes to the node between -j-1 and -j.  A fixed component carries
/// two fixed points (t -> 1/t on P^1), a fixed node one; a smooth fiber has
/// its four 2-torsion points.
inline int fiber_fixed_points_on_cycle(int n) {
  if (n == 0) return 4;
  int fixed_components = 0;
  int fixed_nodes = 0;
  for (int i = 0; i < n; ++i) {
    if ((2 * i) % n == 0) ++fixed_components;
    if ((2 * i + 1) % n == 0) ++fixed_nodes;
  }
  return 2 * fixed_components + fixed_nodes;
}

/// Distinct permutations of a tuple.
inline std::vector<std::vector<int>> permutations(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace ellab::oracle

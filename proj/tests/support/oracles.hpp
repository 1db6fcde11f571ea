#pragma once

// Brute-force reference computations used to freeze expected values. None of
// these go through the library's counting code paths.

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "orbidiamond/fermat_group.hpp"

namespace oracle {

/// Direct enumeration of [0, ub]^vars with the given sum.
inline std::uint64_t count_monomials(int total, int ub, int vars) {
  std::uint64_t count = 0;
  std::vector<int> b(static_cast<std::size_t>(vars), 0);
  if (vars == 0) return total == 0 ? 1 : 0;
  while (true) {
    if (std::accumulate(b.begin(), b.end(), 0) == total) ++count;
    int k = vars - 1;
    while (k >= 0 && b[k] == ub) b[k--] = 0;
    if (k < 0) break;
    ++b[k];
  }
  return count;
}

/// #{w in [lo, hi]^vars : sum w = total}.
inline std::uint64_t count_vectors_with_sum(int lo, int hi, int vars, int total) {
  return count_monomials(total - lo * vars, hi - lo, vars);
}

/// Orbits of the translation action of `steps` on Z/d, by flood fill.
inline std::uint64_t translation_orbits(int d, const std::vector<int>& steps) {
  std::vector<int> seen(static_cast<std::size_t>(d), -1);
  std::uint64_t orbits = 0;
  for (int start = 0; start < d; ++start) {
    if (seen[start] >= 0) continue;
    ++orbits;
    std::vector<int> stack{start};
    seen[start] = start;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int s : steps) {
        const int y = ((x + s) % d + d) % d;
        if (seen[y] < 0) {
          seen[y] = start;
          stack.push_back(y);
        }
      }
    }
  }
  return orbits;
}

/// Uniform random group element, for hand-rolled property tests.
inline orbidiamond::GroupElement random_element(std::mt19937_64& rng, int d, int n) {
  std::uniform_int_distribution<std::uint64_t> pick(0, orbidiamond::group_order(d, n) - 1);
  return orbidiamond::element_at(d, n, pick(rng));
}

}  // namespace oracle

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace orbidiamond {

/// The smooth Fermat slice {sum_{j in S} x_j^d = 0} inside P^{|S|-1}.
struct FermatSlice {
  int degree = 0;
  std::vector<int> coords;  // S, |S| >= 2

  int ambient_dim() const { return static_cast<int>(coords.size()) - 1; }
  int dim() const { return static_cast<int>(coords.size()) - 2; }
  int variables() const { return static_cast<int>(coords.size()); }
};

/// #{b in [0, upper_bound]^num_vars : sum b = total_degree}, by
/// inclusion-exclusion. Zero for negative degrees.
std::uint64_t monomial_count(int total_degree, int upper_bound, int num_vars);

/// h[p][q] = dim H^q(slice, Omega^p). A zero-dimensional slice is d points.
using HodgeMatrix = std::vector<std::vector<std::uint64_t>>;

HodgeMatrix hodge_matrix(const FermatSlice& slice);

/// Hodge classes decomposed by diagonal-torus character. A class with
/// character c is scaled by zeta^{sum_j w_j c_j} under weights w.
///
/// Primitive middle classes come from residue monomials b with character
/// c_j = b_j + 1; Lefschetz classes carry the zero character; the conjugate
/// bidegree carries negated characters. Zero-dimensional slices are not
/// decomposed: `points` holds d and the group acts by translating roots.
struct CharacterHodge {
  int degree = 0;
  int dim = 0;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> classes;  // (p, q) -> characters
  std::uint64_t points = 0;
};

/// Calls `visit` with the character of every class in H^{p,q}. Zero-dim
/// slices have no characters; use invariant_dim for those.
void for_each_character(const FermatSlice& slice, int p, int q,
                        const std::function<void(std::span<const int>)>& visit);

CharacterHodge character_classes(const FermatSlice& slice);

/// Dimension of the subspace of H^{p,q} invariant under the group generated
/// by `generator_weights`, each a weight vector indexed like slice.coords.
///
/// For positive-dimensional slices this counts characters annihilated by
/// every generator. For d points it counts orbits of the translation action
/// generated by w_1 - w_0.
std::uint64_t invariant_dim(const FermatSlice& slice,
                            std::span<const std::vector<int>> generator_weights, int p, int q);

/// h^i(P^l, O(k)) for i = 0..l.
std::vector<std::uint64_t> bott(int l, int k);

}  // namespace orbidiamond

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbidiamond/fermat_group.hpp"
#include "orbidiamond/orbifold_diamond.hpp"
#include "orbidiamond/parallel.hpp"

namespace orbidiamond {

/// A sector of the Landau-Ginzburg orbifold of W = sum x_j^d under
/// Gamma = {w in (Z/d)^{n+1} : sum w = 0 mod d}, which for d = n + 1 is the
/// group generated by G and the diagonal Z/d.
struct Sector {
  int d = 0;
  std::vector<int> weights;  // n + 1 residues in [0, d)

  /// Coordinates fixed by the sector, {j : w_j = 0}.
  std::vector<int> fixed_set() const;
  bool is_untwisted() const;
  /// No fixed coordinates.
  bool is_narrow() const;
  bool is_broad() const { return !is_untwisted() && !is_narrow(); }
  int weight_sum() const;
  Sector inverse() const;

  friend bool operator==(const Sector&, const Sector&) = default;
  friend auto operator<=>(const Sector&, const Sector&) = default;
};

/// All d^n sectors, lexicographic on (w_0, ..., w_{n-1}). Throws
/// NonCalabiYau unless d = n + 1.
std::vector<Sector> enumerate_sectors(int d, int n, std::uint64_t cap = kDefaultEnumerationCap);

/// Exponents over the sector's fixed set, each in [0, d-2].
struct MilnorMonomial {
  std::vector<int> exponents;

  friend bool operator==(const MilnorMonomial&, const MilnorMonomial&) = default;
};

/// Milnor-ring monomials b of W restricted to the fixed set whose classes
/// are Gamma-invariant: sum_{j in F} delta_j (b_j + 1) = 0 mod d for every
/// generator delta = e_i - e_{i+1} of Gamma.
std::vector<MilnorMonomial> invariant_monomials(const Sector& sector);

/// Untwisted (prod x)^j sits at (j, j); a narrow sector with age
/// a = sum w / d sits at (N + 1 - a, a - 1). Throws InvalidArgument for broad
/// sectors and for untwisted monomials that are not powers of prod x.
Bidegree bidegree(const Sector& sector, const MilnorMonomial& monomial);

/// Dimension table of all invariant classes. Throws Error if any broad
/// sector carries an invariant class.
BigradedTable state_space(int d, int n, std::uint64_t cap = kDefaultEnumerationCap);

struct BasisElement {
  enum class Kind { Vertical, Horizontal };
  Kind kind = Kind::Vertical;
  int power = 0;             // alpha^power for Vertical
  std::vector<int> weights;  // sector weights for Horizontal
  int q = 0;
  int p = 0;

  int degree() const { return q + p; }
  std::string label() const;
};

struct SignedIndex {
  std::size_t index = 0;
  int sign = 1;

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// The signed Frobenius algebra on {alpha^0..alpha^N} ∪ {beta_gamma : gamma
/// narrow}. Vertical classes multiply as powers of alpha truncated above
/// alpha^{d-2}; alpha^i beta = 0 for i >= 1; beta_gamma beta_delta is
/// sigma(gamma) alpha^N when delta = gamma^{-1} and zero otherwise.
///
/// sigma(gamma) = +1 if p(gamma) < p(gamma^{-1}), (-1)^N if greater; on a tie
/// the lexicographically smaller weight vector gets +1, and self-inverse
/// sectors (even d only, where N is even) get +1.
class FrobeniusAlgebra {
 public:
  static FrobeniusAlgebra build(int d, int n, std::uint64_t cap = kDefaultEnumerationCap);

  int d() const { return d_; }
  int n() const { return n_; }
  int top_degree() const { return n_ - 1; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t unit_index() const { return 0; }
  std::size_t top_index() const { return static_cast<std::size_t>(top_degree()); }

  std::optional<SignedIndex> product(std::size_t a, std::size_t b) const;
  /// Coefficient of alpha^N in a ∘ b.
  int pairing(std::size_t a, std::size_t b) const;
  /// Sign sigma(gamma) for a horizontal basis element.
  int pairing_sign(std::size_t a) const;
  /// Index of the horizontal element of gamma^{-1}.
  std::size_t dual_index(std::size_t a) const;

  /// Basis with bidegrees, then sparse nonzero products.
  nlohmann::json to_json() const;

 private:
  int d_ = 0;
  int n_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> dual_;  // horizontal index -> index of the inverse sector
  std::vector<int> sign_;          // horizontal index -> sigma
};

struct AlgebraReport {
  bool associative = true;
  bool graded_commutative = true;
  bool frobenius = true;
  bool unit = true;
  bool pairing_nondegenerate = true;
  /// HL pairing is symmetric for even N and skew-symmetric for odd N.
  bool pairing_symmetry = true;
  std::uint64_t triples_checked = 0;
  std::vector<std::string> failures;  // first few witnesses, deterministic order

  bool all_pass() const {
    return associative && graded_commutative && frobenius && unit && pairing_nondegenerate &&
           pairing_symmetry;
  }
};

AlgebraReport algebra_checks(const FrobeniusAlgebra& algebra, Parallelism parallelism = {});

/// Rank of an integer matrix modulo a large prime, by sparse elimination.
std::size_t modular_rank(const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>& rows);

}  // namespace orbidiamond

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace orbidiamond {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// An element g = (zeta^{a_0}, ..., zeta^{a_{n-1}}, 1) of the diagonal group
/// G = (Z/d)^{n-1} acting on the degree-d Fermat hypersurface in P^n.
///
/// Only residue exponents are stored. Invariants: n + 1 entries, each in
/// [0, d), the last one zero, and the entries sum to 0 mod d.
class GroupElement {
 public:
  /// Validates the invariants; throws InvalidArgument on violation.
  GroupElement(int d, std::vector<int> exponents);

  static GroupElement identity(int d, int n);

  int modulus() const noexcept { return d_; }
  /// Dimension of the ambient projective space (the vector has n + 1 entries).
  int n() const noexcept { return static_cast<int>(exps_.size()) - 1; }
  std::span<const int> exponents() const noexcept { return exps_; }
  int operator[](std::size_t j) const { return exps_[j]; }

  bool is_identity() const;

  GroupElement compose(const GroupElement& other) const;
  GroupElement inverse() const;
  GroupElement power(int k) const;

  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  int d_;
  std::vector<int> exps_;
};

GroupElement identity(int d, int n);
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// |G| = d^{n-1}, saturating at UINT64_MAX.
std::uint64_t group_order(int d, int n);

/// Position of `g` in the lexicographic enumeration order on (a_0..a_{n-2}).
std::uint64_t index_of(const GroupElement& g);
GroupElement element_at(int d, int n, std::uint64_t index);

/// All elements in lexicographic order on (a_0, ..., a_{n-2}); a_{n-1} is
/// determined by the sum condition. Throws EnumerationCapExceeded when
/// d^{n-1} > cap.
std::vector<GroupElement> enumerate(int d, int n, std::uint64_t cap = kDefaultEnumerationCap);

/// Generating set e_i - e_{i+1}, i = 0..n-2.
std::vector<GroupElement> generators(int d, int n);

/// Coordinates grouped by equal exponent. Blocks are sorted by their least
/// coordinate, so the form is canonical.
struct ExponentProfile {
  std::vector<std::vector<int>> blocks;
  std::vector<int> values;

  /// Block sizes in block order.
  std::vector<int> sizes() const;
  int max_block_size() const;
  /// Index of the block containing coordinate j.
  std::size_t block_of(int j) const;

  friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;
};

ExponentProfile profile(const GroupElement& g);

/// Common refinement of two exponent partitions: j and j' share a block iff
/// a_j = a_{j'} and b_j = b_{j'}. `values` holds the first element's residue.
ExponentProfile joint_profile(const GroupElement& g, const GroupElement& h);

enum class QuinticType { One, Two, Three, Four };

std::string to_string(QuinticType t);

/// The four-way classification of the quintic orbifold group (d = 5, n = 4).
/// Throws InvalidArgument for any other (d, n).
QuinticType quintic_type(const GroupElement& g);

/// Census key: the block-size multiset of a profile, with the block holding
/// value 0 (which always contains the last coordinate) singled out.
struct CensusKey {
  int zero_block_size = 0;
  std::vector<int> other_sizes;  // sorted descending

  std::string to_string() const;
  friend bool operator==(const CensusKey&, const CensusKey&) = default;
  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

CensusKey census_key(const ExponentProfile& p, const GroupElement& g);

using Census = std::map<CensusKey, std::uint64_t>;

/// Counts group elements per profile shape. Enumerates when |G| <= cap and
/// counts value assignments per shape otherwise.
Census census(int d, int n, std::uint64_t cap = kDefaultEnumerationCap);
Census census_by_enumeration(int d, int n, std::uint64_t cap = kDefaultEnumerationCap);
/// Multinomial count of set partitions times the number of distinct nonzero
/// value assignments with sum 0 mod d. Never enumerates G.
Census census_by_counting(int d, int n);

std::uint64_t census_total(const Census& c);

/// Counts indexed by QuinticType (One, Two, Three, Four). Requires (5, 4).
std::map<QuinticType, std::uint64_t> quintic_census(const Census& c);

}  // namespace orbidiamond

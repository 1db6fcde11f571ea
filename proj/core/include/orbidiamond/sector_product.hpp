#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbidiamond/fermat_group.hpp"
#include "orbidiamond/fixed_locus.hpp"
#include "orbidiamond/parallel.hpp"
#include "orbidiamond/rational.hpp"

namespace orbidiamond {

/// Classification of the class gamma_{g,h}: One when its bundle has rank 0,
/// Zero when the rank exceeds dim X^{g,h}, Nontrivial otherwise.
enum class GammaClass { One, Zero, Nontrivial };

std::string to_string(GammaClass c);

/// Rank data of a pair (g, h) on one component U of X^{g,h}, with the
/// components of X^g, X^h and X^{gh} that contain it.
struct JointComponentData {
  FixedComponent joint;
  FixedComponent g_component;
  FixedComponent h_component;
  FixedComponent gh_component;
  Rational age_g;
  Rational age_h;
  Rational age_gh;
  int excess_rank = 0;  // r = c_g + c_h - c_{g,h}
  int gamma_rank = 0;   // k = age_g + age_h - age_gh - (c_{g,h} - c_{gh})
  GammaClass gamma = GammaClass::One;

  int codim_g() const { return g_component.codim(); }
  int codim_h() const { return h_component.codim(); }
  int codim_joint() const { return joint.codim(); }
  int codim_gh() const { return gh_component.codim(); }
};

struct PairGeometry {
  GroupElement g;
  GroupElement h;
  GroupElement gh;
  std::vector<JointComponentData> components;  // empty when X^{g,h} is empty
};

PairGeometry pair_geometry(const GroupElement& g, const GroupElement& h);

struct SweepOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  Parallelism parallelism{};
};

struct GammaRecord {
  std::uint64_t g_index = 0;
  std::uint64_t h_index = 0;
  std::vector<int> coords;
  int gamma_rank = 0;
  GammaClass gamma = GammaClass::One;
};

/// Classification of gamma on every pair and joint component, ordered by
/// (g_index, h_index, component).
std::vector<GammaRecord> gamma_census(int d, int n, const SweepOptions& options = {});

struct PairWitness {
  GroupElement g;
  GroupElement h;
  std::vector<int> coords;
  std::string detail;
};

struct PropIneqResult {
  bool holds = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t premise_hits = 0;  // components with k > dim X^{g,h}
  std::optional<PairWitness> witness;
};

/// Checks k > dim X^{g,h} => r > dim X^{gh} on every pair and component.
PropIneqResult prop_ineq_check(int d, int n, const SweepOptions& options = {});

/// A nested chain P^l ∩ X ⊆ P^m ∩ X ⊆ P^ambient ∩ X. Its Bass-Quillen class
/// lives in (m-l)(ambient-m)^2 copies of H^1(P^l, O(-1)).
struct NestedChain {
  std::string middle;  // "gh" or "g"
  int l = 0;
  int m = 0;
  int ambient = 0;
  std::uint64_t ext_copies = 0;
  bool vanishes = true;
};

/// Chains X^{g,h} ⊆ X^{gh} ⊆ X and X^{g,h} ⊆ X^g ⊆ X for every joint component.
std::vector<NestedChain> bass_quillen_chains(const GroupElement& g, const GroupElement& h);
bool bass_quillen_vanishes(const GroupElement& g, const GroupElement& h);

enum class PairSweep {
  Full,
  /// g ranges over elements with a_0 <= .. <= a_{n-1} (one per orbit of the
  /// coordinate permutations fixing the last coordinate), h over all of G.
  /// Every pair is a simultaneous permutation of a swept pair, and the chain
  /// shapes are invariant under such permutations.
  PermutationReduced,
};

struct CertificateResult {
  bool holds = true;
  PairSweep sweep = PairSweep::Full;
  std::uint64_t pairs_checked = 0;
  std::uint64_t chains_checked = 0;
  std::optional<PairWitness> witness;
};

CertificateResult theorem_a_certificate(int d, int n, PairSweep sweep = PairSweep::Full,
                                        const SweepOptions& options = {});

struct EpsilonSign {
  std::int64_t epsilon = 0;
  int sign = 1;  // (-1)^epsilon
};

/// age(g) + age(h) - age(gh) on the components containing `joint`.
/// Throws NonCalabiYau unless d = n + 1.
EpsilonSign epsilon(const GroupElement& g, const GroupElement& h, const FixedComponent& joint);

/// Summand i (0 <= i <= r) of the derived restriction, landing in
/// H^{p+p'-c_gh-i}(X^{gh}, wedge^{q+q'+i} T ⊗ omega_gh).
struct UnsimplifiedSummand {
  int index = 0;
  int polyvector_shift = 0;   // added to q + q'
  int cohomology_shift = 0;   // added to p + p'
  int target_dim = 0;         // dim of the gh-component
  bool target_is_zero = false;  // wedge^{i} already exceeds target_dim

  /// Whether the summand vanishes for the given input degree sums.
  bool vanishes_for(int q_sum, int p_sum) const;
};

std::vector<UnsimplifiedSummand> unsimplified_summands(const GroupElement& g, const GroupElement& h,
                                                       const FixedComponent& joint);

nlohmann::json to_json(const PairGeometry& pg);

}  // namespace orbidiamond

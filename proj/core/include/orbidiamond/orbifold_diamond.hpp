#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbidiamond/fermat_group.hpp"
#include "orbidiamond/parallel.hpp"
#include "orbidiamond/rational.hpp"

namespace orbidiamond {

enum class TableVariant { HOmegaSum, HOmegaInvariant, HTSum, HTInvariant };

/// "HOmega-sum", "HOmega-invariant", "HT-sum", "HT-invariant".
std::string to_string(TableVariant v);
/// Case-insensitive inverse of to_string. Throws InvalidArgument.
TableVariant parse_variant(const std::string& text);
bool is_invariant(TableVariant v);
bool is_polyvector(TableVariant v);

/// (q, p) position in a bigraded table. Rational because ages of non
/// Calabi-Yau quotients are fractional.
struct Bidegree {
  Rational q;
  Rational p;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

using TableEntries = std::map<Bidegree, std::uint64_t>;

struct SectorTable {
  GroupElement g;
  TableEntries entries;
};

/// A (q, p) -> dimension diamond, optionally with its per-sector breakdown.
struct BigradedTable {
  int d = 0;
  int n = 0;
  TableVariant variant = TableVariant::HOmegaSum;
  TableEntries entries;               // zero entries omitted
  std::vector<SectorTable> sectors;   // nonempty sectors in enumeration order

  /// N = dim X = n - 1.
  int top_degree() const { return n - 1; }
  std::uint64_t at(const Rational& q, const Rational& p) const;
  std::uint64_t total() const;
  bool is_integral() const;
};

struct TableOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  Parallelism parallelism{};
  bool keep_sectors = true;
};

/// Chen-Ruan contribution of the twisted sector g: H^{p',q'}(U) of each
/// component U lands at (q, p) = (p' + age, q' + age), p' being the form
/// degree. With `invariant`, only G-invariant classes are counted.
TableEntries cr_sector(const GroupElement& g, bool invariant);

/// Polyvector contribution of g via q -> N - q. Throws NonCalabiYau.
TableEntries ht_sector_cy(const GroupElement& g, bool invariant);

BigradedTable cr_table(int d, int n, bool invariant, const TableOptions& options = {});
BigradedTable ht_table_cy(int d, int n, bool invariant, const TableOptions& options = {});
BigradedTable compute_table(int d, int n, TableVariant variant, const TableOptions& options = {});

/// Entry-wise q -> N - q on an integral table.
TableEntries flip_q(const TableEntries& entries, int top_degree);

/// True iff every nonzero entry lies on q = p or q + p = N.
bool greek_cross_check(const BigradedTable& table);

/// Conjugation (q,p) -> (p,q) and duality (q,p) -> (N-q, N-p).
bool has_diamond_symmetry(const BigradedTable& table);

struct VerticalHorizontal {
  std::vector<std::uint64_t> vl;  // vl[j] for (j, j), j = 0..N
  std::uint64_t hl = 0;
};

/// Splits a Greek-cross table into its vertical and horizontal lines. For even
/// N the middle diagonal entry contributes one class to VL and the rest to HL.
/// Throws InvalidArgument on tables that are not a Greek cross.
VerticalHorizontal vl_hl_dims(const BigradedTable& table);

// Serialization, in table_io.cpp.

nlohmann::json to_json(const BigradedTable& table);
BigradedTable table_from_json(const nlohmann::json& j);
std::string to_csv(const BigradedTable& table);
/// Rows by q + p from 0 (top) to 2N, centered, q decreasing left to right.
std::string render_diamond(const BigradedTable& table);

/// On-disk cache of derived tables keyed by (d, n, variant). Entries are
/// pure derived data and may be deleted at any time.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path directory);

  /// Directory from ORBIDIAMOND_CACHE, if set and non-empty.
  static std::optional<std::filesystem::path> directory_from_env();

  std::filesystem::path path_for(int d, int n, TableVariant variant) const;
  std::optional<BigradedTable> load(int d, int n, TableVariant variant) const;
  void store(const BigradedTable& table) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace orbidiamond

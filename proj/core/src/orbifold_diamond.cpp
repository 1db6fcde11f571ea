#include "orbidiamond/orbifold_diamond.hpp"

#include <algorithm>
#include <cctype>

#include "orbidiamond/errors.hpp"
#include "orbidiamond/fixed_locus.hpp"
#include "orbidiamond/hodge_slice.hpp"

namespace orbidiamond {

namespace {

void require_cy(int d, int n) {
  if (d != n + 1) throw NonCalabiYau(d, n);
}

std::vector<std::vector<int>> restricted_weights(const std::vector<GroupElement>& gens,
                                                 const std::vector<int>& coords) {
  std::vector<std::vector<int>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<int> w;
    w.reserve(coords.size());
    for (int j : coords) w.push_back(g[static_cast<std::size_t>(j)]);
    out.push_back(std::move(w));
  }
  return out;
}

TableEntries merge_entries(TableEntries a, const TableEntries& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

}  // namespace

std::string to_string(TableVariant v) {
  switch (v) {
    case TableVariant::HOmegaSum: return "HOmega-sum";
    case TableVariant::HOmegaInvariant: return "HOmega-invariant";
    case TableVariant::HTSum: return "HT-sum";
    case TableVariant::HTInvariant: return "HT-invariant";
  }
  return "?";
}

TableVariant parse_variant(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto v : {TableVariant::HOmegaSum, TableVariant::HOmegaInvariant, TableVariant::HTSum,
                 TableVariant::HTInvariant}) {
    std::string name = to_string(v);
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (name == lower) return v;
  }
  throw InvalidArgument("unknown table variant '" + text +
                        "' (expected homega-sum, homega-invariant, ht-sum or ht-invariant)");
}

bool is_invariant(TableVariant v) {
  return v == TableVariant::HOmegaInvariant || v == TableVariant::HTInvariant;
}

bool is_polyvector(TableVariant v) {
  return v == TableVariant::HTSum || v == TableVariant::HTInvariant;
}

std::uint64_t BigradedTable::at(const Rational& q, const Rational& p) const {
  auto it = entries.find(Bidegree{q, p});
  return it == entries.end() ? 0 : it->second;
}

std::uint64_t BigradedTable::total() const {
  std::uint64_t t = 0;
  for (const auto& [k, v] : entries) t += v;
  return t;
}

bool BigradedTable::is_integral() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) {
    return e.first.q.is_integer() && e.first.p.is_integer();
  });
}

TableEntries cr_sector(const GroupElement& g, bool invariant) {
  TableEntries out;
  const auto comps = components(g);
  if (comps.empty()) return out;
  const std::vector<GroupElement> gens =
      invariant ? generators(g.modulus(), g.n()) : std::vector<GroupElement>{};
  for (const auto& u : comps) {
    const Rational shift = age(g, u);
    const FermatSlice slice{g.modulus(), u.coords};
    const auto weights = restricted_weights(gens, u.coords);
    const HodgeMatrix h = hodge_matrix(slice);
    for (std::size_t form = 0; form < h.size(); ++form)
      for (std::size_t coh = 0; coh < h[form].size(); ++coh) {
        if (h[form][coh] == 0) continue;
        const std::uint64_t dim =
            invariant ? invariant_dim(slice, weights, static_cast<int>(form), static_cast<int>(coh))
                      : h[form][coh];
        if (dim == 0) continue;
        out[Bidegree{shift + static_cast<std::int64_t>(form),
                     shift + static_cast<std::int64_t>(coh)}] += dim;
      }
  }
  return out;
}

TableEntries flip_q(const TableEntries& entries, int top_degree) {
  TableEntries out;
  for (const auto& [k, v] : entries) out[Bidegree{Rational(top_degree) - k.q, k.p}] += v;
  return out;
}

TableEntries ht_sector_cy(const GroupElement& g, bool invariant) {
  require_cy(g.modulus(), g.n());
  return flip_q(cr_sector(g, invariant), g.n() - 1);
}

BigradedTable cr_table(int d, int n, bool invariant, const TableOptions& options) {
  const std::uint64_t order = group_order(d, n);
  if (order > options.cap) throw EnumerationCapExceeded(order, options.cap);

  BigradedTable table;
  table.d = d;
  table.n = n;
  table.variant = invariant ? TableVariant::HOmegaInvariant : TableVariant::HOmegaSum;

  using Partial = std::vector<SectorTable>;
  Partial sectors = parallel_reduce(
      order, options.parallelism, Partial{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Partial part;
        for (std::uint64_t i = begin; i < end; ++i) {
          GroupElement g = element_at(d, n, i);
          TableEntries e = cr_sector(g, invariant);
          if (!e.empty()) part.push_back(SectorTable{std::move(g), std::move(e)});
        }
        return part;
      },
      [](Partial acc, Partial part) {
        std::move(part.begin(), part.end(), std::back_inserter(acc));
        return acc;
      });

  for (const auto& s : sectors) table.entries = merge_entries(std::move(table.entries), s.entries);
  if (options.keep_sectors) table.sectors = std::move(sectors);
  return table;
}

BigradedTable ht_table_cy(int d, int n, bool invariant, const TableOptions& options) {
  require_cy(d, n);
  BigradedTable table = cr_table(d, n, invariant, options);
  table.variant = invariant ? TableVariant::HTInvariant : TableVariant::HTSum;
  const int top = table.top_degree();
  table.entries = flip_q(table.entries, top);
  for (auto& s : table.sectors) s.entries = flip_q(s.entries, top);
  return table;
}

BigradedTable compute_table(int d, int n, TableVariant variant, const TableOptions& options) {
  if (is_polyvector(variant)) return ht_table_cy(d, n, is_invariant(variant), options);
  return cr_table(d, n, is_invariant(variant), options);
}

bool greek_cross_check(const BigradedTable& table) {
  const Rational top(table.top_degree());
  return std::all_of(table.entries.begin(), table.entries.end(), [&](const auto& e) {
    const auto& [q, p] = e.first;
    if (e.second == 0) return true;
    if (!q.is_integer() || !p.is_integer()) return false;
    return q == p || q + p == top;
  });
}

bool has_diamond_symmetry(const BigradedTable& table) {
  const Rational top(table.top_degree());
  for (const auto& [k, v] : table.entries) {
    if (table.at(k.p, k.q) != v) return false;
    if (table.at(top - k.q, top - k.p) != v) return false;
  }
  return true;
}

VerticalHorizontal vl_hl_dims(const BigradedTable& table) {
  if (!greek_cross_check(table))
    throw InvalidArgument("vl_hl_dims requires a Greek-cross table");
  const int top = table.top_degree();
  VerticalHorizontal out;
  out.vl.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int j = 0; j <= top; ++j) out.vl[j] = table.at(j, j);
  for (int q = 0; q <= top; ++q) out.hl += table.at(q, top - q);
  if (top % 2 == 0) {
    const int mid = top / 2;
    const std::uint64_t middle = table.at(mid, mid);
    // The middle entry is shared: one class (alpha^{N/2}) stays vertical.
    if (middle > 0) {
      out.vl[mid] = 1;
      out.hl -= 1;
    }
  }
  return out;
}

}  // namespace orbidiamond

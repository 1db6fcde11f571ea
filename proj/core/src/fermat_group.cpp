#include "orbidiamond/fermat_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "orbidiamond/errors.hpp"

namespace orbidiamond {

namespace {

int mod(long long x, int d) {
  const long long r = x % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

void check_dims(int d, int n) {
  if (d < 2) throw InvalidArgument("modulus d must be >= 2, got " + std::to_string(d));
  if (n < 2) throw InvalidArgument("dimension n must be >= 2, got " + std::to_string(n));
}

void check_compatible(const GroupElement& g, const GroupElement& h) {
  if (g.modulus() != h.modulus() || g.n() != h.n())
    throw InvalidArgument("group elements " + g.to_string() + " and " + h.to_string() +
                          " belong to different groups");
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw Error("census count overflows 64 bits");
  return a * b;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Number of ways to split m labelled items into unlabelled blocks of the given
// sizes (sizes sorted descending).
std::uint64_t set_partition_count(const std::vector<int>& sizes) {
  int remaining = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::uint64_t count = 1;
  for (int s : sizes) {
    count = checked_mul(count, binomial(remaining, s));
    remaining -= s;
  }
  // Blocks of equal size are interchangeable.
  for (std::size_t i = 0; i < sizes.size();) {
    std::size_t j = i;
    while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
    for (std::uint64_t f = 2; f <= j - i; ++f) count /= f;
    i = j;
  }
  return count;
}

// Injective assignments of values in {1, .., d-1} to blocks of the given
// sizes such that sum(size * value) = 0 mod d.
std::uint64_t labelling_count(const std::vector<int>& sizes, int d) {
  const int values = d - 1;
  if (static_cast<int>(sizes.size()) > values) return 0;
  if (values > 20) throw Error("profile counting supports d <= 21");
  const std::size_t masks = std::size_t{1} << values;
  std::vector<std::uint64_t> ways(masks * d, 0), next(masks * d, 0);
  ways[0] = 1;  // mask 0, residue 0
  for (int s : sizes) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t m = 0; m < masks; ++m) {
      for (int r = 0; r < d; ++r) {
        const std::uint64_t w = ways[m * d + r];
        if (w == 0) continue;
        for (int v = 1; v <= values; ++v) {
          const std::size_t bit = std::size_t{1} << (v - 1);
          if (m & bit) continue;
          next[(m | bit) * d + mod(r + static_cast<long long>(s) * v, d)] += w;
        }
      }
    }
    std::swap(ways, next);
  }
  std::uint64_t total = 0;
  for (std::size_t m = 0; m < masks; ++m) total += ways[m * d];
  return total;
}

void partitions(int total, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(total - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

GroupElement::GroupElement(int d, std::vector<int> exponents) : d_(d), exps_(std::move(exponents)) {
  if (d_ < 2) throw InvalidArgument("modulus d must be >= 2");
  if (exps_.size() < 3) throw InvalidArgument("group element needs at least 3 exponents");
  long long sum = 0;
  for (int a : exps_) {
    if (a < 0 || a >= d_)
      throw InvalidArgument("exponent " + std::to_string(a) + " outside [0, " + std::to_string(d_) +
                            ")");
    sum += a;
  }
  if (exps_.back() != 0) throw InvalidArgument("last exponent must be 0 in " + to_string());
  if (sum % d_ != 0) throw InvalidArgument("exponents of " + to_string() + " do not sum to 0 mod d");
}

GroupElement GroupElement::identity(int d, int n) {
  check_dims(d, n);
  return GroupElement(d, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
}

bool GroupElement::is_identity() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int a) { return a == 0; });
}

GroupElement GroupElement::compose(const GroupElement& other) const {
  check_compatible(*this, other);
  std::vector<int> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = mod(exps_[j] + other.exps_[j], d_);
  return GroupElement(d_, std::move(e));
}

GroupElement GroupElement::inverse() const {
  std::vector<int> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = mod(-exps_[j], d_);
  return GroupElement(d_, std::move(e));
}

GroupElement GroupElement::power(int k) const {
  std::vector<int> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j)
    e[j] = mod(static_cast<long long>(exps_[j]) * k, d_);
  return GroupElement(d_, std::move(e));
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < exps_.size(); ++j) os << (j ? "," : "") << exps_[j];
  os << ')';
  return os.str();
}

GroupElement identity(int d, int n) { return GroupElement::identity(d, n); }
GroupElement compose(const GroupElement& g, const GroupElement& h) { return g.compose(h); }
GroupElement inverse(const GroupElement& g) { return g.inverse(); }

std::uint64_t group_order(int d, int n) {
  check_dims(d, n);
  std::uint64_t order = 1;
  for (int i = 0; i < n - 1; ++i) order = saturating_mul(order, static_cast<std::uint64_t>(d));
  return order;
}

std::uint64_t index_of(const GroupElement& g) {
  std::uint64_t index = 0;
  for (int j = 0; j + 1 < g.n(); ++j) index = index * g.modulus() + g[j];
  return index;
}

GroupElement element_at(int d, int n, std::uint64_t index) {
  if (index >= group_order(d, n)) throw InvalidArgument("group index out of range");
  std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
  long long sum = 0;
  for (int j = n - 2; j >= 0; --j) {
    e[j] = static_cast<int>(index % d);
    index /= d;
    sum += e[j];
  }
  e[n - 1] = mod(-sum, d);
  return GroupElement(d, std::move(e));
}

std::vector<GroupElement> enumerate(int d, int n, std::uint64_t cap) {
  const std::uint64_t order = group_order(d, n);
  if (order > cap) throw EnumerationCapExceeded(order, cap);
  std::vector<GroupElement> out;
  out.reserve(order);
  for (std::uint64_t i = 0; i < order; ++i) out.push_back(element_at(d, n, i));
  return out;
}

std::vector<GroupElement> generators(int d, int n) {
  check_dims(d, n);
  std::vector<GroupElement> out;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
    e[i] = 1;
    e[i + 1] = d - 1;
    out.emplace_back(d, std::move(e));
  }
  return out;
}

std::vector<int> ExponentProfile::sizes() const {
  std::vector<int> s;
  s.reserve(blocks.size());
  for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
  return s;
}

int ExponentProfile::max_block_size() const {
  int m = 0;
  for (const auto& b : blocks) m = std::max(m, static_cast<int>(b.size()));
  return m;
}

std::size_t ExponentProfile::block_of(int j) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (std::find(blocks[i].begin(), blocks[i].end(), j) != blocks[i].end()) return i;
  throw InvalidArgument("coordinate " + std::to_string(j) + " not in profile");
}

ExponentProfile profile(const GroupElement& g) { return joint_profile(g, g); }

ExponentProfile joint_profile(const GroupElement& g, const GroupElement& h) {
  check_compatible(g, h);
  ExponentProfile p;
  std::vector<std::pair<int, int>> keys;
  for (int j = 0; j <= g.n(); ++j) {
    const std::pair<int, int> key{g[j], h[j]};
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      p.blocks.push_back({j});
      p.values.push_back(g[j]);
    } else {
      p.blocks[static_cast<std::size_t>(it - keys.begin())].push_back(j);
    }
  }
  return p;
}

std::string to_string(QuinticType t) {
  switch (t) {
    case QuinticType::One: return "one";
    case QuinticType::Two: return "two";
    case QuinticType::Three: return "three";
    case QuinticType::Four: return "four";
  }
  return "?";
}

namespace {
QuinticType type_from_max_block(int max_block, int coords) {
  if (max_block == coords) return QuinticType::One;
  if (max_block >= 3) return QuinticType::Two;
  if (max_block == 2) return QuinticType::Three;
  return QuinticType::Four;
}
}  // namespace

QuinticType quintic_type(const GroupElement& g) {
  if (g.modulus() != 5 || g.n() != 4)
    throw InvalidArgument("quintic_type is only defined for d = 5, n = 4");
  return type_from_max_block(profile(g).max_block_size(), 5);
}

std::string CensusKey::to_string() const {
  std::ostringstream os;
  os << '[' << zero_block_size << '*';
  for (int s : other_sizes) os << ',' << s;
  os << ']';
  return os.str();
}

CensusKey census_key(const ExponentProfile& p, const GroupElement& g) {
  CensusKey key;
  const std::size_t zero_block = p.block_of(g.n());
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const int s = static_cast<int>(p.blocks[i].size());
    if (i == zero_block)
      key.zero_block_size = s;
    else
      key.other_sizes.push_back(s);
  }
  std::sort(key.other_sizes.rbegin(), key.other_sizes.rend());
  return key;
}

Census census(int d, int n, std::uint64_t cap) {
  if (group_order(d, n) <= cap) return census_by_enumeration(d, n, cap);
  return census_by_counting(d, n);
}

Census census_by_enumeration(int d, int n, std::uint64_t cap) {
  const std::uint64_t order = group_order(d, n);
  if (order > cap) throw EnumerationCapExceeded(order, cap);
  Census c;
  for (std::uint64_t i = 0; i < order; ++i) {
    const GroupElement g = element_at(d, n, i);
    ++c[census_key(profile(g), g)];
  }
  return c;
}

Census census_by_counting(int d, int n) {
  check_dims(d, n);
  Census c;
  // Coordinate n always carries value 0; its block has s0 - 1 companions.
  for (int s0 = 1; s0 <= n + 1; ++s0) {
    std::vector<std::vector<int>> shapes;
    std::vector<int> current;
    partitions(n + 1 - s0, n + 1 - s0, current, shapes);
    for (const auto& sizes : shapes) {
      const std::uint64_t placements =
          checked_mul(binomial(n, s0 - 1), set_partition_count(sizes));
      const std::uint64_t count = checked_mul(placements, labelling_count(sizes, d));
      if (count != 0) c[CensusKey{s0, sizes}] = count;
    }
  }
  return c;
}

std::uint64_t census_total(const Census& c) {
  std::uint64_t total = 0;
  for (const auto& [key, count] : c) total += count;
  return total;
}

std::map<QuinticType, std::uint64_t> quintic_census(const Census& c) {
  std::map<QuinticType, std::uint64_t> out{{QuinticType::One, 0},
                                           {QuinticType::Two, 0},
                                           {QuinticType::Three, 0},
                                           {QuinticType::Four, 0}};
  for (const auto& [key, count] : c) {
    const int coords = key.zero_block_size +
                       std::accumulate(key.other_sizes.begin(), key.other_sizes.end(), 0);
    if (coords != 5) throw InvalidArgument("quintic census requires d = 5, n = 4");
    int max_block = key.zero_block_size;
    for (int s : key.other_sizes) max_block = std::max(max_block, s);
    out[type_from_max_block(max_block, coords)] += count;
  }
  return out;
}

}  // namespace orbidiamond

#include "orbidiamond/lg_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orbidiamond/errors.hpp"

namespace orbidiamond {

namespace {

int mod(long long x, int d) {
  const long long r = x % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

void require_cy(int d, int n) {
  if (d != n + 1) throw NonCalabiYau(d, n);
}

std::uint64_t sector_count(int d, int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(d);
  return count;
}

constexpr std::int64_t kPrime = 2147483647;  // 2^31 - 1

std::int64_t mod_prime(std::int64_t x) {
  x %= kPrime;
  return x < 0 ? x + kPrime : x;
}

std::int64_t mod_inverse(std::int64_t a) {
  std::int64_t result = 1, base = mod_prime(a), e = kPrime - 2;
  while (e > 0) {
    if (e & 1) result = result * base % kPrime;
    base = base * base % kPrime;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::vector<int> Sector::fixed_set() const {
  std::vector<int> f;
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (weights[j] == 0) f.push_back(static_cast<int>(j));
  return f;
}

bool Sector::is_untwisted() const {
  return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 0; });
}

bool Sector::is_narrow() const {
  return std::none_of(weights.begin(), weights.end(), [](int w) { return w == 0; });
}

int Sector::weight_sum() const { return std::accumulate(weights.begin(), weights.end(), 0); }

Sector Sector::inverse() const {
  Sector s{d, weights};
  for (int& w : s.weights) w = mod(-w, d);
  return s;
}

std::vector<Sector> enumerate_sectors(int d, int n, std::uint64_t cap) {
  require_cy(d, n);
  const std::uint64_t count = sector_count(d, n);
  if (count > cap) throw EnumerationCapExceeded(count, cap);
  std::vector<Sector> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Sector s{d, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
    std::uint64_t rest = i;
    long long sum = 0;
    for (int j = n - 1; j >= 0; --j) {
      s.weights[j] = static_cast<int>(rest % d);
      rest /= d;
      sum += s.weights[j];
    }
    s.weights[n] = mod(-sum, d);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<MilnorMonomial> invariant_monomials(const Sector& sector) {
  const int d = sector.d;
  const int coords = static_cast<int>(sector.weights.size());
  const std::vector<int> fixed = sector.fixed_set();
  const int vars = static_cast<int>(fixed.size());

  // Generators e_i - e_{i+1} of Gamma, restricted to the fixed set.
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < coords; ++i) {
    std::vector<int> g(static_cast<std::size_t>(vars), 0);
    for (int k = 0; k < vars; ++k) {
      if (fixed[k] == i) g[k] = 1;
      if (fixed[k] == i + 1) g[k] = d - 1;
    }
    gens.push_back(std::move(g));
  }

  std::vector<MilnorMonomial> out;
  std::vector<int> b(static_cast<std::size_t>(vars), 0);
  const auto invariant = [&] {
    for (const auto& g : gens) {
      long long phase = 0;
      for (int k = 0; k < vars; ++k) phase += static_cast<long long>(g[k]) * (b[k] + 1);
      if (mod(phase, d) != 0) return false;
    }
    return true;
  };
  // Odometer over [0, d-2]^vars.
  while (true) {
    if (invariant()) out.push_back(MilnorMonomial{b});
    int k = vars - 1;
    while (k >= 0 && b[k] == d - 2) b[k--] = 0;
    if (k < 0) break;
    ++b[k];
  }
  return out;
}

Bidegree bidegree(const Sector& sector, const MilnorMonomial& monomial) {
  const int top = static_cast<int>(sector.weights.size()) - 2;
  if (sector.is_untwisted()) {
    const auto& e = monomial.exponents;
    if (e.empty() || std::adjacent_find(e.begin(), e.end(), std::not_equal_to<>()) != e.end())
      throw InvalidArgument("untwisted monomial is not a power of prod x");
    return Bidegree{e.front(), e.front()};
  }
  if (sector.is_narrow()) {
    const int a = sector.weight_sum() / sector.d;
    return Bidegree{top + 1 - a, a - 1};
  }
  throw InvalidArgument("broad sectors carry no bidegree");
}

BigradedTable state_space(int d, int n, std::uint64_t cap) {
  BigradedTable table;
  table.d = d;
  table.n = n;
  table.variant = TableVariant::HTInvariant;
  for (const auto& s : enumerate_sectors(d, n, cap)) {
    const auto monomials = invariant_monomials(s);
    if (monomials.empty()) continue;
    if (s.is_broad()) {
      std::string w;
      for (int x : s.weights) w += std::to_string(x) + " ";
      throw Error("broad sector (" + w + ") has an invariant class; no bidegree is defined");
    }
    for (const auto& m : monomials) ++table.entries[bidegree(s, m)];
  }
  return table;
}

std::string BasisElement::label() const {
  if (kind == Kind::Vertical) return "alpha^" + std::to_string(power);
  std::string s = "beta[";
  for (std::size_t j = 0; j < weights.size(); ++j) s += (j ? "," : "") + std::to_string(weights[j]);
  return s + "]";
}

FrobeniusAlgebra FrobeniusAlgebra::build(int d, int n, std::uint64_t cap) {
  require_cy(d, n);
  FrobeniusAlgebra a;
  a.d_ = d;
  a.n_ = n;
  const int top = n - 1;
  for (int j = 0; j <= top; ++j) {
    BasisElement e;
    e.kind = BasisElement::Kind::Vertical;
    e.power = j;
    e.q = j;
    e.p = j;
    a.basis_.push_back(std::move(e));
  }
  std::map<std::vector<int>, std::size_t> index;
  for (auto& s : enumerate_sectors(d, n, cap)) {
    if (!s.is_narrow()) continue;
    const Bidegree bd = bidegree(s, MilnorMonomial{});
    BasisElement e;
    e.kind = BasisElement::Kind::Horizontal;
    e.q = static_cast<int>(bd.q.to_integer());
    e.p = static_cast<int>(bd.p.to_integer());
    index[s.weights] = a.basis_.size();
    e.weights = std::move(s.weights);
    a.basis_.push_back(std::move(e));
  }

  a.dual_.assign(a.basis_.size(), 0);
  a.sign_.assign(a.basis_.size(), 0);
  for (std::size_t i = static_cast<std::size_t>(top) + 1; i < a.basis_.size(); ++i) {
    const Sector inv = Sector{d, a.basis_[i].weights}.inverse();
    const std::size_t j = index.at(inv.weights);
    a.dual_[i] = j;
    const int pi = a.basis_[i].p;
    const int pj = a.basis_[j].p;
    const int odd_sign = (top % 2 == 0) ? 1 : -1;
    if (i == j)
      a.sign_[i] = (top % 2 == 0) ? 1 : 0;
    else if (pi != pj)
      a.sign_[i] = pi < pj ? 1 : odd_sign;
    else
      a.sign_[i] = a.basis_[i].weights < a.basis_[j].weights ? 1 : odd_sign;
  }
  return a;
}

std::optional<SignedIndex> FrobeniusAlgebra::product(std::size_t a, std::size_t b) const {
  if (a >= basis_.size() || b >= basis_.size())
    throw InvalidArgument("basis index out of range");
  const auto& x = basis_[a];
  const auto& y = basis_[b];
  using Kind = BasisElement::Kind;
  if (x.kind == Kind::Vertical && y.kind == Kind::Vertical) {
    // Milnor ring: (prod x)^{d-1} lies in the Jacobian ideal.
    const int power = x.power + y.power;
    if (power > d_ - 2) return std::nullopt;
    return SignedIndex{static_cast<std::size_t>(power), 1};
  }
  if (x.kind == Kind::Vertical) {
    if (x.power == 0) return SignedIndex{b, 1};
    return std::nullopt;
  }
  if (y.kind == Kind::Vertical) {
    if (y.power == 0) return SignedIndex{a, 1};
    return std::nullopt;
  }
  if (dual_[a] != b || sign_[a] == 0) return std::nullopt;
  return SignedIndex{top_index(), sign_[a]};
}

int FrobeniusAlgebra::pairing(std::size_t a, std::size_t b) const {
  const auto r = product(a, b);
  return (r && r->index == top_index()) ? r->sign : 0;
}

int FrobeniusAlgebra::pairing_sign(std::size_t a) const {
  if (basis_.at(a).kind != BasisElement::Kind::Horizontal)
    throw InvalidArgument("pairing_sign needs a horizontal element");
  return sign_[a];
}

std::size_t FrobeniusAlgebra::dual_index(std::size_t a) const {
  if (basis_.at(a).kind != BasisElement::Kind::Horizontal)
    throw InvalidArgument("dual_index needs a horizontal element");
  return dual_[a];
}

nlohmann::json FrobeniusAlgebra::to_json() const {
  auto basis = nlohmann::json::array();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& e = basis_[i];
    nlohmann::json j{{"index", i}, {"q", e.q}, {"p", e.p}};
    if (e.kind == BasisElement::Kind::Vertical) {
      j["kind"] = "alpha";
      j["power"] = e.power;
    } else {
      j["kind"] = "sector";
      j["weights"] = e.weights;
    }
    basis.push_back(std::move(j));
  }
  auto products = nlohmann::json::array();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (const auto r = product(i, k))
        products.push_back({{"left", i}, {"right", k}, {"result", r->index}, {"sign", r->sign}});
  return {{"d", d_}, {"n", n_}, {"basis", basis}, {"products", products}};
}

std::size_t modular_rank(const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>& rows) {
  std::map<std::size_t, std::map<std::size_t, std::int64_t>> pivots;  // leading column -> row
  std::size_t rank = 0;
  for (const auto& input : rows) {
    std::map<std::size_t, std::int64_t> row;
    for (const auto& [col, v] : input) {
      const std::int64_t x = mod_prime(row[col] + v);
      if (x == 0)
        row.erase(col);
      else
        row[col] = x;
    }
    while (!row.empty()) {
      const auto [lead, value] = *row.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      const std::int64_t factor = value * mod_inverse(it->second.at(lead)) % kPrime;
      for (const auto& [col, pv] : it->second) {
        const std::int64_t x = mod_prime(row[col] - factor * pv % kPrime);
        if (x == 0)
          row.erase(col);
        else
          row[col] = x;
      }
    }
  }
  return rank;
}

AlgebraReport algebra_checks(const FrobeniusAlgebra& algebra, Parallelism parallelism) {
  constexpr std::size_t kMaxFailures = 5;
  const std::size_t size = algebra.size();
  const auto& basis = algebra.basis();
  const auto label = [&](std::size_t i) { return basis[i].label(); };
  const auto note = [&](AlgebraReport& r, std::string msg) {
    if (r.failures.size() < kMaxFailures) r.failures.push_back(std::move(msg));
  };

  // Triples with a∘b = 0 and b∘c = 0 are zero on both sides of both
  // identities, so only c with b∘c != 0 needs visiting when a∘b = 0.
  std::vector<std::vector<std::size_t>> right_support(size);
  for (std::size_t b = 0; b < size; ++b)
    for (std::size_t c = 0; c < size; ++c)
      if (algebra.product(b, c)) right_support[b].push_back(c);

  const auto check_triple = [&](AlgebraReport& part, std::size_t a, std::size_t b, std::size_t c,
                                const std::optional<SignedIndex>& ab) {
    const auto bc = algebra.product(b, c);
    std::optional<SignedIndex> left, right;
    if (ab)
      if (auto r = algebra.product(ab->index, c)) left = SignedIndex{r->index, r->sign * ab->sign};
    if (bc)
      if (auto r = algebra.product(a, bc->index)) right = SignedIndex{r->index, r->sign * bc->sign};
    if (left != right) {
      part.associative = false;
      note(part, "associativity fails for " + label(a) + ", " + label(b) + ", " + label(c));
    }
    const int lhs = ab ? ab->sign * algebra.pairing(ab->index, c) : 0;
    const int rhs = bc ? bc->sign * algebra.pairing(a, bc->index) : 0;
    if (lhs != rhs) {
      part.frobenius = false;
      note(part, "Frobenius identity fails for " + label(a) + ", " + label(b) + ", " + label(c));
    }
  };

  const auto triple_chunk = [&](std::uint64_t begin, std::uint64_t end) {
    AlgebraReport part;
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        const auto ab = algebra.product(a, b);
        const auto ba = algebra.product(b, a);
        const int koszul = ((basis[a].degree() * basis[b].degree()) % 2 == 0) ? 1 : -1;
        const bool commutes = (!ab && !ba) || (ab && ba && ab->index == ba->index &&
                                               ab->sign == koszul * ba->sign);
        if (!commutes) {
          part.graded_commutative = false;
          note(part, "graded commutativity fails for " + label(a) + ", " + label(b));
        }
        if (ab) {
          for (std::size_t c = 0; c < size; ++c) check_triple(part, a, b, c, ab);
        } else {
          for (std::size_t c : right_support[b]) check_triple(part, a, b, c, ab);
        }
        part.triples_checked += size;
      }
    }
    return part;
  };
  const auto merge = [&](AlgebraReport acc, AlgebraReport part) {
    acc.associative = acc.associative && part.associative;
    acc.graded_commutative = acc.graded_commutative && part.graded_commutative;
    acc.frobenius = acc.frobenius && part.frobenius;
    acc.triples_checked += part.triples_checked;
    for (auto& f : part.failures)
      if (acc.failures.size() < kMaxFailures) acc.failures.push_back(std::move(f));
    return acc;
  };
  AlgebraReport report = parallel_reduce(size, parallelism, AlgebraReport{}, triple_chunk, merge);

  const std::size_t unit = algebra.unit_index();
  for (std::size_t x = 0; x < size; ++x) {
    const SignedIndex same{x, 1};
    if (algebra.product(unit, x) != same || algebra.product(x, unit) != same) {
      report.unit = false;
      note(report, "unit fails on " + label(x));
    }
  }

  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> gram(size);
  const int parity = (algebra.top_degree() % 2 == 0) ? 1 : -1;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      const int v = algebra.pairing(a, b);
      if (v != 0) gram[a].emplace_back(b, v);
      const bool horizontal = basis[a].kind == BasisElement::Kind::Horizontal &&
                              basis[b].kind == BasisElement::Kind::Horizontal;
      if (horizontal && v != parity * algebra.pairing(b, a)) {
        report.pairing_symmetry = false;
        note(report, "HL pairing symmetry fails for " + label(a) + ", " + label(b));
      }
    }
  if (modular_rank(gram) != size) {
    report.pairing_nondegenerate = false;
    note(report, "pairing is degenerate");
  }
  return report;
}

}  // namespace orbidiamond

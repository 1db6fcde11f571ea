#include "orbidiamond/hodge_slice.hpp"

#include <numeric>

#include "orbidiamond/errors.hpp"

namespace orbidiamond {

namespace {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

void check_slice(const FermatSlice& slice) {
  if (slice.degree < 2) throw InvalidArgument("slice degree must be >= 2");
  if (slice.coords.size() < 2) throw InvalidArgument("slice needs at least two coordinates");
}

// Enumerates b in [0, ub]^vars with sum b = total, lexicographically.
void for_each_monomial(int total, int ub, int vars, const std::function<void(std::span<const int>)>& f) {
  if (total < 0 || vars <= 0) {
    if (total == 0 && vars == 0) f({});
    return;
  }
  std::vector<int> b(static_cast<std::size_t>(vars), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == vars - 1) {
      if (remaining <= ub) {
        b[pos] = remaining;
        f(b);
      }
      return;
    }
    const int max_here = std::min(ub, remaining);
    const int rest_capacity = ub * (vars - pos - 1);
    for (int v = std::max(0, remaining - rest_capacity); v <= max_here; ++v) {
      b[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

int mod(long long x, int d) {
  const long long r = x % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

}  // namespace

std::uint64_t monomial_count(int total_degree, int upper_bound, int num_vars) {
  if (total_degree < 0 || upper_bound < 0 || num_vars < 0) return 0;
  if (num_vars == 0) return total_degree == 0 ? 1 : 0;
  // sum_i (-1)^i C(v, i) C(t - i(u+1) + v - 1, v - 1)
  std::int64_t acc = 0;
  for (int i = 0; i <= num_vars; ++i) {
    const std::int64_t rest = static_cast<std::int64_t>(total_degree) -
                              static_cast<std::int64_t>(i) * (upper_bound + 1);
    if (rest < 0) break;
    const auto term = static_cast<std::int64_t>(binomial(num_vars, i) *
                                                binomial(rest + num_vars - 1, num_vars - 1));
    acc += (i % 2 == 0) ? term : -term;
  }
  return static_cast<std::uint64_t>(acc);
}

HodgeMatrix hodge_matrix(const FermatSlice& slice) {
  check_slice(slice);
  const int dim = slice.dim();
  if (dim == 0) return {{static_cast<std::uint64_t>(slice.degree)}};
  HodgeMatrix h(static_cast<std::size_t>(dim) + 1, std::vector<std::uint64_t>(dim + 1, 0));
  for (int p = 0; p <= dim; ++p) h[p][p] = 1;
  for (int q = 0; q <= dim; ++q)
    h[dim - q][q] += monomial_count((q + 1) * slice.degree - slice.variables(), slice.degree - 2,
                                    slice.variables());
  return h;
}

void for_each_character(const FermatSlice& slice, int p, int q,
                        const std::function<void(std::span<const int>)>& visit) {
  check_slice(slice);
  const int dim = slice.dim();
  if (dim == 0 || p < 0 || q < 0 || p > dim || q > dim) return;
  const int d = slice.degree;
  const int vars = slice.variables();
  if (p == q) {
    const std::vector<int> zero(static_cast<std::size_t>(vars), 0);
    visit(zero);
  }
  if (p + q != dim) return;
  // H^{dim-s, s} is spanned by residues of monomials of degree (s+1)d - |S|;
  // the conjugate bidegree carries negated characters.
  const bool conjugate = q > p;
  const int s = conjugate ? p : q;
  std::vector<int> c(static_cast<std::size_t>(vars));
  for_each_monomial((s + 1) * d - vars, d - 2, vars, [&](std::span<const int> b) {
    for (int j = 0; j < vars; ++j) c[j] = conjugate ? mod(-(b[j] + 1), d) : b[j] + 1;
    visit(c);
  });
}

CharacterHodge character_classes(const FermatSlice& slice) {
  check_slice(slice);
  CharacterHodge out;
  out.degree = slice.degree;
  out.dim = slice.dim();
  if (out.dim == 0) {
    out.points = static_cast<std::uint64_t>(slice.degree);
    return out;
  }
  for (int p = 0; p <= out.dim; ++p)
    for (int q = 0; q <= out.dim; ++q) {
      std::vector<std::vector<int>> chars;
      for_each_character(slice, p, q,
                         [&](std::span<const int> c) { chars.emplace_back(c.begin(), c.end()); });
      if (!chars.empty()) out.classes[{p, q}] = std::move(chars);
    }
  return out;
}

std::uint64_t invariant_dim(const FermatSlice& slice,
                            std::span<const std::vector<int>> generator_weights, int p, int q) {
  check_slice(slice);
  const int d = slice.degree;
  for (const auto& w : generator_weights)
    if (w.size() != slice.coords.size())
      throw InvalidArgument("generator weight vector does not match slice coordinates");

  if (slice.dim() == 0) {
    if (p != 0 || q != 0) return 0;
    // Points [1 : eta] with eta^d = -1; weights (w0, w1) translate eta by w1 - w0.
    int orbit_count = d;
    for (const auto& w : generator_weights) orbit_count = std::gcd(orbit_count, mod(w[1] - w[0], d));
    return static_cast<std::uint64_t>(orbit_count);
  }

  std::uint64_t count = 0;
  for_each_character(slice, p, q, [&](std::span<const int> c) {
    for (const auto& w : generator_weights) {
      long long phase = 0;
      for (std::size_t j = 0; j < c.size(); ++j) phase += static_cast<long long>(w[j]) * c[j];
      if (mod(phase, d) != 0) return;
    }
    ++count;
  });
  return count;
}

std::vector<std::uint64_t> bott(int l, int k) {
  if (l < 0) throw InvalidArgument("projective dimension must be >= 0");
  std::vector<std::uint64_t> h(static_cast<std::size_t>(l) + 1, 0);
  if (k >= 0) h[0] = binomial(static_cast<std::int64_t>(l) + k, l);
  if (k <= -l - 1) h[l] += binomial(-static_cast<std::int64_t>(k) - 1, l);
  return h;
}

}  // namespace orbidiamond

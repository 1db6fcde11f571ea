#include "orbidiamond/sector_product.hpp"

#include <algorithm>

#include "orbidiamond/errors.hpp"
#include "orbidiamond/hodge_slice.hpp"

namespace orbidiamond {

namespace {

std::vector<JointComponentData> component_data(const GroupElement& g, const GroupElement& h,
                                               const GroupElement& gh) {
  std::vector<JointComponentData> out;
  for (auto& joint : joint_components(g, h)) {
    JointComponentData c;
    c.g_component = locate_in(g, joint);
    c.h_component = locate_in(h, joint);
    c.gh_component = locate_in(gh, joint);
    c.age_g = age(g, c.g_component);
    c.age_h = age(h, c.h_component);
    c.age_gh = age(gh, c.gh_component);
    c.joint = std::move(joint);
    c.excess_rank = c.codim_g() + c.codim_h() - c.codim_joint();
    const Rational k = c.age_g + c.age_h - c.age_gh - Rational(c.codim_joint() - c.codim_gh());
    c.gamma_rank = static_cast<int>(k.to_integer());
    if (c.gamma_rank == 0)
      c.gamma = GammaClass::One;
    else if (c.gamma_rank > c.joint.slice_dim())
      c.gamma = GammaClass::Zero;
    else
      c.gamma = GammaClass::Nontrivial;
    out.push_back(std::move(c));
  }
  return out;
}

template <class T>
std::vector<T> concat(std::vector<T> a, std::vector<T> b) {
  std::move(b.begin(), b.end(), std::back_inserter(a));
  return a;
}

std::vector<std::uint64_t> sweep_left_indices(int d, int n, PairSweep sweep) {
  const std::uint64_t order = group_order(d, n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < order; ++i) {
    if (sweep == PairSweep::PermutationReduced) {
      const GroupElement g = element_at(d, n, i);
      const auto e = g.exponents();
      if (!std::is_sorted(e.begin(), e.end() - 1)) continue;
    }
    out.push_back(i);
  }
  return out;
}

void require_enumerable(int d, int n, const SweepOptions& options) {
  const std::uint64_t order = group_order(d, n);
  if (order > options.cap) throw EnumerationCapExceeded(order, options.cap);
}

}  // namespace

std::string to_string(GammaClass c) {
  switch (c) {
    case GammaClass::One: return "one";
    case GammaClass::Zero: return "zero";
    case GammaClass::Nontrivial: return "nontrivial";
  }
  return "?";
}

PairGeometry pair_geometry(const GroupElement& g, const GroupElement& h) {
  GroupElement gh = g.compose(h);
  auto comps = component_data(g, h, gh);
  return PairGeometry{g, h, std::move(gh), std::move(comps)};
}

std::vector<GammaRecord> gamma_census(int d, int n, const SweepOptions& options) {
  require_enumerable(d, n, options);
  const std::uint64_t order = group_order(d, n);
  return parallel_reduce(
      order, options.parallelism, std::vector<GammaRecord>{},
      [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<GammaRecord> part;
        for (std::uint64_t i = begin; i < end; ++i) {
          const GroupElement g = element_at(d, n, i);
          for (std::uint64_t j = 0; j < order; ++j) {
            const GroupElement h = element_at(d, n, j);
            for (const auto& c : pair_geometry(g, h).components)
              part.push_back(GammaRecord{i, j, c.joint.coords, c.gamma_rank, c.gamma});
          }
        }
        return part;
      },
      concat<GammaRecord>);
}

PropIneqResult prop_ineq_check(int d, int n, const SweepOptions& options) {
  require_enumerable(d, n, options);
  const std::uint64_t order = group_order(d, n);
  const auto merge = [](PropIneqResult acc, PropIneqResult part) {
    acc.pairs_checked += part.pairs_checked;
    acc.premise_hits += part.premise_hits;
    if (acc.holds && !part.holds) {
      acc.holds = false;
      acc.witness = std::move(part.witness);
    }
    return acc;
  };
  return parallel_reduce(
      order, options.parallelism, PropIneqResult{},
      [&](std::uint64_t begin, std::uint64_t end) {
        PropIneqResult part;
        for (std::uint64_t i = begin; i < end; ++i) {
          const GroupElement g = element_at(d, n, i);
          for (std::uint64_t j = 0; j < order; ++j) {
            const GroupElement h = element_at(d, n, j);
            ++part.pairs_checked;
            for (const auto& c : pair_geometry(g, h).components) {
              if (c.gamma_rank <= c.joint.slice_dim()) continue;
              ++part.premise_hits;
              if (c.excess_rank > c.gh_component.slice_dim()) continue;
              if (part.holds) {
                part.holds = false;
                part.witness = PairWitness{g, h, c.joint.coords,
                                           "k=" + std::to_string(c.gamma_rank) +
                                               " r=" + std::to_string(c.excess_rank) +
                                               " dim X^gh=" + std::to_string(c.gh_component.slice_dim())};
              }
            }
          }
        }
        return part;
      },
      merge);
}

std::vector<NestedChain> bass_quillen_chains(const GroupElement& g, const GroupElement& h) {
  std::vector<NestedChain> out;
  const int ambient = g.n();
  const GroupElement gh = g.compose(h);
  for (const auto& joint : joint_components(g, h)) {
    const int l = joint.ambient_dim();
    const std::pair<const char*, FixedComponent> middles[] = {{"gh", locate_in(gh, joint)},
                                                             {"g", locate_in(g, joint)}};
    for (const auto& [name, middle] : middles) {
      NestedChain chain;
      chain.middle = name;
      chain.l = l;
      chain.m = middle.ambient_dim();
      chain.ambient = ambient;
      chain.ext_copies = static_cast<std::uint64_t>(chain.m - l) *
                         static_cast<std::uint64_t>(ambient - chain.m) *
                         static_cast<std::uint64_t>(ambient - chain.m);
      // On points the class vanishes outright; otherwise it lives in copies
      // of H^1(P^l, O(-1)).
      chain.vanishes = l == 0 || bott(l, -1)[1] == 0;
      out.push_back(chain);
    }
  }
  return out;
}

bool bass_quillen_vanishes(const GroupElement& g, const GroupElement& h) {
  const auto chains = bass_quillen_chains(g, h);
  return std::all_of(chains.begin(), chains.end(), [](const NestedChain& c) { return c.vanishes; });
}

CertificateResult theorem_a_certificate(int d, int n, PairSweep sweep, const SweepOptions& options) {
  require_enumerable(d, n, options);
  const std::uint64_t order = group_order(d, n);
  const auto left = sweep_left_indices(d, n, sweep);
  const auto merge = [](CertificateResult acc, CertificateResult part) {
    acc.pairs_checked += part.pairs_checked;
    acc.chains_checked += part.chains_checked;
    if (acc.holds && !part.holds) {
      acc.holds = false;
      acc.witness = std::move(part.witness);
    }
    return acc;
  };
  CertificateResult result = parallel_reduce(
      left.size(), options.parallelism, CertificateResult{},
      [&](std::uint64_t begin, std::uint64_t end) {
        CertificateResult part;
        for (std::uint64_t i = begin; i < end; ++i) {
          const GroupElement g = element_at(d, n, left[i]);
          for (std::uint64_t j = 0; j < order; ++j) {
            const GroupElement h = element_at(d, n, j);
            ++part.pairs_checked;
            for (const auto& chain : bass_quillen_chains(g, h)) {
              ++part.chains_checked;
              if (!chain.vanishes && part.holds) {
                part.holds = false;
                part.witness = PairWitness{g, h, {}, "chain via X^" + chain.middle +
                                                         " with l=" + std::to_string(chain.l)};
              }
            }
          }
        }
        return part;
      },
      merge);
  result.sweep = sweep;
  return result;
}

EpsilonSign epsilon(const GroupElement& g, const GroupElement& h, const FixedComponent& joint) {
  if (g.modulus() != g.n() + 1) throw NonCalabiYau(g.modulus(), g.n());
  const GroupElement gh = g.compose(h);
  const Rational e = age(g, locate_in(g, joint)) + age(h, locate_in(h, joint)) -
                     age(gh, locate_in(gh, joint));
  EpsilonSign out;
  out.epsilon = e.to_integer();
  out.sign = (out.epsilon % 2 == 0) ? 1 : -1;
  return out;
}

bool UnsimplifiedSummand::vanishes_for(int q_sum, int p_sum) const {
  const int q = q_sum + polyvector_shift;
  const int p = p_sum + cohomology_shift;
  return q > target_dim || p < 0 || p > target_dim;
}

std::vector<UnsimplifiedSummand> unsimplified_summands(const GroupElement& g, const GroupElement& h,
                                                       const FixedComponent& joint) {
  const GroupElement gh = g.compose(h);
  const FixedComponent gc = locate_in(g, joint);
  const FixedComponent hc = locate_in(h, joint);
  const FixedComponent ghc = locate_in(gh, joint);
  const int r = gc.codim() + hc.codim() - joint.codim();
  std::vector<UnsimplifiedSummand> out;
  for (int i = 0; i <= r; ++i) {
    UnsimplifiedSummand s;
    s.index = i;
    s.polyvector_shift = i;
    s.cohomology_shift = -ghc.codim() - i;
    s.target_dim = ghc.slice_dim();
    s.target_is_zero = i > s.target_dim;
    out.push_back(s);
  }
  return out;
}

nlohmann::json to_json(const PairGeometry& pg) {
  auto comps = nlohmann::json::array();
  for (const auto& c : pg.components) {
    comps.push_back({{"coords", c.joint.coords},
                     {"codim_g", c.codim_g()},
                     {"codim_h", c.codim_h()},
                     {"codim_joint", c.codim_joint()},
                     {"codim_gh", c.codim_gh()},
                     {"age_g", to_json(c.age_g)},
                     {"age_h", to_json(c.age_h)},
                     {"age_gh", to_json(c.age_gh)},
                     {"excess_rank", c.excess_rank},
                     {"gamma_rank", c.gamma_rank},
                     {"gamma", to_string(c.gamma)}});
  }
  auto exps = [](const GroupElement& e) {
    return std::vector<int>(e.exponents().begin(), e.exponents().end());
  };
  return {{"g", exps(pg.g)}, {"h", exps(pg.h)}, {"gh", exps(pg.gh)}, {"components", comps}};
}

}  // namespace orbidiamond

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orbidiamond/errors.hpp"
#include "orbidiamond/fixed_locus.hpp"
#include "orbidiamond/lg_algebra.hpp"
#include "orbidiamond/sector_product.hpp"

namespace orbidiamond::cli {

namespace {

using nlohmann::json;

bool is_cy(const RunConfig& cfg) { return cfg.d == cfg.n + 1; }

std::vector<int> exps(const GroupElement& g) { return {g.exponents().begin(), g.exponents().end()}; }

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

TableOptions table_options(const RunConfig& cfg, bool keep_sectors) {
  TableOptions opts;
  opts.cap = cfg.cap;
  opts.parallelism.threads = cfg.threads;
  opts.keep_sectors = keep_sectors;
  return opts;
}

SweepOptions sweep_options(const RunConfig& cfg) {
  SweepOptions opts;
  opts.cap = cfg.cap;
  opts.parallelism.threads = cfg.threads;
  return opts;
}

json witness_json(const PairWitness& w) {
  return {{"g", exps(w.g)}, {"h", exps(w.h)}, {"coords", w.coords}, {"detail", w.detail}};
}

std::string entries_text(const TableEntries& entries) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, dim] : entries) {
    os << (first ? "" : " ") << '(' << b.q << ',' << b.p << ")=" << dim;
    first = false;
  }
  return os.str();
}

GroupElement parse_sector(const std::string& text, int d, int n) {
  std::vector<int> a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      a.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad sector entry '" + item + "' in '" + text + "'");
    }
  }
  if (static_cast<int>(a.size()) != n + 1)
    throw InvalidArgument("sector '" + text + "' needs " + std::to_string(n + 1) + " exponents");
  return GroupElement(d, std::move(a));
}

void require_format(const RunConfig& cfg, std::initializer_list<Format> allowed) {
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end())
    throw InvalidArgument("output format not supported by this command");
}

void require_sectors(const RunConfig& cfg, std::size_t count) {
  if (cfg.sectors.size() != count)
    throw InvalidArgument("expected " + std::to_string(count) + " --sector value(s)");
}

// ---- verify -------------------------------------------------------------

struct Check {
  std::string name;
  std::string status;  // pass, fail, skipped
  json detail = json::object();
  json witness = nullptr;
};

Check check_age_reciprocity(const RunConfig& cfg) {
  Check c{"age_reciprocity", "pass"};
  std::uint64_t elements = 0, comps = 0;
  for (const auto& g : enumerate(cfg.d, cfg.n, cfg.cap)) {
    ++elements;
    const auto inv = g.inverse();
    for (const auto& u : components(g)) {
      ++comps;
      FixedComponent dual = u;
      dual.value = (cfg.d - u.value) % cfg.d;
      if (age(g, u) + age(inv, dual) != Rational(u.codim())) {
        c.status = "fail";
        c.witness = {{"g", exps(g)}, {"coords", u.coords}};
        break;
      }
    }
    if (c.status == "fail") break;
  }
  c.detail = {{"elements", elements}, {"components", comps}};
  return c;
}

Check check_prop_ineq(const RunConfig& cfg) {
  const auto r = prop_ineq_check(cfg.d, cfg.n, sweep_options(cfg));
  Check c{"prop_ineq", r.holds ? "pass" : "fail"};
  c.detail = {{"pairs", r.pairs_checked}, {"premise_hits", r.premise_hits}};
  if (r.witness) c.witness = witness_json(*r.witness);
  return c;
}

Check check_theorem_a(const RunConfig& cfg) {
  const auto r = theorem_a_certificate(cfg.d, cfg.n, PairSweep::PermutationReduced, sweep_options(cfg));
  Check c{"theorem_a_certificate", r.holds ? "pass" : "fail"};
  c.detail = {{"sweep", "permutation-reduced"}, {"pairs", r.pairs_checked}, {"chains", r.chains_checked}};
  if (r.witness) c.witness = witness_json(*r.witness);
  return c;
}

Check skipped(std::string name) {
  Check c{std::move(name), "skipped"};
  c.detail = {{"reason", "requires d = n + 1"}};
  return c;
}

Check check_greek_cross(const RunConfig& cfg) {
  if (!is_cy(cfg)) return skipped("greek_cross");
  const auto forms = cr_table(cfg.d, cfg.n, true, table_options(cfg, false));
  const auto poly = ht_table_cy(cfg.d, cfg.n, true, table_options(cfg, false));
  const bool a = greek_cross_check(forms);
  const bool b = greek_cross_check(poly);
  Check c{"greek_cross", a && b ? "pass" : "fail"};
  c.detail = {{to_string(TableVariant::HOmegaInvariant), a}, {to_string(TableVariant::HTInvariant), b}};
  return c;
}

Check check_cross_oracle(const RunConfig& cfg) {
  if (!is_cy(cfg)) return skipped("cross_oracle");
  const auto lg = state_space(cfg.d, cfg.n, cfg.cap);
  const auto geo = ht_table_cy(cfg.d, cfg.n, true, table_options(cfg, false));
  Check c{"cross_oracle", lg.entries == geo.entries ? "pass" : "fail"};
  c.detail = {{"total", geo.total()}, {"entries", geo.entries.size()}};
  if (lg.entries != geo.entries) {
    TableEntries keys = lg.entries;
    keys.insert(geo.entries.begin(), geo.entries.end());
    for (const auto& [b, unused] : keys) {
      if (lg.at(b.q, b.p) == geo.at(b.q, b.p)) continue;
      c.witness = {{"q", b.q.to_string()}, {"p", b.p.to_string()},
                   {"landau_ginzburg", lg.at(b.q, b.p)}, {"geometric", geo.at(b.q, b.p)}};
      break;
    }
  }
  return c;
}

Check check_algebra(const RunConfig& cfg) {
  if (!is_cy(cfg)) return skipped("algebra");
  const auto alg = FrobeniusAlgebra::build(cfg.d, cfg.n, cfg.cap);
  Parallelism par;
  par.threads = cfg.threads;
  const auto r = algebra_checks(alg, par);
  Check c{"algebra", r.all_pass() ? "pass" : "fail"};
  c.detail = {{"basis", alg.size()},
              {"triples", r.triples_checked},
              {"associative", r.associative},
              {"graded_commutative", r.graded_commutative},
              {"frobenius", r.frobenius},
              {"unit", r.unit},
              {"pairing_nondegenerate", r.pairing_nondegenerate},
              {"pairing_symmetry", r.pairing_symmetry}};
  if (!r.failures.empty()) c.witness = r.failures;
  return c;
}

}  // namespace

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Text, Format::Json, Format::Csv});
  const auto c = census(cfg.d, cfg.n, cfg.cap);
  const bool quintic = cfg.d == 5 && cfg.n == 4;
  switch (cfg.format) {
    case Format::Text:
      if (quintic) {
        const auto t = quintic_census(c);
        out << t.at(QuinticType::One) << ' ' << t.at(QuinticType::Two) << ' '
            << t.at(QuinticType::Three) << ' ' << t.at(QuinticType::Four) << '\n';
      } else {
        for (const auto& [key, count] : c) out << key.to_string() << ' ' << count << '\n';
        out << "total " << census_total(c) << '\n';
      }
      break;
    case Format::Json: {
      json shapes = json::array();
      for (const auto& [key, count] : c)
        shapes.push_back({{"zero_block", key.zero_block_size}, {"other_blocks", key.other_sizes}, {"count", count}});
      json j{{"d", cfg.d}, {"n", cfg.n}, {"total", census_total(c)}, {"shapes", shapes}};
      if (quintic) {
        json types = json::object();
        for (const auto& [t, count] : quintic_census(c)) types[to_string(t)] = count;
        j["quintic_types"] = types;
      }
      emit_json(out, j);
      break;
    }
    case Format::Csv:
      out << "zero_block,other_blocks,count\n";
      for (const auto& [key, count] : c) {
        out << key.zero_block_size << ',';
        for (std::size_t i = 0; i < key.other_sizes.size(); ++i) out << (i ? ";" : "") << key.other_sizes[i];
        out << ',' << count << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_fixed_locus(const RunConfig& cfg, std::ostream& out) {
  require_sectors(cfg, 1);
  const auto& g = cfg.sectors.front();
  const auto comps = components(g);
  switch (cfg.format) {
    case Format::Text:
      if (comps.empty()) {
        out << "X^g is empty for g = " << g.to_string() << '\n';
        break;
      }
      out << "g = " << g.to_string() << '\n';
      for (const auto& u : comps) {
        out << "P^" << u.ambient_dim() << " on {";
        for (std::size_t i = 0; i < u.coords.size(); ++i) out << (i ? "," : "") << u.coords[i];
        out << "} value " << u.value << " age " << age(g, u) << " codim " << u.codim() << '\n';
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& u : comps) arr.push_back(to_json(u, age(g, u)));
      emit_json(out, {{"g", exps(g)}, {"components", arr}});
      break;
    }
    case Format::Csv:
      out << "coords,value,age,codim\n";
      for (const auto& u : comps) {
        for (std::size_t i = 0; i < u.coords.size(); ++i) out << (i ? ";" : "") << u.coords[i];
        out << ',' << u.value << ',' << age(g, u).to_string() << ',' << u.codim() << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_diamond(const RunConfig& cfg, std::ostream& out) {
  std::optional<BigradedTable> table;
  std::optional<TableCache> cache;
  if (cfg.cache_dir) cache.emplace(*cfg.cache_dir);
  if (cache) table = cache->load(cfg.d, cfg.n, cfg.variant);
  if (!table) {
    table = compute_table(cfg.d, cfg.n, cfg.variant, table_options(cfg, false));
    if (cache) cache->store(*table);
  }
  switch (cfg.format) {
    case Format::Text: out << render_diamond(*table); break;
    case Format::Json: emit_json(out, to_json(*table)); break;
    case Format::Csv: out << to_csv(*table); break;
  }
  return kOk;
}

int cmd_sectors(const RunConfig& cfg, std::ostream& out) {
  std::vector<SectorTable> rows;
  if (cfg.sectors.empty()) {
    rows = compute_table(cfg.d, cfg.n, cfg.variant, table_options(cfg, true)).sectors;
  } else {
    const bool inv = is_invariant(cfg.variant);
    for (const auto& g : cfg.sectors)
      rows.push_back({g, is_polyvector(cfg.variant) ? ht_sector_cy(g, inv) : cr_sector(g, inv)});
  }
  switch (cfg.format) {
    case Format::Text:
      for (const auto& s : rows) out << s.g.to_string() << ": " << entries_text(s.entries) << '\n';
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& s : rows) {
        BigradedTable t{cfg.d, cfg.n, cfg.variant, s.entries, {}};
        arr.push_back({{"g", exps(s.g)}, {"entries", to_json(t)["entries"]}});
      }
      emit_json(out, {{"d", cfg.d}, {"n", cfg.n}, {"variant", to_string(cfg.variant)}, {"sectors", arr}});
      break;
    }
    case Format::Csv:
      out << "g,q,p,dim\n";
      for (const auto& s : rows)
        for (const auto& [b, dim] : s.entries) {
          for (std::size_t i = 0; i < s.g.exponents().size(); ++i) out << (i ? ";" : "") << s.g[i];
          out << ',' << b.q << ',' << b.p << ',' << dim << '\n';
        }
      break;
  }
  return kOk;
}

int cmd_pair(const RunConfig& cfg, std::ostream& out) {
  require_sectors(cfg, 2);
  require_format(cfg, {Format::Text, Format::Json});
  const auto& g = cfg.sectors[0];
  const auto& h = cfg.sectors[1];
  const auto pg = pair_geometry(g, h);
  std::vector<std::optional<EpsilonSign>> eps;
  for (const auto& c : pg.components)
    eps.push_back(is_cy(cfg) ? std::optional(epsilon(g, h, c.joint)) : std::nullopt);

  if (cfg.format == Format::Json) {
    json j = to_json(pg);
    for (std::size_t i = 0; i < eps.size(); ++i)
      if (eps[i]) j["components"][i]["epsilon"] = eps[i]->epsilon;
    emit_json(out, j);
    return kOk;
  }
  out << "g = " << g.to_string() << "  h = " << h.to_string() << "  gh = " << pg.gh.to_string() << '\n';
  if (pg.components.empty()) out << "X^{g,h} is empty\n";
  for (std::size_t i = 0; i < pg.components.size(); ++i) {
    const auto& c = pg.components[i];
    out << '{';
    for (std::size_t k = 0; k < c.joint.coords.size(); ++k) out << (k ? "," : "") << c.joint.coords[k];
    out << "}: c_g=" << c.codim_g() << " c_h=" << c.codim_h() << " c_gh=" << c.codim_gh()
        << " c_joint=" << c.codim_joint() << " age_g=" << c.age_g << " age_h=" << c.age_h
        << " age_gh=" << c.age_gh << " r=" << c.excess_rank << " k=" << c.gamma_rank
        << " gamma=" << to_string(c.gamma);
    if (eps[i]) out << " epsilon=" << eps[i]->epsilon;
    out << '\n';
  }
  return kOk;
}

int cmd_bass_quillen(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Text, Format::Json});
  if (cfg.sectors.size() == 2) {
    const auto chains = bass_quillen_chains(cfg.sectors[0], cfg.sectors[1]);
    const bool ok = std::all_of(chains.begin(), chains.end(), [](const NestedChain& c) { return c.vanishes; });
    if (cfg.format == Format::Json) {
      json arr = json::array();
      for (const auto& c : chains)
        arr.push_back({{"middle", c.middle}, {"l", c.l}, {"m", c.m}, {"ambient", c.ambient},
                       {"ext_copies", c.ext_copies}, {"vanishes", c.vanishes}});
      emit_json(out, {{"g", exps(cfg.sectors[0])}, {"h", exps(cfg.sectors[1])}, {"chains", arr}, {"vanishes", ok}});
    } else {
      for (const auto& c : chains)
        out << "X^{g,h} in X^" << c.middle << ": l=" << c.l << " m=" << c.m << " ambient=" << c.ambient
            << " copies=" << c.ext_copies << (c.vanishes ? " vanishes" : " NONZERO") << '\n';
      out << (ok ? "vanishes" : "does not vanish") << '\n';
    }
    return ok ? kOk : kCheckFailed;
  }
  if (!cfg.sectors.empty()) throw InvalidArgument("give either no --sector or a pair g, h");
  const auto r = theorem_a_certificate(cfg.d, cfg.n, PairSweep::PermutationReduced, sweep_options(cfg));
  if (cfg.format == Format::Json) {
    json j{{"d", cfg.d}, {"n", cfg.n}, {"holds", r.holds}, {"pairs", r.pairs_checked}, {"chains", r.chains_checked}};
    if (r.witness) j["witness"] = witness_json(*r.witness);
    emit_json(out, j);
  } else {
    out << (r.holds ? "vanishes" : "FAILS") << " on " << r.pairs_checked << " pairs (" << r.chains_checked
        << " chains)\n";
    if (r.witness) out << "witness g=" << r.witness->g.to_string() << " h=" << r.witness->h.to_string() << ' '
                       << r.witness->detail << '\n';
  }
  return r.holds ? kOk : kCheckFailed;
}

int cmd_product_table(const RunConfig& cfg, std::ostream& out) {
  const auto alg = FrobeniusAlgebra::build(cfg.d, cfg.n, cfg.cap);
  const auto& basis = alg.basis();
  switch (cfg.format) {
    case Format::Json: emit_json(out, alg.to_json()); break;
    case Format::Text:
      for (std::size_t i = 0; i < basis.size(); ++i)
        out << i << ' ' << basis[i].label() << " (" << basis[i].q << ',' << basis[i].p << ")\n";
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
          if (const auto c = alg.product(a, b))
            out << basis[a].label() << " * " << basis[b].label() << " = " << (c->sign < 0 ? "-" : "")
                << basis[c->index].label() << '\n';
      break;
    case Format::Csv:
      out << "left,right,result,sign\n";
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
          if (const auto c = alg.product(a, b)) out << a << ',' << b << ',' << c->index << ',' << c->sign << '\n';
      break;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Text, Format::Json});
  const std::vector<std::function<Check(const RunConfig&)>> suite{
      check_age_reciprocity, check_prop_ineq, check_theorem_a,
      check_greek_cross,     check_cross_oracle, check_algebra};
  std::vector<Check> checks;
  bool ok = true;
  for (const auto& run_check : suite) {
    checks.push_back(run_check(cfg));
    ok = ok && checks.back().status != "fail";
  }
  if (cfg.format == Format::Json) {
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}, {"witness", c.witness}});
    emit_json(out, {{"d", cfg.d}, {"n", cfg.n}, {"checks", arr}, {"all_pass", ok}});
  } else {
    for (const auto& c : checks) {
      out << c.status << ' ' << c.name << ' ' << c.detail.dump();
      if (!c.witness.is_null()) out << " witness " << c.witness.dump();
      out << '\n';
    }
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbifold cohomology of Fermat hypersurface quotients"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string variant = to_string(TableVariant::HTInvariant);
  std::vector<std::string> sector_args;
  std::string cache_dir;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  using Command = int (*)(const RunConfig&, std::ostream&);
  const std::vector<std::tuple<std::string, std::string, Command>> commands{
      {"census", "count group elements by fixed-locus shape", cmd_census},
      {"fixed-locus", "components and ages of X^g", cmd_fixed_locus},
      {"diamond", "bigraded table as a text diamond, JSON or CSV", cmd_diamond},
      {"sectors", "per-sector contributions to a table", cmd_sectors},
      {"pair", "ranks and gamma classes for a pair g, h", cmd_pair},
      {"bass-quillen", "nested-chain vanishing for a pair, or over all pairs", cmd_bass_quillen},
      {"product-table", "Landau-Ginzburg Frobenius algebra", cmd_product_table},
      {"verify", "run the full invariant suite", cmd_verify},
  };
  Command chosen = nullptr;
  for (const auto& [name, help, fn] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--d", cfg.d, "degree")->required()->check(CLI::Range(2, 64));
    sub->add_option("--n", cfg.n, "projective dimension")->required()->check(CLI::Range(2, 64));
    sub->add_option("--variant", variant, "HOmega-sum, HOmega-invariant, HT-sum or HT-invariant");
    sub->add_option("--sector", sector_args, "group element a0,a1,...,an (repeatable)");
    sub->add_option("--format", cfg.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--cache-dir", cache_dir, "table cache directory (default $ORBIDIAMOND_CACHE)");
    sub->add_option("--max-enum", cfg.cap, "enumeration cap");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    sub->callback([&chosen, f = fn] { chosen = f; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.variant = parse_variant(variant);
    for (const auto& s : sector_args) cfg.sectors.push_back(parse_sector(s, cfg.d, cfg.n));
    // verify always recomputes.
    if (chosen != cmd_verify) {
      if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
      else cfg.cache_dir = TableCache::directory_from_env();
    }
    return chosen(cfg, out);
  } catch (const NonCalabiYau& e) {
    err << "error: " << e.what() << '\n';
    return kNotCalabiYau;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace orbidiamond::cli

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "orbidiamond/errors.hpp"
#include "orbidiamond/orbifold_diamond.hpp"

namespace orbidiamond {

namespace {

nlohmann::json degree_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

Rational degree_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const auto text = j.get<std::string>();
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

nlohmann::json entries_json(const TableEntries& entries) {
  auto arr = nlohmann::json::array();
  for (const auto& [k, v] : entries)
    arr.push_back({{"q", degree_json(k.q)}, {"p", degree_json(k.p)}, {"dim", v}});
  return arr;
}

}  // namespace

nlohmann::json to_json(const BigradedTable& table) {
  nlohmann::json j{{"d", table.d},
                   {"n", table.n},
                   {"variant", to_string(table.variant)},
                   {"entries", entries_json(table.entries)}};
  return j;
}

BigradedTable table_from_json(const nlohmann::json& j) {
  BigradedTable t;
  try {
    t.d = j.at("d").get<int>();
    t.n = j.at("n").get<int>();
    t.variant = parse_variant(j.at("variant").get<std::string>());
    for (const auto& e : j.at("entries")) {
      const auto dim = e.at("dim").get<std::uint64_t>();
      if (dim != 0) t.entries[Bidegree{degree_from_json(e.at("q")), degree_from_json(e.at("p"))}] = dim;
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed table JSON: ") + ex.what());
  }
  return t;
}

std::string to_csv(const BigradedTable& table) {
  std::ostringstream os;
  os << "q,p,dim\n";
  for (const auto& [k, v] : table.entries) os << k.q << ',' << k.p << ',' << v << '\n';
  return os.str();
}

std::string render_diamond(const BigradedTable& table) {
  std::ostringstream os;
  const int top = table.top_degree();
  if (!table.is_integral()) {
    for (const auto& [k, v] : table.entries) os << "(" << k.q << "," << k.p << ") " << v << '\n';
    return os.str();
  }
  std::size_t width = 1;
  for (const auto& [k, v] : table.entries) width = std::max(width, std::to_string(v).size());
  const std::size_t cell = width + 1;
  for (int s = 0; s <= 2 * top; ++s) {
    std::string line(static_cast<std::size_t>(2 * top + 1) * cell, ' ');
    for (int q = std::min(top, s); q >= std::max(0, s - top); --q) {
      const int p = s - q;
      const std::string text = std::to_string(table.at(q, p));
      const std::size_t col = static_cast<std::size_t>(top + p - q) * cell;
      const std::size_t pad = (cell - text.size()) / 2;
      line.replace(col + pad, text.size(), text);
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  return os.str();
}

TableCache::TableCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::optional<std::filesystem::path> TableCache::directory_from_env() {
  const char* env = std::getenv("ORBIDIAMOND_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::filesystem::path TableCache::path_for(int d, int n, TableVariant variant) const {
  return directory_ / ("d" + std::to_string(d) + "_n" + std::to_string(n) + "_" +
                       to_string(variant) + ".json");
}

std::optional<BigradedTable> TableCache::load(int d, int n, TableVariant variant) const {
  const auto path = path_for(d, n, variant);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    BigradedTable t = table_from_json(nlohmann::json::parse(in));
    if (t.d != d || t.n != n || t.variant != variant) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    // Unreadable entries are treated as misses.
    return std::nullopt;
  }
}

void TableCache::store(const BigradedTable& table) const {
  std::filesystem::create_directories(directory_);
  const auto path = path_for(table.d, table.n, table.variant);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp);
    out << to_json(table).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace orbidiamond

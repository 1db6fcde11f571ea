#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orbidiamond/fermat_group.hpp"
#include "orbidiamond/orbifold_diamond.hpp"

namespace orbidiamond::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kNotCalabiYau = 3,
  kCapExceeded = 4,
};

enum class Format { Text, Json, Csv };

struct RunConfig {
  int d = 0;
  int n = 0;
  TableVariant variant = TableVariant::HTInvariant;
  std::vector<GroupElement> sectors;
  Format format = Format::Text;
  std::optional<std::filesystem::path> cache_dir;
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 0;
};

int cmd_census(const RunConfig& cfg, std::ostream& out);
int cmd_fixed_locus(const RunConfig& cfg, std::ostream& out);
int cmd_diamond(const RunConfig& cfg, std::ostream& out);
int cmd_sectors(const RunConfig& cfg, std::ostream& out);
int cmd_pair(const RunConfig& cfg, std::ostream& out);
int cmd_bass_quillen(const RunConfig& cfg, std::ostream& out);
int cmd_product_table(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

/// Parses argv, dispatches, and maps library errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbidiamond::cli

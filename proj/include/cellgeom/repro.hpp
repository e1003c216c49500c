#pragma once

// Reproduction of the published examples as a list of exact checks.

#include <cstdint>
#include <string>
#include <vector>

namespace cellgeom {

struct CheckRecord {
  std::string id;
  std::string group;
  std::string location;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

struct ReproOptions {
  std::uint64_t seed = 42;
  /// Empty, a group name (hecke, b2, s4, n4, gl8, gl12, gl13) or an id prefix.
  std::string only;
  int ks_samples = 1000;
  int reduction_samples = 1000;
  int threads = 0;
};

struct ReproReport {
  std::string version;
  std::uint64_t seed = 0;
  std::string only;
  std::vector<CheckRecord> records;

  int passed() const;
  int failed() const { return static_cast<int>(records.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }
};

const std::vector<std::string>& repro_groups();
ReproReport repro_all(const ReproOptions& opts = {});

}  // namespace cellgeom

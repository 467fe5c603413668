#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "realmult/report.hpp"

namespace realmult {

constexpr int kReportSchema = 1;

struct Config {
  std::size_t max_jp_steps = kDefaultMaxJPSteps;
  long hecke_bound = kDefaultHeckeBound;
  long separating_bound = kDefaultSeparatingBound;
  std::vector<long> positivity_bounds{5, 10};
  int max_relative_degree = kDefaultMaxRelativeDegree;
  unsigned convergence_periods = 5;
  std::string cache_dir;  // empty: no cache
  unsigned jobs = 1;

  // InvalidArgument unless every bound is positive.
  void validate() const;
  // Settings that influence report content (cache_dir and jobs excluded).
  Json to_json() const;
  // FNV-1a 64 of to_json().dump(), as 16 hex digits.
  std::string hash() const;
};

std::uint64_t fnv1a64(const std::string& bytes);

struct LevelReport {
  long level = 0;
  Json body;  // includes "timing_seconds"

  // Pretty JSON; the timing field is dropped unless with_timing.
  std::string dump(bool with_timing = true) const;
  static LevelReport from_json(const Json& j);
};

LevelReport analyze_level(long N, const Config& config);
// Order of results follows the input; up to config.jobs levels run at once.
std::vector<LevelReport> analyze_levels(const std::vector<long>& levels, const Config& config);

struct JInvariant {
  std::size_t lattice = 0;
  AlgebraicReal value;  // lambda_i in the field of lattice i
  std::size_t root_index = 0;  // among the real roots of P(A), increasing
  bool perron = false;
};

// j(m^(i)) = lambda_i: lambda (a root of P(A) written in the field of
// lattices[0]) is moved to each lattice's embedding of the same field.
std::vector<JInvariant> j_invariants(const IntMatrix& A, const AlgebraicReal& lambda,
                                     const std::vector<PseudoLattice>& lattices);

std::filesystem::path cache_path(const std::string& dir, long N, const Config& config);
// Atomic write (temp file, then rename); returns the final path.
std::filesystem::path cache_put(const LevelReport& report, const Config& config);
// Miss on absent file; CacheCorrupt on an unreadable or mismatching file.
std::optional<LevelReport> cache_get(long N, const Config& config);

std::string version_string();

}  // namespace realmult

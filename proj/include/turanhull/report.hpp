#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace turanhull {

/// Outcome of one verification sweep (or one chunk of it).
///
/// Partial reports over disjoint chunks merge by exact addition of counters,
/// element-wise maxima and concatenation of failures ordered by instance
/// index, so merging is associative and order-independent.
struct VerificationReport {
  std::string theorem;
  int n = 0;
  int r = 0;
  int k = 0;  // 0 when the check is not parameterized by k
  std::string mode;  // "exhaustive" or "random"
  std::uint64_t seed = 0;
  std::uint64_t range_begin = 0;
  std::uint64_t range_end = 0;

  std::uint64_t instances_checked = 0;
  std::uint64_t instances_skipped = 0;
  std::uint64_t failure_count = 0;
  /// Serialized counterexamples, each with an "index" field; at most kMaxStoredFailures kept.
  std::vector<nlohmann::json> failures;

  std::map<std::string, std::uint64_t> counters;
  std::map<std::string, std::vector<std::uint64_t>> maxima;

  nlohmann::json config;
  /// Only set when timing was requested, so default output stays byte-reproducible.
  std::optional<double> wall_time_ms;

  static constexpr std::size_t kMaxStoredFailures = 100;

  bool passed() const { return failure_count == 0; }
  void add_failure(std::uint64_t index, nlohmann::json detail);
  void bump(const std::string& counter, std::uint64_t by = 1) { counters[counter] += by; }
  void raise_maxima(const std::string& name, const std::vector<std::uint64_t>& values);
};

/// Merges b into a. Both must describe the same check (theorem, n, r, k, mode, seed);
/// throws std::invalid_argument otherwise.
void merge_into(VerificationReport& a, const VerificationReport& b);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

std::string report_csv_header();
std::string report_csv_row(const VerificationReport& report);

}  // namespace turanhull

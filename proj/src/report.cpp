#include "turanhull/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace turanhull {

void VerificationReport::add_failure(std::uint64_t index, nlohmann::json detail) {
  ++failure_count;
  if (failures.size() >= kMaxStoredFailures) return;
  detail["index"] = index;
  failures.push_back(std::move(detail));
}

void VerificationReport::raise_maxima(const std::string& name, const std::vector<std::uint64_t>& values) {
  auto& current = maxima[name];
  if (current.size() < values.size()) current.resize(values.size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) current[i] = std::max(current[i], values[i]);
}

void merge_into(VerificationReport& a, const VerificationReport& b) {
  if (a.theorem != b.theorem || a.n != b.n || a.r != b.r || a.k != b.k || a.mode != b.mode || a.seed != b.seed)
    throw std::invalid_argument("cannot merge reports of different checks");
  if (a.range_end == a.range_begin) {
    a.range_begin = b.range_begin;
    a.range_end = b.range_end;
  } else if (b.range_end != b.range_begin) {
    a.range_begin = std::min(a.range_begin, b.range_begin);
    a.range_end = std::max(a.range_end, b.range_end);
  }
  a.instances_checked += b.instances_checked;
  a.instances_skipped += b.instances_skipped;
  a.failure_count += b.failure_count;
  a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
  std::stable_sort(a.failures.begin(), a.failures.end(),
                   [](const nlohmann::json& x, const nlohmann::json& y) { return x.at("index").get<std::uint64_t>() < y.at("index").get<std::uint64_t>(); });
  if (a.failures.size() > VerificationReport::kMaxStoredFailures) a.failures.resize(VerificationReport::kMaxStoredFailures);
  for (const auto& [name, value] : b.counters) a.counters[name] += value;
  for (const auto& [name, values] : b.maxima) a.raise_maxima(name, values);
  if (b.wall_time_ms) a.wall_time_ms = a.wall_time_ms.value_or(0.0) + *b.wall_time_ms;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j = {
      {"theorem", report.theorem},
      {"n", report.n},
      {"r", report.r},
      {"k", report.k},
      {"mode", report.mode},
      {"seed", report.seed},
      {"range", {report.range_begin, report.range_end}},
      {"instances_checked", report.instances_checked},
      {"instances_skipped", report.instances_skipped},
      {"failure_count", report.failure_count},
      {"failures", report.failures},
      {"counters", report.counters},
      {"maxima", report.maxima},
      {"config", report.config.is_null() ? nlohmann::json::object() : report.config},
      {"passed", report.passed()},
  };
  if (report.wall_time_ms) j["wall_time_ms"] = *report.wall_time_ms;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.n = j.at("n").get<int>();
  r.r = j.at("r").get<int>();
  r.k = j.value("k", 0);
  r.mode = j.at("mode").get<std::string>();
  r.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("range")) {
    r.range_begin = j["range"].at(0).get<std::uint64_t>();
    r.range_end = j["range"].at(1).get<std::uint64_t>();
  }
  r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
  r.instances_skipped = j.value("instances_skipped", std::uint64_t{0});
  r.failure_count = j.at("failure_count").get<std::uint64_t>();
  for (const auto& f : j.value("failures", nlohmann::json::array())) r.failures.push_back(f);
  if (j.contains("counters")) r.counters = j["counters"].get<std::map<std::string, std::uint64_t>>();
  if (j.contains("maxima")) r.maxima = j["maxima"].get<std::map<std::string, std::vector<std::uint64_t>>>();
  r.config = j.value("config", nlohmann::json::object());
  if (j.contains("wall_time_ms")) r.wall_time_ms = j["wall_time_ms"].get<double>();
  return r;
}

std::string report_csv_header() {
  return "theorem,n,r,k,mode,seed,range_begin,range_end,instances_checked,instances_skipped,failure_count,passed";
}

std::string report_csv_row(const VerificationReport& r) {
  return r.theorem + "," + std::to_string(r.n) + "," + std::to_string(r.r) + "," + std::to_string(r.k) + "," + r.mode + "," +
         std::to_string(r.seed) + "," + std::to_string(r.range_begin) + "," + std::to_string(r.range_end) + "," +
         std::to_string(r.instances_checked) + "," + std::to_string(r.instances_skipped) + "," + std::to_string(r.failure_count) +
         "," + (r.passed() ? "true" : "false");
}

}  // namespace turanhull

#include "segcover/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace segcover {
namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return fixed4(*v);
  } else {
    return std::to_string(*v);
  }
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string csv_row(const RunRecord& r) {
  return quote(r.instance) + ',' + quote(r.algorithm) + ',' + std::to_string(r.seed) + ',' +
         std::to_string(r.threads) + ',' + opt(r.cardinality) + ',' + opt(r.bks) + ',' +
         opt(r.rpd) + ',' + opt(r.rpd_star) + ',' + fixed4(r.wall_ms);
}

std::string emit_results_csv(std::span<const RunRecord> records) {
  std::string out = std::string(kResultsCsvHeader) + "\n";
  for (const auto& r : records) out += csv_row(r) + "\n";
  return out;
}

std::string emit_results_json(std::span<const RunRecord> records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["algorithm"] = r.algorithm;
    j["seed"] = r.seed;
    j["threads"] = r.threads;
    j["cardinality"] = opt_json(r.cardinality);
    j["bks"] = opt_json(r.bks);
    j["rpd"] = opt_json(r.rpd);
    j["rpd_star"] = opt_json(r.rpd_star);
    j["preprocess_ms"] = r.preprocess_ms;
    j["segment_ms"] = r.segment_ms;
    j["solve_ms"] = r.solve_ms;
    j["merge_ms"] = r.merge_ms;
    j["wall_ms"] = r.wall_ms;
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace segcover

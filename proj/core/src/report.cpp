#include "jharm/report.hpp"

#include <cmath>

#include "json.hpp"

namespace jharm {

namespace {

nlohmann::ordered_json encode_double(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

nlohmann::ordered_json encode(const DiagnosticReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["bound"] = encode_double(r.bound);
  j["empirical"] = encode_double(r.empirical);
  j["ratio"] = encode_double(r.ratio);
  j["verdict"] = r.verdict;
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const auto& s : r.samples)
    samples.push_back({encode_double(s[0]), encode_double(s[1])});
  j["samples"] = std::move(samples);
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string DiagnosticReport::to_json() const { return encode(*this).dump(2); }

std::string reports_to_json(const std::vector<DiagnosticReport>& reports) {
  nlohmann::ordered_json root;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(encode(r));
  root["checks"] = std::move(arr);
  return root.dump(2);
}

}  // namespace jharm

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "g2schur/json_io.hpp"

namespace g2schur {

enum class Status { Pass, Fail, Info };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

struct CheckRecord {
  std::string id;
  std::string check;
  Status status = Status::Pass;
  json data = json::object();  // triple, k, degree, ... as the check needs
  std::optional<std::string> witness;
  double millis = 0;
};

// Ordered collection of check records; timings are kept apart from the deterministic body.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& records() const { return records_; }
  json& config() { return config_; }
  json& extra() { return extra_; }
  const json& extra() const { return extra_; }
  const json& config() const { return config_; }
  void set_checksum(std::string c) { checksum_ = std::move(c); }

  CheckRecord& add(CheckRecord r) {
    records_.push_back(std::move(r));
    return records_.back();
  }
  CheckRecord& add(std::string id, std::string check, bool pass, json data = json::object(),
                   std::optional<std::string> witness = std::nullopt) {
    return add(CheckRecord{std::move(id), std::move(check), pass ? Status::Pass : Status::Fail, std::move(data),
                           std::move(witness), 0});
  }
  void append(const Report& o) {
    for (const auto& r : o.records_) records_.push_back(r);
  }

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& r : records_) n += r.status == s;
    return n;
  }
  bool all_pass() const { return count(Status::Fail) == 0; }

  // Deterministic body first; a top-level "timing" object holds all wall-clock data.
  json to_json(bool with_timing = true) const {
    json checks = json::array();
    json timing = json::object();
    for (const auto& r : records_) {
      json c = r.data;
      c["id"] = r.id;
      c["check"] = r.check;
      c["status"] = status_name(r.status);
      if (r.witness) c["witness"] = *r.witness;
      checks.push_back(std::move(c));
      timing[r.id] = r.millis;
    }
    json j = {{"suite", suite_},
              {"config", config_},
              {"checks", checks},
              {"summary",
               {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"info", count(Status::Info)}}}};
    if (!checksum_.empty()) j["table_checksum"] = checksum_;
    if (!extra_.is_null() && !extra_.empty()) j["results"] = extra_;
    if (with_timing) j["timing"] = {{"unit", "ms"}, {"total", total_millis()}, {"checks", timing}};
    return j;
  }

  double total_millis() const {
    double t = 0;
    for (const auto& r : records_) t += r.millis;
    return t;
  }

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
  json config_ = json::object();
  json extra_ = json::object();
  std::string checksum_;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace g2schur

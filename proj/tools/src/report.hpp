#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "deps.hpp"

namespace cli {

enum Exit : int { kOk = 0, kVerifyMismatch = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool json = false;
  bool timing = true;
  std::string output;  // empty: stdout
};

// One run of one command. The checksum covers the primary output text only.
class RunReport {
 public:
  RunReport(std::string command, const Globals& g);

  nlohmann::ordered_json& parameters() { return params_; }
  nlohmann::ordered_json& counters() { return counters_; }
  nlohmann::ordered_json& extra() { return extra_; }
  void set_verification(std::string status) { verification_ = std::move(status); }
  const std::string& verification() const { return verification_; }

  // Writes the primary output (to the output file, or stdout in text mode) and the
  // report (JSON on stdout, or a summary on stderr).
  void finish(const std::string& output_text);

 private:
  std::string command_;
  const Globals& g_;
  nlohmann::ordered_json params_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json counters_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json extra_ = nlohmann::ordered_json::object();
  std::string verification_ = "skipped";
  std::chrono::steady_clock::time_point start_;
};

std::string hex64(std::uint64_t v);
std::string checksum(const std::string& text);

}  // namespace cli

#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "tropical/random.hpp"

namespace cli {

RunReport::RunReport(std::string command, const Globals& g)
    : command_(std::move(command)), g_(g), start_(std::chrono::steady_clock::now()) {}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string checksum(const std::string& text) { return hex64(tropical::fnv1a(text.data(), text.size())); }

void RunReport::finish(const std::string& output_text) {
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  if (!g_.output.empty()) {
    std::ofstream f(g_.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + g_.output);
    f << output_text;
    if (!f) throw std::runtime_error("failed writing " + g_.output);
  } else if (!g_.json) {
    std::cout << output_text;
  }

  if (g_.json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = command_;
    j["parameters"] = params_;
    j["seed"] = g_.seed;
    if (g_.timing) j["wall_seconds"] = seconds;
    j["counters"] = counters_;
    j["verification"] = verification_;
    j["checksum"] = checksum(output_text);
    for (auto& [k, v] : extra_.items()) j[k] = v;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cerr << command_ << ": verification=" << verification_ << " checksum=" << checksum(output_text);
  for (auto& [k, v] : counters_.items()) std::cerr << ' ' << k << '=' << v.dump();
  if (g_.timing) std::cerr << " seconds=" << seconds;
  std::cerr << '\n';
}

}  // namespace cli

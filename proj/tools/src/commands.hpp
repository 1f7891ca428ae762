#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"
#include "tropical/applications.hpp"
#include "tropical/fast_product.hpp"

namespace cli {

// Bad user input (files or flag combinations); maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Handler = std::function<int()>;

struct FastFlags {
  std::size_t d = 4;
  std::size_t reps = 0;
  std::optional<std::size_t> e;
  std::optional<std::size_t> ep;
  std::string mode = "direct";

  void add(CLI::App* app);
  tropical::fast::FastProductConfig config(const Globals& g, bool verify) const;
  void describe(nlohmann::ordered_json& params) const;
};

tropical::WeightMatrix load_matrix(const std::string& path);
std::vector<tropical::Weight> load_vector(const std::string& path);
tropical::apps::EdgeListGraph load_graph(const std::string& path);

void register_commands(CLI::App& app, Globals& g, Handler& handler);
void register_bench(CLI::App& app, Globals& g, Handler& handler);

}  // namespace cli

#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>

#include "commands.hpp"
#include "tropical/apsp.hpp"
#include "tropical/coppersmith.hpp"
#include "tropical/f2_eval.hpp"
#include "tropical/random.hpp"

namespace cli {

using namespace tropical;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Rows collected as JSON objects with a fixed column order, printed as a table in text mode.
class Table {
 public:
  explicit Table(std::vector<std::string> columns, bool timing) : columns_(std::move(columns)), timing_(timing) {
    if (timing_) columns_.push_back("seconds");
  }
  void add(nlohmann::ordered_json row, double secs) {
    if (timing_) row["seconds"] = secs;
    rows_.push_back(std::move(row));
  }
  std::string text() const {
    std::ostringstream s;
    for (std::size_t i = 0; i < columns_.size(); ++i) s << (i ? " " : "") << columns_[i];
    s << '\n';
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        const auto& v = r.at(columns_[i]);
        s << (i ? " " : "") << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      s << '\n';
    }
    return s.str();
  }
  nlohmann::ordered_json json() const { return rows_; }

 private:
  std::vector<std::string> columns_;
  bool timing_;
  nlohmann::ordered_json rows_ = nlohmann::ordered_json::array();
};

WeightMatrix random_weights(std::size_t rows, std::size_t cols, std::uint64_t max, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> w(0, max);
  WeightMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Weight(w(rng));
  return m;
}

WeightMatrix random_graph(std::size_t n, std::uint64_t max, std::mt19937_64& rng) {
  WeightMatrix m = random_weights(n, n, max, rng);
  std::bernoulli_distribution edge(0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j)
        m(i, j) = Weight(0);
      else if (!edge(rng))
        m(i, j) = Weight::infinity();
  return m;
}

std::uint64_t tag(const std::string& s) { return fnv1a(s.data(), s.size()); }

}  // namespace

void register_bench(CLI::App& app, Globals& g, Handler& handler) {
  struct Opts {
    std::string kind;
    std::vector<std::size_t> sizes;
    std::uint64_t samples = 10000;
    FastFlags fast;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("bench", "Timing and counter sweeps");
  cmd->add_option("kind", o->kind, "f2 | coppersmith | accuracy | apsp")
      ->required()
      ->check(CLI::IsMember({"f2", "coppersmith", "accuracy", "apsp"}));
  cmd->add_option("--sizes", o->sizes, "Problem sizes (n, or M for coppersmith)")->delimiter(',');
  cmd->add_option("--samples", o->samples, "Cells sampled by the accuracy sweep")->capture_default_str();
  o->fast.add(cmd);
  cmd->callback([&, o] {
    handler = [&, o] {
      RunReport r("bench", g);
      auto rng = make_stream({g.seed, tag("bench"), tag(o->kind)});
      std::vector<std::size_t> sizes = o->sizes;
      std::unique_ptr<Table> table;
      int code = kOk;

      if (o->kind == "f2") {
        if (sizes.empty()) sizes = {256, 512, 1024};
        table = std::make_unique<Table>(std::vector<std::string>{"n", "m", "word_ops", "predicted"}, g.timing);
        for (auto n : sizes) {
          std::size_t m = n;
          auto x = BitMatrix::random(n, m, rng), y = BitMatrix::random(m, n, rng);
          std::uint64_t ops = 0;
          auto t0 = std::chrono::steady_clock::now();
          f2_multiply(x, y, &ops, g.threads);
          double secs = seconds_since(t0);
          std::uint64_t predicted = static_cast<std::uint64_t>(n) * ((n + 63) / 64) * m;
          table->add({{"n", n}, {"m", m}, {"word_ops", ops}, {"predicted", predicted}}, secs);
        }
      } else if (o->kind == "coppersmith") {
        if (sizes.empty()) sizes = {1, 2, 3, 4, 5};
        table = std::make_unique<Table>(
            std::vector<std::string>{"M", "base_products", "structured_mults", "alg1_mults", "alg1_ratio", "match"},
            g.timing);
        PrimeField f;
        for (auto M : sizes) {
          if (M < 1 || M > 12) throw UsageError("coppersmith sizes must lie in 1..12");
          auto t0 = std::chrono::steady_clock::now();
          coppersmith::StructuredFieldMatrix a(coppersmith::Side::a, M), b(coppersmith::Side::b, M);
          for (auto& v : a.values()) v = f.random(rng);
          for (auto& v : b.values()) v = f.random(rng);
          coppersmith::OpCounter c;
          bool ok = coppersmith::structured_multiply(f, a, b, &c) == multiply(f, a.to_dense(), b.to_dense());
          nlohmann::ordered_json row{{"M", M}, {"base_products", c.base_products}, {"structured_mults", c.field_mults}};
          if (M % 5 == 0) {
            auto sh = coppersmith::shape_for(M);
            auto ain = FieldMatrix::random(f, sh.wide, sh.mapped, rng);
            auto bin = FieldMatrix::random(f, sh.mapped, sh.narrow, rng);
            coppersmith::OpCounter c1;
            ok = ok && coppersmith::algorithm1(f, ain, bin, &c1) == multiply(f, ain, bin);
            row["alg1_mults"] = c1.field_mults;
            row["alg1_ratio"] = static_cast<double>(c1.field_mults) / (std::pow(5.0, M) * M * M);
          } else {
            row["alg1_mults"] = "-";
            row["alg1_ratio"] = "-";
          }
          row["match"] = ok ? "yes" : "no";
          if (!ok) code = kVerifyMismatch;
          table->add(std::move(row), seconds_since(t0));
        }
      } else if (o->kind == "accuracy") {
        if (sizes.empty()) sizes = {64};
        table = std::make_unique<Table>(
            std::vector<std::string>{"n", "d", "e", "ep", "samples", "rate", "bound"}, g.timing);
        for (auto n : sizes) {
          auto cfg = o->fast.config(g, false);
          cfg.mode = fast::EvaluationMode::direct;
          auto a = random_weights(n, cfg.d, 1000, rng), b = random_weights(cfg.d, n, 1000, rng);
          auto params = fast::block_parameters(cfg, n, n);
          auto t0 = std::chrono::steady_clock::now();
          auto rep = fast::measure_per_entry_accuracy(a, b, cfg, o->samples);
          double sigma = std::sqrt(0.75 * 0.25 / static_cast<double>(rep.samples));
          table->add({{"n", n},
                      {"d", params.d},
                      {"e", params.e},
                      {"ep", params.ep},
                      {"samples", rep.samples},
                      {"rate", rep.rate()},
                      {"bound", 0.75 - 3 * sigma}},
                     seconds_since(t0));
        }
      } else {
        if (sizes.empty()) sizes = {16, 32, 64};
        table = std::make_unique<Table>(
            std::vector<std::string>{"n", "fw_ok", "fast_word_ops", "fallbacks", "verify_mismatches"}, g.timing);
        for (auto n : sizes) {
          auto w = random_graph(n, 100, rng);
          auto t0 = std::chrono::steady_clock::now();
          auto want = floyd_warshall(w).distances;
          fast::FastProductStats stats;
          auto cfg = o->fast.config(g, true);
          auto got = apsp_by_squaring(w, fast::fast_strategy(cfg, &stats)).distances;
          bool ok = got == want;
          if (!ok) code = kVerifyMismatch;
          table->add({{"n", n},
                      {"fw_ok", ok ? "yes" : "no"},
                      {"fast_word_ops", stats.word_ops},
                      {"fallbacks", stats.fallbacks},
                      {"verify_mismatches", stats.verify_mismatches}},
                     seconds_since(t0));
        }
      }
      r.parameters() = {{"kind", o->kind}, {"sizes", sizes}};
      if (o->kind == "accuracy" || o->kind == "apsp") o->fast.describe(r.parameters());
      r.extra()["rows"] = table->json();
      r.finish(table->text());
      return code;
    };
  });
}

}  // namespace cli

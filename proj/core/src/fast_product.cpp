#include "tropical/fast_product.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "tropical/bits.hpp"
#include "tropical/f2_eval.hpp"
#include "tropical/fredman.hpp"
#include "tropical/random.hpp"

namespace tropical::fast {

FastProductStats& FastProductStats::operator+=(const FastProductStats& o) {
  word_ops += o.word_ops;
  entries += o.entries;
  fallbacks += o.fallbacks;
  invalid_index += o.invalid_index;
  verify_mismatches += o.verify_mismatches;
  blocks += o.blocks;
  return *this;
}

std::size_t default_reps(std::size_t n) { return 18 * std::max<std::size_t>(1, ceil_log2(n)); }

rs::RsParameters block_parameters(const FastProductConfig& cfg, std::size_t rows, std::size_t cols) {
  auto p = rs::RsParameters::defaults((rows + cols + 1) / 2, cfg.d, cfg.seed);
  p.t = std::max<std::size_t>(1, ceil_log2(rows + cols));
  p.ep = 3 + 2 * ceil_log2(cfg.d) + ceil_log2(p.t);
  if (cfg.e) p.e = *cfg.e;
  if (cfg.ep) p.ep = *cfg.ep;
  return p;
}

BitVoteTally::BitVoteTally(std::size_t rows, std::size_t cols, std::size_t bits, std::size_t reps)
    : rows_(rows), cols_(cols), bits_(bits), reps_(reps), counts_(rows * cols * bits, 0) {}

void BitVoteTally::add(std::size_t ell, const BitMatrix& votes) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) count(i, j, ell) += votes.get(i, j);
}

void BitVoteTally::merge(const BitVoteTally& o) {
  for (std::size_t q = 0; q < counts_.size(); ++q) counts_[q] += o.counts_[q];
}

std::size_t BitVoteTally::margin(std::size_t i, std::size_t j, std::size_t ell) const {
  auto c = static_cast<long long>(count(i, j, ell));
  auto r = static_cast<long long>(reps_);
  long long diff = 2 * c - r;  // > 0 means majority 1
  if (diff > 0) return static_cast<std::size_t>((diff + 1) / 2);
  return static_cast<std::size_t>((-diff) / 2 + 1);
}

namespace {

struct Scan {
  Weight value = Weight::infinity();
  std::uint32_t k = WitnessMatrix::kNoWitness;
};

Scan direct_scan(const WeightMatrix& a, const WeightMatrix& b, std::size_t i, std::size_t j) {
  Scan s;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    Weight v = a(i, k) + b(k, j);
    if (v < s.value) {
      s.value = v;
      s.k = static_cast<std::uint32_t>(k);
    }
  }
  return s;
}

template <class Job>
void run_parallel(std::size_t jobs, unsigned threads, Job&& job) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs))));
  if (threads == 1) {
    job(0u, std::size_t{0}, jobs);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  std::size_t chunk = (jobs + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t j0 = std::min(jobs, t * chunk), j1 = std::min(jobs, j0 + chunk);
    pool.emplace_back([&, t, j0, j1] {
      try {
        job(t, j0, j1);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

BitMatrix repetition_bits(const rs::RsParameters& params, const fredman::RankedPairMatrices& ranked,
                          const FastProductConfig& cfg, const rs::StreamId& id, std::uint64_t* ops) {
  auto bits = rs::draw_random_bits(params, id);
  auto vars = rs::preprocess_xors(params, ranked, bits);
  if (cfg.mode == EvaluationMode::direct)
    return rs::output_bits_sliced(params, bits, vars, vars.col.transposed(), id.ell, ops);
  auto poly = rs::build_output_bit_polynomial(params, bits, id.ell, cfg.monomial_cap);
  return evaluate_all_pairs(poly, vars.row, vars.col, ops);
}

}  // namespace

std::vector<std::uint32_t> true_winners(const WeightMatrix& a, const WeightMatrix& b) {
  auto p = fredman::perturb(a, b);
  std::vector<std::uint32_t> w(p.rows * p.cols);
  for (std::size_t i = 0; i < p.rows; ++i) {
    for (std::size_t j = 0; j < p.cols; ++j) {
      std::int64_t best = 0;
      std::uint32_t arg = 0;
      for (std::size_t k = 0; k < p.inner; ++k) {
        std::int64_t s = p.ap(i, k) + p.bp(k, j);
        if (k == 0 || s < best) {
          best = s;
          arg = static_cast<std::uint32_t>(k);
        }
      }
      w[i * p.cols + j] = arg;
    }
  }
  return w;
}

FastProductResult rect_minplus_fast(const WeightMatrix& a, const WeightMatrix& b,
                                    const FastProductConfig& cfg, std::uint64_t block) {
  if (a.cols() != b.rows()) throw std::invalid_argument("rect_minplus_fast: inner dimension mismatch");
  if (a.cols() != cfg.d) throw std::invalid_argument("rect_minplus_fast: inner dimension must equal d");
  const std::size_t rows = a.rows(), cols = b.cols(), d = cfg.d;
  FastProductResult out{WeightMatrix(rows, cols), WitnessMatrix(rows, cols), {}};
  out.stats.blocks = 1;
  out.stats.entries = rows * cols;
  if (rows == 0 || cols == 0) return out;

  const std::size_t reps = cfg.reps ? cfg.reps : default_reps(rows);
  const auto params = block_parameters(cfg, rows, cols);
  const std::size_t nbits = params.index_bits();
  if (cfg.mode == EvaluationMode::expanded) rs::check_expansion_budget(params, cfg.monomial_cap);

  const auto ranked = fredman::rank_pair(a, b);
  const std::size_t jobs = reps * nbits;
  unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(jobs)));
  std::vector<BitVoteTally> tallies(workers, BitVoteTally(rows, cols, nbits, reps));
  std::vector<std::uint64_t> ops(workers, 0);
  run_parallel(jobs, workers, [&](unsigned t, std::size_t j0, std::size_t j1) {
    for (std::size_t job = j0; job < j1; ++job) {
      rs::StreamId id{cfg.call, block, job / nbits, job % nbits};
      tallies[t].add(id.ell, repetition_bits(params, ranked, cfg, id, &ops[t]));
    }
  });
  for (unsigned t = 1; t < workers; ++t) tallies[0].merge(tallies[t]);
  for (auto o : ops) out.stats.word_ops += o;
  const auto& tally = tallies[0];

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t k = 0;
      for (std::size_t ell = 0; ell < nbits; ++ell)
        if (tally.majority(i, j, ell)) k |= std::size_t{1} << ell;
      Weight v;
      std::uint32_t w;
      if (k >= 1 && k <= d) {
        v = a(i, k - 1) + b(k - 1, j);
        w = static_cast<std::uint32_t>(k - 1);
      } else {
        ++out.stats.invalid_index;
        ++out.stats.fallbacks;
        auto s = direct_scan(a, b, i, j);
        v = s.value;
        w = s.k;
      }
      if (cfg.verify) {
        auto s = direct_scan(a, b, i, j);
        if (s.value != v || (v.is_finite() && s.k != w)) {
          ++out.stats.verify_mismatches;
          ++out.stats.fallbacks;
          v = s.value;
          w = s.k;
        }
      }
      out.values(i, j) = v;
      out.witness(i, j) = v.is_inf() ? WitnessMatrix::kNoWitness : w;
    }
  }
  return out;
}

FastProductResult minplus_product_fast(const WeightMatrix& a, const WeightMatrix& b,
                                       const FastProductConfig& cfg) {
  if (a.cols() != b.rows()) throw std::invalid_argument("minplus_product_fast: inner dimension mismatch");
  if (cfg.d == 0) throw std::invalid_argument("minplus_product_fast: d must be positive");
  const std::size_t rows = a.rows(), cols = b.cols(), inner = a.cols(), d = cfg.d;
  FastProductConfig block_cfg = cfg;
  if (!block_cfg.reps) block_cfg.reps = default_reps(rows);

  FastProductResult out{WeightMatrix(rows, cols), WitnessMatrix(rows, cols), {}};
  const std::size_t nblocks = (inner + d - 1) / d;
  for (std::size_t blk = 0; blk < nblocks; ++blk) {
    WeightMatrix ab(rows, d), bb(d, cols);
    for (std::size_t k = 0; k < d && blk * d + k < inner; ++k) {
      for (std::size_t i = 0; i < rows; ++i) ab(i, k) = a(i, blk * d + k);
      for (std::size_t j = 0; j < cols; ++j) bb(k, j) = b(blk * d + k, j);
    }
    auto part = rect_minplus_fast(ab, bb, block_cfg, blk);
    out.stats += part.stats;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (part.values(i, j) < out.values(i, j)) {
          out.values(i, j) = part.values(i, j);
          out.witness(i, j) = static_cast<std::uint32_t>(blk * d + part.witness(i, j));
        }
      }
    }
  }
  return out;
}

AccuracyReport measure_per_entry_accuracy(const WeightMatrix& a, const WeightMatrix& b,
                                          const FastProductConfig& cfg, std::uint64_t samples) {
  if (a.cols() != cfg.d || b.rows() != cfg.d) throw std::invalid_argument("accuracy: inner dimension must equal d");
  const std::size_t rows = a.rows(), cols = b.cols();
  AccuracyReport rep;
  if (rows == 0 || cols == 0) return rep;
  const auto params = block_parameters(cfg, rows, cols);
  const std::size_t nbits = params.index_bits();
  const auto ranked = fredman::rank_pair(a, b);
  const auto winners = true_winners(a, b);
  const std::uint64_t per_job = rows * cols;
  const std::size_t jobs = static_cast<std::size_t>((samples + per_job - 1) / per_job);
  unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs))));
  std::vector<std::uint64_t> agree(workers, 0);
  FastProductConfig direct = cfg;
  direct.mode = EvaluationMode::direct;
  run_parallel(jobs, workers, [&](unsigned t, std::size_t j0, std::size_t j1) {
    for (std::size_t job = j0; job < j1; ++job) {
      rs::StreamId id{cfg.call, 0, job / nbits, job % nbits};
      auto bits = repetition_bits(params, ranked, direct, id, nullptr);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          bool truth = ((winners[i * cols + j] + 1) >> id.ell) & 1;
          agree[t] += bits.get(i, j) == truth;
        }
    }
  });
  rep.samples = jobs * per_job;
  for (auto x : agree) rep.agree += x;
  return rep;
}

ProductStrategy fast_strategy(const FastProductConfig& cfg, FastProductStats* stats) {
  return [cfg, stats](const WeightMatrix& a, const WeightMatrix& b, std::uint64_t round) {
    FastProductConfig c = cfg;
    c.call = derive_seed({cfg.call, round});
    auto r = minplus_product_fast(a, b, c);
    if (stats) *stats += r.stats;
    return ProductResult{std::move(r.values), std::move(r.witness)};
  };
}

}  // namespace tropical::fast

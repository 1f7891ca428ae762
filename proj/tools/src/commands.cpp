#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "tropical/apsp.hpp"
#include "tropical/circuit.hpp"
#include "tropical/coppersmith.hpp"
#include "tropical/matrix_io.hpp"
#include "tropical/random.hpp"

namespace cli {

using namespace tropical;

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

std::string matrix_text(const WeightMatrix& m) {
  std::ostringstream s;
  write_matrix(s, m);
  return s.str();
}

std::string vector_text(const std::vector<Weight>& v) {
  std::ostringstream s;
  write_vector(s, v);
  return s.str();
}

std::uint64_t stream_tag(const char* name) {
  std::string s(name);
  return fnv1a(s.data(), s.size());
}

void add_stats(RunReport& r, const fast::FastProductStats& s) {
  auto& c = r.counters();
  c["word_ops"] = s.word_ops;
  c["entries"] = s.entries;
  c["fallbacks"] = s.fallbacks;
  c["invalid_index"] = s.invalid_index;
  c["verify_mismatches"] = s.verify_mismatches;
  c["blocks"] = s.blocks;
}

// First cell where the two matrices differ, reported on stderr.
bool report_mismatch(const WeightMatrix& got, const WeightMatrix& want) {
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = 0; j < got.cols(); ++j)
      if (got(i, j) != want(i, j)) {
        std::cerr << "verification mismatch at (" << i << ", " << j << "): got " << format_weight(got(i, j))
                  << ", expected " << format_weight(want(i, j)) << '\n';
        return true;
      }
  return false;
}

ProductStrategy strategy_for(const std::string& algo, const FastFlags& ff, const Globals& g, bool verify,
                             fast::FastProductStats* stats) {
  if (algo == "naive") return naive_strategy(g.threads);
  if (algo == "fast") return fast::fast_strategy(ff.config(g, verify), stats);
  throw UsageError("unknown product algorithm " + algo);
}

void register_gen(CLI::App& app, Globals& g, Handler& handler) {
  struct Opts {
    std::string kind;
    std::size_t rows = 4, cols = 4, n = 8;
    std::uint64_t min = 0, max = 100;
    double density = 0.5, inf_rate = 0.0;
    bool undirected = false, as_matrix = false;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("gen", "Generate a random instance");
  cmd->add_option("kind", o->kind, "matrix | graph | vector")->required()->check(CLI::IsMember({"matrix", "graph", "vector"}));
  cmd->add_option("--rows", o->rows)->capture_default_str();
  cmd->add_option("--cols", o->cols)->capture_default_str();
  cmd->add_option("-n,--nodes", o->n, "Node count (graph) or length (vector)")->capture_default_str();
  cmd->add_option("--min", o->min, "Smallest finite weight")->capture_default_str();
  cmd->add_option("--max", o->max, "Largest finite weight")->check(CLI::Range(std::uint64_t{0}, kMaxInputWeight))->capture_default_str();
  cmd->add_option("--density", o->density, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  cmd->add_option("--inf-rate", o->inf_rate, "Probability of an INF entry")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  cmd->add_flag("--undirected", o->undirected, "Draw unordered pairs");
  cmd->add_flag("--as-matrix", o->as_matrix, "Write a graph as a zero-diagonal weight matrix");
  cmd->callback([&, o] {
    handler = [&, o] {
      RunReport r("gen", g);
      if (o->min > o->max) throw UsageError("--min exceeds --max");
      r.parameters() = {{"kind", o->kind}, {"min", o->min}, {"max", o->max}};
      auto rng = make_stream({g.seed, stream_tag("gen")});
      std::uniform_int_distribution<std::uint64_t> w(o->min, o->max);
      std::bernoulli_distribution inf(o->inf_rate), edge(o->density);
      std::string text;
      if (o->kind == "matrix") {
        r.parameters()["rows"] = o->rows;
        r.parameters()["cols"] = o->cols;
        r.parameters()["inf_rate"] = o->inf_rate;
        WeightMatrix m(o->rows, o->cols);
        for (std::size_t i = 0; i < o->rows; ++i)
          for (std::size_t j = 0; j < o->cols; ++j) {
            bool is_inf = inf(rng);
            std::uint64_t v = w(rng);
            m(i, j) = is_inf ? Weight::infinity() : Weight(v);
          }
        text = matrix_text(m);
      } else if (o->kind == "vector") {
        r.parameters()["n"] = o->n;
        r.parameters()["inf_rate"] = o->inf_rate;
        std::vector<Weight> v(o->n);
        for (auto& x : v) {
          bool is_inf = inf(rng);
          std::uint64_t val = w(rng);
          x = is_inf ? Weight::infinity() : Weight(val);
        }
        text = vector_text(v);
      } else {
        r.parameters()["n"] = o->n;
        r.parameters()["density"] = o->density;
        r.parameters()["directed"] = !o->undirected;
        apps::EdgeListGraph gr;
        gr.n = o->n;
        gr.directed = !o->undirected;
        for (std::size_t u = 0; u < o->n; ++u)
          for (std::size_t v = o->undirected ? u + 1 : 0; v < o->n; ++v) {
            if (u == v) continue;
            bool present = edge(rng);
            std::uint64_t val = w(rng);
            if (present) gr.edges.push_back({u, v, Weight(val)});
          }
        r.counters()["edges"] = gr.edges.size();
        if (o->as_matrix) {
          WeightMatrix m = gr.adjacency();
          for (std::size_t i = 0; i < gr.n; ++i) m(i, i) = Weight(0);
          text = matrix_text(m);
        } else {
          std::ostringstream s;
          apps::write_graph(s, gr);
          text = s.str();
        }
      }
      r.finish(text);
      return kOk;
    };
  });
}

void register_apsp(CLI::App& app, Globals& g, Handler& handler) {
  struct Opts {
    std::string input, algo = "fw";
    bool edges = false, verify = false;
    FastFlags fast;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("apsp", "All-pairs shortest paths");
  cmd->add_option("input", o->input, "Weight matrix file (zero diagonal) or edge list with --edges")->required();
  cmd->add_option("--algo", o->algo)->check(CLI::IsMember({"fw", "squaring-naive", "squaring-fast"}))->capture_default_str();
  cmd->add_flag("--edges", o->edges, "Input is an edge list");
  cmd->add_flag("--verify", o->verify, "Check every product cell and the final result");
  o->fast.add(cmd);
  cmd->callback([&, o] {
    handler = [&, o] {
      RunReport r("apsp", g);
      WeightMatrix w;
      if (o->edges) {
        auto gr = load_graph(o->input);
        w = gr.adjacency();
        for (std::size_t i = 0; i < gr.n; ++i) w(i, i) = Weight(0);
      } else {
        w = load_matrix(o->input);
      }
      validate_graph_matrix(w);
      r.parameters() = {{"algo", o->algo}, {"n", w.rows()}, {"verify", o->verify}};
      ApspResult res;
      fast::FastProductStats stats;
      if (o->algo == "fw") {
        res = floyd_warshall(w);
      } else if (o->algo == "squaring-naive") {
        res = apsp_by_squaring(w, naive_strategy(g.threads));
      } else {
        o->fast.describe(r.parameters());
        res = apsp_by_squaring(w, fast::fast_strategy(o->fast.config(g, o->verify), &stats));
        add_stats(r, stats);
      }
      int code = kOk;
      if (o->verify) {
        bool bad = report_mismatch(res.distances, floyd_warshall(w).distances);
        r.set_verification(bad ? "failed" : "passed");
        if (bad) code = kVerifyMismatch;
      }
      r.finish(matrix_text(res.distances));
      return code;
    };
  });
}

void register_product(CLI::App& app, Globals& g, Handler& handler) {
  struct Opts {
    std::string a, b, algo = "naive", dump_poly;
    bool verify = false, witness = false;
    FastFlags fast;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("product", "Min-plus product of two matrices");
  cmd->add_option("a", o->a)->required();
  cmd->add_option("b", o->b)->required();
  cmd->add_option("--algo", o->algo)->check(CLI::IsMember({"naive", "fast"}))->capture_default_str();
  cmd->add_flag("--verify", o->verify, "Check every cell against a direct scan");
  cmd->add_flag("--witness", o->witness, "Append the 0-based witness matrix (-1 for none)");
  cmd->add_option("--dump-poly", o->dump_poly, "Write the expanded output-bit polynomial of block 0, rep 0, bit 0");
  o->fast.add(cmd);
  cmd->callback([&, o] {
    handler = [&, o] {
      RunReport r("product", g);
      WeightMatrix a = load_matrix(o->a), b = load_matrix(o->b);
      if (a.cols() != b.rows()) throw UsageError("inner dimensions differ");
      r.parameters() = {{"algo", o->algo}, {"rows", a.rows()}, {"inner", a.cols()}, {"cols", b.cols()}, {"verify", o->verify}};
      if (!o->dump_poly.empty()) {
        auto cfg = o->fast.config(g, false);
        auto params = fast::block_parameters(cfg, a.rows(), b.cols());
        auto bits = rs::draw_random_bits(params, {cfg.call, 0, 0, 0});
        auto poly = rs::build_output_bit_polynomial(params, bits, 0, cfg.monomial_cap);
        std::ofstream f(o->dump_poly);
        if (!f) throw UsageError("cannot open " + o->dump_poly);
        std::ostringstream hdr;
        hdr << "d=" << params.d << " t=" << params.t << " e=" << params.e << " ep=" << params.ep << " seed=" << g.seed;
        poly.write(f, {hdr.str()});
        r.counters()["monomials"] = poly.size();
      }
      ProductResult res;
      if (o->algo == "naive") {
        res = minplus_product_naive(a, b, g.threads);
      } else {
        o->fast.describe(r.parameters());
        auto out = fast::minplus_product_fast(a, b, o->fast.config(g, o->verify));
        add_stats(r, out.stats);
        if (o->verify) r.set_verification(out.stats.verify_mismatches ? "repaired" : "passed");
        res = {std::move(out.values), std::move(out.witness)};
      }
      std::string text = matrix_text(res.values);
      if (o->witness) {
        std::ostringstream s;
        for (std::size_t i = 0; i < res.witness.rows(); ++i) {
          for (std::size_t j = 0; j < res.witness.cols(); ++j) {
            auto k = res.witness.get(i, j);
            s << (j ? " " : "") << (k ? static_cast<long long>(*k) : -1LL);
          }
          s << '\n';
        }
        text += s.str();
      }
      r.finish(text);
      return kOk;
    };
  });
}

void register_triangle(CLI::App& app, Globals& g, Handler& handler) {
  struct Opts {
    std::string input, method = "sparse", algo = "naive";
    std::size_t delta = 0;
    bool verify = false;
    FastFlags fast;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("triangle", "Minimum-weight triangle");
  cmd->add_option("graph", o->input, "Edge-list file")->required();
  cmd->add_option("--method", o->method)->check(CLI::IsMember({"dense", "sparse", "brute"}))->capture_default_str();
  cmd->add_option("--delta", o->delta, "Degree threshold for the sparse method (0: ceil(sqrt(m)))")->capture_default_str();
  cmd->add_option("--algo", o->algo, "Product used by the dense search")->check(CLI::IsMember({"naive", "fast"}))->capture_default_str();
  cmd->add_flag("--verify", o->verify, "Repair fast-product cells by direct scan");
  o->fast.add(cmd);
  cmd->callback([&, o] {
    handler = [&, o] {
      RunReport r("triangle", g);
      auto gr = load_graph(o->input);
      r.parameters() = {{"method", o->method}, {"algo", o->algo}, {"delta", o->delta}, {"n", gr.n}, {"m", gr.edges.size()}};
      fast::FastProductStats stats;
      auto product = strategy_for(o->algo, o->fast, g, o->verify, &stats);
      std::optional<apps::Triangle> t;
      if (o->method == "dense")
        t = apps::min_triangle_dense(gr, product);
      else if (o->method == "sparse")
        t = apps::min_triangle_sparse(gr, o->delta, product, g.threads);
      else
        t = apps::min_triangle_brute(gr);
      if (o->algo == "fast") add_stats(r, stats);
      std::ostringstream s;
      if (t)
        s << t->u << ' ' << t->v << ' ' << t->w << ' ' << format_weight(t->weight) << '\n';
      else
        s << "none\n";
      r.finish(s.str());
      return kOk;
    };
  });
}

void register_convolve(CLI::App& app, Globals& g, Handler& handler) {
  struct Opts {
    std::string x, y, mode = "blocked", algo = "naive";
    bool verify = false;
    FastFlags fast;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("convolve", "Min-plus convolution of two vectors");
  cmd->add_option("x", o->x)->required();
  cmd->add_option("y", o->y)->required();
  cmd->add_option("--mode", o->mode)->check(CLI::IsMember({"naive", "blocked"}))->capture_default_str();
  cmd->add_option("--algo", o->algo, "Product used by blocked mode")->check(CLI::IsMember({"naive", "fast"}))->capture_default_str();
  cmd->add_flag("--verify", o->verify, "Repair fast-product cells by direct scan");
  o->fast.add(cmd);
  cmd->callback([&, o] {
    handler = [&, o] {
      RunReport r("convolve", g);
      auto x = load_vector(o->x), y = load_vector(o->y);
      if (x.size() != y.size()) throw UsageError("vectors must have equal length");
      r.parameters() = {{"mode", o->mode}, {"algo", o->algo}, {"n", x.size()}};
      fast::FastProductStats stats;
      auto product = strategy_for(o->algo, o->fast, g, o->verify, &stats);
      auto out = apps::minplus_convolution(
          x, y, o->mode == "naive" ? apps::ConvolutionMode::naive : apps::ConvolutionMode::blocked, product);
      if (o->algo == "fast") add_stats(r, stats);
      r.finish(vector_text(out));
      return kOk;
    };
  });
}

void register_metric(CLI::App& app, Globals& g, Handler& handler) {
  auto input = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand("metric", "Test whether a distance matrix is a metric");
  cmd->add_option("matrix", *input)->required();
  cmd->callback([&, input] {
    handler = [&, input] {
      RunReport r("metric", g);
      auto d = load_matrix(*input);
      if (!d.is_square()) throw UsageError("distance matrix must be square");
      r.parameters() = {{"n", d.rows()}};
      auto v = apps::is_metric(d, naive_strategy(g.threads));
      std::ostringstream s;
      if (v.metric) {
        s << "yes\n";
      } else {
        s << "no " << v.property;
        if (v.witness) s << ' ' << (*v.witness)[0] << ' ' << (*v.witness)[1] << ' ' << (*v.witness)[2];
        if (v.cell) s << ' ' << (*v.cell)[0] << ' ' << (*v.cell)[1];
        s << '\n';
      }
      r.extra()["metric"] = v.metric;
      r.finish(s.str());
      return kOk;
    };
  });
}

// Exhaustive agreement of a circuit with an integer oracle over all inputs.
template <class Oracle>
bool exhaustive_check(const circuit::CircuitDag& c, Oracle oracle) {
  const std::size_t width = c.input_count();
  const std::uint64_t total = std::uint64_t{1} << width;
  for (std::uint64_t base = 0; base < total; base += 64) {
    std::vector<std::uint64_t> in(width, 0);
    for (std::uint64_t lane = 0; lane < 64 && base + lane < total; ++lane)
      for (std::size_t i = 0; i < width; ++i)
        if (((base + lane) >> (width - 1 - i)) & 1) in[i] |= std::uint64_t{1} << lane;
    auto out = c.evaluate_words(in);
    for (std::uint64_t lane = 0; lane < 64 && base + lane < total; ++lane) {
      std::uint64_t v = 0;
      for (auto w : out) v = v * 2 + ((w >> lane) & 1);
      if (auto want = oracle(base + lane); want && *want != v) return false;
    }
  }
  return true;
}

void register_circuit_stats(CLI::App& app, Globals& g, Handler& handler) {
  auto* cmd = app.add_subcommand("circuit-stats", "Size and depth of the AC0 builders, plus exhaustive checks");
  cmd->callback([&] {
    handler = [&] {
      using namespace circuit;
      RunReport r("circuit-stats", g);
      std::ostringstream s;
      s << "builder params inputs gates depth max_fanin pure\n";
      auto row = [&](const char* name, const std::string& params, const CircuitDag& c) {
        s << name << ' ' << params << ' ' << c.input_count() << ' ' << c.gate_count() << ' ' << c.depth() << ' '
          << c.max_fanin() << ' ' << (c.is_pure_and_or_not() ? "yes" : "no") << '\n';
      };
      for (std::size_t t : {4u, 6u, 8u, 12u}) row("adder", "t=" + std::to_string(t), build_adder(t));
      for (std::size_t t : {4u, 6u, 8u, 12u}) row("leq", "t=" + std::to_string(t), build_leq(t));
      for (auto [d, t] : {std::pair{2u, 4u}, {4u, 4u}, {8u, 8u}})
        row("min_unique", "d=" + std::to_string(d) + ",t=" + std::to_string(t), build_min_unique(d, t));
      for (auto [d, t] : {std::pair{2u, 4u}, {4u, 4u}, {8u, 8u}})
        row("min_general", "d=" + std::to_string(d) + ",t=" + std::to_string(t), build_min_general(d, t));
      for (auto [d, m] : {std::pair{2u, 3u}, {4u, 7u}, {8u, 100u}})
        row("minplus_inner", "d=" + std::to_string(d) + ",M=" + std::to_string(m), build_minplus_inner(d, m));

      bool all = true;
      auto check = [&](const char* name, bool ok) {
        s << "check " << name << ' ' << (ok ? "PASS" : "FAIL") << '\n';
        all = all && ok;
      };
      check("adder_t6", exhaustive_check(build_adder(6), [](std::uint64_t in) -> std::optional<std::uint64_t> {
              std::uint64_t x = in >> 6, y = in & 63;
              if (x == 63 || y == 63) return 63;
              if (x + y < 63) return x + y;
              return std::nullopt;
            }));
      check("leq_t6", exhaustive_check(build_leq(6), [](std::uint64_t in) -> std::optional<std::uint64_t> {
              return (in >> 6) <= (in & 63) ? 1 : 0;
            }));
      check("min_general_d2_t3", exhaustive_check(build_min_general(2, 3), [](std::uint64_t in) -> std::optional<std::uint64_t> {
              return (in & 7) < (in >> 3) ? 2 : 1;
            }));
      const std::size_t t = minplus_bit_width(3);
      const std::uint64_t inf = (1u << t) - 1, mask = inf;
      check("minplus_inner_d2_M3", exhaustive_check(build_minplus_inner(2, 3), [&](std::uint64_t in) -> std::optional<std::uint64_t> {
              std::uint64_t u1 = (in >> (3 * t)) & mask, u2 = (in >> (2 * t)) & mask, v1 = (in >> t) & mask, v2 = in & mask;
              for (auto v : {u1, u2, v1, v2})
                if (v > 3 && v != inf) return std::nullopt;
              auto add = [&](std::uint64_t a, std::uint64_t b) { return a == inf || b == inf ? inf : a + b; };
              return std::min(add(u1, v1), add(u2, v2));
            }));
      r.set_verification(all ? "passed" : "failed");
      r.finish(s.str());
      return all ? kOk : kVerifyMismatch;
    };
  });
}

void register_coppersmith_demo(CLI::App& app, Globals& g, Handler& handler) {
  struct Opts {
    std::size_t level = 5;
    std::uint32_t prime = PrimeField::kMersenne31;
    bool tensored = false;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("coppersmith-demo", "Run the structured and rectangular field products against naive ones");
  cmd->add_option("--level", o->level, "Recursion depth M")->check(CLI::Range(1, 12))->capture_default_str();
  cmd->add_option("--prime", o->prime)->capture_default_str();
  cmd->add_flag("--tensored", o->tensored, "Also run the tensored rectangular product (slow)");
  cmd->callback([&, o] {
    handler = [&, o] {
      using namespace coppersmith;
      RunReport r("coppersmith-demo", g);
      r.parameters() = {{"level", o->level}, {"prime", o->prime}, {"tensored", o->tensored}};
      PrimeField f(o->prime);
      auto rng = make_stream({g.seed, stream_tag("coppersmith-demo")});
      std::ostringstream s;
      s << "product M base_products field_mults match\n";
      bool all = true;
      auto line = [&](const char* name, const OpCounter& c, bool ok) {
        s << name << ' ' << o->level << ' ' << c.base_products << ' ' << c.field_mults << ' ' << (ok ? "yes" : "no") << '\n';
        all = all && ok;
      };
      {
        StructuredFieldMatrix a(Side::a, o->level), b(Side::b, o->level);
        for (auto& v : a.values()) v = f.random(rng);
        for (auto& v : b.values()) v = f.random(rng);
        OpCounter c;
        auto z = structured_multiply(f, a, b, &c);
        line("structured", c, z == multiply(f, a.to_dense(), b.to_dense()));
      }
      if (o->level % 5 == 0) {
        Shape sh = shape_for(o->level);
        auto ain = FieldMatrix::random(f, sh.wide, sh.mapped, rng);
        auto bin = FieldMatrix::random(f, sh.mapped, sh.narrow, rng);
        auto cin = FieldMatrix::random(f, sh.narrow, sh.wide, rng);
        OpCounter c1, c2, c3;
        line("algorithm1", c1, algorithm1(f, ain, bin, &c1) == multiply(f, ain, bin));
        line("algorithm2", c2, algorithm2(f, bin, cin, &c2) == multiply(f, bin, cin));
        auto ct = cin.transposed(), bt = bin.transposed();
        line("algorithm3", c3, algorithm3(f, ct, bt, &c3) == multiply(f, ct, bt));
        if (o->tensored) {
          auto p = FieldMatrix::random(f, sh.mapped * sh.wide, sh.narrow * sh.narrow, rng);
          auto q = FieldMatrix::random(f, sh.narrow * sh.narrow, sh.wide * sh.mapped, rng);
          OpCounter c4;
          line("tensored", c4, tensored_rect_multiply(f, p, q, &c4) == multiply(f, p, q));
        }
      }
      r.set_verification(all ? "passed" : "failed");
      r.finish(s.str());
      return all ? kOk : kVerifyMismatch;
    };
  });
}

}  // namespace

void FastFlags::add(CLI::App* app) {
  app->add_option("--d", d, "Inner block width")->check(CLI::Range(1, 63))->capture_default_str();
  app->add_option("--reps", reps, "Repetitions per output bit (0: 18*ceil(log2 n))")->capture_default_str();
  app->add_option("--e", e, "Outer approximator width");
  app->add_option("--ep", ep, "Comparator approximator width");
  app->add_option("--eval", mode, "Fast-product evaluation: direct | expanded")->check(CLI::IsMember({"direct", "expanded"}))->capture_default_str();
}

fast::FastProductConfig FastFlags::config(const Globals& g, bool verify) const {
  fast::FastProductConfig c;
  c.d = d;
  c.reps = reps;
  c.e = e;
  c.ep = ep;
  c.seed = g.seed;
  c.mode = mode == "expanded" ? fast::EvaluationMode::expanded : fast::EvaluationMode::direct;
  c.verify = verify;
  c.threads = g.threads;
  return c;
}

void FastFlags::describe(nlohmann::ordered_json& params) const {
  params["d"] = d;
  params["reps"] = reps;
  if (e) params["e"] = *e;
  if (ep) params["ep"] = *ep;
  params["eval"] = mode;
}

WeightMatrix load_matrix(const std::string& path) {
  auto in = open_input(path);
  return read_matrix(in);
}

std::vector<Weight> load_vector(const std::string& path) {
  auto in = open_input(path);
  return read_vector(in);
}

apps::EdgeListGraph load_graph(const std::string& path) {
  auto in = open_input(path);
  return apps::read_graph(in);
}

void register_commands(CLI::App& app, Globals& g, Handler& handler) {
  register_gen(app, g, handler);
  register_apsp(app, g, handler);
  register_product(app, g, handler);
  register_triangle(app, g, handler);
  register_convolve(app, g, handler);
  register_metric(app, g, handler);
  register_circuit_stats(app, g, handler);
  register_coppersmith_demo(app, g, handler);
}

}  // namespace cli

#include <iostream>

#include "commands.hpp"
#include "tropical/matrix_io.hpp"
#include "tropical/rs_poly.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Min-plus products, APSP and applications via randomized F2 reductions"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_flag("--json", g.json, "Emit a JSON run report on stdout");
  app.add_flag("!--no-timing", g.timing, "Omit wall-clock fields from reports");
  app.add_option("-o,--output", g.output, "Write the primary output to this file");

  cli::Handler handler;
  cli::register_commands(app, g, handler);
  cli::register_bench(app, g, handler);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    return handler ? handler() : cli::kUsage;
  } catch (const tropical::rs::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return cli::kBudget;
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const tropical::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
}

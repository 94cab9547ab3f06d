#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "betfree/bench.hpp"
#include "betfree/verify.hpp"

namespace {

int run_command(const betfree::ExperimentConfig& config) {
  try {
    const betfree::RunResult result = betfree::run_experiment(config);
    std::cout << "optimizer=" << config.optimizer << " steps=" << config.steps
              << " final_train_loss=" << result.records.back().train_loss
              << " final_holdout_loss=" << result.final_holdout_loss
              << " regret_at_target=" << result.final_regret;
    if (result.final_wealth) {
      std::cout << " wealth=" << *result.final_wealth;
    }
    if (result.g_max) {
      std::cout << " g_max=" << *result.g_max;
    }
    std::cout << "\n";
    if (!config.out_path.empty()) {
      std::cout << "wrote " << config.out_path << "\n";
    }
    return 0;
  } catch (const betfree::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"betfree: parameter-free coin-betting optimizers and benchmarks"};
  app.require_subcommand(1);

  betfree::ExperimentConfig config;
  std::string target = "min-eig";

  CLI::App* run = app.add_subcommand("run", "run a synthetic experiment");
  run->add_option("--optimizer", config.optimizer,
                  "recursive | diag | doubling1d | adagrad")
      ->capture_default_str();
  run->add_option("--dim", config.dim)->capture_default_str();
  run->add_option("--steps", config.steps)->capture_default_str();
  run->add_option("--seed", config.seed)->capture_default_str();
  run->add_option("--epsilon", config.epsilon, "initial wealth")->capture_default_str();
  run->add_option("--eta", config.eta, "FTRL step parameter")->capture_default_str();
  double lr = 0.0;
  CLI::Option* lr_option = run->add_option("--lr", lr, "adagrad learning rate");
  run->add_option("--cond-number", config.condition_number)->capture_default_str();
  run->add_option("--target", target, "min-eig | max-eig")
      ->check(CLI::IsMember({"min-eig", "max-eig"}))
      ->capture_default_str();
  run->add_option("--gmax-scale", config.gmax_scale,
                  "rescale gradients by the running max of ||g||_1")
      ->capture_default_str();
  run->add_option("--momentum", config.momentum)->capture_default_str();
  run->add_option("--init-clamp", config.init_clamp)->capture_default_str();
  run->add_option("--holdout", config.holdout_size)->capture_default_str();
  run->add_option("--eval-every", config.eval_every)->capture_default_str();
  run->add_option("--out", config.out_path, "CSV output path");

  int trials = 200;
  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "run the bound-evaluator property suite");
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--seed", verify_seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    config.target =
        target == "min-eig" ? betfree::TargetMode::kMinEig : betfree::TargetMode::kMaxEig;
    if (lr_option->count() > 0) {
      config.learning_rate = lr;
    }
    return run_command(config);
  }

  const int failures = betfree::verify::run_property_suite(trials, verify_seed, std::cout);
  return failures == 0 ? 0 : 2;
}

#include "betfree/bench.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "betfree/baselines.hpp"
#include "betfree/diag_optimizer.hpp"
#include "betfree/doubling_bettor.hpp"
#include "betfree/recursive_optimizer.hpp"

namespace betfree {

namespace {

// Substream indices off the user-facing seed.
enum : std::uint64_t { kProblemStream = 0, kHoldoutStream = 1, kTrainStream = 2 };

std::string fmt(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

struct LearnerStack {
  std::unique_ptr<Learner> learner;
  const GmaxScaler* gmax = nullptr;  // set when the scaler is in the stack
};

LearnerStack build_stack(const ExperimentConfig& config) {
  std::optional<InitFractionClamp::Config> clamp;
  if (config.init_clamp) {
    clamp = InitFractionClamp::Config{};
  }

  std::unique_ptr<Learner> learner;
  bool betting = true;
  if (config.optimizer == "recursive") {
    DiagOptimizer::Options inner_options;
    inner_options.epsilon = config.epsilon;
    inner_options.eta = config.eta;
    inner_options.clamp = clamp;
    auto inner = std::make_unique<DiagOptimizer>(config.dim, inner_options);
    learner = std::make_unique<RecursiveOptimizer>(
        std::move(inner), RecursiveOptimizer::Options{config.epsilon, 0.5});
  } else if (config.optimizer == "diag") {
    DiagOptimizer::Options options;
    options.epsilon = config.epsilon;
    options.eta = config.eta;
    options.clamp = clamp;
    learner = std::make_unique<DiagOptimizer>(config.dim, options);
  } else if (config.optimizer == "doubling1d") {
    if (config.dim != 1) {
      throw ConfigError("doubling1d requires --dim 1");
    }
    learner = std::make_unique<DoublingBettor>(config.epsilon);
  } else if (config.optimizer == "adagrad") {
    if (!config.learning_rate) {
      throw ConfigError("adagrad requires --lr");
    }
    learner = std::make_unique<AdagradLearner>(config.dim, *config.learning_rate);
    betting = false;
  } else {
    throw ConfigError("unknown optimizer: " + config.optimizer);
  }

  LearnerStack stack;
  if (betting && config.gmax_scale) {
    auto scaled = std::make_unique<GmaxScaler>(std::move(learner));
    stack.gmax = scaled.get();
    learner = std::move(scaled);
  }
  if (config.momentum) {
    learner = std::make_unique<MomentumOffset>(std::move(learner), Norm::L1);
  }
  stack.learner = std::move(learner);
  return stack;
}

}  // namespace

const char* target_mode_name(TargetMode mode) {
  return mode == TargetMode::kMinEig ? "min-eig" : "max-eig";
}

SyntheticProblem make_synthetic_problem(int dim, double condition_number,
                                        TargetMode mode, std::uint64_t seed) {
  SeededRng rng(SeededRng::derive(seed, kProblemStream));
  SyntheticProblem problem;
  problem.cov = make_covariance(dim, condition_number, rng);
  problem.target = mode == TargetMode::kMaxEig
                       ? problem.cov.orthogonal_basis.col(0)
                       : problem.cov.orthogonal_basis.col(dim - 1);
  problem.dim = dim;
  problem.seed = seed;
  problem.target_mode = mode;
  return problem;
}

LossSample synthetic_loss_and_grad(const SyntheticProblem& problem, const Vec& w,
                                   SeededRng& rng) {
  const Vec x = sample_gaussian(problem.cov, rng);
  const double residual = x.dot(w - problem.target);
  LossSample sample;
  sample.loss = std::abs(residual);
  if (residual > 0.0) {
    sample.subgradient = x;
  } else if (residual < 0.0) {
    sample.subgradient = -x;
  } else {
    sample.subgradient = Vec::Zero(problem.dim);
  }
  return sample;
}

std::vector<Vec> make_holdout(const SyntheticProblem& problem, int size) {
  SeededRng rng(SeededRng::derive(problem.seed, kHoldoutStream));
  std::vector<Vec> holdout;
  holdout.reserve(size);
  for (int i = 0; i < size; ++i) {
    holdout.push_back(sample_gaussian(problem.cov, rng));
  }
  return holdout;
}

double holdout_loss(const SyntheticProblem& problem, const std::vector<Vec>& holdout,
                    const Vec& w) {
  double total = 0.0;
  const Vec offset = w - problem.target;
  for (const Vec& x : holdout) {
    total += std::abs(x.dot(offset));
  }
  return holdout.empty() ? 0.0 : total / static_cast<double>(holdout.size());
}

std::unique_ptr<Learner> make_learner(const ExperimentConfig& config) {
  return build_stack(config).learner;
}

RunResult run_experiment(const ExperimentConfig& config) {
  if (config.steps < 1 || config.holdout_size < 1 || config.eval_every < 1) {
    throw ConfigError("steps, holdout and eval-every must be >= 1");
  }
  const SyntheticProblem problem =
      make_synthetic_problem(config.dim, config.condition_number, config.target, config.seed);
  const std::vector<Vec> holdout = make_holdout(problem, config.holdout_size);
  SeededRng train_rng(SeededRng::derive(config.seed, kTrainStream));
  LearnerStack stack = build_stack(config);

  RunResult result;
  result.records.reserve(config.steps);
  double regret_running = 0.0;

  for (int t = 1; t <= config.steps; ++t) {
    const Vec w = stack.learner->predict().iterate;
    LossSample sample;
    try {
      sample = synthetic_loss_and_grad(problem, w, train_rng);
      regret_running += sample.subgradient.dot(w - problem.target);
      result.ledger.record(sample.subgradient, w);

      RunRecord record;
      record.step = t;
      record.train_loss = sample.loss;
      if (t % config.eval_every == 0 || t == config.steps) {
        record.holdout_loss = holdout_loss(problem, holdout, w);
        result.final_holdout_loss = *record.holdout_loss;
      }
      stack.learner->update(sample.subgradient);
      record.regret = regret_running;
      record.wealth = stack.learner->wealth();
      if (stack.gmax != nullptr) {
        record.g_max = stack.gmax->g_max();
      }
      result.records.push_back(std::move(record));
    } catch (const ContractViolation& e) {
      throw ContractViolation("step " + std::to_string(t) + ": " + e.what());
    } catch (const InvariantViolation& e) {
      throw InvariantViolation("step " + std::to_string(t) + ": " + e.what());
    }
  }

  result.final_regret = regret_running;
  result.final_wealth = stack.learner->wealth();
  if (stack.gmax != nullptr) {
    result.g_max = stack.gmax->g_max();
  }

  if (!config.out_path.empty()) {
    write_csv(config.out_path, config, result.records);
  }
  return result;
}

void write_csv(const std::string& path, const ExperimentConfig& config,
               const std::vector<RunRecord>& records) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) {
    throw ConfigError("cannot open output file: " + path);
  }

  out << "# optimizer=" << config.optimizer << " dim=" << config.dim
      << " steps=" << config.steps << " seed=" << config.seed
      << " epsilon=" << fmt(config.epsilon) << " eta=" << fmt(config.eta);
  if (config.learning_rate) {
    out << " lr=" << fmt(*config.learning_rate);
  }
  out << " cond=" << fmt(config.condition_number)
      << " target=" << target_mode_name(config.target)
      << " gmax_scale=" << (config.gmax_scale ? 1 : 0)
      << " momentum=" << (config.momentum ? 1 : 0)
      << " init_clamp=" << (config.init_clamp ? 1 : 0)
      << " holdout=" << config.holdout_size << " eval_every=" << config.eval_every
      << "\n";
  out << "# rng=" << SeededRng::kAlgorithmId;
  if (config.optimizer == "recursive") {
    out << " inner_gradient_scale=0.5";
  }
  out << "\n";

  out << "step,train_loss,holdout_loss,regret,wealth,g_max\n";
  for (const RunRecord& r : records) {
    out << r.step << ',' << fmt(r.train_loss) << ',';
    if (r.holdout_loss) {
      out << fmt(*r.holdout_loss);
    }
    out << ',' << fmt(r.regret) << ',';
    if (r.wealth) {
      out << fmt(*r.wealth);
    }
    out << ',';
    if (r.g_max) {
      out << fmt(*r.g_max);
    }
    out << '\n';
  }
}

BiasedGradientStream::BiasedGradientStream(int dim, double condition_number,
                                           double epsilon_bias, std::uint64_t seed)
    : rng_(SeededRng::derive(seed, kTrainStream)) {
  if (!(epsilon_bias > 0.0)) {
    throw std::invalid_argument("BiasedGradientStream: epsilon_bias must be positive");
  }
  SeededRng cov_rng(SeededRng::derive(seed, kProblemStream));
  cov_ = make_covariance(dim, condition_number, cov_rng);
  min_eigvec_ = cov_.orthogonal_basis.col(dim - 1);
  bias_scale_ = std::sqrt(epsilon_bias);
}

Vec BiasedGradientStream::next() {
  const Vec raw = sample_gaussian(cov_, rng_) - bias_scale_ * min_eigvec_;
  return tracker_.normalize(raw);
}

}  // namespace betfree

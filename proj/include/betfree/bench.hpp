#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "betfree/covariance.hpp"
#include "betfree/learner.hpp"
#include "betfree/safeguards.hpp"

namespace betfree {

enum class TargetMode { kMinEig, kMaxEig };

const char* target_mode_name(TargetMode mode);

// Synthetic stream ell_t(w) = |x_t . w - x_t . target| with x_t ~ N(0, Sigma)
// and target a unit-norm eigenvector of Sigma.
struct SyntheticProblem {
  CovarianceFactor cov;
  Vec target;
  int dim = 0;
  std::uint64_t seed = 0;
  TargetMode target_mode = TargetMode::kMinEig;
};

SyntheticProblem make_synthetic_problem(int dim, double condition_number,
                                        TargetMode mode, std::uint64_t seed);

struct LossSample {
  double loss = 0.0;
  Vec subgradient;
};

// Draws x_t ~ N(0, Sigma) and returns |x_t . (w - target)| with subgradient
// sign(x_t . (w - target)) x_t, sign(0) = 0.
LossSample synthetic_loss_and_grad(const SyntheticProblem& problem, const Vec& w,
                                   SeededRng& rng);

// The holdout is a fixed set of fresh samples, drawn once from a substream
// derived from the problem seed only, so every optimizer compared under one
// seed is evaluated on the same set.
std::vector<Vec> make_holdout(const SyntheticProblem& problem, int size);

double holdout_loss(const SyntheticProblem& problem, const std::vector<Vec>& holdout,
                    const Vec& w);

struct ExperimentConfig {
  std::string optimizer = "recursive";  // recursive | diag | doubling1d | adagrad
  int dim = 100;
  int steps = 20000;
  std::uint64_t seed = 1;
  double epsilon = 1.0;
  double eta = 0.5;
  std::optional<double> learning_rate;  // required for adagrad
  double condition_number = 750.0;
  TargetMode target = TargetMode::kMinEig;
  bool gmax_scale = true;   // ignored by adagrad, which has no norm contract
  bool momentum = false;
  bool init_clamp = false;
  int holdout_size = 1000;
  int eval_every = 100;
  std::string out_path;  // empty: no CSV written
};

struct RunRecord {
  int step = 0;
  double train_loss = 0.0;
  std::optional<double> holdout_loss;
  double regret = 0.0;  // empirical regret at the target so far
  std::optional<double> wealth;
  std::optional<double> g_max;
};

struct RunResult {
  std::vector<RunRecord> records;
  RegretLedger ledger;
  double final_regret = 0.0;
  double final_holdout_loss = 0.0;
  std::optional<double> final_wealth;
  std::optional<double> g_max;
};

// Builds the learner named by the config, wrapped per the flags:
// momentum(gmax(learner)), with the init clamp threaded into the diagonal
// coordinates where applicable.
std::unique_ptr<Learner> make_learner(const ExperimentConfig& config);

// Runs the online loop (predict, sample loss, update), evaluating the live
// iterate on the holdout every eval_every steps, and writes the CSV when
// out_path is set. Output is byte-identical for identical configs.
RunResult run_experiment(const ExperimentConfig& config);

void write_csv(const std::string& path, const ExperimentConfig& config,
               const std::vector<RunRecord>& records);

// Gradient stream of the full-matrix regime: g_t = N(0, Sigma) - sqrt(bias) x,
// x the eigenvector with smallest eigenvalue, rescaled through a running
// g_max so the emitted gradients satisfy ||.||_1 <= 1.
class BiasedGradientStream {
 public:
  BiasedGradientStream(int dim, double condition_number, double epsilon_bias,
                       std::uint64_t seed);

  Vec next();

  const Vec& min_eigvec() const { return min_eigvec_; }
  double g_max() const { return tracker_.g_max(); }

 private:
  CovarianceFactor cov_;
  Vec min_eigvec_;
  double bias_scale_;
  SeededRng rng_;
  GmaxTracker tracker_;
};

}  // namespace betfree

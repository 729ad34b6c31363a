#ifndef DSMC_TRAINER_HPP
#define DSMC_TRAINER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsmc/features.hpp"
#include "dsmc/reduction.hpp"

namespace dsmc {

enum class LossKind { kHinge, kLogistic };

std::string loss_name(LossKind k);
LossKind loss_from_name(const std::string& name);

struct TrainConfig {
  LossKind loss = LossKind::kHinge;
  double lambda = 1e-4;
  double lr0 = 0.1;
  int epochs = 10;
  uint64_t seed = 0;
  bool scale = true;
};

// Linear scorer f(v) = w . scale(v). The bias is fixed at 0: pair scoring
// only ever uses differences f(a) - f(b), where a bias cancels.
struct LinearModel {
  FeatureVec weights{};
  std::optional<FeatureScaler> scaler;
  LossKind loss = LossKind::kHinge;
  double lambda = 0;
  int epochs = 0;
  uint64_t seed = 0;

  double score(const FeatureVec& v) const {
    FeatureVec s = scaler ? scaler->apply(v) : v;
    double acc = 0;
    for (int i = 0; i < kNumFeatures; ++i) acc += weights[i] * s[i];
    return acc;
  }
};

// Regularized SGD on difference vectors d = scale(z_first) - scale(z_second)
// with label y~: minimizes (1/n) sum loss(y~ w.d) + (lambda/2) |w|^2.
// Step size lr0 / (1 + lr0 * lambda * t), per-epoch reshuffle from seed.
LinearModel train(const std::vector<DyadicPair>& pairs,
                  const TrainConfig& config);

// Full-batch objective and gradient over precomputed difference vectors;
// exposed so the gradient can be checked against finite differences.
double objective(const FeatureVec& w, const std::vector<FeatureVec>& diffs,
                 const std::vector<int8_t>& labels, LossKind loss,
                 double lambda);
FeatureVec objective_gradient(const FeatureVec& w,
                              const std::vector<FeatureVec>& diffs,
                              const std::vector<int8_t>& labels, LossKind loss,
                              double lambda);

}  // namespace dsmc

#endif  // DSMC_TRAINER_HPP

#include "dsmc/trainer.hpp"

#include <cmath>
#include <numeric>

#include "dsmc/errors.hpp"
#include "dsmc/rng.hpp"

namespace dsmc {

std::string loss_name(LossKind k) {
  return k == LossKind::kHinge ? "hinge" : "logistic";
}

LossKind loss_from_name(const std::string& name) {
  if (name == "hinge") return LossKind::kHinge;
  if (name == "logistic") return LossKind::kLogistic;
  throw UsageError("unknown loss '" + name + "' (hinge|logistic)");
}

namespace {

inline double surrogate(double u, LossKind loss) {
  if (loss == LossKind::kHinge) return u < 1 ? 1 - u : 0.0;
  // stable ln(1 + e^{-u})
  return u > 0 ? std::log1p(std::exp(-u)) : -u + std::log1p(std::exp(u));
}

// d loss / d u
inline double surrogate_deriv(double u, LossKind loss) {
  if (loss == LossKind::kHinge) return u < 1 ? -1.0 : 0.0;
  return -1.0 / (1.0 + std::exp(u));
}

inline double dot(const FeatureVec& a, const FeatureVec& b) {
  double s = 0;
  for (int i = 0; i < kNumFeatures; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double objective(const FeatureVec& w, const std::vector<FeatureVec>& diffs,
                 const std::vector<int8_t>& labels, LossKind loss,
                 double lambda) {
  double sum = 0;
  for (size_t i = 0; i < diffs.size(); ++i)
    sum += surrogate(labels[i] * dot(w, diffs[i]), loss);
  return sum / static_cast<double>(diffs.size()) + 0.5 * lambda * dot(w, w);
}

FeatureVec objective_gradient(const FeatureVec& w,
                              const std::vector<FeatureVec>& diffs,
                              const std::vector<int8_t>& labels, LossKind loss,
                              double lambda) {
  FeatureVec g{};
  for (size_t i = 0; i < diffs.size(); ++i) {
    double du = labels[i] * surrogate_deriv(labels[i] * dot(w, diffs[i]), loss);
    for (int j = 0; j < kNumFeatures; ++j) g[j] += du * diffs[i][j];
  }
  const double inv_n = 1.0 / static_cast<double>(diffs.size());
  for (int j = 0; j < kNumFeatures; ++j) g[j] = g[j] * inv_n + lambda * w[j];
  return g;
}

LinearModel train(const std::vector<DyadicPair>& pairs,
                  const TrainConfig& config) {
  if (pairs.empty()) throw UsageError("train: no pairs");
  if (!(config.lr0 > 0)) throw UsageError("train: lr0 must be > 0");

  LinearModel model;
  model.loss = config.loss;
  model.lambda = config.lambda;
  model.epochs = config.epochs;
  model.seed = config.seed;

  if (config.scale) {
    std::vector<FeatureVec> all;
    all.reserve(pairs.size() * 2);
    for (const auto& p : pairs) {
      all.push_back(p.z_first);
      all.push_back(p.z_second);
    }
    model.scaler = fit_scaler(all);
  }

  // Precompute difference vectors; the per-coordinate means cancel, so a
  // scaled difference is just (a - b) * inv_std.
  std::vector<FeatureVec> diffs(pairs.size());
  std::vector<int8_t> labels(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    for (int j = 0; j < kNumFeatures; ++j) {
      double d = p.z_first[j] - p.z_second[j];
      if (model.scaler) d *= model.scaler->inv_std[j];
      if (!std::isfinite(d))
        throw NumericError("non-finite feature in pair " + std::to_string(i) +
                           " (source doc " + std::to_string(p.source_doc) +
                           ")");
      diffs[i][j] = d;
    }
    labels[i] = p.label;
  }

  FeatureVec w{};
  std::vector<uint32_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0u);
  Rng rng(config.seed, 0x7261696eULL);

  uint64_t t = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    for (uint32_t idx : order) {
      double lr = config.lr0 / (1.0 + config.lr0 * config.lambda *
                                          static_cast<double>(t));
      double u = labels[idx] * dot(w, diffs[idx]);
      double du = labels[idx] * surrogate_deriv(u, config.loss);
      for (int j = 0; j < kNumFeatures; ++j)
        w[j] -= lr * (du * diffs[idx][j] + config.lambda * w[j]);
      ++t;
    }
    double obj = objective(w, diffs, labels, config.loss, config.lambda);
    if (!std::isfinite(obj) || obj > 1e6)
      throw NumericError("training diverged (objective " +
                         std::to_string(obj) + "); reduce lr");
  }

  model.weights = w;
  return model;
}

}  // namespace dsmc

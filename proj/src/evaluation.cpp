#include "dsmc/evaluation.hpp"

#include <algorithm>

#include "dsmc/errors.hpp"

namespace dsmc {

EvalReport evaluate(const std::vector<int32_t>& truth,
                    const std::vector<int32_t>& predicted,
                    int32_t num_classes) {
  if (truth.size() != predicted.size())
    throw UsageError("evaluate: truth has " + std::to_string(truth.size()) +
                     " entries, predictions " +
                     std::to_string(predicted.size()));
  if (truth.empty()) throw UsageError("evaluate: empty input");

  const int32_t K = num_classes;
  std::vector<int64_t> tp(K + 1, 0), fp(K + 1, 0), fn(K + 1, 0);
  int64_t correct = 0;
  for (size_t i = 0; i < truth.size(); ++i) {
    int32_t t = truth[i], p = predicted[i];
    if (t < 1 || t > K || p < 1 || p > K)
      throw UsageError("evaluate: class id out of [1," + std::to_string(K) +
                       "] at position " + std::to_string(i));
    if (t == p) {
      ++tp[t];
      ++correct;
    } else {
      ++fp[p];
      ++fn[t];
    }
  }

  EvalReport rep;
  rep.accuracy = static_cast<double>(correct) / truth.size();
  rep.per_class.resize(K + 1);
  double psum = 0, rsum = 0;
  for (int32_t k = 1; k <= K; ++k) {
    auto& cm = rep.per_class[k];
    cm.support = tp[k] + fn[k];
    cm.precision = tp[k] + fp[k] > 0
                       ? static_cast<double>(tp[k]) / (tp[k] + fp[k])
                       : 0.0;
    cm.recall = tp[k] + fn[k] > 0
                    ? static_cast<double>(tp[k]) / (tp[k] + fn[k])
                    : 0.0;
    cm.f1 = cm.precision + cm.recall > 0
                ? 2 * cm.precision * cm.recall / (cm.precision + cm.recall)
                : 0.0;
    psum += cm.precision;
    rsum += cm.recall;
  }
  rep.macro_precision = psum / K;
  rep.macro_recall = rsum / K;
  rep.maf1 = rep.macro_precision + rep.macro_recall > 0
                 ? 2 * rep.macro_precision * rep.macro_recall /
                       (rep.macro_precision + rep.macro_recall)
                 : 0.0;
  return rep;
}

BoundConstants bound_constants(const ProfileSet& profiles,
                               const std::vector<double>& pi) {
  const int32_t K = profiles.num_classes();
  int64_t m = 0;
  for (int32_t k = 1; k <= K; ++k) m += profiles.at(k).n_docs;

  BoundConstants out;
  for (int32_t k = 1; k <= K; ++k) {
    if (!(pi[k] > 0))
      throw UsageError("bound_constants: pi must be > 0 for class " +
                       std::to_string(k));
    double eta = static_cast<double>(profiles.at(k).n_docs) / m;
    out.alpha = std::max(out.alpha, eta / pi[k]);
    out.beta = std::max(out.beta, 1.0 / pi[k]);
  }
  return out;
}

}  // namespace dsmc

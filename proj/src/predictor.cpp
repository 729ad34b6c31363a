#include "dsmc/predictor.hpp"

#include <algorithm>

#include "dsmc/errors.hpp"
#include "dsmc/features.hpp"
#include "dsmc/parallel.hpp"

namespace dsmc {

std::vector<int32_t> candidates(const SparseDoc& doc,
                                const ProfileSet& profiles,
                                const CorpusStats& stats, int32_t q) {
  const int32_t K = profiles.num_classes();
  if (q < 1) throw UsageError("candidates: q must be >= 1");
  q = std::min(q, K);

  auto vec = vectorize(doc, stats);
  std::vector<std::pair<double, int32_t>> dist(K);
  for (int32_t k = 1; k <= K; ++k)
    dist[k - 1] = {distance_to_centroid(vec, profiles.at(k)), k};
  std::partial_sort(dist.begin(), dist.begin() + q, dist.end());

  std::vector<int32_t> out(q);
  for (int32_t i = 0; i < q; ++i) out[i] = dist[i].second;
  return out;
}

int32_t predict(const SparseDoc& doc, const LinearModel& model,
                const ProfileSet& profiles, const CorpusStats& stats,
                const PredictionConfig& config) {
  auto vec = vectorize(doc, stats);
  auto cands = candidates(doc, profiles, stats, config.q);
  int32_t best = 0;
  double best_score = 0;
  for (int32_t k : cands) {
    double s = model.score(phi(doc, vec, profiles.at(k), stats,
                               profiles.avg_len));
    if (best == 0 || s > best_score || (s == best_score && k < best)) {
      best = k;
      best_score = s;
    }
  }
  return best;
}

namespace serial {

std::vector<int32_t> predict_batch(const std::vector<SparseDoc>& docs,
                                   const LinearModel& model,
                                   const ProfileSet& profiles,
                                   const CorpusStats& stats,
                                   const PredictionConfig& config) {
  std::vector<int32_t> out(docs.size());
  for (size_t i = 0; i < docs.size(); ++i)
    out[i] = predict(docs[i], model, profiles, stats, config);
  return out;
}

}  // namespace serial

std::vector<int32_t> predict_batch(const std::vector<SparseDoc>& docs,
                                   const LinearModel& model,
                                   const ProfileSet& profiles,
                                   const CorpusStats& stats,
                                   const PredictionConfig& config) {
  const int64_t n = static_cast<int64_t>(docs.size());
  std::vector<int32_t> out(n);
#pragma omp parallel for schedule(dynamic, 32) num_threads(worker_count())
  for (int64_t i = 0; i < n; ++i)
    out[i] = predict(docs[i], model, profiles, stats, config);
  return out;
}

}  // namespace dsmc

#include "dsmc/features.hpp"

#include <cmath>

#include "dsmc/errors.hpp"

namespace dsmc {

FeatureVec phi(const SparseDoc& doc, const std::vector<TermEntry>& doc_vec,
               const ClassProfile& profile, const CorpusStats& stats,
               double avg_len) {
  if (profile.class_id == 0)
    throw UsageError("phi: missing profile for class");
  if (!(profile.size_terms > 0))
    throw UsageError("phi: degenerate class " +
                     std::to_string(profile.class_id) + " with |y| = 0");
  if (!(avg_len > 0)) throw UsageError("phi: avg_len must be > 0");

  FeatureVec f{};
  const double size_y = profile.size_terms;
  const double bm25_denom_add = 0.25 + 0.75 * profile.len_y / avg_len;

  // merge walk over the doc and the class mega-document
  const auto& xs = doc.terms;
  const auto& ys = profile.y_counts;
  size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i].first < ys[j].first) {
      ++i;
    } else if (ys[j].first < xs[i].first) {
      ++j;
    } else {
      const int32_t t = xs[i].first;
      const double y_t = ys[j].second;
      const double it = stats.inv_doc_freq(t);
      const double ft = stats.freq(t);
      const double rel = y_t / size_y;
      f[0] += std::log1p(y_t);
      f[1] += std::log1p(stats.total_terms / ft);
      f[2] += it;
      f[3] += rel * it;
      f[4] += std::log1p(rel);
      f[5] += std::log1p(rel * it);
      f[6] += std::log1p(rel * (stats.total_terms / ft));
      f[7] += 1.0;
      f[9] += it * (2.0 * y_t) / (y_t + bm25_denom_add);
      ++i;
      ++j;
    }
  }
  f[8] = distance_to_centroid(doc_vec, profile);
  return f;
}

FeatureVec phi(const SparseDoc& doc, const ClassProfile& profile,
               const CorpusStats& stats, double avg_len) {
  return phi(doc, vectorize(doc, stats), profile, stats, avg_len);
}

FeatureScaler fit_scaler(const std::vector<FeatureVec>& vectors) {
  if (vectors.size() < 2)
    throw UsageError("fit_scaler: need at least 2 vectors");
  FeatureScaler sc{};
  const double inv_n = 1.0 / static_cast<double>(vectors.size());
  for (const auto& v : vectors)
    for (int i = 0; i < kNumFeatures; ++i) sc.mean[i] += v[i];
  for (int i = 0; i < kNumFeatures; ++i) sc.mean[i] *= inv_n;

  FeatureVec var{};
  for (const auto& v : vectors)
    for (int i = 0; i < kNumFeatures; ++i) {
      double d = v[i] - sc.mean[i];
      var[i] += d * d;
    }
  for (int i = 0; i < kNumFeatures; ++i) {
    var[i] *= inv_n;
    sc.inv_std[i] = var[i] > 0 ? 1.0 / std::sqrt(var[i]) : 0.0;
  }
  return sc;
}

}  // namespace dsmc

#ifndef DSMC_FEATURES_HPP
#define DSMC_FEATURES_HPP

#include <array>
#include <vector>

#include "dsmc/corpus.hpp"

namespace dsmc {

constexpr int kNumFeatures = 10;

using FeatureVec = std::array<double, kNumFeatures>;

// Joint example/class map. Entries (1-based numbering):
//   1: sum ln(1+y_t)            2: sum ln(1+l_S/F_t)     3: sum I_t
//   4: sum (y_t/|y|) I_t        5: sum ln(1+y_t/|y|)     6: sum ln(1+(y_t/|y|) I_t)
//   7: sum ln(1+(y_t/|y|)(l_S/F_t))  8: |intersection|   9: centroid distance
//  10: sum I_t * 2 y_t / (y_t + 0.25 + 0.75 len(y)/avg_len)
// Sums run over terms present in both the document and the class.
FeatureVec phi(const SparseDoc& doc, const ClassProfile& profile,
               const CorpusStats& stats, double avg_len);

// Same, with the document's unit tf-idf vector precomputed (for batch use).
FeatureVec phi(const SparseDoc& doc, const std::vector<TermEntry>& doc_vec,
               const ClassProfile& profile, const CorpusStats& stats,
               double avg_len);

// Per-coordinate standardization; zero-variance coordinates map to 0.
struct FeatureScaler {
  FeatureVec mean{};
  FeatureVec inv_std{};  // 0 for zero-variance coordinates

  FeatureVec apply(const FeatureVec& v) const {
    FeatureVec out;
    for (int i = 0; i < kNumFeatures; ++i)
      out[i] = (v[i] - mean[i]) * inv_std[i];
    return out;
  }
};

FeatureScaler fit_scaler(const std::vector<FeatureVec>& vectors);

}  // namespace dsmc

#endif  // DSMC_FEATURES_HPP

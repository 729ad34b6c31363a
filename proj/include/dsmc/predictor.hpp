#ifndef DSMC_PREDICTOR_HPP
#define DSMC_PREDICTOR_HPP

#include <cstdint>
#include <vector>

#include "dsmc/corpus.hpp"
#include "dsmc/trainer.hpp"

namespace dsmc {

struct PredictionConfig {
  int32_t q = 10;  // candidate count, clamped to K
};

// The q classes with nearest centroids, sorted by (distance, class id).
std::vector<int32_t> candidates(const SparseDoc& doc,
                                const ProfileSet& profiles,
                                const CorpusStats& stats, int32_t q);

// argmax of the learned scorer over the candidate set; ties go to the
// lowest class id.
int32_t predict(const SparseDoc& doc, const LinearModel& model,
                const ProfileSet& profiles, const CorpusStats& stats,
                const PredictionConfig& config);

std::vector<int32_t> predict_batch(const std::vector<SparseDoc>& docs,
                                   const LinearModel& model,
                                   const ProfileSet& profiles,
                                   const CorpusStats& stats,
                                   const PredictionConfig& config);

namespace serial {
std::vector<int32_t> predict_batch(const std::vector<SparseDoc>& docs,
                                   const LinearModel& model,
                                   const ProfileSet& profiles,
                                   const CorpusStats& stats,
                                   const PredictionConfig& config);
}

}  // namespace dsmc

#endif  // DSMC_PREDICTOR_HPP

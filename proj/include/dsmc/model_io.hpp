#ifndef DSMC_MODEL_IO_HPP
#define DSMC_MODEL_IO_HPP

#include <string>

#include "dsmc/corpus.hpp"
#include "dsmc/trainer.hpp"

namespace dsmc {

// On-disk model bundle (format dsmc/1), self-contained for prediction:
//   model.meta      key=value: format, loss, lambda, epochs, seed, scaled,
//                   scaler mean/std when scaling was enabled
//   weights.txt     10 lines, 17 significant digits
//   class_stats.txt sparse `class term:count ...` lines
//   centroids.txt   sparse `class term:weight ...` lines
//   corpus.meta     m, K, l_S, avg_len
//   idf.txt         `term idf` lines for every term with F_t > 0
struct ModelBundle {
  LinearModel model;
  ProfileSet profiles;
  CorpusStats stats;
};

void save_bundle(const std::string& dir, const LinearModel& model,
                 const ProfileSet& profiles, const CorpusStats& stats);

ModelBundle load_bundle(const std::string& dir);

// Atomic text write: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace dsmc

#endif  // DSMC_MODEL_IO_HPP

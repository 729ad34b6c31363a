#ifndef DSMC_EVALUATION_HPP
#define DSMC_EVALUATION_HPP

#include <cstdint>
#include <vector>

#include "dsmc/corpus.hpp"

namespace dsmc {

struct ClassMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  int64_t support = 0;
};

struct EvalReport {
  double accuracy = 0;
  double maf1 = 0;  // harmonic mean of macro precision and macro recall
  double macro_precision = 0;
  double macro_recall = 0;
  std::vector<ClassMetrics> per_class;  // index 0 unused; [1..K]
};

// Macro averages run over all K classes, counting absent classes with
// precision = recall = 0.
EvalReport evaluate(const std::vector<int32_t>& truth,
                    const std::vector<int32_t>& predicted, int32_t num_classes);

// Generalization-bound constants: alpha = max_k eta_k / pi_k with
// eta_k = n_docs_k / m, beta = max_k 1 / pi_k.
struct BoundConstants {
  double alpha = 0;
  double beta = 0;
};

BoundConstants bound_constants(const ProfileSet& profiles,
                               const std::vector<double>& pi);

}  // namespace dsmc

#endif  // DSMC_EVALUATION_HPP

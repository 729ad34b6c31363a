#ifndef DSMC_SYNTH_HPP
#define DSMC_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "dsmc/corpus.hpp"

namespace dsmc {

// Seeded long-tailed synthetic corpus: class sizes follow k^{-zipf},
// documents mix class-exclusive signal terms with skewed background noise.
struct SynthConfig {
  int32_t num_classes = 10;
  int64_t num_docs = 1000;
  int32_t vocab_size = 5000;
  double zipf_exponent = 1.0;
  int32_t terms_min = 10;
  int32_t terms_max = 30;
  int32_t class_signal = 5;  // exclusive terms per class; 0 = pure noise
  uint64_t seed = 0;
};

// Class sizes proportional to k^{-s}, each >= 1, summing to num_docs.
std::vector<int64_t> zipf_class_sizes(int32_t num_classes, int64_t num_docs,
                                      double exponent);

std::vector<SparseDoc> generate(const SynthConfig& config);

}  // namespace dsmc

#endif  // DSMC_SYNTH_HPP

#ifndef DSMC_REDUCTION_HPP
#define DSMC_REDUCTION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "dsmc/features.hpp"

namespace dsmc {

// One binary example of the dyadic reduction. label = -1 iff the adversarial
// class id is smaller than the source's true class id; in that case z_first
// holds the adversarial side, otherwise the true side.
struct DyadicPair {
  FeatureVec z_first{};
  FeatureVec z_second{};
  int8_t label = 0;  // -1 or +1
  int32_t source_doc = 0;
  int32_t adversarial_class = 0;
  int32_t slot = 0;  // enumeration slot k (full) or draw index (sampled), 1-based
};

struct SamplingConfig {
  double avg_per_class = 1.0;  // target retained examples per class
  int32_t kappa = 1;           // adversarial classes per retained example
  uint64_t seed = 0;
};

// Everything phi needs, shared read-only across threads.
struct PhiContext {
  const std::vector<SparseDoc>* docs = nullptr;
  const ProfileSet* profiles = nullptr;
  const CorpusStats* stats = nullptr;
};

// Full dyadic expansion: m(K-1) pairs, doc-major, slot k in [K-1] pairing
// against class a(k) = k if k < y else k+1.
std::vector<DyadicPair> transform_full(const PhiContext& ctx);

// pi_k = min(1, avg_per_class / n_docs_k), indexed by class id.
std::vector<double> compute_pi(const ProfileSet& profiles,
                               double avg_per_class);

// (pi, kappa) double sampling: Bernoulli retention per doc, then kappa
// adversarial classes drawn uniformly without replacement. Each doc's draws
// derive from (seed, doc id), so output is schedule-independent.
std::vector<DyadicPair> double_sample(const PhiContext& ctx,
                                      const std::vector<double>& pi,
                                      const SamplingConfig& config);

// Number of docs Bernoulli retention would keep (step 1 only).
int64_t count_retained(const std::vector<SparseDoc>& docs,
                       const std::vector<double>& pi, uint64_t seed);

using ClassScorer = std::function<double(const SparseDoc&, int32_t)>;
using PairScorer = std::function<double(const FeatureVec&)>;

// Average over (doc, wrong class) of 1[g(x^y) - g(x^y') <= 0]; ties count
// as errors.
double empirical_risk_multiclass(const ClassScorer& g,
                                 const std::vector<SparseDoc>& docs,
                                 int32_t num_classes);

// Average over pairs of 1[label * (f(z_first) - f(z_second)) <= 0].
double empirical_risk_binary(const PairScorer& f,
                             const std::vector<DyadicPair>& pairs);

namespace serial {
std::vector<DyadicPair> transform_full(const PhiContext& ctx);
}

}  // namespace dsmc

#endif  // DSMC_REDUCTION_HPP

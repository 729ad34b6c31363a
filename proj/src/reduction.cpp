#include "dsmc/reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "dsmc/errors.hpp"
#include "dsmc/parallel.hpp"
#include "dsmc/rng.hpp"

namespace dsmc {

namespace {

// Adversarial class for enumeration slot k in [1..K-1]: skip the true class.
inline int32_t slot_class(int32_t k, int32_t true_class) {
  return k < true_class ? k : k + 1;
}

inline DyadicPair make_pair(const SparseDoc& doc,
                            const std::vector<TermEntry>& doc_vec,
                            int32_t adversarial, int32_t slot,
                            const PhiContext& ctx) {
  const auto& profiles = *ctx.profiles;
  FeatureVec true_z =
      phi(doc, doc_vec, profiles.at(doc.label), *ctx.stats, profiles.avg_len);
  FeatureVec adv_z =
      phi(doc, doc_vec, profiles.at(adversarial), *ctx.stats, profiles.avg_len);
  DyadicPair p;
  p.source_doc = doc.id;
  p.adversarial_class = adversarial;
  p.slot = slot;
  if (adversarial < doc.label) {
    p.z_first = adv_z;
    p.z_second = true_z;
    p.label = -1;
  } else {
    p.z_first = true_z;
    p.z_second = adv_z;
    p.label = +1;
  }
  return p;
}

// Draw `kappa` distinct values from [1..n] (Floyd's method), reported in
// ascending order so output does not depend on iteration internals.
std::vector<int32_t> sample_distinct(Rng& rng, int32_t n, int32_t kappa) {
  std::vector<int32_t> picked;
  picked.reserve(kappa);
  for (int32_t j = n - kappa + 1; j <= n; ++j) {
    int32_t v = 1 + static_cast<int32_t>(rng.bounded(static_cast<uint32_t>(j)));
    if (std::find(picked.begin(), picked.end(), v) != picked.end()) v = j;
    picked.push_back(v);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace

namespace serial {

std::vector<DyadicPair> transform_full(const PhiContext& ctx) {
  const auto& docs = *ctx.docs;
  const int32_t K = ctx.profiles->num_classes();
  if (K < 2) throw UsageError("transform_full: need K >= 2");
  std::vector<DyadicPair> pairs(docs.size() * (K - 1));
  for (size_t i = 0; i < docs.size(); ++i) {
    auto doc_vec = vectorize(docs[i], *ctx.stats);
    for (int32_t k = 1; k <= K - 1; ++k)
      pairs[i * (K - 1) + (k - 1)] = make_pair(
          docs[i], doc_vec, slot_class(k, docs[i].label), k, ctx);
  }
  return pairs;
}

}  // namespace serial

std::vector<DyadicPair> transform_full(const PhiContext& ctx) {
  const auto& docs = *ctx.docs;
  const int32_t K = ctx.profiles->num_classes();
  if (K < 2) throw UsageError("transform_full: need K >= 2");
  const int64_t m = static_cast<int64_t>(docs.size());
  std::vector<DyadicPair> pairs(m * (K - 1));
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
  for (int64_t i = 0; i < m; ++i) {
    auto doc_vec = vectorize(docs[i], *ctx.stats);
    for (int32_t k = 1; k <= K - 1; ++k)
      pairs[i * (K - 1) + (k - 1)] = make_pair(
          docs[i], doc_vec, slot_class(k, docs[i].label), k, ctx);
  }
  return pairs;
}

std::vector<double> compute_pi(const ProfileSet& profiles,
                               double avg_per_class) {
  if (!(avg_per_class > 0))
    throw UsageError("avg_per_class must be > 0");
  const int32_t K = profiles.num_classes();
  std::vector<double> pi(K + 1, 0.0);
  for (int32_t k = 1; k <= K; ++k) {
    int64_t n = profiles.at(k).n_docs;
    if (n < 1) throw UsageError("empty class " + std::to_string(k));
    pi[k] = std::min(1.0, avg_per_class / static_cast<double>(n));
  }
  return pi;
}

int64_t count_retained(const std::vector<SparseDoc>& docs,
                       const std::vector<double>& pi, uint64_t seed) {
  int64_t kept = 0;
  for (const auto& doc : docs) {
    Rng rng(seed, static_cast<uint64_t>(doc.id));
    if (rng.bernoulli(pi[doc.label])) ++kept;
  }
  return kept;
}

std::vector<DyadicPair> double_sample(const PhiContext& ctx,
                                      const std::vector<double>& pi,
                                      const SamplingConfig& config) {
  const auto& docs = *ctx.docs;
  const int32_t K = ctx.profiles->num_classes();
  if (config.kappa < 1 || config.kappa > K - 1)
    throw UsageError("kappa must be in [1, K-1]");
  const int64_t m = static_cast<int64_t>(docs.size());

  // pass 1: retention flags (first draw of each doc's stream)
  std::vector<uint8_t> kept(m, 0);
#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (int64_t i = 0; i < m; ++i) {
    Rng rng(config.seed, static_cast<uint64_t>(docs[i].id));
    kept[i] = rng.bernoulli(pi[docs[i].label]) ? 1 : 0;
  }

  std::vector<int64_t> offset(m + 1, 0);
  for (int64_t i = 0; i < m; ++i)
    offset[i + 1] = offset[i] + (kept[i] ? config.kappa : 0);
  if (offset[m] == 0)
    throw UsageError(
        "double_sample: no documents retained; increase avg_per_class");

  // pass 2: re-derive each doc's stream, skip the retention draw, then
  // draw kappa adversarial classes without replacement
  std::vector<DyadicPair> pairs(offset[m]);
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
  for (int64_t i = 0; i < m; ++i) {
    if (!kept[i]) continue;
    Rng rng(config.seed, static_cast<uint64_t>(docs[i].id));
    rng.bernoulli(pi[docs[i].label]);
    auto slots = sample_distinct(rng, K - 1, config.kappa);
    auto doc_vec = vectorize(docs[i], *ctx.stats);
    for (int32_t j = 0; j < config.kappa; ++j)
      pairs[offset[i] + j] = make_pair(
          docs[i], doc_vec, slot_class(slots[j], docs[i].label), j + 1, ctx);
  }
  return pairs;
}

double empirical_risk_multiclass(const ClassScorer& g,
                                 const std::vector<SparseDoc>& docs,
                                 int32_t num_classes) {
  const int64_t m = static_cast<int64_t>(docs.size());
  if (m == 0 || num_classes < 2)
    throw UsageError("empirical_risk_multiclass: need docs and K >= 2");
  int64_t errors = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : errors) \
    num_threads(worker_count())
  for (int64_t i = 0; i < m; ++i) {
    double true_score = g(docs[i], docs[i].label);
    for (int32_t y = 1; y <= num_classes; ++y) {
      if (y == docs[i].label) continue;
      if (true_score - g(docs[i], y) <= 0) ++errors;
    }
  }
  return static_cast<double>(errors) /
         (static_cast<double>(m) * (num_classes - 1));
}

double empirical_risk_binary(const PairScorer& f,
                             const std::vector<DyadicPair>& pairs) {
  if (pairs.empty()) throw UsageError("empirical_risk_binary: no pairs");
  const int64_t n = static_cast<int64_t>(pairs.size());
  int64_t errors = 0;
#pragma omp parallel for schedule(static) reduction(+ : errors) \
    num_threads(worker_count())
  for (int64_t j = 0; j < n; ++j) {
    double h = f(pairs[j].z_first) - f(pairs[j].z_second);
    if (pairs[j].label * h <= 0) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(n);
}

}  // namespace dsmc

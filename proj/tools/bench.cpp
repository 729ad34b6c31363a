// Compares the OpenMP kernels against their serial references on a
// synthetic corpus and reports speedups. Not part of the test suite.
#include <chrono>
#include <cstdio>
#include <functional>

#include "dsmc/corpus.hpp"
#include "dsmc/parallel.hpp"
#include "dsmc/predictor.hpp"
#include "dsmc/reduction.hpp"
#include "dsmc/synth.hpp"
#include "dsmc/trainer.hpp"

using namespace dsmc;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  SynthConfig cfg;
  cfg.num_classes = 100;
  cfg.num_docs = 20000;
  cfg.vocab_size = 50000;
  cfg.zipf_exponent = 1.0;
  cfg.class_signal = 5;
  cfg.seed = 42;
  auto docs = generate(cfg);

  std::printf("corpus: m=%zu K=%d, workers=%d\n", docs.size(),
              cfg.num_classes, worker_count());

  CorpusStats stats_s, stats_p;
  double t_stats_s = time_ms([&] { stats_s = serial::compute_stats(docs); });
  double t_stats_p = time_ms([&] { stats_p = compute_stats(docs); });
  bool stats_ok = stats_s.term_freq == stats_p.term_freq &&
                  stats_s.doc_freq == stats_p.doc_freq;
  std::printf("compute_stats   serial %8.1f ms  parallel %8.1f ms  (%.2fx) %s\n",
              t_stats_s, t_stats_p, t_stats_s / t_stats_p,
              stats_ok ? "match" : "MISMATCH");

  auto profiles = build_profiles(docs, stats_p);
  std::vector<SparseDoc> subset(docs.begin(), docs.begin() + 2000);
  PhiContext ctx{&subset, &profiles, &stats_p};

  std::vector<DyadicPair> pairs_s, pairs_p;
  double t_tf_s = time_ms([&] { pairs_s = serial::transform_full(ctx); });
  double t_tf_p = time_ms([&] { pairs_p = transform_full(ctx); });
  bool tf_ok = pairs_s.size() == pairs_p.size();
  for (size_t i = 0; tf_ok && i < pairs_s.size(); ++i)
    tf_ok = pairs_s[i].z_first == pairs_p[i].z_first &&
            pairs_s[i].label == pairs_p[i].label;
  std::printf("transform_full  serial %8.1f ms  parallel %8.1f ms  (%.2fx) %s\n",
              t_tf_s, t_tf_p, t_tf_s / t_tf_p, tf_ok ? "match" : "MISMATCH");

  TrainConfig tc;
  tc.epochs = 3;
  auto model = train(pairs_p, tc);
  PredictionConfig pc{10};

  std::vector<int32_t> preds_s, preds_p;
  double t_pr_s = time_ms([&] {
    preds_s = serial::predict_batch(subset, model, profiles, stats_p, pc);
  });
  double t_pr_p = time_ms([&] {
    preds_p = predict_batch(subset, model, profiles, stats_p, pc);
  });
  std::printf("predict_batch   serial %8.1f ms  parallel %8.1f ms  (%.2fx) %s\n",
              t_pr_s, t_pr_p, t_pr_s / t_pr_p,
              preds_s == preds_p ? "match" : "MISMATCH");
  return 0;
}

#include <cmath>
#include <map>

#include "doctest.h"
#include "dsmc/corpus.hpp"
#include "dsmc/errors.hpp"
#include "dsmc/features.hpp"
#include "test_util.hpp"

using namespace dsmc;

namespace {

// Independent recomputation of every feature line from raw counts, using
// maps and naive loops instead of the merge-walk implementation.
FeatureVec phi_oracle(const SparseDoc& x, int32_t y,
                      const std::vector<SparseDoc>& corpus, int32_t K) {
  int m = (int)corpus.size();
  std::map<int32_t, double> F, y_counts;
  std::map<int32_t, int> df;
  for (const auto& d : corpus)
    for (auto [t, c] : d.terms) {
      F[t] += c;
      df[t] += 1;
      if (d.label == y) y_counts[t] += c;
    }
  double l_S = 0;
  for (auto& [t, f] : F) l_S += f;
  auto idf = [&](int32_t t) {
    return df.count(t) ? std::log((double)m / df[t]) : 0.0;
  };
  double size_y = 0;
  for (auto& [t, c] : y_counts) size_y += c;
  std::map<int32_t, double> len_by_class;
  for (const auto& d : corpus)
    for (auto [t, c] : d.terms) len_by_class[d.label] += c;
  double avg_len = 0;
  for (int k = 1; k <= K; ++k) avg_len += len_by_class[k];
  avg_len /= K;

  // unit tf-idf vectors, then the class-mean centroid
  auto unit_vec = [&](const SparseDoc& d) {
    std::map<int32_t, double> v;
    double n2 = 0;
    for (auto [t, c] : d.terms)
      if (idf(t) > 0) {
        v[t] = c * idf(t);
        n2 += v[t] * v[t];
      }
    if (n2 == 0) {
      v.clear();
      for (auto [t, c] : d.terms) {
        v[t] = c;
        n2 += c * c;
      }
    }
    for (auto& [t, w] : v) w /= std::sqrt(n2);
    return v;
  };
  std::map<int32_t, double> centroid;
  int ny = 0;
  for (const auto& d : corpus)
    if (d.label == y) {
      ++ny;
      for (auto [t, w] : unit_vec(d)) centroid[t] += w;
    }
  for (auto& [t, w] : centroid) w /= ny;

  FeatureVec f{};
  for (auto [t, xt] : x.terms) {
    if (!y_counts.count(t) || y_counts[t] <= 0) continue;
    double yt = y_counts[t];
    f[0] += std::log(1 + yt);
    f[1] += std::log(1 + l_S / F[t]);
    f[2] += idf(t);
    f[3] += yt / size_y * idf(t);
    f[4] += std::log(1 + yt / size_y);
    f[5] += std::log(1 + yt / size_y * idf(t));
    f[6] += std::log(1 + yt / size_y * (l_S / F[t]));
    f[7] += 1;
    f[9] += idf(t) * 2 * yt / (yt + (0.25 + 0.75 * size_y / avg_len));
  }
  auto xv = unit_vec(x);
  double d2 = 0;
  std::map<int32_t, double> diff = centroid;
  for (auto [t, w] : xv) diff[t] -= w;
  for (auto [t, w] : diff) d2 += w * w;
  f[8] = std::sqrt(d2);
  return f;
}

}  // namespace

TEST_CASE("phi matches brute-force oracle on random small corpora") {
  Rng rng(77);
  for (int iter = 0; iter < 50; ++iter) {
    int K = 2 + (int)rng.bounded(4);
    int m = K + (int)rng.bounded(12);
    auto docs = dsmc::test::random_docs(rng, m, K, 20);
    auto st = compute_stats(docs);
    auto prof = build_profiles(docs, st);
    for (const auto& doc : docs) {
      int32_t y = 1 + (int)rng.bounded(K);
      auto got = phi(doc, prof.at(y), st, prof.avg_len);
      auto want = phi_oracle(doc, y, docs, K);
      for (int i = 0; i < kNumFeatures; ++i)
        CHECK(std::abs(got[i] - want[i]) <= 1e-12);
    }
  }
}

TEST_CASE("phi with empty intersection") {
  std::vector<SparseDoc> docs(2);
  docs[0] = {0, 1, {{1, 2.0}}};
  docs[1] = {1, 2, {{5, 3.0}}};
  auto st = compute_stats(docs);
  auto prof = build_profiles(docs, st);
  auto f = phi(docs[0], prof.at(2), st, prof.avg_len);
  for (int i = 0; i < 8; ++i) CHECK(f[i] == 0.0);
  CHECK(f[9] == 0.0);
  CHECK(f[8] > 0.0);  // distance to the other class's centroid
}

TEST_CASE("phi distance to own singleton-class centroid is zero") {
  std::vector<SparseDoc> docs(2);
  docs[0] = {0, 1, {{1, 2.0}, {2, 1.0}}};
  docs[1] = {1, 2, {{2, 3.0}, {3, 1.0}}};
  auto st = compute_stats(docs);
  auto prof = build_profiles(docs, st);
  auto f = phi(docs[0], prof.at(1), st, prof.avg_len);
  CHECK(f[8] == 0.0);
}

TEST_CASE("phi invariants") {
  Rng rng(5);
  auto docs = dsmc::test::random_docs(rng, 12, 3, 15);
  auto st = compute_stats(docs);
  auto prof = build_profiles(docs, st);
  for (const auto& doc : docs)
    for (int32_t y = 1; y <= 3; ++y) {
      auto f = phi(doc, prof.at(y), st, prof.avg_len);
      for (double v : f) CHECK(std::isfinite(v));
      for (int i : {0, 1, 2, 3, 4, 5, 6, 7, 9}) CHECK(f[i] >= 0.0);
      CHECK(f[7] == std::floor(f[7]));  // intersection size is integral
      // f4 <= f3 * max_T(y_t/|y|) <= f3
      double max_rel = 0;
      for (const auto& [t, yt] : prof.at(y).y_counts)
        max_rel = std::max(max_rel, yt / prof.at(y).size_terms);
      CHECK(f[3] <= f[2] * max_rel + 1e-12);
      CHECK(f[2] * max_rel <= f[2] + 1e-12);
    }
}

TEST_CASE("phi monotone in added shared term") {
  // growing the intersection never decreases the summation features
  std::vector<SparseDoc> docs(2);
  docs[0] = {0, 1, {{1, 2.0}, {2, 1.0}, {3, 1.0}}};
  docs[1] = {1, 2, {{2, 2.0}, {4, 1.0}}};
  auto st = compute_stats(docs);
  auto prof = build_profiles(docs, st);

  SparseDoc partial = {5, 2, {{2, 1.0}}};
  SparseDoc fuller = {5, 2, {{2, 1.0}, {4, 2.0}}};
  auto fa = phi(partial, prof.at(2), st, prof.avg_len);
  auto fb = phi(fuller, prof.at(2), st, prof.avg_len);
  for (int i : {0, 1, 2, 3, 4, 5, 6, 7, 9}) CHECK(fb[i] >= fa[i]);
}

TEST_CASE("phi errors") {
  std::vector<SparseDoc> docs(2);
  docs[0] = {0, 1, {{1, 2.0}}};
  docs[1] = {1, 2, {{2, 3.0}}};
  auto st = compute_stats(docs);
  auto prof = build_profiles(docs, st);
  ClassProfile missing;  // class_id 0 marks absence
  CHECK_THROWS_AS(phi(docs[0], missing, st, prof.avg_len), UsageError);
  CHECK_THROWS_AS(phi(docs[0], prof.at(1), st, 0.0), UsageError);
}

TEST_CASE("scaler zero-variance and two-point cases") {
  std::vector<FeatureVec> vecs(2);
  vecs[0].fill(3.0);
  vecs[1].fill(3.0);
  vecs[0][0] = 0.0;
  vecs[1][0] = 2.0;
  auto sc = fit_scaler(vecs);
  auto a = sc.apply(vecs[0]);
  auto b = sc.apply(vecs[1]);
  CHECK(a[0] == doctest::Approx(-1.0));
  CHECK(b[0] == doctest::Approx(1.0));
  for (int i = 1; i < kNumFeatures; ++i) {
    CHECK(a[i] == 0.0);  // constant coordinate maps to 0
    CHECK(b[i] == 0.0);
  }
}

TEST_CASE("scaler standardizes the fit set") {
  Rng rng(9);
  std::vector<FeatureVec> vecs(40);
  for (auto& v : vecs)
    for (double& x : v) x = rng.next_double() * 10 - 5;
  auto sc = fit_scaler(vecs);
  FeatureVec mean{};
  for (const auto& v : vecs) {
    auto s = sc.apply(v);
    for (int i = 0; i < kNumFeatures; ++i) mean[i] += s[i];
  }
  for (int i = 0; i < kNumFeatures; ++i)
    CHECK(std::abs(mean[i] / vecs.size()) < 1e-9);
  CHECK_THROWS_AS(fit_scaler({vecs[0]}), UsageError);
}

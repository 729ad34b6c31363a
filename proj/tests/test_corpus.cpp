#include <cmath>

#include "doctest.h"
#include "dsmc/corpus.hpp"
#include "dsmc/errors.hpp"
#include "test_util.hpp"

using namespace dsmc;
using dsmc::test::TempDir;

TEST_CASE("load_corpus parses libsvm lines") {
  TempDir td;
  auto path = td.write("train.txt", "2 1:3 7:1\n1 5:2 5:3\n");
  auto res = load_corpus(path);
  REQUIRE(res.docs.size() == 2);
  CHECK(res.docs[0].label == 2);
  CHECK(res.docs[0].terms == std::vector<TermEntry>{{1, 3.0}, {7, 1.0}});
  // duplicate term ids are summed
  CHECK(res.docs[1].terms == std::vector<TermEntry>{{5, 5.0}});
  CHECK(res.num_classes == 2);
  CHECK(res.vocab_size == 8);
}

TEST_CASE("load_corpus handles comments and blank lines") {
  TempDir td;
  auto path = td.write("train.txt",
                       "# header comment\n\n1 0:1 2:2 # trailing\n\n2 1:1\n");
  auto res = load_corpus(path);
  CHECK(res.docs.size() == 2);
  CHECK(res.docs[0].terms.size() == 2);
}

TEST_CASE("load_corpus error paths") {
  TempDir td;
  CHECK_THROWS_AS(load_corpus(td.file("missing.txt")), IoError);
  CHECK_THROWS_AS(load_corpus(td.write("empty.txt", "")), ParseError);
  CHECK_THROWS_AS(load_corpus(td.write("bad1.txt", "1 junk\n")), ParseError);
  CHECK_THROWS_AS(load_corpus(td.write("bad2.txt", "0 1:1\n")), ParseError);
  CHECK_THROWS_AS(load_corpus(td.write("bad3.txt", "1 3:0\n")), ParseError);
  // line number in message
  try {
    load_corpus(td.write("bad4.txt", "1 1:1\n2 x\n"));
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
}

TEST_CASE("load_corpus four-doc toy") {
  TempDir td;
  auto path = td.write("toy.txt", "1 0:1\n2 1:1\n3 2:1\n4 3:1\n");
  auto res = load_corpus(path);
  CHECK(res.num_classes == 4);
  CHECK(res.docs.size() == 4);
}

TEST_CASE("compute_stats hand-enumerated oracle") {
  std::vector<SparseDoc> docs(2);
  docs[0] = {0, 1, {{1, 2.0}}};
  docs[1] = {1, 2, {{1, 1.0}, {2, 1.0}}};
  auto st = compute_stats(docs);
  CHECK(st.m == 2);
  CHECK(st.freq(1) == 3.0);
  CHECK(st.freq(2) == 1.0);
  CHECK(st.total_terms == 4.0);
  CHECK(st.doc_freq[1] == 2);
  CHECK(st.doc_freq[2] == 1);
  CHECK(st.inv_doc_freq(1) == 0.0);  // ln(2/2)
  CHECK(st.inv_doc_freq(2) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("compute_stats single doc and absent terms") {
  std::vector<SparseDoc> docs(1);
  docs[0] = {0, 1, {{1, 1.0}}};
  auto st = compute_stats(docs);
  CHECK(st.inv_doc_freq(1) == 0.0);
  CHECK(st.freq(99) == 0.0);
  CHECK(st.inv_doc_freq(99) == 0.0);
}

TEST_CASE("build_profiles additivity and centroid") {
  std::vector<SparseDoc> docs(3);
  docs[0] = {0, 1, {{1, 1.0}, {3, 2.0}}};
  docs[1] = {1, 1, {{1, 3.0}}};
  docs[2] = {2, 2, {{2, 4.0}}};
  auto st = compute_stats(docs);
  auto prof = build_profiles(docs, st);
  const auto& c1 = prof.at(1);
  CHECK(c1.n_docs == 2);
  CHECK(c1.size_terms == 6.0);
  CHECK(c1.len_y == 6.0);
  auto it = std::find_if(c1.y_counts.begin(), c1.y_counts.end(),
                         [](const TermEntry& e) { return e.first == 1; });
  REQUIRE(it != c1.y_counts.end());
  CHECK(it->second == 4.0);
  CHECK(prof.at(2).n_docs == 1);
  CHECK(c1.n_docs + prof.at(2).n_docs == 3);
  CHECK(c1.centroid_norm2 > 0);
  CHECK(prof.avg_len == doctest::Approx((6.0 + 4.0) / 2));
}

TEST_CASE("build_profiles centroid of identical docs equals either vector") {
  std::vector<SparseDoc> docs(3);
  docs[0] = {0, 1, {{1, 2.0}, {2, 1.0}}};
  docs[1] = {1, 1, {{1, 2.0}, {2, 1.0}}};
  docs[2] = {2, 2, {{3, 1.0}}};
  auto st = compute_stats(docs);
  auto prof = build_profiles(docs, st);
  auto v = vectorize(docs[0], st);
  REQUIRE(prof.at(1).centroid.size() == v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    CHECK(prof.at(1).centroid[i].first == v[i].first);
    CHECK(prof.at(1).centroid[i].second == doctest::Approx(v[i].second));
  }
}

TEST_CASE("build_profiles reports missing classes") {
  std::vector<SparseDoc> docs(1);
  docs[0] = {0, 3, {{1, 1.0}}};  // classes 1 and 2 empty
  auto st = compute_stats(docs);
  try {
    build_profiles(docs, st);
    FAIL("expected throw");
  } catch (const UsageError& e) {
    std::string msg = e.what();
    CHECK(msg.find("1,2") != std::string::npos);
  }
}

TEST_CASE("corpus invariants on random instances") {
  Rng rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    int K = 2 + (int)rng.bounded(5);
    int m = K + (int)rng.bounded(30);
    auto docs = dsmc::test::random_docs(rng, m, K);
    auto st = compute_stats(docs);
    auto prof = build_profiles(docs, st);

    int64_t total_docs = 0;
    double total_len = 0;
    std::vector<double> term_sums(st.vocab_size, 0.0);
    for (int k = 1; k <= K; ++k) {
      total_docs += prof.at(k).n_docs;
      total_len += prof.at(k).len_y;
      for (const auto& [t, c] : prof.at(k).y_counts) term_sums[t] += c;
    }
    CHECK(total_docs == m);
    CHECK(total_len == st.total_terms);  // exact for integer counts
    for (int32_t t = 0; t < st.vocab_size; ++t)
      CHECK(term_sums[t] == st.term_freq[t]);
    // I_t = 0 iff term in every doc
    for (int32_t t = 0; t < st.vocab_size; ++t)
      CHECK((st.idf[t] == 0.0) == (st.doc_freq[t] == st.m ||
                                   st.doc_freq[t] == 0));
  }
}

TEST_CASE("ingestion is deterministic") {
  TempDir td;
  Rng rng(3);
  auto docs = dsmc::test::random_docs(rng, 25, 4);
  save_corpus(docs, td.file("c.txt"));
  auto a = load_corpus(td.file("c.txt"));
  auto b = load_corpus(td.file("c.txt"));
  REQUIRE(a.docs.size() == b.docs.size());
  for (size_t i = 0; i < a.docs.size(); ++i) {
    CHECK(a.docs[i].label == b.docs[i].label);
    CHECK(a.docs[i].terms == b.docs[i].terms);
    CHECK(a.docs[i].terms == docs[i].terms);  // round-trip
  }
}

#include "dsmc/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "dsmc/errors.hpp"
#include "dsmc/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dsmc {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line_no,
                             const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

CorpusLoadResult load_corpus(const std::string& path, bool allow_zero_label,
                             bool allow_empty) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  CorpusLoadResult out;
  std::string line;
  int line_no = 0;
  int32_t max_term = -1;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);

    const char* p = line.c_str();
    while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
    if (*p == '\0') continue;

    char* end = nullptr;
    long label = std::strtol(p, &end, 10);
    if (end == p) parse_fail(path, line_no, "expected integer label");
    if (label < (allow_zero_label ? 0 : 1))
      parse_fail(path, line_no, "label must be >= 1, got " +
                                    std::to_string(label));
    p = end;

    SparseDoc doc;
    doc.id = static_cast<int32_t>(out.docs.size());
    doc.label = static_cast<int32_t>(label);

    for (;;) {
      while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
      if (*p == '\0') break;
      long tid = std::strtol(p, &end, 10);
      if (end == p || *end != ':')
        parse_fail(path, line_no, "expected term:value pair");
      if (tid < 0) parse_fail(path, line_no, "negative term id");
      p = end + 1;
      double val = std::strtod(p, &end);
      if (end == p) parse_fail(path, line_no, "expected numeric value");
      if (!(val > 0)) parse_fail(path, line_no, "term count must be > 0");
      p = end;
      doc.terms.emplace_back(static_cast<int32_t>(tid), val);
    }

    std::sort(doc.terms.begin(), doc.terms.end());
    // merge duplicate term ids
    size_t w = 0;
    for (size_t r = 0; r < doc.terms.size(); ++r) {
      if (w > 0 && doc.terms[w - 1].first == doc.terms[r].first)
        doc.terms[w - 1].second += doc.terms[r].second;
      else
        doc.terms[w++] = doc.terms[r];
    }
    doc.terms.resize(w);
    if (!doc.terms.empty()) max_term = std::max(max_term, doc.terms.back().first);

    out.num_classes = std::max(out.num_classes, doc.label);
    out.docs.push_back(std::move(doc));
  }

  if (out.docs.empty() && !allow_empty)
    throw ParseError(path + ": no documents");
  out.vocab_size = max_term + 1;
  return out;
}

void save_corpus(const std::vector<SparseDoc>& docs, const std::string& path) {
  std::ofstream outf(path);
  if (!outf) throw IoError("cannot write " + path);
  outf.precision(17);
  for (const auto& doc : docs) {
    outf << doc.label;
    for (const auto& [t, c] : doc.terms) {
      outf << ' ' << t << ':';
      if (c == std::floor(c) && std::abs(c) < 1e15)
        outf << static_cast<long long>(c);
      else
        outf << c;
    }
    outf << '\n';
  }
  if (!outf) throw IoError("write failed: " + path);
}

namespace serial {

CorpusStats compute_stats(const std::vector<SparseDoc>& docs) {
  if (docs.empty()) throw UsageError("compute_stats: empty corpus");
  CorpusStats st;
  st.m = static_cast<int64_t>(docs.size());
  int32_t d = 0;
  for (const auto& doc : docs) {
    st.num_classes = std::max(st.num_classes, doc.label);
    if (!doc.terms.empty()) d = std::max(d, doc.terms.back().first + 1);
  }
  st.vocab_size = d;
  st.term_freq.assign(d, 0.0);
  st.doc_freq.assign(d, 0);
  for (const auto& doc : docs) {
    for (const auto& [t, c] : doc.terms) {
      st.term_freq[t] += c;
      st.doc_freq[t] += 1;
    }
  }
  st.total_terms = 0;
  for (double f : st.term_freq) st.total_terms += f;
  st.idf.assign(d, 0.0);
  for (int32_t t = 0; t < d; ++t)
    if (st.doc_freq[t] > 0)
      st.idf[t] = std::log(static_cast<double>(st.m) / st.doc_freq[t]);
  return st;
}

}  // namespace serial

CorpusStats compute_stats(const std::vector<SparseDoc>& docs) {
#ifndef _OPENMP
  return serial::compute_stats(docs);
#else
  if (docs.empty()) throw UsageError("compute_stats: empty corpus");
  int threads = worker_count();
  if (threads <= 1 || docs.size() < 256) return serial::compute_stats(docs);

  CorpusStats st;
  st.m = static_cast<int64_t>(docs.size());
  int32_t d = 0;
  int32_t k = 0;
  const int64_t n = st.m;
#pragma omp parallel for num_threads(threads) reduction(max : d, k)
  for (int64_t i = 0; i < n; ++i) {
    k = std::max(k, docs[i].label);
    if (!docs[i].terms.empty())
      d = std::max(d, docs[i].terms.back().first + 1);
  }
  st.num_classes = k;
  st.vocab_size = d;
  st.term_freq.assign(d, 0.0);
  st.doc_freq.assign(d, 0);

  std::vector<std::vector<double>> part_f(threads);
  std::vector<std::vector<int32_t>> part_df(threads);
#pragma omp parallel num_threads(threads)
  {
    int tid = omp_get_thread_num();
    auto& f = part_f[tid];
    auto& df = part_df[tid];
    f.assign(d, 0.0);
    df.assign(d, 0);
#pragma omp for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
      for (const auto& [t, c] : docs[i].terms) {
        f[t] += c;
        df[t] += 1;
      }
    }
  }
  // fixed merge order keeps results deterministic for a given thread count
  for (int tid = 0; tid < threads; ++tid) {
    for (int32_t t = 0; t < d; ++t) {
      st.term_freq[t] += part_f[tid][t];
      st.doc_freq[t] += part_df[tid][t];
    }
  }
  st.total_terms = 0;
  for (double f : st.term_freq) st.total_terms += f;
  st.idf.assign(d, 0.0);
  for (int32_t t = 0; t < d; ++t)
    if (st.doc_freq[t] > 0)
      st.idf[t] = std::log(static_cast<double>(st.m) / st.doc_freq[t]);
  return st;
#endif
}

std::vector<TermEntry> vectorize(const SparseDoc& doc,
                                 const CorpusStats& stats) {
  std::vector<TermEntry> vec;
  vec.reserve(doc.terms.size());
  double norm2 = 0;
  for (const auto& [t, c] : doc.terms) {
    double w = c * stats.inv_doc_freq(t);
    if (w > 0) {
      vec.emplace_back(t, w);
      norm2 += w * w;
    }
  }
  if (norm2 == 0) {
    // all terms idf-zero (each appears in every doc): keep raw counts so
    // the document still has a direction
    vec.clear();
    for (const auto& [t, c] : doc.terms) {
      vec.emplace_back(t, c);
      norm2 += c * c;
    }
  }
  if (norm2 > 0) {
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& [t, w] : vec) w *= inv;
  }
  return vec;
}

double distance_to_centroid(const std::vector<TermEntry>& vec,
                            const ClassProfile& profile) {
  double v2 = 0, dot = 0;
  const auto& c = profile.centroid;
  for (const auto& [t, w] : vec) {
    v2 += w * w;
    auto it = std::lower_bound(c.begin(), c.end(), t,
                               [](const TermEntry& e, int32_t key) {
                                 return e.first < key;
                               });
    if (it != c.end() && it->first == t) dot += w * it->second;
  }
  double d2 = v2 + profile.centroid_norm2 - 2.0 * dot;
  return d2 > 0 ? std::sqrt(d2) : 0.0;
}

ProfileSet build_profiles(const std::vector<SparseDoc>& docs,
                          const CorpusStats& stats) {
  const int32_t K = stats.num_classes;
  ProfileSet out;
  out.by_class.resize(K + 1);

  std::vector<std::unordered_map<int32_t, double>> counts(K + 1);
  std::vector<std::unordered_map<int32_t, double>> cent(K + 1);
  for (const auto& doc : docs) {
    auto& profile = out.by_class[doc.label];
    profile.class_id = doc.label;
    profile.n_docs += 1;
    auto& cm = counts[doc.label];
    for (const auto& [t, c] : doc.terms) cm[t] += c;
    for (const auto& [t, w] : vectorize(doc, stats)) cent[doc.label][t] += w;
  }

  std::string missing;
  for (int32_t k = 1; k <= K; ++k) {
    if (out.by_class[k].n_docs == 0) {
      if (!missing.empty()) missing += ",";
      missing += std::to_string(k);
    }
  }
  if (!missing.empty())
    throw UsageError("classes with no training documents: " + missing);

  double len_sum = 0;
  for (int32_t k = 1; k <= K; ++k) {
    auto& profile = out.by_class[k];
    profile.y_counts.assign(counts[k].begin(), counts[k].end());
    std::sort(profile.y_counts.begin(), profile.y_counts.end());
    profile.size_terms = 0;
    for (const auto& [t, c] : profile.y_counts) profile.size_terms += c;
    profile.len_y = profile.size_terms;
    len_sum += profile.len_y;

    double inv_n = 1.0 / static_cast<double>(profile.n_docs);
    profile.centroid.reserve(cent[k].size());
    for (const auto& [t, w] : cent[k]) profile.centroid.emplace_back(t, w * inv_n);
    std::sort(profile.centroid.begin(), profile.centroid.end());
    profile.centroid_norm2 = 0;
    for (const auto& [t, w] : profile.centroid)
      profile.centroid_norm2 += w * w;
  }
  out.avg_len = len_sum / K;
  return out;
}

}  // namespace dsmc

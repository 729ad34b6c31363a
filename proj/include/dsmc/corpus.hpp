#ifndef DSMC_CORPUS_HPP
#define DSMC_CORPUS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dsmc {

using TermEntry = std::pair<int32_t, double>;  // (term_id, count/weight)

// One labeled document: sorted sparse term-frequency vector.
struct SparseDoc {
  int32_t id = 0;
  int32_t label = 0;  // class id in [1..K]
  std::vector<TermEntry> terms;  // strictly increasing term_ids, counts > 0

  double total_count() const {
    double s = 0;
    for (const auto& [t, c] : terms) s += c;
    return s;
  }
};

// Corpus-level term statistics.
struct CorpusStats {
  int64_t m = 0;          // number of training docs
  int32_t num_classes = 0;
  int32_t vocab_size = 0;  // max term_id + 1
  double total_terms = 0;  // l_S = sum of all counts
  std::vector<double> term_freq;  // F_t, indexed by term id, 0 if absent
  std::vector<int32_t> doc_freq;  // df_t
  std::vector<double> idf;        // I_t = ln(m / df_t), 0 if absent

  double freq(int32_t t) const {
    return t >= 0 && t < (int32_t)term_freq.size() ? term_freq[t] : 0.0;
  }
  double inv_doc_freq(int32_t t) const {
    return t >= 0 && t < (int32_t)idf.size() ? idf[t] : 0.0;
  }
};

// Per-class mega-document statistics plus centroid.
struct ClassProfile {
  int32_t class_id = 0;
  std::vector<TermEntry> y_counts;  // sorted term-wise sums over members
  double size_terms = 0;            // |y| = sum of y_t
  double len_y = 0;                 // mega-document length; equals size_terms
                                    // under the term-count definition
  int64_t n_docs = 0;               // 0 when loaded from a model bundle
  std::vector<TermEntry> centroid;  // mean of member tf-idf unit vectors
  double centroid_norm2 = 0;
};

struct CorpusLoadResult {
  std::vector<SparseDoc> docs;
  int32_t num_classes = 0;
  int32_t vocab_size = 0;
};

struct ProfileSet {
  std::vector<ClassProfile> by_class;  // index 0 unused; [1..K]
  double avg_len = 0;                  // (1/K) sum_k len(y_k)

  const ClassProfile& at(int32_t c) const { return by_class.at(c); }
  int32_t num_classes() const {
    return static_cast<int32_t>(by_class.size()) - 1;
  }
};

// LibSVM multi-class format: `<label> <tid>:<val> ...`, '#' starts a
// comment, blank lines ignored. Duplicate term ids within a line are summed.
// allow_zero_label admits unlabeled test lines written as label 0.
CorpusLoadResult load_corpus(const std::string& path,
                             bool allow_zero_label = false,
                             bool allow_empty = false);

void save_corpus(const std::vector<SparseDoc>& docs, const std::string& path);

CorpusStats compute_stats(const std::vector<SparseDoc>& docs);

ProfileSet build_profiles(const std::vector<SparseDoc>& docs,
                          const CorpusStats& stats);

// tf-idf weights x_t * I_t, L2-normalized. Falls back to normalized raw
// counts when every term has zero idf, so document vectors stay nonzero.
std::vector<TermEntry> vectorize(const SparseDoc& doc, const CorpusStats& stats);

// Euclidean distance between a sparse unit vector and a centroid.
double distance_to_centroid(const std::vector<TermEntry>& vec,
                            const ClassProfile& profile);

namespace serial {
CorpusStats compute_stats(const std::vector<SparseDoc>& docs);
}

}  // namespace dsmc

#endif  // DSMC_CORPUS_HPP

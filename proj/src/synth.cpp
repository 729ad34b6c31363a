#include "dsmc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dsmc/errors.hpp"
#include "dsmc/rng.hpp"

namespace dsmc {

std::vector<int64_t> zipf_class_sizes(int32_t num_classes, int64_t num_docs,
                                      double exponent) {
  if (num_docs < num_classes)
    throw UsageError("synth: need at least one doc per class");
  std::vector<double> raw(num_classes);
  double z = 0;
  for (int32_t k = 0; k < num_classes; ++k) {
    raw[k] = std::pow(static_cast<double>(k + 1), -exponent);
    z += raw[k];
  }
  std::vector<int64_t> sizes(num_classes);
  std::vector<std::pair<double, int32_t>> frac(num_classes);
  int64_t assigned = 0;
  for (int32_t k = 0; k < num_classes; ++k) {
    double share = raw[k] / z * static_cast<double>(num_docs);
    sizes[k] = std::max<int64_t>(1, static_cast<int64_t>(share));
    frac[k] = {share - std::floor(share), k};
    assigned += sizes[k];
  }
  // largest-remainder distribution of the leftover, never dropping a class
  // below 1
  std::sort(frac.rbegin(), frac.rend());
  size_t idx = 0;
  while (assigned < num_docs) {
    sizes[frac[idx % frac.size()].second] += 1;
    ++assigned;
    ++idx;
  }
  while (assigned > num_docs) {
    auto it = std::max_element(sizes.begin(), sizes.end());
    if (*it <= 1) throw UsageError("synth: cannot satisfy size constraints");
    *it -= 1;
    --assigned;
  }
  return sizes;
}

std::vector<SparseDoc> generate(const SynthConfig& config) {
  if (config.num_classes < 2) throw UsageError("synth: need K >= 2");
  if (config.class_signal < 0) throw UsageError("synth: negative signal");
  const int32_t signal_base = config.num_classes * config.class_signal;
  if (config.vocab_size <= signal_base)
    throw UsageError("synth: vocab too small for signal terms");
  if (config.terms_min < 0 || config.terms_max < config.terms_min)
    throw UsageError("synth: bad terms_per_doc range");
  if (config.class_signal == 0 && config.terms_min < 1)
    throw UsageError("synth: documents would be empty");

  auto sizes = zipf_class_sizes(config.num_classes, config.num_docs,
                                config.zipf_exponent);
  const int32_t bg_size = config.vocab_size - signal_base;

  std::vector<SparseDoc> docs;
  docs.reserve(config.num_docs);
  int64_t serial = 0;
  for (int32_t k = 1; k <= config.num_classes; ++k) {
    for (int64_t i = 0; i < sizes[k - 1]; ++i, ++serial) {
      Rng rng(config.seed, 0x646f63ULL * 1000003 + serial);
      std::vector<TermEntry> terms;
      for (int32_t s = 0; s < config.class_signal; ++s)
        terms.emplace_back((k - 1) * config.class_signal + s,
                           1.0 + rng.bounded(3));
      int32_t n_noise =
          config.terms_min +
          static_cast<int32_t>(rng.bounded(
              static_cast<uint32_t>(config.terms_max - config.terms_min + 1)));
      for (int32_t s = 0; s < n_noise; ++s) {
        double u = rng.next_double();
        int32_t t = signal_base +
                    static_cast<int32_t>(u * u * u * bg_size);  // head-heavy
        terms.emplace_back(std::min(t, config.vocab_size - 1), 1.0);
      }
      std::sort(terms.begin(), terms.end());
      size_t w = 0;
      for (size_t r = 0; r < terms.size(); ++r) {
        if (w > 0 && terms[w - 1].first == terms[r].first)
          terms[w - 1].second += terms[r].second;
        else
          terms[w++] = terms[r];
      }
      terms.resize(w);
      SparseDoc doc;
      doc.label = k;
      doc.terms = std::move(terms);
      docs.push_back(std::move(doc));
    }
  }

  // shuffle so class blocks are interleaved, then number in final order
  Rng order_rng(config.seed, 0x736875666cULL);
  order_rng.shuffle(docs);
  for (size_t i = 0; i < docs.size(); ++i)
    docs[i].id = static_cast<int32_t>(i);
  return docs;
}

}  // namespace dsmc

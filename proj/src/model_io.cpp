#include "dsmc/model_io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "dsmc/errors.hpp"

namespace dsmc {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("missing bundle file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> read_meta(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

const std::string& meta_get(const std::map<std::string, std::string>& kv,
                            const std::string& key, const std::string& path) {
  auto it = kv.find(key);
  if (it == kv.end()) throw IoError(path + ": missing key " + key);
  return it->second;
}

FeatureVec parse_vec(const std::string& text, const std::string& what) {
  FeatureVec v{};
  std::istringstream ss(text);
  for (int i = 0; i < kNumFeatures; ++i)
    if (!(ss >> v[i])) throw IoError("bad " + what + " in model bundle");
  return v;
}

// `class term:value ...` lines, one per class
void write_sparse_lines(
    std::ostringstream& out, const ProfileSet& profiles,
    const std::vector<TermEntry> ClassProfile::* field) {
  for (int32_t k = 1; k <= profiles.num_classes(); ++k) {
    out << k;
    for (const auto& [t, v] : profiles.at(k).*field)
      out << ' ' << t << ':' << fmt(v);
    out << '\n';
  }
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp);
    out << content;
    if (!out) throw IoError("write failed: " + tmp);
  }
  fs::rename(tmp, path);
}

void save_bundle(const std::string& dir, const LinearModel& model,
                 const ProfileSet& profiles, const CorpusStats& stats) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());

  {
    std::ostringstream meta;
    meta << "format=dsmc/1\n"
         << "loss=" << loss_name(model.loss) << '\n'
         << "lambda=" << fmt(model.lambda) << '\n'
         << "epochs=" << model.epochs << '\n'
         << "seed=" << model.seed << '\n'
         << "scaled=" << (model.scaler ? 1 : 0) << '\n';
    if (model.scaler) {
      meta << "scaler_mean=";
      for (int i = 0; i < kNumFeatures; ++i)
        meta << (i ? " " : "") << fmt(model.scaler->mean[i]);
      meta << "\nscaler_inv_std=";
      for (int i = 0; i < kNumFeatures; ++i)
        meta << (i ? " " : "") << fmt(model.scaler->inv_std[i]);
      meta << '\n';
    }
    write_file_atomic(dir + "/model.meta", meta.str());
  }
  {
    std::ostringstream w;
    for (int i = 0; i < kNumFeatures; ++i) w << fmt(model.weights[i]) << '\n';
    write_file_atomic(dir + "/weights.txt", w.str());
  }
  {
    std::ostringstream meta;
    meta << "m=" << stats.m << '\n'
         << "K=" << stats.num_classes << '\n'
         << "l_S=" << fmt(stats.total_terms) << '\n'
         << "avg_len=" << fmt(profiles.avg_len) << '\n';
    write_file_atomic(dir + "/corpus.meta", meta.str());
  }
  {
    std::ostringstream out;
    write_sparse_lines(out, profiles, &ClassProfile::y_counts);
    write_file_atomic(dir + "/class_stats.txt", out.str());
  }
  {
    std::ostringstream out;
    write_sparse_lines(out, profiles, &ClassProfile::centroid);
    write_file_atomic(dir + "/centroids.txt", out.str());
  }
  {
    std::ostringstream out;
    for (int32_t t = 0; t < stats.vocab_size; ++t)
      if (stats.term_freq[t] > 0)
        out << t << ' ' << fmt(stats.idf[t]) << '\n';
    write_file_atomic(dir + "/idf.txt", out.str());
  }
}

ModelBundle load_bundle(const std::string& dir) {
  ModelBundle b;

  auto meta = read_meta(dir + "/model.meta");
  const std::string mpath = dir + "/model.meta";
  if (meta_get(meta, "format", mpath) != "dsmc/1")
    throw IoError(mpath + ": unsupported format");
  b.model.loss = loss_from_name(meta_get(meta, "loss", mpath));
  b.model.lambda = std::stod(meta_get(meta, "lambda", mpath));
  b.model.epochs = std::stoi(meta_get(meta, "epochs", mpath));
  b.model.seed = std::stoull(meta_get(meta, "seed", mpath));
  if (meta_get(meta, "scaled", mpath) == "1") {
    FeatureScaler sc;
    sc.mean = parse_vec(meta_get(meta, "scaler_mean", mpath), "scaler_mean");
    sc.inv_std =
        parse_vec(meta_get(meta, "scaler_inv_std", mpath), "scaler_inv_std");
    b.model.scaler = sc;
  }

  {
    std::istringstream in(read_file(dir + "/weights.txt"));
    for (int i = 0; i < kNumFeatures; ++i)
      if (!(in >> b.model.weights[i]))
        throw IoError(dir + "/weights.txt: expected 10 weights");
  }

  auto cmeta = read_meta(dir + "/corpus.meta");
  const std::string cpath = dir + "/corpus.meta";
  b.stats.m = std::stoll(meta_get(cmeta, "m", cpath));
  b.stats.num_classes = std::stoi(meta_get(cmeta, "K", cpath));
  b.stats.total_terms = std::stod(meta_get(cmeta, "l_S", cpath));
  b.profiles.avg_len = std::stod(meta_get(cmeta, "avg_len", cpath));

  const int32_t K = b.stats.num_classes;
  b.profiles.by_class.resize(K + 1);

  auto load_sparse = [&](const std::string& file,
                         std::vector<TermEntry> ClassProfile::* field) {
    std::istringstream in(read_file(dir + "/" + file));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      int32_t k;
      if (!(ls >> k) || k < 1 || k > K)
        throw IoError(dir + "/" + file + ": bad class id");
      std::string tok;
      auto& vec = b.profiles.by_class[k].*field;
      while (ls >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
          throw IoError(dir + "/" + file + ": bad entry " + tok);
        vec.emplace_back(std::stoi(tok.substr(0, colon)),
                         std::stod(tok.substr(colon + 1)));
      }
      b.profiles.by_class[k].class_id = k;
    }
  };
  load_sparse("class_stats.txt", &ClassProfile::y_counts);
  load_sparse("centroids.txt", &ClassProfile::centroid);

  int32_t max_term = -1;
  for (int32_t k = 1; k <= K; ++k) {
    auto& p = b.profiles.by_class[k];
    if (p.class_id == 0)
      throw IoError(dir + ": class " + std::to_string(k) +
                    " missing from class_stats.txt");
    p.size_terms = 0;
    for (const auto& [t, c] : p.y_counts) {
      p.size_terms += c;
      max_term = std::max(max_term, t);
    }
    p.len_y = p.size_terms;
    p.centroid_norm2 = 0;
    for (const auto& [t, w] : p.centroid) p.centroid_norm2 += w * w;
  }

  {
    std::istringstream in(read_file(dir + "/idf.txt"));
    std::vector<TermEntry> idf_entries;
    int32_t t;
    double v;
    while (in >> t >> v) {
      idf_entries.emplace_back(t, v);
      max_term = std::max(max_term, t);
    }
    b.stats.vocab_size = max_term + 1;
    b.stats.idf.assign(b.stats.vocab_size, 0.0);
    for (const auto& [tt, vv] : idf_entries) b.stats.idf[tt] = vv;
  }

  // F_t is the term-wise sum of the class mega-documents
  b.stats.term_freq.assign(b.stats.vocab_size, 0.0);
  for (int32_t k = 1; k <= K; ++k)
    for (const auto& [t, c] : b.profiles.by_class[k].y_counts)
      b.stats.term_freq[t] += c;

  return b;
}

}  // namespace dsmc

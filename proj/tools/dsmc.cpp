#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsmc/corpus.hpp"
#include "dsmc/depgraph.hpp"
#include "dsmc/errors.hpp"
#include "dsmc/evaluation.hpp"
#include "dsmc/features.hpp"
#include "dsmc/model_io.hpp"
#include "dsmc/predictor.hpp"
#include "dsmc/reduction.hpp"
#include "dsmc/synth.hpp"
#include "dsmc/trainer.hpp"

namespace {

using namespace dsmc;

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// truth files may be plain labels or libsvm lines; take the leading label
std::vector<int32_t> read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<int32_t> labels;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ss(line);
    int32_t v;
    if (ss >> v) labels.push_back(v);
  }
  return labels;
}

struct TrainArgs {
  std::string train_file, model_dir;
  int32_t kappa = 1;
  double avg_per_class = 1.0;
  std::string loss = "hinge";
  double lambda = 1e-4;
  double lr = 0.1;
  int epochs = 10;
  uint64_t seed = 0;
  bool no_scale = false;
};

int cmd_train(const TrainArgs& a) {
  auto corpus = load_corpus(a.train_file);
  auto stats = compute_stats(corpus.docs);
  auto profiles = build_profiles(corpus.docs, stats);
  auto pi = compute_pi(profiles, a.avg_per_class);

  PhiContext ctx{&corpus.docs, &profiles, &stats};
  SamplingConfig sc{a.avg_per_class, a.kappa, a.seed};
  auto pairs = double_sample(ctx, pi, sc);
  int64_t retained = static_cast<int64_t>(pairs.size()) / a.kappa;

  TrainConfig tc;
  tc.loss = loss_from_name(a.loss);
  tc.lambda = a.lambda;
  tc.lr0 = a.lr;
  tc.epochs = a.epochs;
  tc.seed = a.seed;
  tc.scale = !a.no_scale;
  auto model = train(pairs, tc);

  double risk = empirical_risk_binary(
      [&](const FeatureVec& v) { return model.score(v); }, pairs);

  save_bundle(a.model_dir, model, profiles, stats);

  std::ostringstream log;
  log << "command=train\n"
      << "train_file=" << a.train_file << '\n'
      << "kappa=" << a.kappa << '\n'
      << "avg_per_class=" << a.avg_per_class << '\n'
      << "loss=" << a.loss << '\n'
      << "lambda=" << a.lambda << '\n'
      << "lr=" << a.lr << '\n'
      << "epochs=" << a.epochs << '\n'
      << "seed=" << a.seed << '\n'
      << "scale=" << (tc.scale ? 1 : 0) << '\n'
      << "retained=" << retained << '\n'
      << "pairs=" << pairs.size() << '\n'
      << "final_binary_risk=" << fmt12(risk) << '\n';
  write_file_atomic(a.model_dir + "/run.log", log.str());

  std::cout << "trained on " << pairs.size() << " pairs from " << retained
            << " retained docs; binary risk " << fmt12(risk) << "\n";
  return 0;
}

int cmd_predict(const std::string& model_dir, const std::string& test_file,
                const std::string& out_file, int32_t q) {
  auto bundle = load_bundle(model_dir);
  auto corpus = load_corpus(test_file, /*allow_zero_label=*/true,
                            /*allow_empty=*/true);
  const int32_t K = bundle.stats.num_classes;
  if (q > K) {
    std::cerr << "warning: q=" << q << " clamped to K=" << K << "\n";
    q = K;
  }
  PredictionConfig pc{q};
  auto preds = predict_batch(corpus.docs, bundle.model, bundle.profiles,
                             bundle.stats, pc);
  std::ostringstream out;
  for (int32_t p : preds) out << p << '\n';
  write_file_atomic(out_file, out.str());
  return 0;
}

int cmd_evaluate(const std::string& truth_file, const std::string& pred_file,
                 double avg_per_class, bool json) {
  auto truth = read_labels(truth_file);
  auto pred = read_labels(pred_file);
  if (truth.size() != pred.size())
    throw UsageError("truth and prediction files differ in length (" +
                     std::to_string(truth.size()) + " vs " +
                     std::to_string(pred.size()) + ")");
  int32_t K = 0;
  for (int32_t t : truth) K = std::max(K, t);
  for (int32_t p : pred) K = std::max(K, p);
  auto rep = evaluate(truth, pred, K);

  // alpha/beta from the truth class proportions and the pi a training run
  // with this avg_per_class would use
  std::vector<int64_t> counts(K + 1, 0);
  for (int32_t t : truth) ++counts[t];
  double alpha = 0, beta = 0;
  for (int32_t k = 1; k <= K; ++k) {
    if (counts[k] == 0) continue;
    double eta = static_cast<double>(counts[k]) / truth.size();
    double pi = std::min(1.0, avg_per_class / counts[k]);
    alpha = std::max(alpha, eta / pi);
    beta = std::max(beta, 1.0 / pi);
  }

  if (json) {
    nlohmann::json j;
    j["accuracy"] = rep.accuracy;
    j["maf1"] = rep.maf1;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["macro_precision"] = rep.macro_precision;
    j["macro_recall"] = rep.macro_recall;
    auto& pc = j["per_class"] = nlohmann::json::array();
    for (int32_t k = 1; k <= K; ++k) {
      const auto& cm = rep.per_class[k];
      pc.push_back({{"class", k},
                    {"precision", cm.precision},
                    {"recall", cm.recall},
                    {"f1", cm.f1},
                    {"support", cm.support}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "accuracy=" << fmt12(rep.accuracy)
              << " maf1=" << fmt12(rep.maf1) << " alpha=" << fmt12(alpha)
              << " beta=" << fmt12(beta) << "\n";
    for (int32_t k = 1; k <= K; ++k) {
      const auto& cm = rep.per_class[k];
      std::cout << "class=" << k << " precision=" << fmt12(cm.precision)
                << " recall=" << fmt12(cm.recall) << " f1=" << fmt12(cm.f1)
                << " support=" << cm.support << "\n";
    }
  }
  return 0;
}

std::vector<DyadicPair> build_pairs(const std::string& train_file, bool full,
                                    int32_t kappa, double avg_per_class,
                                    uint64_t seed, CorpusLoadResult& corpus,
                                    CorpusStats& stats, ProfileSet& profiles) {
  corpus = load_corpus(train_file);
  stats = compute_stats(corpus.docs);
  profiles = build_profiles(corpus.docs, stats);
  PhiContext ctx{&corpus.docs, &profiles, &stats};
  if (full) return transform_full(ctx);
  auto pi = compute_pi(profiles, avg_per_class);
  return double_sample(ctx, pi, SamplingConfig{avg_per_class, kappa, seed});
}

int cmd_transform_dump(const std::string& train_file, bool full, bool phi_mode,
                       int32_t kappa, double avg_per_class, uint64_t seed,
                       const std::string& out_file) {
  CorpusLoadResult corpus;
  CorpusStats stats;
  ProfileSet profiles;
  std::ostringstream out;

  if (phi_mode) {
    corpus = load_corpus(train_file);
    stats = compute_stats(corpus.docs);
    profiles = build_profiles(corpus.docs, stats);
    for (const auto& doc : corpus.docs) {
      auto vec = vectorize(doc, stats);
      for (int32_t k = 1; k <= profiles.num_classes(); ++k) {
        auto f = phi(doc, vec, profiles.at(k), stats, profiles.avg_len);
        out << doc.id << '\t' << k;
        for (double v : f) out << '\t' << fmt12(v);
        out << '\n';
      }
    }
  } else {
    auto pairs = build_pairs(train_file, full, kappa, avg_per_class, seed,
                             corpus, stats, profiles);
    for (const auto& p : pairs) {
      out << p.source_doc << '\t' << p.adversarial_class << '\t'
          << static_cast<int>(p.label);
      for (double v : p.z_first) out << '\t' << fmt12(v);
      for (double v : p.z_second) out << '\t' << fmt12(v);
      out << '\n';
    }
  }

  if (out_file.empty())
    std::cout << out.str();
  else
    write_file_atomic(out_file, out.str());
  return 0;
}

int cmd_verify_cover(const std::string& train_file, bool full, int32_t kappa,
                     double avg_per_class, uint64_t seed) {
  CorpusLoadResult corpus;
  CorpusStats stats;
  ProfileSet profiles;
  auto pairs = build_pairs(train_file, full, kappa, avg_per_class, seed,
                           corpus, stats, profiles);
  auto graph = build_graph(pairs);
  auto cover = canonical_cover(pairs);
  auto check = verify_cover(graph, cover);
  std::cout << (check.valid ? "valid" : "invalid")
            << " weight=" << fmt12(cover_weight(cover))
            << " vertices=" << graph.n_vertices << " edges=" << graph.n_edges
            << "\n";
  for (const auto& v : check.violations) std::cout << "violation: " << v << "\n";
  return 0;
}

int cmd_synth_gen(const SynthConfig& cfg, const std::string& out_file) {
  auto docs = generate(cfg);
  std::string tmp = out_file + ".tmp";
  save_corpus(docs, tmp);
  std::filesystem::rename(tmp, out_file);
  std::cout << "wrote " << docs.size() << " docs, K=" << cfg.num_classes
            << " to " << out_file << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dsmc: multi-class to binary reduction with double sampling"};
  app.require_subcommand(1);

  TrainArgs ta;
  auto* train_cmd = app.add_subcommand("train", "train a model bundle");
  train_cmd->add_option("--train", ta.train_file, "training file (libsvm)")
      ->required();
  train_cmd->add_option("--model-dir", ta.model_dir, "output bundle directory")
      ->required();
  train_cmd->add_option("--kappa", ta.kappa, "adversarial classes per example")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--avg-per-class", ta.avg_per_class,
                        "target retained examples per class")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--loss", ta.loss, "hinge|logistic");
  train_cmd->add_option("--lambda", ta.lambda, "L2 regularization");
  train_cmd->add_option("--lr", ta.lr, "initial learning rate");
  train_cmd->add_option("--epochs", ta.epochs, "SGD epochs");
  train_cmd->add_option("--seed", ta.seed, "RNG seed");
  train_cmd->add_flag("--no-scale", ta.no_scale, "disable feature scaling");

  std::string model_dir, test_file, out_file;
  int32_t q = 10;
  auto* predict_cmd = app.add_subcommand("predict", "predict class ids");
  predict_cmd->add_option("--model-dir", model_dir, "model bundle directory")
      ->required();
  predict_cmd->add_option("--test", test_file, "test file (libsvm; label 0 ok)")
      ->required();
  predict_cmd->add_option("--out", out_file, "predictions output")->required();
  predict_cmd->add_option("--q", q, "candidate classes")
      ->check(CLI::PositiveNumber);

  std::string truth_file, pred_file;
  double eval_avg = 1.0;
  bool json = false;
  auto* eval_cmd = app.add_subcommand("evaluate", "accuracy / MaF1 report");
  eval_cmd->add_option("--truth", truth_file, "truth labels or libsvm file")
      ->required();
  eval_cmd->add_option("--pred", pred_file, "predicted labels")->required();
  eval_cmd->add_option("--avg-per-class", eval_avg,
                       "avg_per_class used for the alpha/beta diagnostics");
  eval_cmd->add_flag("--json", json, "machine-readable output");

  std::string dump_train, dump_out;
  bool dump_full = false, dump_phi = false;
  int32_t dump_kappa = 1;
  double dump_avg = 1.0;
  uint64_t dump_seed = 0;
  auto* dump_cmd =
      app.add_subcommand("transform-dump", "dump pairs or phi features");
  dump_cmd->add_option("--train", dump_train, "training file")->required();
  dump_cmd->add_flag("--full", dump_full, "full transform (no sampling)");
  dump_cmd->add_flag("--phi", dump_phi, "dump phi per (doc, class) instead");
  dump_cmd->add_option("--kappa", dump_kappa, "")->check(CLI::PositiveNumber);
  dump_cmd->add_option("--avg-per-class", dump_avg, "")
      ->check(CLI::PositiveNumber);
  dump_cmd->add_option("--seed", dump_seed, "");
  dump_cmd->add_option("--out", dump_out, "output file (default stdout)");

  std::string cover_train;
  bool cover_full = true;
  bool cover_sampled = false;
  int32_t cover_kappa = 1;
  double cover_avg = 1.0;
  uint64_t cover_seed = 0;
  auto* cover_cmd = app.add_subcommand(
      "verify-cover", "verify the canonical fractional cover");
  cover_cmd->add_option("--train", cover_train, "training file")->required();
  cover_cmd->add_flag("--sampled", cover_sampled,
                      "use (pi,kappa)-DS pairs instead of the full transform");
  cover_cmd->add_option("--kappa", cover_kappa, "")
      ->check(CLI::PositiveNumber);
  cover_cmd->add_option("--avg-per-class", cover_avg, "")
      ->check(CLI::PositiveNumber);
  cover_cmd->add_option("--seed", cover_seed, "");

  SynthConfig sg;
  std::string synth_out;
  auto* synth_cmd =
      app.add_subcommand("synth-gen", "generate a synthetic corpus");
  synth_cmd->add_option("--classes", sg.num_classes, "")->required();
  synth_cmd->add_option("--docs", sg.num_docs, "")->required();
  synth_cmd->add_option("--vocab", sg.vocab_size, "")->required();
  synth_cmd->add_option("--zipf", sg.zipf_exponent, "class-size skew");
  synth_cmd->add_option("--signal", sg.class_signal,
                        "class-exclusive terms per class");
  synth_cmd->add_option("--terms-min", sg.terms_min, "");
  synth_cmd->add_option("--terms-max", sg.terms_max, "");
  synth_cmd->add_option("--seed", sg.seed, "");
  synth_cmd->add_option("--out", synth_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (train_cmd->parsed()) return cmd_train(ta);
    if (predict_cmd->parsed())
      return cmd_predict(model_dir, test_file, out_file, q);
    if (eval_cmd->parsed())
      return cmd_evaluate(truth_file, pred_file, eval_avg, json);
    if (dump_cmd->parsed())
      return cmd_transform_dump(dump_train, dump_full, dump_phi, dump_kappa,
                                dump_avg, dump_seed, dump_out);
    if (cover_cmd->parsed())
      return cmd_verify_cover(cover_train, !cover_sampled, cover_kappa,
                              cover_avg, cover_seed);
    if (synth_cmd->parsed()) return cmd_synth_gen(sg, synth_out);
  } catch (const dsmc::UsageError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const dsmc::IoError& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return 3;
  } catch (const dsmc::NumericError& e) {
    std::cerr << "error: numeric: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

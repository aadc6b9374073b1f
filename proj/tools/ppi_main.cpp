// Paraphrase identification pipeline front-end. Each subcommand maps to one
// pipeline stage and communicates with the others through files.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ppi/classifier.hpp"
#include "ppi/errors.hpp"
#include "ppi/evaluation.hpp"
#include "ppi/io.hpp"
#include "ppi/lexicon.hpp"
#include "ppi/pipeline.hpp"
#include "ppi/reformat.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

ppi::Representation repr_from_string(const std::string& s) {
  if (s == "word") return ppi::Representation::Word;
  if (s == "word+phrase") return ppi::Representation::WordPhrase;
  if (s == "mt-only") return ppi::Representation::MtOnly;
  throw ppi::ValidationError("unrecognized representation: " + s);
}

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ppi::ValidationError("cannot write file: " + out_path);
  out << text;
}

std::string format_eval(const ppi::EvalReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "accuracy  %.4f\nf1        %.4f\ntp %zu  fp %zu  tn %zu  fn %zu  n %zu\n",
                r.accuracy, r.f1, r.tp, r.fp, r.tn, r.fn, r.n);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"phrase-aware paraphrase identification pipeline"};
  app.require_subcommand(1);

  // phrase-stats
  std::string lexicon_path, corpus_path, out_path;
  int max_dist = 5;
  auto* stats = app.add_subcommand("phrase-stats",
                                   "count distance profiles for a phrase lexicon over a corpus");
  stats->add_option("--lexicon", lexicon_path, "phrase list, one two-word phrase per line")
      ->required();
  stats->add_option("--corpus", corpus_path, "tokenized corpus, one sentence per line")
      ->required();
  stats->add_option("--max-dist", max_dist, "maximal co-occurrence distance (default 5)");
  stats->add_option("--out", out_path, "profile TSV output (default stdout)");

  // classify-phrases
  std::string profiles_path;
  auto* classify = app.add_subcommand("classify-phrases",
                                      "derive continuity classes from distance profiles");
  classify->add_option("--profiles", profiles_path, "profile TSV")->required();
  classify->add_option("--out", out_path, "classified profile TSV (default stdout)");

  // reformat
  auto* reformat = app.add_subcommand("reformat", "rewrite a corpus with phrase units");
  reformat->add_option("--corpus", corpus_path, "tokenized corpus")->required();
  reformat->add_option("--profiles", profiles_path, "classified profile TSV")->required();
  reformat->add_option("--out", out_path, "reformatted corpus (default stdout)");

  // fit-weights
  std::string train_path, scheme = "tfkld", policy = "knn", repr = "word+phrase";
  double alpha = 0.5;
  int k = 3;
  long declared_dim = -1;
  auto* fitw = app.add_subcommand("fit-weights", "fit unit weights on MSRP training pairs");
  fitw->add_option("--train", train_path, "MSRP-format training TSV")->required();
  fitw->add_option("--profiles", profiles_path, "classified profile TSV (enables phrase units)");
  fitw->add_option("--scheme", scheme, "tfkld | tfidf | noweight");
  fitw->add_option("--policy", policy, "knn | zero | type-average | context-average");
  fitw->add_option("--repr", repr, "word | word+phrase");
  fitw->add_option("--alpha", alpha, "add-alpha smoothing constant");
  fitw->add_option("--k", k, "neighbor count for the knn policy");
  fitw->add_option("--dim", declared_dim, "embedding dimension to record for validation");
  fitw->add_option("--out", out_path, "weight model TSV (default stdout)");

  // featurize
  std::string pairs_path, weights_path, embeddings_path;
  bool headerless = false, no_mt = false, count_once = false;
  auto* feat = app.add_subcommand("featurize", "build pair feature vectors");
  feat->add_option("--pairs", pairs_path, "MSRP-format pair TSV")->required();
  feat->add_option("--weights", weights_path, "weight model TSV")->required();
  feat->add_option("--embeddings", embeddings_path, "word2vec text embeddings")->required();
  feat->add_option("--profiles", profiles_path, "classified profile TSV (enables phrase units)");
  feat->add_option("--repr", repr, "word | word+phrase | mt-only");
  feat->add_flag("--headerless", headerless, "embeddings file has no vocab/dim header");
  feat->add_flag("--no-mt", no_mt, "omit the MT metric block");
  feat->add_flag("--count-once", count_once, "count repeated unit tokens once");
  feat->add_option("--out", out_path, "feature matrix TSV")->required();

  // train
  std::string features_path, model_path;
  double C = 1.0;
  std::uint64_t seed = kDefaultSeed;
  bool tune_c = false;
  auto* train = app.add_subcommand("train", "train the linear classifier");
  train->add_option("--features", features_path, "feature matrix TSV")->required();
  train->add_option("--C", C, "regularization trade-off");
  train->add_flag("--tune-C", tune_c, "select C on a dev split over the default grid");
  train->add_option("--seed", seed, "random seed");
  train->add_option("--out", model_path, "model file")->required();

  // predict
  std::string preds_path;
  auto* predict = app.add_subcommand("predict", "predict labels for a feature matrix");
  predict->add_option("--model", model_path, "model file")->required();
  predict->add_option("--features", features_path, "feature matrix TSV")->required();
  predict->add_option("--out", preds_path, "predictions, one 0/1 per line")->required();

  // evaluate
  std::string gold_path, tsv_path;
  auto* eval = app.add_subcommand("evaluate", "accuracy and F1 of predictions against gold");
  eval->add_option("--preds", preds_path, "predicted labels, one 0/1 per line")->required();
  eval->add_option("--gold", gold_path, "gold labels, one 0/1 per line")->required();
  eval->add_option("--tsv", tsv_path, "also write metric<TAB>value TSV here");

  // significance
  std::string preds_a_path, preds_b_path;
  int iterations = 10000;
  auto* sig = app.add_subcommand("significance",
                                 "paired approximate randomization test between two systems");
  sig->add_option("--preds-a", preds_a_path, "system A predictions")->required();
  sig->add_option("--preds-b", preds_b_path, "system B predictions")->required();
  sig->add_option("--gold", gold_path, "gold labels")->required();
  sig->add_option("--iterations", iterations, "randomization iterations (default 10000)");
  sig->add_option("--seed", seed, "random seed");

  // experiment
  std::string test_path;
  bool subset = false;
  auto* exp = app.add_subcommand("experiment", "run all in-scope configurations end to end");
  exp->add_option("--train", train_path, "MSRP-format training TSV")->required();
  exp->add_option("--test", test_path, "MSRP-format test TSV")->required();
  exp->add_option("--profiles", profiles_path, "classified profile TSV")->required();
  exp->add_option("--embeddings", embeddings_path, "word2vec text embeddings")->required();
  exp->add_flag("--headerless", headerless, "embeddings file has no vocab/dim header");
  exp->add_flag("--subset", subset, "restrict to pairs containing a lexicon phrase");
  exp->add_option("--seed", seed, "random seed");
  exp->add_option("--out", out_path, "report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (stats->parsed()) {
    ppi::PhraseLexicon lex = ppi::load_lexicon(lexicon_path);
    ppi::count_distance_profile(ppi::load_corpus(corpus_path), lex, max_dist);
    lex.classify_all();
    if (out_path.empty()) out_path = "/dev/stdout";
    ppi::save_profiles(lex, out_path);
  } else if (classify->parsed()) {
    ppi::PhraseLexicon lex = ppi::load_profiles(profiles_path);
    lex.classify_all();
    if (out_path.empty()) out_path = "/dev/stdout";
    ppi::save_profiles(lex, out_path);
  } else if (reformat->parsed()) {
    const ppi::PhraseLexicon lex = ppi::load_profiles(profiles_path);
    std::string text;
    for (const auto& sent : ppi::load_corpus(corpus_path)) {
      const auto units = ppi::reformat_sentence(sent, lex);
      for (std::size_t i = 0; i < units.size(); ++i) {
        if (i) text += ' ';
        text += units[i];
      }
      text += '\n';
    }
    write_or_print(text, out_path);
  } else if (fitw->parsed()) {
    ppi::PipelineConfig cfg;
    cfg.scheme = ppi::scheme_from_string(scheme);
    cfg.policy = ppi::policy_from_string(policy);
    cfg.repr = repr_from_string(repr);
    cfg.alpha = alpha;
    cfg.k = k;
    ppi::PhraseLexicon lex;
    if (!profiles_path.empty()) lex = ppi::load_profiles(profiles_path);
    const auto prepared = ppi::prepare_pairs(ppi::load_msrp(train_path), lex, cfg.repr);
    ppi::UnitWeightModel model = ppi::fit_weights(prepared, cfg);
    model.embedding_dim = declared_dim;
    if (out_path.empty()) out_path = "/dev/stdout";
    ppi::save_weight_model(model, out_path);
  } else if (feat->parsed()) {
    ppi::PipelineConfig cfg;
    cfg.repr = repr_from_string(repr);
    cfg.use_mt_features = !no_mt;
    cfg.count_once = count_once;
    const ppi::UnitWeightModel model = ppi::load_weight_model(weights_path);
    cfg.scheme = model.scheme;
    cfg.policy = model.unseen_policy;
    cfg.k = model.k;
    const ppi::EmbeddingTable table = ppi::load_embeddings(embeddings_path, !headerless);
    if (model.embedding_dim >= 0 && model.embedding_dim != table.dim())
      throw ppi::ParseError("weight model records dimension " +
                            std::to_string(model.embedding_dim) + " but embeddings have " +
                            std::to_string(table.dim()));
    ppi::PhraseLexicon lex;
    if (!profiles_path.empty()) lex = ppi::load_profiles(profiles_path);
    const auto prepared = ppi::prepare_pairs(ppi::load_msrp(pairs_path), lex, cfg.repr);
    const auto vocab = ppi::unit_vocabulary(prepared);
    ppi::save_feature_matrix(ppi::featurize(prepared, model, table, cfg, &vocab), out_path);
  } else if (train->parsed()) {
    const ppi::FeatureMatrix fm = ppi::load_feature_matrix(features_path);
    if (tune_c) {
      const ppi::DevSplit split = ppi::stratified_split(fm.labels, seed);
      double best_c = ppi::kDefaultCGrid.front();
      double best_acc = -1.0;
      Eigen::MatrixXd fit_x(split.train_idx.size(), fm.features.cols());
      Eigen::MatrixXd dev_x(split.dev_idx.size(), fm.features.cols());
      std::vector<int> fit_y, dev_y;
      for (std::size_t i = 0; i < split.train_idx.size(); ++i) {
        fit_x.row(static_cast<Eigen::Index>(i)) =
            fm.features.row(static_cast<Eigen::Index>(split.train_idx[i]));
        fit_y.push_back(fm.labels[split.train_idx[i]]);
      }
      for (std::size_t i = 0; i < split.dev_idx.size(); ++i) {
        dev_x.row(static_cast<Eigen::Index>(i)) =
            fm.features.row(static_cast<Eigen::Index>(split.dev_idx[i]));
        dev_y.push_back(fm.labels[split.dev_idx[i]]);
      }
      for (double c_candidate : ppi::kDefaultCGrid) {
        const auto lm = ppi::train_linear(fit_x, fit_y, c_candidate, seed);
        const double acc = ppi::evaluate(ppi::predict_labels(lm, dev_x), dev_y).accuracy;
        if (acc > best_acc) {
          best_acc = acc;
          best_c = c_candidate;
        }
      }
      C = best_c;
      std::cout << "selected C = " << C << " (dev accuracy " << best_acc << ")\n";
    }
    const ppi::LinearModel lm = ppi::train_linear(fm.features, fm.labels, C, seed);
    ppi::save_linear_model(lm, model_path);
  } else if (predict->parsed()) {
    const ppi::LinearModel lm = ppi::load_linear_model(model_path);
    const ppi::FeatureMatrix fm = ppi::load_feature_matrix(features_path);
    ppi::save_labels(ppi::predict_labels(lm, fm.features), preds_path);
  } else if (eval->parsed()) {
    const ppi::EvalReport r =
        ppi::evaluate(ppi::load_labels(preds_path), ppi::load_labels(gold_path));
    std::cout << format_eval(r);
    if (!tsv_path.empty()) {
      std::ofstream out(tsv_path);
      out.precision(17);
      out << "accuracy\t" << r.accuracy << "\nf1\t" << r.f1 << "\nn\t" << r.n << "\n";
    }
  } else if (sig->parsed()) {
    const auto res = ppi::approx_randomization(ppi::load_labels(preds_a_path),
                                               ppi::load_labels(preds_b_path),
                                               ppi::load_labels(gold_path), iterations, seed);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "delta_accuracy %.6f  p %.6f\ndelta_f1       %.6f  p %.6f\n",
                  res.delta_accuracy, res.p_accuracy, res.delta_f1, res.p_f1);
    std::cout << buf;
  } else if (exp->parsed()) {
    const auto rows = ppi::run_experiment(
        ppi::load_msrp(train_path), ppi::load_msrp(test_path),
        ppi::load_profiles(profiles_path), ppi::load_embeddings(embeddings_path, !headerless),
        seed, subset);
    write_or_print(ppi::format_experiment_report(rows), out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ppi::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

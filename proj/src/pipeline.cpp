#include "ppi/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "ppi/errors.hpp"
#include "ppi/reformat.hpp"

namespace ppi {

std::vector<PreparedPair> prepare_pairs(const std::vector<RawPair>& pairs,
                                        const PhraseLexicon& lexicon, Representation repr) {
  std::vector<PreparedPair> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    PreparedPair q;
    q.words1 = p.words1;
    q.words2 = p.words2;
    q.label = p.label;
    switch (repr) {
      case Representation::Word:
        q.units1 = p.words1;
        q.units2 = p.words2;
        break;
      case Representation::WordPhrase:
        q.units1 = reformat_sentence(p.words1, lexicon);
        q.units2 = reformat_sentence(p.words2, lexicon);
        break;
      case Representation::MtOnly:
        break;
    }
    out.push_back(std::move(q));
  }
  return out;
}

bool pair_has_phrase(const PreparedPair& pair) {
  auto any_phrase = [](const UnitSequence& units) {
    return std::any_of(units.begin(), units.end(), is_phrase_unit);
  };
  return any_phrase(pair.units1) || any_phrase(pair.units2);
}

std::vector<PreparedPair> subset_filter(const std::vector<PreparedPair>& pairs) {
  std::vector<PreparedPair> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out), pair_has_phrase);
  return out;
}

UnitWeightModel fit_weights(const std::vector<PreparedPair>& pairs,
                            const PipelineConfig& cfg) {
  std::vector<LabeledPair> labeled;
  labeled.reserve(pairs.size());
  for (const auto& p : pairs) labeled.push_back(LabeledPair{p.units1, p.units2, p.label});

  UnitWeightModel model;
  switch (cfg.scheme) {
    case WeightScheme::TFKLD: model = fit_tf_kld(labeled, cfg.alpha); break;
    case WeightScheme::TFIDF: model = fit_tf_idf(labeled); break;
    case WeightScheme::NOWEIGHT: model = fit_noweight(labeled); break;
  }
  model.unseen_policy = cfg.policy;
  model.k = cfg.k;
  model.alpha = cfg.alpha;
  return model;
}

std::unordered_set<std::string> unit_vocabulary(const std::vector<PreparedPair>& pairs) {
  std::unordered_set<std::string> vocab;
  for (const auto& p : pairs) {
    vocab.insert(p.units1.begin(), p.units1.end());
    vocab.insert(p.units2.begin(), p.units2.end());
  }
  return vocab;
}

FeatureMatrix featurize(const std::vector<PreparedPair>& pairs, const UnitWeightModel& model,
                        const EmbeddingTable& table, const PipelineConfig& cfg,
                        const std::unordered_set<std::string>* test_types) {
  ComposeOptions opts;
  opts.count_once = cfg.count_once;
  opts.use_mt_features = cfg.use_mt_features;
  opts.use_embedding_features = cfg.repr != Representation::MtOnly;
  opts.test_types = test_types;
  if (cfg.repr == Representation::Word)
    opts.knn_candidates = [](const std::string& t) { return !is_phrase_unit(t); };

  const Eigen::Index dim = opts.use_embedding_features ? table.dim() : 0;
  const Eigen::Index mt = cfg.use_mt_features ? kNumMtMetrics : 0;
  FeatureMatrix out;
  out.embedding_dim = dim;
  out.mt_dim = mt;
  out.features.resize(static_cast<Eigen::Index>(pairs.size()),
                      PairFeatures::flat_size(dim, mt));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const PairFeatures f =
        pair_feature_vector(p.units1, p.units2, p.words1, p.words2, model, table, opts);
    out.features.row(static_cast<Eigen::Index>(i)) = f.flatten().transpose();
    out.labels.push_back(p.label);
  }
  return out;
}

DevSplit stratified_split(const std::vector<int>& labels, std::uint64_t seed,
                          double dev_fraction) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < labels.size(); ++i)
    (labels[i] == 1 ? pos : neg).push_back(i);
  std::mt19937_64 rng(seed);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::shuffle(neg.begin(), neg.end(), rng);

  DevSplit split;
  auto take = [&](std::vector<std::size_t>& cls) {
    const std::size_t dev_n =
        static_cast<std::size_t>(std::llround(dev_fraction * static_cast<double>(cls.size())));
    for (std::size_t i = 0; i < cls.size(); ++i)
      (i < dev_n ? split.dev_idx : split.train_idx).push_back(cls[i]);
  };
  take(pos);
  take(neg);
  std::sort(split.train_idx.begin(), split.train_idx.end());
  std::sort(split.dev_idx.begin(), split.dev_idx.end());
  return split;
}

namespace {

std::vector<PreparedPair> select(const std::vector<PreparedPair>& pairs,
                                 const std::vector<std::size_t>& idx) {
  std::vector<PreparedPair> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(pairs[i]);
  return out;
}

bool both_classes(const std::vector<PreparedPair>& pairs) {
  bool pos = false, neg = false;
  for (const auto& p : pairs) (p.label == 1 ? pos : neg) = true;
  return pos && neg;
}

}  // namespace

TuneResult tune(const std::vector<PreparedPair>& train_pairs, const EmbeddingTable& table,
                const PipelineConfig& cfg, const std::vector<double>& c_grid,
                const std::vector<int>& k_grid) {
  if (c_grid.empty() || k_grid.empty()) throw ValidationError("tune: empty grid");
  std::vector<int> labels;
  for (const auto& p : train_pairs) labels.push_back(p.label);
  const DevSplit split = stratified_split(labels, cfg.seed);
  const auto fit_set = select(train_pairs, split.train_idx);
  const auto dev_set = select(train_pairs, split.dev_idx);
  if (!both_classes(fit_set) || !both_classes(dev_set))
    throw ValidationError("tune: dev split leaves a class empty");

  const auto dev_vocab = unit_vocabulary(dev_set);
  std::vector<int> dev_labels;
  for (const auto& p : dev_set) dev_labels.push_back(p.label);

  TuneResult result{c_grid.front(), k_grid.front(), {}};
  double best_acc = -1.0;
  for (int k : k_grid) {
    PipelineConfig kcfg = cfg;
    kcfg.k = k;
    const UnitWeightModel weights = fit_weights(fit_set, kcfg);
    const FeatureMatrix train_fm = featurize(fit_set, weights, table, kcfg);
    const FeatureMatrix dev_fm = featurize(dev_set, weights, table, kcfg, &dev_vocab);
    for (double C : c_grid) {
      const LinearModel lm = train_linear(train_fm.features, train_fm.labels, C, cfg.seed);
      const auto preds = predict_labels(lm, dev_fm.features);
      const double acc = evaluate(preds, dev_labels).accuracy;
      result.cells.push_back(TuneCell{C, k, acc});
      const bool better =
          acc > best_acc ||
          (acc == best_acc && (C < result.best_C ||
                               (C == result.best_C && k < result.best_k)));
      if (better) {
        best_acc = acc;
        result.best_C = C;
        result.best_k = k;
      }
    }
  }
  return result;
}

PipelineRun run_pipeline(const std::vector<PreparedPair>& train,
                         const std::vector<PreparedPair>& test,
                         const EmbeddingTable& table, const PipelineConfig& cfg) {
  PipelineRun run;
  run.weights = fit_weights(train, cfg);
  const FeatureMatrix train_fm = featurize(train, run.weights, table, cfg);
  const auto test_vocab = unit_vocabulary(test);
  const FeatureMatrix test_fm = featurize(test, run.weights, table, cfg, &test_vocab);
  run.model = train_linear(train_fm.features, train_fm.labels, cfg.C, cfg.seed);
  run.test_predictions = predict_labels(run.model, test_fm.features);
  run.test_report = evaluate(run.test_predictions, test_fm.labels);
  return run;
}

std::vector<ExperimentRow> run_experiment(const std::vector<RawPair>& train,
                                          const std::vector<RawPair>& test,
                                          const PhraseLexicon& lexicon,
                                          const EmbeddingTable& table, std::uint64_t seed,
                                          bool subset_only) {
  struct Config {
    std::string name;
    PipelineConfig cfg;
    bool tune_k;
  };
  auto base = [&](WeightScheme s, UnseenPolicy p, Representation r, bool mt) {
    PipelineConfig c;
    c.scheme = s;
    c.policy = p;
    c.repr = r;
    c.seed = seed;
    c.use_mt_features = mt;
    return c;
  };
  const std::vector<Config> configs = {
      {"NOWEIGHT", base(WeightScheme::NOWEIGHT, UnseenPolicy::Zero, Representation::WordPhrase, false), false},
      {"MT", base(WeightScheme::NOWEIGHT, UnseenPolicy::Zero, Representation::MtOnly, true), false},
      {"TF-IDF", base(WeightScheme::TFIDF, UnseenPolicy::KNN, Representation::WordPhrase, true), false},
      {"WORD", base(WeightScheme::TFKLD, UnseenPolicy::KNN, Representation::Word, true), true},
      {"WORD+PHRASE", base(WeightScheme::TFKLD, UnseenPolicy::KNN, Representation::WordPhrase, true), true},
      {"UNSEEN-ZERO", base(WeightScheme::TFKLD, UnseenPolicy::Zero, Representation::WordPhrase, true), false},
      {"UNSEEN-TYPE-AVG", base(WeightScheme::TFKLD, UnseenPolicy::TypeAverage, Representation::WordPhrase, true), false},
      {"UNSEEN-CONTEXT-AVG", base(WeightScheme::TFKLD, UnseenPolicy::ContextAverage, Representation::WordPhrase, true), false},
  };

  std::vector<ExperimentRow> rows;

  // Majority baseline: predict paraphrase everywhere.
  {
    auto test_prep = prepare_pairs(test, lexicon, Representation::WordPhrase);
    if (subset_only) test_prep = subset_filter(test_prep);
    std::vector<int> gold, all_pos;
    for (const auto& p : test_prep) {
      gold.push_back(p.label);
      all_pos.push_back(1);
    }
    rows.push_back(ExperimentRow{"baseline", evaluate(all_pos, gold), 0.0, 0});
  }

  for (const auto& c : configs) {
    auto train_prep = prepare_pairs(train, lexicon, c.cfg.repr);
    auto test_prep = prepare_pairs(test, lexicon, c.cfg.repr);
    if (subset_only) {
      // Subset membership is defined by phrase presence after reformatting,
      // regardless of the row's representation.
      auto train_wp = prepare_pairs(train, lexicon, Representation::WordPhrase);
      auto test_wp = prepare_pairs(test, lexicon, Representation::WordPhrase);
      std::vector<PreparedPair> tr, te;
      for (std::size_t i = 0; i < train_prep.size(); ++i)
        if (pair_has_phrase(train_wp[i])) tr.push_back(train_prep[i]);
      for (std::size_t i = 0; i < test_prep.size(); ++i)
        if (pair_has_phrase(test_wp[i])) te.push_back(test_prep[i]);
      train_prep = std::move(tr);
      test_prep = std::move(te);
    }

    PipelineConfig cfg = c.cfg;
    const std::vector<int> k_grid = c.tune_k ? kDefaultKGrid : std::vector<int>{cfg.k};
    const TuneResult tuned = tune(train_prep, table, cfg, kDefaultCGrid, k_grid);
    cfg.C = tuned.best_C;
    cfg.k = tuned.best_k;
    const PipelineRun run = run_pipeline(train_prep, test_prep, table, cfg);
    rows.push_back(ExperimentRow{c.name, run.test_report, tuned.best_C, tuned.best_k});
  }
  return rows;
}

std::string format_experiment_report(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "method               acc     f1      C        k\n";
  for (const auto& r : rows) {
    char line[160];
    if (r.tuned_C > 0)
      std::snprintf(line, sizeof(line), "%-20s %.4f  %.4f  %-8g %d\n", r.name.c_str(),
                    r.report.accuracy, r.report.f1, r.tuned_C, r.tuned_k);
    else
      std::snprintf(line, sizeof(line), "%-20s %.4f  %.4f  -        -\n", r.name.c_str(),
                    r.report.accuracy, r.report.f1);
    out << line;
  }
  return out.str();
}

}  // namespace ppi

#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "ppi/classifier.hpp"
#include "ppi/evaluation.hpp"
#include "ppi/io.hpp"
#include "ppi/lexicon.hpp"
#include "ppi/representation.hpp"
#include "ppi/weighting.hpp"

namespace ppi {

// Which tokens compose the sentence vector.
enum class Representation {
  Word,        // raw words only; KNN neighbors restricted to single words
  WordPhrase,  // reformatted units (words + phrase tokens)
  MtOnly,      // no embedding features
};

struct PipelineConfig {
  WeightScheme scheme = WeightScheme::TFKLD;
  UnseenPolicy policy = UnseenPolicy::KNN;
  Representation repr = Representation::WordPhrase;
  int k = 3;
  double alpha = 0.5;
  double C = 1.0;
  std::uint64_t seed = 42;
  bool count_once = false;
  bool use_mt_features = true;
};

// A pair with both its raw word sequences and its unit sequences under the
// chosen representation.
struct PreparedPair {
  std::vector<std::string> words1, words2;
  UnitSequence units1, units2;
  int label = 0;
};

std::vector<PreparedPair> prepare_pairs(const std::vector<RawPair>& pairs,
                                        const PhraseLexicon& lexicon, Representation repr);

// True when either sentence contains a joined phrase token.
bool pair_has_phrase(const PreparedPair& pair);

// Pairs where at least one sentence contains a lexicon phrase after
// reformatting.
std::vector<PreparedPair> subset_filter(const std::vector<PreparedPair>& pairs);

// Fits the configured weighting scheme on the prepared pairs and stamps
// the model with the config's policy, k and alpha.
UnitWeightModel fit_weights(const std::vector<PreparedPair>& pairs,
                            const PipelineConfig& cfg);

// Unit vocabulary of a pair set (for the TypeAverage policy).
std::unordered_set<std::string> unit_vocabulary(const std::vector<PreparedPair>& pairs);

// Feature matrix for a pair set. test_types feeds TypeAverage; pass the
// vocabulary of the set being featurized.
FeatureMatrix featurize(const std::vector<PreparedPair>& pairs, const UnitWeightModel& model,
                        const EmbeddingTable& table, const PipelineConfig& cfg,
                        const std::unordered_set<std::string>* test_types = nullptr);

// Deterministic stratified 80/20 split by seed.
struct DevSplit {
  std::vector<std::size_t> train_idx;
  std::vector<std::size_t> dev_idx;
};
DevSplit stratified_split(const std::vector<int>& labels, std::uint64_t seed,
                          double dev_fraction = 0.2);

// Grid search over (C, k) on the dev split. Ties break toward smaller C,
// then smaller k. Throws ValidationError when the dev split lacks a class.
struct TuneCell {
  double C;
  int k;
  double dev_accuracy;
};
struct TuneResult {
  double best_C;
  int best_k;
  std::vector<TuneCell> cells;
};
TuneResult tune(const std::vector<PreparedPair>& train_pairs, const EmbeddingTable& table,
                const PipelineConfig& cfg, const std::vector<double>& c_grid,
                const std::vector<int>& k_grid);

inline const std::vector<double> kDefaultCGrid{0.01, 0.1, 1.0, 10.0, 100.0};
inline const std::vector<int> kDefaultKGrid{1, 3, 5};

// Fits weights + classifier on train with the given config, predicts test.
struct PipelineRun {
  UnitWeightModel weights;
  LinearModel model;
  std::vector<int> test_predictions;
  EvalReport test_report;
};
PipelineRun run_pipeline(const std::vector<PreparedPair>& train,
                         const std::vector<PreparedPair>& test,
                         const EmbeddingTable& table, const PipelineConfig& cfg);

// Full experiment: one row per in-scope configuration, each tuned on a dev
// split and evaluated on test.
struct ExperimentRow {
  std::string name;
  EvalReport report;
  double tuned_C = 0.0;
  int tuned_k = 0;
};
std::vector<ExperimentRow> run_experiment(const std::vector<RawPair>& train,
                                          const std::vector<RawPair>& test,
                                          const PhraseLexicon& lexicon,
                                          const EmbeddingTable& table, std::uint64_t seed,
                                          bool subset_only);

std::string format_experiment_report(const std::vector<ExperimentRow>& rows);

}  // namespace ppi

#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "ppi/lexicon.hpp"
#include "ppi/weighting.hpp"

namespace ppi {

// One raw corpus pair: whitespace-tokenized, lowercased sentences.
struct RawPair {
  std::vector<std::string> words1;
  std::vector<std::string> words2;
  int label = 0;
};

// Corpus file: one tokenized sentence per line, lowercased on load.
std::vector<std::vector<std::string>> load_corpus(const std::string& path);

// Profile dump TSV: a_b<TAB>c1..c5<TAB>class.
void save_profiles(const PhraseLexicon& lexicon, const std::string& path);
PhraseLexicon load_profiles(const std::string& path);

// MSRP distribution format: TSV with header, columns
// Quality, #1 ID, #2 ID, #1 String, #2 String.
std::vector<RawPair> load_msrp(const std::string& path);

// Weight model TSV: '#' metadata lines (scheme, alpha, k, unseen_policy),
// then unit<TAB>weight rows.
void save_weight_model(const UnitWeightModel& model, const std::string& path);
UnitWeightModel load_weight_model(const std::string& path);

// Feature matrix TSV: leading metadata line "# dim=<d> mt=<m>", then one
// row per pair: label<TAB>f1<TAB>f2...
struct FeatureMatrix {
  Eigen::MatrixXd features;
  std::vector<int> labels;
  Eigen::Index embedding_dim = 0;
  Eigen::Index mt_dim = 0;
};
void save_feature_matrix(const FeatureMatrix& m, const std::string& path);
FeatureMatrix load_feature_matrix(const std::string& path);

// Label file: one 0/1 per line.
std::vector<int> load_labels(const std::string& path);
void save_labels(const std::vector<int>& labels, const std::string& path);

}  // namespace ppi

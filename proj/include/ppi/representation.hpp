#pragma once

#include <string>
#include <vector>

#include "ppi/embeddings.hpp"
#include "ppi/reformat.hpp"
#include "ppi/weighting.hpp"

namespace ppi {

using SentenceVector = Vector;

// Fixed-layout pair feature vector: [cosine, sum(dim), absdiff(dim), mt(m)].
struct PairFeatures {
  double cosine_sim = 0.0;
  Vector sum;
  Vector absdiff;
  Vector mt;

  Vector flatten() const;
  static Eigen::Index flat_size(Eigen::Index dim, Eigen::Index m) { return 1 + 2 * dim + m; }
};

// Options controlling sentence composition and weight resolution.
struct ComposeOptions {
  TokenPredicate knn_candidates;  // neighbor filter for the KNN policy
  const std::unordered_set<std::string>* test_types = nullptr;  // TypeAverage
  bool count_once = false;  // count repeated unit tokens once instead of per occurrence
  bool use_embedding_features = true;  // cosine/sum/absdiff block
  bool use_mt_features = true;         // surface metric block
};

// Weighted sum of unit embeddings: sum over positions of
// resolve_weight(unit) * embedding(unit). Units without embeddings
// contribute nothing. With count_once, repeated tokens contribute once.
SentenceVector sentence_vector(const UnitSequence& units, const UnitWeightModel& model,
                               const EmbeddingTable& table, const ComposeOptions& opts = {});

inline constexpr int kNumMtMetrics = 8;

// Eight surface metrics in [0,1], each symmetrized by averaging both
// directions, in fixed order: smoothed BLEU-1..4, WER, PER, LCS ratio,
// unigram F1. Either side empty yields the all-worst vector
// (BLEU 0, WER 1, PER 1, LCS 0, F1 0).
Vector mt_metrics(const std::vector<std::string>& ref, const std::vector<std::string>& hyp);

// Directed word error rate: Levenshtein(ref, hyp) / |ref|, capped at 1.
double word_error_rate(const std::vector<std::string>& ref,
                       const std::vector<std::string>& hyp);

// Directed position-independent error rate: bag-of-words edit lower bound
// over |ref|, capped at 1. Always <= word_error_rate on the same pair.
double position_independent_error_rate(const std::vector<std::string>& ref,
                                       const std::vector<std::string>& hyp);

// Full feature vector for one sentence pair. Embedding features use the
// reformatted unit sequences; MT metrics use the raw word sequences.
PairFeatures pair_feature_vector(const UnitSequence& s1_units, const UnitSequence& s2_units,
                                 const std::vector<std::string>& s1_words,
                                 const std::vector<std::string>& s2_words,
                                 const UnitWeightModel& model, const EmbeddingTable& table,
                                 const ComposeOptions& opts = {});

}  // namespace ppi

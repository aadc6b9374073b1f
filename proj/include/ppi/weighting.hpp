#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ppi/embeddings.hpp"

namespace ppi {

// One training pair: the unit multisets of both sentences plus the gold
// paraphrase label.
struct LabeledPair {
  std::vector<std::string> u_units;
  std::vector<std::string> v_units;
  int label = 0;  // 1 = paraphrase
};

// Per-unit Bernoulli trial/success counts, split by pair label.
struct BernoulliCounts {
  std::uint64_t pos_trials = 0;
  std::uint64_t pos_successes = 0;
  std::uint64_t neg_trials = 0;
  std::uint64_t neg_successes = 0;
};

enum class WeightScheme { TFKLD, TFIDF, NOWEIGHT };
enum class UnseenPolicy { KNN, Zero, TypeAverage, ContextAverage };

const char* to_string(WeightScheme s);
const char* to_string(UnseenPolicy p);
WeightScheme scheme_from_string(const std::string& s);
UnseenPolicy policy_from_string(const std::string& s);

// Unit -> discriminativity weight plus the configuration used to fit and
// resolve it. Immutable once fitted.
struct UnitWeightModel {
  std::unordered_map<std::string, double> weights;
  WeightScheme scheme = WeightScheme::TFKLD;
  UnseenPolicy unseen_policy = UnseenPolicy::KNN;
  int k = 3;
  double alpha = 0.5;
  // Expected embedding dimension; -1 when not recorded. Used to validate
  // that the weight model and embedding table come from the same setup.
  long embedding_dim = -1;

  bool known(const std::string& unit) const { return weights.count(unit) > 0; }
};

// KL divergence between Bernoulli(p) and Bernoulli(q), natural log.
// Throws ValidationError unless 0 < p < 1 and 0 < q < 1.
double bernoulli_kld(double p, double q);

// Fits TF-KLD weights. Pair direction is symmetrized: each pair contributes
// the directed instances (u|v) and (v|u). A directed instance (x|y) is a
// trial for unit w iff w occurs in y, a success iff w also occurs in x.
// Probabilities are add-alpha smoothed: (successes+a)/(trials+2a).
// Units with zero trials get no stored weight. Throws ValidationError when
// all pairs carry the same label.
UnitWeightModel fit_tf_kld(const std::vector<LabeledPair>& pairs, double alpha = 0.5);

// Raw symmetrized counts, exposed for inspection and testing.
std::unordered_map<std::string, BernoulliCounts> tf_kld_counts(
    const std::vector<LabeledPair>& pairs);

// Smoothed IDF over training sentences (2 per pair):
// weight(w) = ln((N+1)/(df(w)+1)) + 1.
UnitWeightModel fit_tf_idf(const std::vector<LabeledPair>& pairs);

// Uniform weights over the training vocabulary.
UnitWeightModel fit_noweight(const std::vector<LabeledPair>& pairs);

// Everything resolve_weight may need beyond the model itself.
struct ResolveContext {
  const EmbeddingTable* table = nullptr;        // KNN policy
  TokenPredicate candidates;                    // KNN neighbor filter
  std::optional<std::string> left_ctx;          // ContextAverage
  std::optional<std::string> right_ctx;
  const std::unordered_set<std::string>* test_types = nullptr;  // TypeAverage
};

// Weight of a unit under the model's scheme and unseen policy. Known units
// return their stored weight; NOWEIGHT returns 1 unconditionally. Unknown
// units route through the model's unseen_policy. A KNN lookup for a unit
// absent from the embedding table yields 0.
double resolve_weight(const std::string& unit, const UnitWeightModel& model,
                      const ResolveContext& ctx);

}  // namespace ppi

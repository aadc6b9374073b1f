#include "ppi/weighting.hpp"

#include <cmath>

#include "ppi/errors.hpp"

namespace ppi {

const char* to_string(WeightScheme s) {
  switch (s) {
    case WeightScheme::TFKLD: return "tfkld";
    case WeightScheme::TFIDF: return "tfidf";
    case WeightScheme::NOWEIGHT: return "noweight";
  }
  return "tfkld";
}

const char* to_string(UnseenPolicy p) {
  switch (p) {
    case UnseenPolicy::KNN: return "knn";
    case UnseenPolicy::Zero: return "zero";
    case UnseenPolicy::TypeAverage: return "type-average";
    case UnseenPolicy::ContextAverage: return "context-average";
  }
  return "knn";
}

WeightScheme scheme_from_string(const std::string& s) {
  if (s == "tfkld") return WeightScheme::TFKLD;
  if (s == "tfidf") return WeightScheme::TFIDF;
  if (s == "noweight") return WeightScheme::NOWEIGHT;
  throw ValidationError("unrecognized weight scheme: " + s);
}

UnseenPolicy policy_from_string(const std::string& s) {
  if (s == "knn") return UnseenPolicy::KNN;
  if (s == "zero") return UnseenPolicy::Zero;
  if (s == "type-average") return UnseenPolicy::TypeAverage;
  if (s == "context-average") return UnseenPolicy::ContextAverage;
  throw ValidationError("unrecognized unseen policy: " + s);
}

double bernoulli_kld(double p, double q) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0))
    throw ValidationError("bernoulli_kld requires p, q strictly inside (0,1)");
  return p * std::log(p / q) + (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
}

namespace {

std::unordered_set<std::string> unit_set(const std::vector<std::string>& units) {
  return std::unordered_set<std::string>(units.begin(), units.end());
}

}  // namespace

std::unordered_map<std::string, BernoulliCounts> tf_kld_counts(
    const std::vector<LabeledPair>& pairs) {
  std::unordered_map<std::string, BernoulliCounts> counts;
  for (const auto& pair : pairs) {
    const auto u = unit_set(pair.u_units);
    const auto v = unit_set(pair.v_units);
    auto tally = [&](const std::unordered_set<std::string>& x,
                     const std::unordered_set<std::string>& y) {
      for (const auto& w : y) {
        auto& c = counts[w];
        const bool success = x.count(w) > 0;
        if (pair.label == 1) {
          c.pos_trials++;
          if (success) c.pos_successes++;
        } else {
          c.neg_trials++;
          if (success) c.neg_successes++;
        }
      }
    };
    tally(u, v);  // directed instance (u|v)
    tally(v, u);  // directed instance (v|u)
  }
  return counts;
}

UnitWeightModel fit_tf_kld(const std::vector<LabeledPair>& pairs, double alpha) {
  if (alpha <= 0.0) throw ValidationError("fit_tf_kld: alpha must be positive");
  bool has_pos = false, has_neg = false;
  for (const auto& p : pairs) (p.label == 1 ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg)
    throw ValidationError("fit_tf_kld: training set must contain both labels");

  UnitWeightModel model;
  model.scheme = WeightScheme::TFKLD;
  model.alpha = alpha;
  for (const auto& [unit, c] : tf_kld_counts(pairs)) {
    if (c.pos_trials + c.neg_trials == 0) continue;
    const double p = (c.pos_successes + alpha) / (c.pos_trials + 2.0 * alpha);
    const double q = (c.neg_successes + alpha) / (c.neg_trials + 2.0 * alpha);
    model.weights.emplace(unit, bernoulli_kld(p, q));
  }
  return model;
}

UnitWeightModel fit_tf_idf(const std::vector<LabeledPair>& pairs) {
  if (pairs.empty()) throw ValidationError("fit_tf_idf: empty training set");
  std::unordered_map<std::string, std::uint64_t> df;
  for (const auto& pair : pairs) {
    for (const auto& w : unit_set(pair.u_units)) df[w]++;
    for (const auto& w : unit_set(pair.v_units)) df[w]++;
  }
  const double n_sentences = 2.0 * static_cast<double>(pairs.size());
  UnitWeightModel model;
  model.scheme = WeightScheme::TFIDF;
  for (const auto& [unit, d] : df)
    model.weights.emplace(unit, std::log((n_sentences + 1.0) / (static_cast<double>(d) + 1.0)) + 1.0);
  return model;
}

UnitWeightModel fit_noweight(const std::vector<LabeledPair>& pairs) {
  UnitWeightModel model;
  model.scheme = WeightScheme::NOWEIGHT;
  for (const auto& pair : pairs) {
    for (const auto& w : pair.u_units) model.weights.emplace(w, 1.0);
    for (const auto& w : pair.v_units) model.weights.emplace(w, 1.0);
  }
  return model;
}

double resolve_weight(const std::string& unit, const UnitWeightModel& model,
                      const ResolveContext& ctx) {
  // NOWEIGHT treats every unit uniformly, seen or not.
  if (model.scheme == WeightScheme::NOWEIGHT) return 1.0;

  auto it = model.weights.find(unit);
  if (it != model.weights.end()) return it->second;

  switch (model.unseen_policy) {
    case UnseenPolicy::Zero:
      return 0.0;

    case UnseenPolicy::KNN: {
      if (!ctx.table) throw ValidationError("resolve_weight: KNN policy needs an embedding table");
      const Vector* v = ctx.table->lookup(unit);
      if (!v) return 0.0;  // no embedding: the unit is ignored
      auto known_candidate = [&](const std::string& t) {
        if (!model.known(t)) return false;
        return !ctx.candidates || ctx.candidates(t);
      };
      auto nn = ctx.table->nearest_neighbors(*v, model.k, known_candidate, unit);
      if (nn.empty()) return 0.0;
      double sum = 0.0;
      for (const auto& nb : nn) sum += model.weights.at(nb.token);
      return sum / static_cast<double>(nn.size());
    }

    case UnseenPolicy::TypeAverage: {
      if (!ctx.test_types) throw ValidationError("resolve_weight: TypeAverage policy needs test types");
      double sum = 0.0;
      std::size_t n = 0;
      for (const auto& t : *ctx.test_types) {
        auto jt = model.weights.find(t);
        if (jt != model.weights.end()) {
          sum += jt->second;
          ++n;
        }
      }
      return n == 0 ? 0.0 : sum / static_cast<double>(n);
    }

    case UnseenPolicy::ContextAverage: {
      double sum = 0.0;
      std::size_t n = 0;
      for (const auto& ctx_tok : {ctx.left_ctx, ctx.right_ctx}) {
        if (!ctx_tok) continue;
        auto jt = model.weights.find(*ctx_tok);
        if (jt != model.weights.end()) {
          sum += jt->second;
          ++n;
        }
      }
      return n == 0 ? 0.0 : sum / static_cast<double>(n);  // defaults to Zero
    }
  }
  return 0.0;
}

}  // namespace ppi

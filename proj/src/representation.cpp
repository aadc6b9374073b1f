#include "ppi/representation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "ppi/errors.hpp"

namespace ppi {

Vector PairFeatures::flatten() const {
  Vector out(1 + sum.size() + absdiff.size() + mt.size());
  out[0] = cosine_sim;
  Eigen::Index at = 1;
  out.segment(at, sum.size()) = sum;
  at += sum.size();
  out.segment(at, absdiff.size()) = absdiff;
  at += absdiff.size();
  out.segment(at, mt.size()) = mt;
  return out;
}

SentenceVector sentence_vector(const UnitSequence& units, const UnitWeightModel& model,
                               const EmbeddingTable& table, const ComposeOptions& opts) {
  Vector acc = Vector::Zero(table.dim());
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto& unit = units[i];
    if (opts.count_once && !seen.insert(unit).second) continue;
    const Vector* emb = table.lookup(unit);
    if (!emb) continue;
    ResolveContext ctx;
    ctx.table = &table;
    ctx.candidates = opts.knn_candidates;
    ctx.test_types = opts.test_types;
    if (i > 0) ctx.left_ctx = units[i - 1];
    if (i + 1 < units.size()) ctx.right_ctx = units[i + 1];
    acc += resolve_weight(unit, model, ctx) * (*emb);
  }
  return acc;
}

namespace {

// Levenshtein distance in words.
std::size_t edit_distance(const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
    std::fill(cur.begin(), cur.end(), 0);
  }
  return prev[m];
}

std::size_t bag_overlap(const std::vector<std::string>& a,
                        const std::vector<std::string>& b) {
  std::map<std::string, std::size_t> count;
  for (const auto& w : a) count[w]++;
  std::size_t overlap = 0;
  for (const auto& w : b) {
    auto it = count.find(w);
    if (it != count.end() && it->second > 0) {
      it->second--;
      ++overlap;
    }
  }
  return overlap;
}

// Directed smoothed sentence BLEU-n: add-1 smoothing on every n-gram
// precision, multiplied by the brevity penalty.
double bleu_directed(const std::vector<std::string>& ref,
                     const std::vector<std::string>& hyp, int max_order) {
  double log_sum = 0.0;
  for (int n = 1; n <= max_order; ++n) {
    std::map<std::vector<std::string>, std::size_t> ref_ngrams;
    if (ref.size() >= static_cast<std::size_t>(n))
      for (std::size_t i = 0; i + n <= ref.size(); ++i)
        ref_ngrams[{ref.begin() + i, ref.begin() + i + n}]++;
    std::size_t total = 0, matched = 0;
    if (hyp.size() >= static_cast<std::size_t>(n)) {
      std::map<std::vector<std::string>, std::size_t> used;
      for (std::size_t i = 0; i + n <= hyp.size(); ++i) {
        std::vector<std::string> g(hyp.begin() + i, hyp.begin() + i + n);
        ++total;
        auto it = ref_ngrams.find(g);
        if (it != ref_ngrams.end() && used[g] < it->second) {
          used[g]++;
          ++matched;
        }
      }
    }
    log_sum += std::log((matched + 1.0) / (total + 1.0)) / max_order;
  }
  const double bp =
      hyp.size() >= ref.size()
          ? 1.0
          : std::exp(1.0 - static_cast<double>(ref.size()) / static_cast<double>(hyp.size()));
  return bp * std::exp(log_sum);
}

}  // namespace

double word_error_rate(const std::vector<std::string>& ref,
                       const std::vector<std::string>& hyp) {
  if (ref.empty()) return 1.0;
  return std::min(1.0, static_cast<double>(edit_distance(ref, hyp)) /
                           static_cast<double>(ref.size()));
}

double position_independent_error_rate(const std::vector<std::string>& ref,
                                       const std::vector<std::string>& hyp) {
  if (ref.empty()) return 1.0;
  const std::size_t errors = std::max(ref.size(), hyp.size()) - bag_overlap(ref, hyp);
  return std::min(1.0, static_cast<double>(errors) / static_cast<double>(ref.size()));
}

Vector mt_metrics(const std::vector<std::string>& ref, const std::vector<std::string>& hyp) {
  Vector out(kNumMtMetrics);
  if (ref.empty() || hyp.empty()) {
    out << 0, 0, 0, 0, 1, 1, 0, 0;
    return out;
  }
  for (int n = 1; n <= 4; ++n)
    out[n - 1] = 0.5 * (bleu_directed(ref, hyp, n) + bleu_directed(hyp, ref, n));
  out[4] = 0.5 * (word_error_rate(ref, hyp) + word_error_rate(hyp, ref));
  out[5] = 0.5 * (position_independent_error_rate(ref, hyp) +
                  position_independent_error_rate(hyp, ref));
  const double mean_len = 0.5 * static_cast<double>(ref.size() + hyp.size());
  out[6] = static_cast<double>(lcs_length(ref, hyp)) / mean_len;
  const std::size_t overlap = bag_overlap(ref, hyp);
  const double prec = static_cast<double>(overlap) / static_cast<double>(hyp.size());
  const double rec = static_cast<double>(overlap) / static_cast<double>(ref.size());
  out[7] = prec + rec > 0 ? 2.0 * prec * rec / (prec + rec) : 0.0;
  return out;
}

PairFeatures pair_feature_vector(const UnitSequence& s1_units, const UnitSequence& s2_units,
                                 const std::vector<std::string>& s1_words,
                                 const std::vector<std::string>& s2_words,
                                 const UnitWeightModel& model, const EmbeddingTable& table,
                                 const ComposeOptions& opts) {
  PairFeatures f;
  if (opts.use_embedding_features) {
    const Vector v1 = sentence_vector(s1_units, model, table, opts);
    const Vector v2 = sentence_vector(s2_units, model, table, opts);
    f.cosine_sim = cosine(v1, v2);
    f.sum = v1 + v2;
    f.absdiff = (v1 - v2).cwiseAbs();
  } else {
    f.sum = Vector(0);
    f.absdiff = Vector(0);
  }
  f.mt = opts.use_mt_features ? mt_metrics(s1_words, s2_words) : Vector(0);
  return f;
}

}  // namespace ppi

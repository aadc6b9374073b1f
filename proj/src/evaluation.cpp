#include "ppi/evaluation.hpp"

#include <cmath>
#include <random>

#include "ppi/errors.hpp"

namespace ppi {

EvalReport evaluate(const std::vector<int>& preds, const std::vector<int>& gold) {
  if (preds.size() != gold.size())
    throw ValidationError("evaluate: prediction/gold length mismatch");
  if (preds.empty()) throw ValidationError("evaluate: empty input");
  EvalReport r;
  r.n = preds.size();
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds[i] == 1)
      gold[i] == 1 ? ++r.tp : ++r.fp;
    else
      gold[i] == 1 ? ++r.fn : ++r.tn;
  }
  r.accuracy = static_cast<double>(r.tp + r.tn) / static_cast<double>(r.n);
  const std::size_t denom = 2 * r.tp + r.fp + r.fn;
  r.f1 = denom == 0 ? 0.0 : 2.0 * static_cast<double>(r.tp) / static_cast<double>(denom);
  return r;
}

SignificanceResult approx_randomization(const std::vector<int>& preds_a,
                                        const std::vector<int>& preds_b,
                                        const std::vector<int>& gold,
                                        int iterations, std::uint64_t seed) {
  if (preds_a.size() != preds_b.size() || preds_a.size() != gold.size())
    throw ValidationError("approx_randomization: length mismatch");
  if (iterations < 1) throw ValidationError("approx_randomization: iterations must be >= 1");

  const EvalReport ra = evaluate(preds_a, gold);
  const EvalReport rb = evaluate(preds_b, gold);
  const double delta_acc = std::abs(ra.accuracy - rb.accuracy);
  const double delta_f1 = std::abs(ra.f1 - rb.f1);

  const std::size_t n = gold.size();
  std::vector<int> a(n), b(n);
  std::size_t hits_acc = 0, hits_f1 = 0;
  for (int it = 0; it < iterations; ++it) {
    // Per-iteration derived seed keeps the result schedule-independent.
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(it) + 1);
    std::bernoulli_distribution flip(0.5);
    for (std::size_t i = 0; i < n; ++i) {
      if (flip(rng)) {
        a[i] = preds_b[i];
        b[i] = preds_a[i];
      } else {
        a[i] = preds_a[i];
        b[i] = preds_b[i];
      }
    }
    const EvalReport sa = evaluate(a, gold);
    const EvalReport sb = evaluate(b, gold);
    if (std::abs(sa.accuracy - sb.accuracy) >= delta_acc) ++hits_acc;
    if (std::abs(sa.f1 - sb.f1) >= delta_f1) ++hits_f1;
  }
  SignificanceResult res;
  res.delta_accuracy = delta_acc;
  res.delta_f1 = delta_f1;
  res.p_accuracy = static_cast<double>(hits_acc + 1) / static_cast<double>(iterations + 1);
  res.p_f1 = static_cast<double>(hits_f1 + 1) / static_cast<double>(iterations + 1);
  return res;
}

}  // namespace ppi

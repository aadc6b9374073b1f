#pragma once

#include <cstdint>
#include <vector>

namespace ppi {

// Binary classification report; the positive class is "paraphrase".
struct EvalReport {
  double accuracy = 0.0;
  double f1 = 0.0;
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  std::size_t n = 0;
};

EvalReport evaluate(const std::vector<int>& preds, const std::vector<int>& gold);

// Paired approximate randomization test p-values for the accuracy and F1
// differences between two systems. Each iteration swaps the two systems'
// predictions independently per position with probability 1/2;
// p = (#{pseudo-statistic >= observed} + 1) / (iterations + 1).
// The per-iteration RNG is derived from (seed, iteration), so the result
// is independent of evaluation order.
struct SignificanceResult {
  double p_accuracy;
  double p_f1;
  double delta_accuracy;
  double delta_f1;
};

SignificanceResult approx_randomization(const std::vector<int>& preds_a,
                                        const std::vector<int>& preds_b,
                                        const std::vector<int>& gold,
                                        int iterations = 10000,
                                        std::uint64_t seed = 0);

}  // namespace ppi

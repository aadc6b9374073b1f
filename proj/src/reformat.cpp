#include "ppi/reformat.hpp"

#include <algorithm>

namespace ppi {

bool is_phrase_unit(const std::string& unit) {
  return unit.find('_') != std::string::npos;
}

namespace {

// One greedy left-to-right pass over the token sequence.
UnitSequence reformat_pass(const std::vector<std::string>& tokens,
                           const PhraseLexicon& lexicon) {
  const std::size_t n = tokens.size();
  // Per-slot replacement; empty string marks a deleted slot (the right half
  // of a continuous merge).
  std::vector<std::string> slot(tokens);
  std::vector<bool> used(n, false);
  std::vector<bool> deleted(n, false);

  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    const auto* lefts = lexicon.entries_with_left(tokens[i]);
    if (!lefts) continue;

    // Continuous first: adjacent partner only.
    if (i + 1 < n && !used[i + 1]) {
      auto idx = lexicon.find(tokens[i], tokens[i + 1]);
      if (idx >= 0) {
        const auto& e = lexicon.entry(static_cast<std::size_t>(idx));
        if (e.cls == ContinuityClass::Continuous) {
          slot[i] = e.first + "_" + e.second;
          used[i] = used[i + 1] = true;
          deleted[i + 1] = true;
          continue;
        }
      }
    }

    // Discontinuous: nearest partner within distance 5. Adjacent occurrences
    // collapse to a single token; otherwise both components are rewritten.
    for (std::size_t d = 1; d <= 5 && i + d < n; ++d) {
      const std::size_t j = i + d;
      if (used[j]) continue;
      auto idx = lexicon.find(tokens[i], tokens[j]);
      if (idx < 0) continue;
      const auto& e = lexicon.entry(static_cast<std::size_t>(idx));
      if (e.cls != ContinuityClass::Discontinuous) continue;
      const std::string joined = e.first + "_" + e.second;
      used[i] = used[j] = true;
      if (d == 1) {
        slot[i] = joined;
        deleted[j] = true;
      } else {
        slot[i] = joined;
        slot[j] = joined;
      }
      break;
    }
  }

  UnitSequence out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!deleted[i]) out.push_back(std::move(slot[i]));
  return out;
}

}  // namespace

UnitSequence reformat_sentence(const std::vector<std::string>& tokens,
                               const PhraseLexicon& lexicon) {
  // Merges can shrink gaps and expose new matches, so the pass repeats
  // until a fixpoint; joined tokens never re-match.
  UnitSequence cur = reformat_pass(tokens, lexicon);
  while (true) {
    UnitSequence next = reformat_pass(cur, lexicon);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace ppi

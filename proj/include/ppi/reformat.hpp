#pragma once

#include <string>
#include <vector>

#include "ppi/lexicon.hpp"

namespace ppi {

// A sentence after phrase rewriting: each element is either a single word
// or a joined phrase token "a_b".
using UnitSequence = std::vector<std::string>;

// Rewrites a token sequence against a classified lexicon:
//  - a Continuous phrase (a,b) with b immediately after a collapses to "a_b";
//  - a Discontinuous phrase (a,b) separated by 1..4 words rewrites both
//    component words to "a_b" (the phrase token appears twice);
//  - a Discontinuous phrase occurring adjacently also collapses to one "a_b".
// Scanning is greedy left-to-right, each token participates in at most one
// replacement, the nearest eligible partner wins, and a continuous match is
// tried before a discontinuous one at the same position.
UnitSequence reformat_sentence(const std::vector<std::string>& tokens,
                               const PhraseLexicon& lexicon);

// True if the unit token is a joined phrase ("a_b").
bool is_phrase_unit(const std::string& unit);

}  // namespace ppi

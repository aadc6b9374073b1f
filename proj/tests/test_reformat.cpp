#include <doctest.h>

#include <random>

#include "ppi/reformat.hpp"
#include "support.hpp"

using namespace ppi;

namespace {

PhraseLexicon make_lexicon(
    std::initializer_list<std::tuple<const char*, const char*, ContinuityClass>> items) {
  PhraseLexicon lex;
  for (const auto& [a, b, cls] : items) {
    lex.add(a, b);
    lex.entry(lex.size() - 1).cls = cls;
  }
  return lex;
}

}  // namespace

TEST_CASE("continuous phrase merges adjacent components") {
  const auto lex = make_lexicon({{"side", "effects", ContinuityClass::Continuous}});
  CHECK(reformat_sentence({"common", "side", "effects", "include"}, lex) ==
        UnitSequence{"common", "side_effects", "include"});
}

TEST_CASE("discontinuous phrase rewrites both components") {
  const auto lex = make_lexicon({{"pick", "off", ContinuityClass::Discontinuous}});
  CHECK(reformat_sentence({"they", "pick", "the", "runner", "off"}, lex) ==
        UnitSequence{"they", "pick_off", "the", "runner", "pick_off"});
}

TEST_CASE("intervening word blocks a continuous merge") {
  const auto lex = make_lexicon({{"side", "effects", ContinuityClass::Continuous}});
  CHECK(reformat_sentence({"side", "bad", "effects"}, lex) ==
        UnitSequence{"side", "bad", "effects"});
}

TEST_CASE("empty lexicon leaves the sentence unchanged") {
  const PhraseLexicon lex;
  CHECK(reformat_sentence({"hello", "world"}, lex) == UnitSequence{"hello", "world"});
}

TEST_CASE("unknown-class phrases trigger no rewriting") {
  const auto lex = make_lexicon({{"pick", "off", ContinuityClass::Unknown}});
  CHECK(reformat_sentence({"pick", "off"}, lex) == UnitSequence{"pick", "off"});
}

TEST_CASE("adjacent discontinuous phrase collapses to a single token") {
  const auto lex = make_lexicon({{"pick", "off", ContinuityClass::Discontinuous}});
  CHECK(reformat_sentence({"they", "pick", "off", "runners"}, lex) ==
        UnitSequence{"they", "pick_off", "runners"});
}

TEST_CASE("each token participates in at most one replacement") {
  const auto lex = make_lexicon({{"a", "b", ContinuityClass::Continuous},
                                 {"b", "c", ContinuityClass::Continuous}});
  // "a b" consumes b greedily; "b c" cannot reuse it.
  CHECK(reformat_sentence({"a", "b", "c"}, lex) == UnitSequence{"a_b", "c"});
}

TEST_CASE("nearest eligible partner wins") {
  const auto lex = make_lexicon({{"pick", "off", ContinuityClass::Discontinuous}});
  CHECK(reformat_sentence({"pick", "x", "off", "y", "off"}, lex) ==
        UnitSequence{"pick_off", "x", "pick_off", "y", "off"});
}

TEST_CASE("reformat invariants over random sentences and lexicons") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto lex = test::random_lexicon(rng, 8, 12);
    const auto sentence = test::random_sentence(rng, 14, 12);
    const auto once = reformat_sentence(sentence, lex);

    // Idempotence: joined tokens never re-match.
    CHECK(reformat_sentence(once, lex) == once);

    // Length: each continuous (or adjacent discontinuous) merge shortens by
    // one; discontinuous rewrites preserve length.
    CHECK(once.size() <= sentence.size());

    // Tokens not participating in any match are preserved in order.
    std::vector<std::string> surviving_in, surviving_out;
    for (const auto& t : sentence)
      if (std::find(once.begin(), once.end(), t) != once.end()) surviving_in.push_back(t);
    for (const auto& t : once)
      if (!is_phrase_unit(t)) surviving_out.push_back(t);
    // Every non-phrase output token appears in the input.
    for (const auto& t : surviving_out)
      CHECK(std::find(sentence.begin(), sentence.end(), t) != sentence.end());

    // No empty tokens; phrase tokens contain exactly one underscore.
    for (const auto& t : once) {
      CHECK(!t.empty());
      const auto first = t.find('_');
      if (first != std::string::npos) CHECK(t.find('_', first + 1) == std::string::npos);
    }
  }
}

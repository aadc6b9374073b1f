#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace ppi {

// Counts of ordered co-occurrences "a ... b" at token distances 1..5
// (distance 1 = adjacent).
struct DistanceProfile {
  std::array<std::uint64_t, 5> counts{0, 0, 0, 0, 0};

  bool all_zero() const {
    for (auto c : counts)
      if (c != 0) return false;
    return true;
  }
};

enum class ContinuityClass { Continuous, Discontinuous, Unknown };

const char* to_string(ContinuityClass c);
ContinuityClass continuity_from_string(const std::string& s);

// Two-word phrase lexicon with per-phrase distance profiles and
// continuity classes. Phrases are ordered pairs: (a,b) and (b,a) are
// distinct entries.
class PhraseLexicon {
 public:
  struct Entry {
    std::string first;
    std::string second;
    DistanceProfile profile;
    ContinuityClass cls = ContinuityClass::Unknown;
  };

  // Adds (a,b) if not already present. Returns false on duplicate.
  bool add(const std::string& a, const std::string& b);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool contains(const std::string& a, const std::string& b) const;
  // Index of (a,b), or -1.
  std::ptrdiff_t find(const std::string& a, const std::string& b) const;

  Entry& entry(std::size_t i) { return entries_[i]; }
  const Entry& entry(std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Indices of entries whose left token is `a`.
  const std::vector<std::size_t>* entries_with_left(const std::string& a) const;

  // Re-derives every entry's class from its profile.
  void classify_all();

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::unordered_map<std::string, std::size_t>> index_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_left_;
};

// Lowercases ASCII letters in place; multibyte UTF-8 passes through.
std::string lowercase(std::string s);

// Splits a line on whitespace.
std::vector<std::string> split_tokens(const std::string& line);

// Loads a phrase lexicon: one phrase per line, two tokens separated by a
// space or an underscore. Lines are lowercased and deduplicated; blank
// lines are skipped. Throws ParseError for lines with a token count
// other than two.
PhraseLexicon load_lexicon(const std::string& path);

// Scans sentences (each a token list) and accumulates distance profiles
// for every lexicon entry. Counting never crosses sentence boundaries;
// overlapping index pairs all count.
void count_distance_profile(const std::vector<std::vector<std::string>>& corpus,
                            PhraseLexicon& lexicon, int max_dist = 5);

// Continuity heuristic: with m = (c2+c3+c4+c5)/4, a phrase is Continuous
// when c1 >= 10*m, Discontinuous otherwise, Unknown when all counts are 0.
// The comparison is exact integer arithmetic (4*c1 vs 10*(c2+..+c5)).
ContinuityClass classify_continuity(const DistanceProfile& profile);

}  // namespace ppi

#include "ppi/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ppi/errors.hpp"

namespace ppi {

const char* to_string(ContinuityClass c) {
  switch (c) {
    case ContinuityClass::Continuous: return "continuous";
    case ContinuityClass::Discontinuous: return "discontinuous";
    case ContinuityClass::Unknown: return "unknown";
  }
  return "unknown";
}

ContinuityClass continuity_from_string(const std::string& s) {
  if (s == "continuous") return ContinuityClass::Continuous;
  if (s == "discontinuous") return ContinuityClass::Discontinuous;
  if (s == "unknown") return ContinuityClass::Unknown;
  throw ValidationError("unrecognized continuity class: " + s);
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(std::move(tok));
  return out;
}

bool PhraseLexicon::add(const std::string& a, const std::string& b) {
  auto& row = index_[a];
  if (row.count(b)) return false;
  row.emplace(b, entries_.size());
  by_left_[a].push_back(entries_.size());
  entries_.push_back(Entry{a, b, {}, ContinuityClass::Unknown});
  return true;
}

bool PhraseLexicon::contains(const std::string& a, const std::string& b) const {
  return find(a, b) >= 0;
}

std::ptrdiff_t PhraseLexicon::find(const std::string& a, const std::string& b) const {
  auto it = index_.find(a);
  if (it == index_.end()) return -1;
  auto jt = it->second.find(b);
  if (jt == it->second.end()) return -1;
  return static_cast<std::ptrdiff_t>(jt->second);
}

const std::vector<std::size_t>* PhraseLexicon::entries_with_left(const std::string& a) const {
  auto it = by_left_.find(a);
  return it == by_left_.end() ? nullptr : &it->second;
}

void PhraseLexicon::classify_all() {
  for (auto& e : entries_) e.cls = classify_continuity(e.profile);
}

PhraseLexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon file: " + path);
  PhraseLexicon lex;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Underscore is an alternate separator in lexicon files.
    std::replace(line.begin(), line.end(), '_', ' ');
    auto toks = split_tokens(lowercase(line));
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw ParseError("lexicon line must contain exactly two tokens, got " +
                           std::to_string(toks.size()),
                       lineno);
    lex.add(toks[0], toks[1]);
  }
  return lex;
}

void count_distance_profile(const std::vector<std::vector<std::string>>& corpus,
                            PhraseLexicon& lexicon, int max_dist) {
  if (max_dist < 1) throw ValidationError("max_dist must be >= 1");
  const int window = std::min(max_dist, 5);
  for (const auto& sent : corpus) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(sent.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto* lefts = lexicon.entries_with_left(sent[i]);
      if (!lefts) continue;
      for (int d = 1; d <= window && i + d < n; ++d) {
        auto idx = lexicon.find(sent[i], sent[i + d]);
        if (idx >= 0) lexicon.entry(static_cast<std::size_t>(idx)).profile.counts[d - 1]++;
      }
    }
  }
}

ContinuityClass classify_continuity(const DistanceProfile& profile) {
  if (profile.all_zero()) return ContinuityClass::Unknown;
  const auto& c = profile.counts;
  const std::uint64_t tail = c[1] + c[2] + c[3] + c[4];
  // c1 >= 10 * (tail / 4), kept in integers: 4*c1 >= 10*tail.
  return 4 * c[0] >= 10 * tail ? ContinuityClass::Continuous
                               : ContinuityClass::Discontinuous;
}

}  // namespace ppi

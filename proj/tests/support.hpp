#pragma once

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "ppi/lexicon.hpp"

namespace ppi::test {

// Writes content to a unique file under the system temp dir; removes it on
// destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("ppi_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++)))
                .string();
    std::ofstream out(path_);
    out << content;
  }
  ~TempFile() { std::error_code ec; std::filesystem::remove(path_, ec); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Random word from a small closed vocabulary (no underscores).
inline std::string random_word(std::mt19937_64& rng, int vocab = 30) {
  std::uniform_int_distribution<int> pick(0, vocab - 1);
  return "w" + std::to_string(pick(rng));
}

inline std::vector<std::string> random_sentence(std::mt19937_64& rng, int max_len = 12,
                                                int vocab = 30) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::vector<std::string> out;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) out.push_back(random_word(rng, vocab));
  return out;
}

// Random classified lexicon over the same vocabulary.
inline PhraseLexicon random_lexicon(std::mt19937_64& rng, int entries = 8, int vocab = 30) {
  PhraseLexicon lex;
  std::uniform_int_distribution<int> cls(0, 2);
  for (int i = 0; i < entries; ++i) {
    const std::string a = random_word(rng, vocab);
    const std::string b = random_word(rng, vocab);
    if (!lex.add(a, b)) continue;
    auto& e = lex.entry(lex.size() - 1);
    switch (cls(rng)) {
      case 0: e.cls = ContinuityClass::Continuous; break;
      case 1: e.cls = ContinuityClass::Discontinuous; break;
      default: e.cls = ContinuityClass::Unknown; break;
    }
  }
  return lex;
}

}  // namespace ppi::test

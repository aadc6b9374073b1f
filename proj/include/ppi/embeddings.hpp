#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ppi {

using Vector = Eigen::VectorXd;

// Predicate selecting which vocabulary tokens may serve as neighbors.
using TokenPredicate = std::function<bool(const std::string&)>;

struct Neighbor {
  std::string token;
  double similarity;
};

// Immutable token -> dense vector store with exact cosine KNN.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(Eigen::Index dim = 200) : dim_(dim) {}

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return tokens_.size(); }

  // Throws ValidationError on duplicate token or wrong dimension.
  void insert(const std::string& token, const Vector& v);

  bool contains(const std::string& token) const { return index_.count(token) > 0; }
  const Vector* lookup(const std::string& token) const;

  const std::vector<std::string>& tokens() const { return tokens_; }

  // Exact k-nearest-neighbor search by cosine over candidate tokens,
  // excluding `exclude` (pass empty to exclude nothing). Sorted by
  // descending similarity; ties break lexicographically. Returns fewer
  // than k when the candidate set is smaller.
  std::vector<Neighbor> nearest_neighbors(const Vector& query, int k,
                                          const TokenPredicate& candidates = nullptr,
                                          const std::string& exclude = "") const;
  // Query by token; throws ValidationError for an unknown token.
  std::vector<Neighbor> nearest_neighbors(const std::string& query, int k,
                                          const TokenPredicate& candidates = nullptr) const;

 private:
  Eigen::Index dim_;
  std::vector<std::string> tokens_;
  std::vector<Vector> vectors_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Cosine similarity; 0 when either vector has zero norm. Throws
// ValidationError on length mismatch.
double cosine(const Vector& u, const Vector& v);

// Loads word2vec text format: header "<vocab> <dim>", then one line per
// token. With expect_header=false the dimension is inferred from the first
// line and no header is consumed.
EmbeddingTable load_embeddings(const std::string& path, bool expect_header = true);

// Deterministic synthetic table: unit-normal entries, then normalized.
EmbeddingTable make_random_table(const std::vector<std::string>& tokens,
                                 Eigen::Index dim, std::uint64_t seed);

}  // namespace ppi

#include "ppi/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "ppi/errors.hpp"

namespace ppi {

double cosine(const Vector& u, const Vector& v) {
  if (u.size() != v.size())
    throw ValidationError("cosine: vector length mismatch (" + std::to_string(u.size()) +
                          " vs " + std::to_string(v.size()) + ")");
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return u.dot(v) / (nu * nv);
}

void EmbeddingTable::insert(const std::string& token, const Vector& v) {
  if (v.size() != dim_)
    throw ValidationError("embedding for '" + token + "' has dimension " +
                          std::to_string(v.size()) + ", expected " + std::to_string(dim_));
  if (index_.count(token)) throw ValidationError("duplicate token: " + token);
  index_.emplace(token, tokens_.size());
  tokens_.push_back(token);
  vectors_.push_back(v);
  norms_.push_back(v.norm());
}

const Vector* EmbeddingTable::lookup(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? nullptr : &vectors_[it->second];
}

std::vector<Neighbor> EmbeddingTable::nearest_neighbors(const Vector& query, int k,
                                                        const TokenPredicate& candidates,
                                                        const std::string& exclude) const {
  if (k < 1) throw ValidationError("nearest_neighbors: k must be >= 1");
  if (query.size() != dim_)
    throw ValidationError("nearest_neighbors: query dimension mismatch");
  const double qn = query.norm();

  std::vector<Neighbor> all;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!exclude.empty() && tokens_[i] == exclude) continue;
    if (candidates && !candidates(tokens_[i])) continue;
    double sim = 0.0;
    if (qn != 0.0 && norms_[i] != 0.0) sim = query.dot(vectors_[i]) / (qn * norms_[i]);
    all.push_back(Neighbor{tokens_[i], sim});
  }
  const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), all.size());
  auto cmp = [](const Neighbor& a, const Neighbor& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.token < b.token;
  };
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(kk), all.end(), cmp);
  all.resize(kk);
  return all;
}

std::vector<Neighbor> EmbeddingTable::nearest_neighbors(const std::string& query, int k,
                                                        const TokenPredicate& candidates) const {
  const Vector* v = lookup(query);
  if (!v) throw ValidationError("nearest_neighbors: unknown query token: " + query);
  return nearest_neighbors(*v, k, candidates, query);
}

EmbeddingTable load_embeddings(const std::string& path, bool expect_header) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open embeddings file: " + path);

  std::string line;
  long lineno = 0;
  long declared_vocab = -1;
  Eigen::Index dim = -1;

  if (expect_header) {
    if (!std::getline(in, line)) throw ParseError("empty embeddings file", 1);
    ++lineno;
    std::istringstream iss(line);
    long v = 0, d = 0;
    if (!(iss >> v >> d) || v < 0 || d <= 0)
      throw ParseError("malformed word2vec header: '" + line + "'", lineno);
    declared_vocab = v;
    dim = static_cast<Eigen::Index>(d);
  }

  std::vector<std::pair<std::string, Vector>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream iss(line);
    std::string token;
    iss >> token;
    std::vector<double> vals;
    double x;
    while (iss >> x) vals.push_back(x);
    if (!iss.eof()) throw ParseError("non-numeric embedding value for '" + token + "'", lineno);
    if (dim < 0) dim = static_cast<Eigen::Index>(vals.size());
    if (static_cast<Eigen::Index>(vals.size()) != dim)
      throw ParseError("embedding for '" + token + "' has " + std::to_string(vals.size()) +
                           " values, expected " + std::to_string(dim),
                       lineno);
    rows.emplace_back(token, Eigen::Map<const Vector>(vals.data(),
                                                      static_cast<Eigen::Index>(vals.size())));
  }
  if (dim < 0) dim = 0;

  if (declared_vocab >= 0 && static_cast<long>(rows.size()) != declared_vocab)
    throw ParseError("header declares " + std::to_string(declared_vocab) +
                     " tokens but file contains " + std::to_string(rows.size()));

  EmbeddingTable table(dim);
  for (auto& [token, vec] : rows) table.insert(token, vec);
  return table;
}

EmbeddingTable make_random_table(const std::vector<std::string>& tokens,
                                 Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  EmbeddingTable table(dim);
  for (const auto& tok : tokens) {
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = gauss(rng);
    const double n = v.norm();
    if (n > 0) v /= n;
    table.insert(tok, v);
  }
  return table;
}

}  // namespace ppi

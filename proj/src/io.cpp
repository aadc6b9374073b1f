#include "ppi/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ppi/errors.hpp"

namespace ppi {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return in;
}

std::ofstream create_or_throw(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  return out;
}

}  // namespace

std::vector<std::vector<std::string>> load_corpus(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<std::vector<std::string>> corpus;
  std::string line;
  while (std::getline(in, line)) corpus.push_back(split_tokens(lowercase(line)));
  return corpus;
}

void save_profiles(const PhraseLexicon& lexicon, const std::string& path) {
  auto out = create_or_throw(path);
  for (const auto& e : lexicon.entries()) {
    out << e.first << "_" << e.second;
    for (auto c : e.profile.counts) out << "\t" << c;
    out << "\t" << to_string(e.cls) << "\n";
  }
}

PhraseLexicon load_profiles(const std::string& path) {
  auto in = open_or_throw(path);
  PhraseLexicon lex;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    if (cols.size() != 6 && cols.size() != 7)
      throw ParseError("profile row needs 6 or 7 columns, got " + std::to_string(cols.size()),
                       lineno);
    const std::size_t us = cols[0].find('_');
    if (us == std::string::npos || us == 0 || us + 1 == cols[0].size() ||
        cols[0].find('_', us + 1) != std::string::npos)
      throw ParseError("malformed phrase token: " + cols[0], lineno);
    const std::string a = lowercase(cols[0].substr(0, us));
    const std::string b = lowercase(cols[0].substr(us + 1));
    if (!lex.add(a, b)) throw ParseError("duplicate phrase: " + cols[0], lineno);
    auto& e = lex.entry(lex.size() - 1);
    for (int i = 0; i < 5; ++i) {
      try {
        e.profile.counts[i] = std::stoull(cols[1 + i]);
      } catch (const std::exception&) {
        throw ParseError("non-numeric count '" + cols[1 + i] + "'", lineno);
      }
    }
    e.cls = cols.size() == 7 ? continuity_from_string(cols[6]) : classify_continuity(e.profile);
  }
  return lex;
}

std::vector<RawPair> load_msrp(const std::string& path) {
  auto in = open_or_throw(path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty MSRP file: " + path, 1);
  long lineno = 1;
  std::vector<RawPair> pairs;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    if (cols.size() != 5)
      throw ParseError("MSRP row needs 5 tab-separated columns, got " +
                           std::to_string(cols.size()),
                       lineno);
    RawPair p;
    if (cols[0] == "1") p.label = 1;
    else if (cols[0] == "0") p.label = 0;
    else throw ParseError("Quality column must be 0 or 1, got '" + cols[0] + "'", lineno);
    p.words1 = split_tokens(lowercase(cols[3]));
    p.words2 = split_tokens(lowercase(cols[4]));
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void save_weight_model(const UnitWeightModel& model, const std::string& path) {
  auto out = create_or_throw(path);
  out.precision(17);
  out << "# scheme=" << to_string(model.scheme) << "\n";
  out << "# alpha=" << model.alpha << "\n";
  out << "# k=" << model.k << "\n";
  out << "# unseen_policy=" << to_string(model.unseen_policy) << "\n";
  if (model.embedding_dim >= 0) out << "# dim=" << model.embedding_dim << "\n";
  // Sorted for reproducible output.
  std::vector<std::pair<std::string, double>> rows(model.weights.begin(), model.weights.end());
  std::sort(rows.begin(), rows.end());
  for (const auto& [unit, w] : rows) out << unit << "\t" << w << "\n";
}

UnitWeightModel load_weight_model(const std::string& path) {
  auto in = open_or_throw(path);
  UnitWeightModel model;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string meta = line.substr(1);
      const std::size_t eq = meta.find('=');
      if (eq == std::string::npos) continue;
      std::string key = meta.substr(0, eq);
      std::string val = meta.substr(eq + 1);
      key.erase(0, key.find_first_not_of(' '));
      if (key == "scheme") model.scheme = scheme_from_string(val);
      else if (key == "alpha") model.alpha = std::stod(val);
      else if (key == "k") model.k = std::stoi(val);
      else if (key == "unseen_policy") model.unseen_policy = policy_from_string(val);
      else if (key == "dim") model.embedding_dim = std::stol(val);
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() != 2)
      throw ParseError("weight row needs 2 columns, got " + std::to_string(cols.size()), lineno);
    try {
      if (!model.weights.emplace(cols[0], std::stod(cols[1])).second)
        throw ParseError("duplicate unit: " + cols[0], lineno);
    } catch (const std::invalid_argument&) {
      throw ParseError("non-numeric weight '" + cols[1] + "'", lineno);
    }
  }
  return model;
}

void save_feature_matrix(const FeatureMatrix& m, const std::string& path) {
  auto out = create_or_throw(path);
  out.precision(17);
  out << "# dim=" << m.embedding_dim << " mt=" << m.mt_dim << "\n";
  for (Eigen::Index i = 0; i < m.features.rows(); ++i) {
    out << m.labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m.features.cols(); ++j) out << "\t" << m.features(i, j);
    out << "\n";
  }
}

FeatureMatrix load_feature_matrix(const std::string& path) {
  auto in = open_or_throw(path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty feature matrix file: " + path, 1);
  FeatureMatrix m;
  if (line.rfind("# dim=", 0) != 0) throw ParseError("missing feature metadata line", 1);
  {
    std::istringstream iss(line.substr(1));
    std::string tok;
    while (iss >> tok) {
      if (tok.rfind("dim=", 0) == 0) m.embedding_dim = std::stol(tok.substr(4));
      else if (tok.rfind("mt=", 0) == 0) m.mt_dim = std::stol(tok.substr(3));
    }
  }
  const Eigen::Index expected_cols = 1 + 2 * m.embedding_dim + m.mt_dim;
  std::vector<std::vector<double>> rows;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    if (static_cast<Eigen::Index>(cols.size()) != expected_cols + 1)
      throw ParseError("feature row has " + std::to_string(cols.size() - 1) +
                           " features, metadata implies " + std::to_string(expected_cols),
                       lineno);
    if (cols[0] != "0" && cols[0] != "1")
      throw ParseError("label must be 0 or 1, got '" + cols[0] + "'", lineno);
    m.labels.push_back(cols[0] == "1" ? 1 : 0);
    std::vector<double> row;
    row.reserve(cols.size() - 1);
    for (std::size_t j = 1; j < cols.size(); ++j) {
      try {
        row.push_back(std::stod(cols[j]));
      } catch (const std::exception&) {
        throw ParseError("non-numeric feature '" + cols[j] + "'", lineno);
      }
    }
    rows.push_back(std::move(row));
  }
  m.features.resize(static_cast<Eigen::Index>(rows.size()), expected_cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Eigen::Index j = 0; j < expected_cols; ++j)
      m.features(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  return m;
}

std::vector<int> load_labels(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<int> labels;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line == "0") labels.push_back(0);
    else if (line == "1") labels.push_back(1);
    else throw ParseError("label must be 0 or 1, got '" + line + "'", lineno);
  }
  return labels;
}

void save_labels(const std::vector<int>& labels, const std::string& path) {
  auto out = create_or_throw(path);
  for (int l : labels) out << l << "\n";
}

}  // namespace ppi

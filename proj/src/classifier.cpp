#include "ppi/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "ppi/errors.hpp"

namespace ppi {

namespace {

Eigen::VectorXd standardize_row(const LinearModel& m, const Eigen::VectorXd& x) {
  Eigen::VectorXd z = x - m.feature_mean;
  for (Eigen::Index j = 0; j < z.size(); ++j)
    if (m.feature_std[j] > 0) z[j] /= m.feature_std[j];
  return z;
}

double objective(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                 const Eigen::VectorXd& w, double b, double c) {
  const Eigen::VectorXd margins = (x * w).array() + b;
  double hinge_sum = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    hinge_sum += std::max(0.0, 1.0 - y[i] * margins[i]);
  return 0.5 * w.squaredNorm() + c * hinge_sum;
}

}  // namespace

LinearModel train_linear(const Eigen::MatrixXd& features,
                         const std::vector<int>& labels, double C,
                         std::uint64_t seed, bool standardize) {
  const Eigen::Index n = features.rows();
  const Eigen::Index d = features.cols();
  if (static_cast<Eigen::Index>(labels.size()) != n)
    throw ValidationError("train_linear: label count does not match feature rows");
  if (C <= 0) throw ValidationError("train_linear: C must be positive");

  bool has_pos = false, has_neg = false;
  for (int l : labels) (l == 1 ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg)
    throw ValidationError("train_linear: training data must contain both classes");

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (!std::isfinite(features(i, j)))
        throw ValidationError("train_linear: non-finite feature at row " + std::to_string(i) +
                              ", column " + std::to_string(j));

  LinearModel model;
  model.C = C;
  model.seed = seed;
  if (standardize) {
    model.feature_mean = features.colwise().mean();
    Eigen::VectorXd var =
        ((features.rowwise() - model.feature_mean.transpose()).array().square().colwise().sum() /
         static_cast<double>(n))
            .transpose();
    model.feature_std = var.cwiseMax(0.0).cwiseSqrt();
  } else {
    model.feature_mean = Eigen::VectorXd::Zero(d);
    model.feature_std = Eigen::VectorXd::Ones(d);
  }

  Eigen::MatrixXd x = features.rowwise() - model.feature_mean.transpose();
  for (Eigen::Index j = 0; j < d; ++j)
    if (model.feature_std[j] > 0) x.col(j) /= model.feature_std[j];

  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y[i] = labels[i] == 1 ? 1.0 : -1.0;

  Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
  double b = 0.0;
  double best_obj = objective(x, y, w, b, C);
  model.objective_trace.push_back(best_obj);
  Eigen::VectorXd best_w = w;
  double best_b = b;

  std::mt19937_64 rng(seed);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  const int max_epochs = 1000;
  const double tol = 1e-6;
  double eta = 0.5 / (1.0 + C);

  for (int epoch = 0; epoch < max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (Eigen::Index i : order) {
      const double margin = y[i] * (w.dot(x.row(i)) + b);
      // Per-sample subgradient of (1/2n)||w||^2 * n + C * hinge_i.
      w *= (1.0 - eta / static_cast<double>(n));
      if (margin < 1.0) {
        w += eta * C * y[i] * x.row(i).transpose();
        b += eta * C * y[i];
      }
    }
    const double obj = objective(x, y, w, b, C);
    if (obj <= best_obj) {
      const double improvement = best_obj - obj;
      best_obj = obj;
      best_w = w;
      best_b = b;
      model.objective_trace.push_back(best_obj);
      if (improvement < tol) break;
    } else {
      w = best_w;
      b = best_b;
      eta *= 0.5;
      if (eta < 1e-12) break;
    }
  }

  model.weights = best_w;
  model.bias = best_b;
  return model;
}

double decision_score(const LinearModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.weights.size())
    throw ValidationError("predict: feature length " + std::to_string(x.size()) +
                          " does not match model dimension " +
                          std::to_string(model.weights.size()));
  return model.weights.dot(standardize_row(model, x)) + model.bias;
}

Prediction predict(const LinearModel& model, const Eigen::VectorXd& x) {
  const double s = decision_score(model, x);
  return Prediction{s >= 0.0 ? 1 : 0, s};
}

std::vector<int> predict_labels(const LinearModel& model, const Eigen::MatrixXd& features) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(features.rows()));
  for (Eigen::Index i = 0; i < features.rows(); ++i)
    out.push_back(predict(model, features.row(i).transpose()).label);
  return out;
}

void save_linear_model(const LinearModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write model file: " + path);
  out.precision(17);
  out << "ppi-linear-model v1\n";
  out << "dim " << model.weights.size() << "\n";
  out << "C " << model.C << "\n";
  out << "seed " << model.seed << "\n";
  auto dump = [&](const char* name, const Eigen::VectorXd& v) {
    out << name;
    for (Eigen::Index i = 0; i < v.size(); ++i) out << " " << v[i];
    out << "\n";
  };
  dump("mean", model.feature_mean);
  dump("std", model.feature_std);
  dump("weights", model.weights);
  out << "bias " << model.bias << "\n";
}

LinearModel load_linear_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "ppi-linear-model v1")
    throw ParseError("unrecognized model file header", 1);

  LinearModel model;
  Eigen::Index dim = -1;
  long lineno = 1;
  auto parse_vec = [&](std::istringstream& iss) {
    std::vector<double> vals;
    double v;
    while (iss >> v) vals.push_back(v);
    if (static_cast<Eigen::Index>(vals.size()) != dim)
      throw ParseError("vector length mismatch in model file", lineno);
    return Eigen::Map<const Eigen::VectorXd>(vals.data(),
                                             static_cast<Eigen::Index>(vals.size()))
        .eval();
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream iss(line);
    std::string key;
    iss >> key;
    if (key == "dim") iss >> dim;
    else if (key == "C") iss >> model.C;
    else if (key == "seed") iss >> model.seed;
    else if (key == "mean") model.feature_mean = parse_vec(iss);
    else if (key == "std") model.feature_std = parse_vec(iss);
    else if (key == "weights") model.weights = parse_vec(iss);
    else if (key == "bias") iss >> model.bias;
    else if (!key.empty()) throw ParseError("unknown model file key: " + key, lineno);
  }
  if (model.weights.size() == 0 || model.weights.size() != dim)
    throw ParseError("incomplete model file: " + path);
  return model;
}

}  // namespace ppi

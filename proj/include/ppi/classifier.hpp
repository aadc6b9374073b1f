#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace ppi {

// L2-regularized linear binary classifier with z-score standardization
// fitted on the training data. Zero-variance features pass through unscaled.
struct LinearModel {
  Eigen::VectorXd weights;
  double bias = 0.0;
  Eigen::VectorXd feature_mean;
  Eigen::VectorXd feature_std;  // entries >= 0; 0 means pass-through
  double C = 1.0;
  std::uint64_t seed = 0;
  // Objective value after each accepted optimizer iteration; non-increasing.
  std::vector<double> objective_trace;
};

// Trains by minimizing (1/2)||w||^2 + C * sum hinge(y_i (w.x_i + b)).
// Deterministic: seeded epoch shuffling, iterates accepted only when the
// objective does not increase, stops when the improvement drops below 1e-6
// or the iteration cap is reached. Labels are {0,1}.
// Throws ValidationError on single-class input or non-finite features.
// With standardize=false the model uses an identity standardizer.
LinearModel train_linear(const Eigen::MatrixXd& features,
                         const std::vector<int>& labels, double C,
                         std::uint64_t seed, bool standardize = true);

// Score = w . standardize(x) + b.
double decision_score(const LinearModel& model, const Eigen::VectorXd& x);

// Label 1 iff score >= 0.
struct Prediction {
  int label;
  double score;
};
Prediction predict(const LinearModel& model, const Eigen::VectorXd& x);

std::vector<int> predict_labels(const LinearModel& model, const Eigen::MatrixXd& features);

void save_linear_model(const LinearModel& model, const std::string& path);
LinearModel load_linear_model(const std::string& path);

}  // namespace ppi

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcm/matrix.hpp"

namespace mcm {

// A regression corpus: M samples of dimension n with real targets.
// Immutable by convention once loaded; safe to share across threads.
struct Dataset {
  Matrix features;                         // M x n
  std::vector<double> targets;             // length M
  std::vector<std::string> feature_names;  // empty, or length n

  int num_samples() const { return features.rows; }
  int num_features() const { return features.cols; }
};

// Per-column z-score parameters. Enough to apply the transform to new data
// and to invert it exactly. Constant columns keep std 1 and are flagged.
struct ScalingParams {
  std::vector<double> feature_means;
  std::vector<double> feature_stds;
  double target_mean = 0.0;
  double target_std = 1.0;
  std::vector<int> constant_columns;

  int num_features() const { return static_cast<int>(feature_means.size()); }
};

// Deterministic k-fold assignment: assignments[i] in [0,k) for each sample.
struct FoldPlan {
  int k = 0;
  std::vector<int> assignments;

  std::vector<int> validation_indices(int fold) const;
  std::vector<int> training_indices(int fold) const;
};

// CSV loading. Comma separated, '.' decimal point, optional single header
// line, no quoting. target_column: column index, or nullopt for the last
// column. Fails fast on non-numeric cells, NaN/Inf, ragged or empty files.
Dataset load_csv(const std::string& path, bool has_header,
                 std::optional<int> target_column);

// Feature-only variant used at prediction time; zero rows are allowed.
Matrix load_features_csv(const std::string& path, bool has_header,
                         std::vector<std::string>* names = nullptr);

// Writes features plus a final target column, full round-trip precision.
// A header line is written when the dataset carries feature names.
void write_csv(const Dataset& d, const std::string& path);

// z-score parameters of d (population std, divisor M; constant columns get
// std 1 and are recorded in constant_columns). Requires M >= 2.
ScalingParams compute_scaling(const Dataset& d);

Dataset apply_scaling(const Dataset& d, const ScalingParams& p);
Matrix apply_feature_scaling(const Matrix& X, const ScalingParams& p);
Dataset invert_scaling(const Dataset& d, const ScalingParams& p);

inline double scale_target(double raw, const ScalingParams& p) {
  return (raw - p.target_mean) / p.target_std;
}
inline double unscale_target(double standardized, const ScalingParams& p) {
  return standardized * p.target_std + p.target_mean;
}

// Identity transform, used when standardization is disabled.
ScalingParams identity_scaling(int num_features);

// standardize = compute + apply in one step.
std::pair<Dataset, ScalingParams> standardize(const Dataset& d);

// Shuffled fold assignment, a pure function of (num_samples, k, seed).
// Fold sizes differ by at most one. Requires 2 <= k <= num_samples.
FoldPlan kfold_split(int num_samples, int k, uint64_t seed);
FoldPlan kfold_split(const Dataset& d, int k, uint64_t seed);

Dataset select_rows(const Dataset& d, const std::vector<int>& indices);

}  // namespace mcm

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "covelm/elm.hpp"
#include "covelm/features.hpp"
#include "covelm/metrics.hpp"

namespace covelm {

struct FoldPlan {
    int k = 0;
    std::vector<int> assignment;  // per-sample fold index in [0, k)
    std::uint64_t seed = 0;
    bool stratified = true;
};

/// Stratified: shuffles within each class, then deals round-robin, so
/// per-class fold sizes differ by at most one. Deterministic given the seed.
FoldPlan kfold_split(std::span<const int> labels, int n_classes, int k,
                     std::uint64_t seed, bool stratified);

struct FoldResult {
    int index = 0;
    int test_size = 0;
    ConfusionMatrix cm;
    ClassReport report;
    std::vector<RocCurve> roc;  // one per class, one-vs-rest on the held-out fold
    Standardizer standardizer;  // fitted on the training folds only
};

struct CvConfig {
    int k = 10;
    int n_hidden = 350;
    Activation activation = Activation::rbf_l2;
    std::uint64_t seed = 0;
    Subset subset = Subset::combined;
    bool stratified = true;
};

struct CvReport {
    CvConfig config;
    std::vector<std::string> class_order;
    std::vector<FoldResult> folds;
    ConfusionMatrix pooled;
    ClassReport pooled_report;
    SensitivityCi sens_ci;
};

/// Per fold: selects the feature subset, trains on the other folds (the
/// standardizer is fitted on training rows only, hidden-layer seed is
/// seed + fold index), scores the held-out fold, and aggregates.
CvReport cross_validate(const Matrix& features, std::span<const int> labels,
                        const std::vector<std::string>& class_order,
                        const FoldPlan& plan, const CvConfig& config);

struct SweepRow {
    int n_hidden = 0;
    double accuracy = 0.0;
};

/// One cross-validation per L over a shared fold plan.
std::vector<SweepRow> sweep_hidden(const Matrix& features, std::span<const int> labels,
                                   const std::vector<std::string>& class_order,
                                   const FoldPlan& plan,
                                   const std::vector<int>& l_values,
                                   const CvConfig& base_config);

struct AblationEntry {
    Subset subset = Subset::combined;
    std::vector<double> per_fold_macro_sensitivity;
    double median = 0.0;
};

/// Cross-validation for the frequency, texture, and combined subsets;
/// reports per-fold macro sensitivities and their medians.
std::vector<AblationEntry> ablate_subsets(const Matrix& features,
                                          std::span<const int> labels,
                                          const std::vector<std::string>& class_order,
                                          const FoldPlan& plan,
                                          const CvConfig& base_config);

double median_of(std::vector<double> values);

}  // namespace covelm

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covelm/matrix.hpp"

namespace covelm {

/// Row = true class, column = predicted class.
struct ConfusionMatrix {
    std::vector<std::string> class_order;
    std::vector<std::int64_t> counts;  // m x m, row-major

    int size() const { return int(class_order.size()); }
    std::int64_t at(int t, int p) const { return counts[std::size_t(t) * size() + p]; }
    std::int64_t& at(int t, int p) { return counts[std::size_t(t) * size() + p]; }
    std::int64_t total() const;
    std::int64_t row_total(int t) const;
    std::int64_t col_total(int p) const;
};

ConfusionMatrix confusion(std::span<const int> true_labels,
                          std::span<const int> predicted_labels,
                          const std::vector<std::string>& class_order);

/// Per-class precision/recall/F1 plus macro-F1 and accuracy; empty
/// denominators yield 0 and still count toward the macro average.
struct ClassReport {
    std::vector<double> precision;
    std::vector<double> recall;
    std::vector<double> f1;
    double macro_f1 = 0.0;
    double accuracy = 0.0;
};

ClassReport class_report(const ConfusionMatrix& cm);

struct RocCurve {
    std::vector<std::pair<double, double>> points;  // (fpr, tpr), (0,0) .. (1,1)
    double auc = 0.0;
};

/// One-vs-rest ROC over the positive-class score column. Tied scores are
/// processed at a single threshold step; AUC by the trapezoidal rule.
/// Throws DegenerateCurve when the class has no positives or no negatives.
RocCurve roc_one_vs_rest(std::span<const int> true_labels, const Matrix& scores,
                         int positive_class);

struct MeanCi {
    double mean = 0.0;
    double half_width = 0.0;
};

/// Normal-approximation confidence interval over per-fold values:
/// mean +/- z * sample_std / sqrt(k). Requires k >= 2.
MeanCi mean_ci(std::span<const double> fold_values, double confidence = 0.95);

struct SensitivityCi {
    std::vector<MeanCi> per_class;
    MeanCi overall;  // CI of the per-fold macro (across-class mean) recall
};

/// per_fold_recalls[fold][class].
SensitivityCi sensitivity_ci(const std::vector<std::vector<double>>& per_fold_recalls,
                             double confidence = 0.95);

}  // namespace covelm

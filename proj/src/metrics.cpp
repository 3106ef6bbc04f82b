#include "covelm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "covelm/error.hpp"

namespace covelm {

std::int64_t ConfusionMatrix::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t(0));
}

std::int64_t ConfusionMatrix::row_total(int t) const {
    std::int64_t s = 0;
    for (int p = 0; p < size(); ++p) s += at(t, p);
    return s;
}

std::int64_t ConfusionMatrix::col_total(int p) const {
    std::int64_t s = 0;
    for (int t = 0; t < size(); ++t) s += at(t, p);
    return s;
}

ConfusionMatrix confusion(std::span<const int> true_labels,
                          std::span<const int> predicted_labels,
                          const std::vector<std::string>& class_order) {
    if (true_labels.size() != predicted_labels.size())
        throw InvalidInput("confusion: label sequences differ in length");
    const int m = int(class_order.size());
    if (m < 1) throw InvalidInput("confusion: empty class order");

    ConfusionMatrix cm;
    cm.class_order = class_order;
    cm.counts.assign(std::size_t(m) * m, 0);
    for (std::size_t i = 0; i < true_labels.size(); ++i) {
        const int t = true_labels[i], p = predicted_labels[i];
        if (t < 0 || t >= m || p < 0 || p >= m)
            throw InvalidInput("confusion: label outside class order");
        ++cm.at(t, p);
    }
    return cm;
}

ClassReport class_report(const ConfusionMatrix& cm) {
    const int m = cm.size();
    const std::int64_t total = cm.total();
    if (total == 0) throw InvalidInput("class_report: empty confusion matrix");

    ClassReport r;
    r.precision.resize(m);
    r.recall.resize(m);
    r.f1.resize(m);
    std::int64_t trace = 0;
    for (int c = 0; c < m; ++c) {
        const double tp = double(cm.at(c, c));
        const std::int64_t col = cm.col_total(c), row = cm.row_total(c);
        r.precision[c] = col > 0 ? tp / double(col) : 0.0;
        r.recall[c] = row > 0 ? tp / double(row) : 0.0;
        const double pr = r.precision[c] + r.recall[c];
        r.f1[c] = pr > 0.0 ? 2.0 * r.precision[c] * r.recall[c] / pr : 0.0;
        trace += cm.at(c, c);
    }
    r.macro_f1 = std::accumulate(r.f1.begin(), r.f1.end(), 0.0) / m;
    r.accuracy = double(trace) / double(total);
    return r;
}

RocCurve roc_one_vs_rest(std::span<const int> true_labels, const Matrix& scores,
                         int positive_class) {
    if (int(true_labels.size()) != scores.rows)
        throw InvalidInput("roc: labels and score rows differ");
    if (positive_class < 0 || positive_class >= scores.cols)
        throw InvalidInput("roc: positive class outside score columns");
    require_finite(scores, "roc");

    const int n = scores.rows;
    std::int64_t pos = 0;
    for (int y : true_labels)
        if (y == positive_class) ++pos;
    const std::int64_t neg = n - pos;
    if (pos == 0 || neg == 0)
        throw DegenerateCurve("roc: class has no positives or no negatives");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double sa = scores(a, positive_class), sb = scores(b, positive_class);
        if (sa != sb) return sa > sb;
        return a < b;
    });

    RocCurve curve;
    curve.points.emplace_back(0.0, 0.0);
    std::int64_t tp = 0, fp = 0;
    double auc = 0.0;
    int i = 0;
    while (i < n) {
        const double s = scores(order[i], positive_class);
        // All ties share one threshold step.
        while (i < n && scores(order[i], positive_class) == s) {
            if (true_labels[order[i]] == positive_class)
                ++tp;
            else
                ++fp;
            ++i;
        }
        const double x = double(fp) / double(neg);
        const double y = double(tp) / double(pos);
        const auto [px, py] = curve.points.back();
        auc += (x - px) * (y + py) * 0.5;
        curve.points.emplace_back(x, y);
    }
    curve.auc = auc;
    return curve;
}

namespace {

double z_value(double confidence) {
    if (confidence == 0.95) return 1.96;
    if (confidence == 0.90) return 1.645;
    if (confidence == 0.99) return 2.576;
    throw InvalidInput("confidence level must be one of 0.90, 0.95, 0.99");
}

}  // namespace

MeanCi mean_ci(std::span<const double> fold_values, double confidence) {
    const std::size_t k = fold_values.size();
    if (k < 2) throw InvalidInput("mean_ci: need at least two folds");
    const double z = z_value(confidence);

    double sum = 0.0;
    for (double v : fold_values) sum += v;
    const double mean = sum / double(k);
    double ss = 0.0;
    for (double v : fold_values) {
        const double d = v - mean;
        ss += d * d;
    }
    const double sd = std::sqrt(ss / double(k - 1));
    return {mean, z * sd / std::sqrt(double(k))};
}

SensitivityCi sensitivity_ci(const std::vector<std::vector<double>>& per_fold_recalls,
                             double confidence) {
    if (per_fold_recalls.size() < 2)
        throw InvalidInput("sensitivity_ci: need at least two folds");
    const std::size_t m = per_fold_recalls.front().size();
    for (const auto& fold : per_fold_recalls)
        if (fold.size() != m)
            throw InvalidInput("sensitivity_ci: ragged per-fold recall table");

    SensitivityCi out;
    std::vector<double> series(per_fold_recalls.size());
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t f = 0; f < per_fold_recalls.size(); ++f)
            series[f] = per_fold_recalls[f][c];
        out.per_class.push_back(mean_ci(series, confidence));
    }
    for (std::size_t f = 0; f < per_fold_recalls.size(); ++f) {
        double s = 0.0;
        for (double v : per_fold_recalls[f]) s += v;
        series[f] = s / double(m);
    }
    out.overall = mean_ci(series, confidence);
    return out;
}

}  // namespace covelm

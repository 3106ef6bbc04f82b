#include "covelm/eval.hpp"

#include <algorithm>
#include <random>

#include "covelm/error.hpp"

namespace covelm {

namespace {

// Engine-direct shuffle; std::shuffle's distribution is implementation-defined.
void shuffle_indices(std::vector<int>& idx, std::mt19937_64& eng) {
    for (std::size_t i = idx.size(); i > 1; --i)
        std::swap(idx[i - 1], idx[eng() % i]);
}

Matrix gather_rows(const Matrix& src, const std::vector<int>& rows) {
    Matrix out(int(rows.size()), src.cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < src.cols; ++j) out(int(i), j) = src(rows[i], j);
    return out;
}

Matrix select_columns(const Matrix& src, Subset subset) {
    if (subset == Subset::combined) return src;
    if (src.cols != kFeatureCount)
        throw InvalidInput("cross_validate: expected a full 168-column feature matrix");
    const int from = subset == Subset::texture ? 0 : kTextureFeatures;
    const int count = subset == Subset::texture ? kTextureFeatures : kFrequencyFeatures;
    Matrix out(src.rows, count);
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < count; ++j) out(i, j) = src(i, from + j);
    return out;
}

}  // namespace

FoldPlan kfold_split(std::span<const int> labels, int n_classes, int k,
                     std::uint64_t seed, bool stratified) {
    const int n = int(labels.size());
    if (k < 2) throw InvalidInput("kfold_split: k must be at least 2");
    if (n < k) throw InvalidInput("kfold_split: fewer samples than folds");

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.stratified = stratified;
    plan.assignment.assign(n, -1);
    std::mt19937_64 eng(seed);

    if (stratified) {
        for (int c = 0; c < n_classes; ++c) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i)
                if (labels[i] == c) members.push_back(i);
            if (int(members.size()) < k)
                throw InvalidInput("kfold_split: class " + std::to_string(c) +
                                   " has fewer samples than folds");
            shuffle_indices(members, eng);
            for (std::size_t t = 0; t < members.size(); ++t)
                plan.assignment[members[t]] = int(t % k);
        }
        for (int i = 0; i < n; ++i)
            if (plan.assignment[i] < 0)
                throw InvalidInput("kfold_split: label index outside class set");
    } else {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        shuffle_indices(idx, eng);
        for (int t = 0; t < n; ++t) plan.assignment[idx[t]] = t % k;
    }
    return plan;
}

CvReport cross_validate(const Matrix& features, std::span<const int> labels,
                        const std::vector<std::string>& class_order,
                        const FoldPlan& plan, const CvConfig& config) {
    const int n = features.rows;
    const int m = int(class_order.size());
    if (int(labels.size()) != n)
        throw InvalidInput("cross_validate: features and labels differ in length");
    if (int(plan.assignment.size()) != n)
        throw InvalidInput("cross_validate: fold plan does not cover the samples");

    const Matrix x = select_columns(features, config.subset);

    CvReport rep;
    rep.config = config;
    rep.class_order = class_order;
    rep.pooled.class_order = class_order;
    rep.pooled.counts.assign(std::size_t(m) * m, 0);

    std::vector<std::vector<double>> fold_recalls;
    for (int f = 0; f < plan.k; ++f) {
        std::vector<int> train_rows, test_rows;
        for (int i = 0; i < n; ++i)
            (plan.assignment[i] == f ? test_rows : train_rows).push_back(i);
        if (test_rows.empty() || train_rows.empty())
            throw InvalidInput("cross_validate: fold " + std::to_string(f) + " is empty");

        try {
            const Matrix xtr = gather_rows(x, train_rows);
            std::vector<int> ytr(train_rows.size()), yte(test_rows.size());
            for (std::size_t i = 0; i < train_rows.size(); ++i) ytr[i] = labels[train_rows[i]];
            for (std::size_t i = 0; i < test_rows.size(); ++i) yte[i] = labels[test_rows[i]];

            const ElmModel model = train(xtr, ytr, class_order, config.n_hidden,
                                         config.activation, config.seed + std::uint64_t(f));
            const Prediction pred = predict(model, gather_rows(x, test_rows));

            FoldResult fr;
            fr.index = f;
            fr.test_size = int(test_rows.size());
            fr.cm = confusion(yte, pred.labels, class_order);
            fr.report = class_report(fr.cm);
            fr.standardizer = model.standardizer;
            for (int c = 0; c < m; ++c) fr.roc.push_back(roc_one_vs_rest(yte, pred.scores, c));

            for (std::size_t i = 0; i < rep.pooled.counts.size(); ++i)
                rep.pooled.counts[i] += fr.cm.counts[i];
            fold_recalls.push_back(fr.report.recall);
            rep.folds.push_back(std::move(fr));
        } catch (const Error& e) {
            throw InvalidInput("cross_validate: fold " + std::to_string(f) + ": " + e.what());
        }
    }

    rep.pooled_report = class_report(rep.pooled);
    rep.sens_ci = sensitivity_ci(fold_recalls);
    return rep;
}

std::vector<SweepRow> sweep_hidden(const Matrix& features, std::span<const int> labels,
                                   const std::vector<std::string>& class_order,
                                   const FoldPlan& plan,
                                   const std::vector<int>& l_values,
                                   const CvConfig& base_config) {
    if (l_values.empty()) throw InvalidInput("sweep_hidden: empty L list");
    for (int l : l_values)
        if (l < 1) throw InvalidInput("sweep_hidden: hidden counts must be positive");

    std::vector<SweepRow> rows;
    for (int l : l_values) {
        CvConfig cfg = base_config;
        cfg.n_hidden = l;
        const CvReport rep = cross_validate(features, labels, class_order, plan, cfg);
        rows.push_back({l, rep.pooled_report.accuracy});
    }
    return rows;
}

double median_of(std::vector<double> values) {
    if (values.empty()) throw InvalidInput("median_of: empty input");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<AblationEntry> ablate_subsets(const Matrix& features,
                                          std::span<const int> labels,
                                          const std::vector<std::string>& class_order,
                                          const FoldPlan& plan,
                                          const CvConfig& base_config) {
    std::vector<AblationEntry> out;
    for (Subset s : {Subset::frequency, Subset::texture, Subset::combined}) {
        CvConfig cfg = base_config;
        cfg.subset = s;
        const CvReport rep = cross_validate(features, labels, class_order, plan, cfg);

        AblationEntry entry;
        entry.subset = s;
        for (const FoldResult& fr : rep.folds) {
            double macro = 0.0;
            for (double r : fr.report.recall) macro += r;
            entry.per_fold_macro_sensitivity.push_back(macro / double(class_order.size()));
        }
        entry.median = median_of(entry.per_fold_macro_sensitivity);
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace covelm

#include "covelm/elm.hpp"

#include <cmath>
#include <random>

#include "covelm/error.hpp"
#include "covelm/linalg.hpp"

namespace covelm {

const char* activation_name(Activation a) {
    switch (a) {
        case Activation::rbf_l2: return "rbf_l2";
        case Activation::sigmoid: return "sigmoid";
    }
    return "?";
}

Activation activation_from_name(const std::string& name) {
    if (name == "rbf_l2") return Activation::rbf_l2;
    if (name == "sigmoid") return Activation::sigmoid;
    throw InvalidInput("unknown activation '" + name + "'");
}

namespace {

// Uniform doubles straight off the engine; std::uniform_real_distribution is
// implementation-defined, and the drawn weights must be stable.
struct UniformSource {
    std::mt19937_64 eng;
    explicit UniformSource(std::uint64_t seed) : eng(seed) {}
    double unit() { return double(eng() >> 11) * 0x1.0p-53; }  // [0,1)
    double symmetric() { return 2.0 * unit() - 1.0; }          // [-1,1)
    double positive_unit() { return 1.0 - unit(); }            // (0,1]
};

}  // namespace

Standardizer Standardizer::fit(const Matrix& x) {
    if (x.empty()) throw InvalidInput("Standardizer: empty feature matrix");
    const int n = x.rows, d = x.cols;
    Standardizer s;
    s.mean.assign(d, 0.0);
    s.scale.assign(d, 1.0);
    for (int j = 0; j < d; ++j) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += x(i, j);
        const double mean = sum / n;
        double var = 0.0;
        for (int i = 0; i < n; ++i) {
            const double dlt = x(i, j) - mean;
            var += dlt * dlt;
        }
        var /= n;
        const double sd = std::sqrt(var);
        s.mean[j] = mean;
        // Treat round-off-level spread of a constant column as zero variance.
        s.scale[j] = sd > 1e-12 * std::max(1.0, std::abs(mean)) ? sd : 1.0;
    }
    return s;
}

Matrix Standardizer::apply(const Matrix& x) const {
    if (x.cols != int(mean.size()))
        throw InvalidInput("Standardizer: feature count mismatch");
    Matrix out(x.rows, x.cols);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            out(i, j) = (x(i, j) - mean[j]) / scale[j];
    return out;
}

std::pair<Matrix, std::vector<double>> init_hidden(int n_features, int n_hidden,
                                                   Activation activation,
                                                   std::uint64_t seed) {
    if (n_features < 1 || n_hidden < 1)
        throw InvalidInput("init_hidden: feature and hidden counts must be positive");
    UniformSource rng(seed);
    Matrix a(n_hidden, n_features);
    for (int i = 0; i < n_hidden; ++i)
        for (int j = 0; j < n_features; ++j) a(i, j) = rng.symmetric();
    std::vector<double> b(n_hidden);
    for (int i = 0; i < n_hidden; ++i)
        b[i] = activation == Activation::rbf_l2 ? rng.positive_unit() : rng.symmetric();
    return {std::move(a), std::move(b)};
}

Matrix hidden_output(const Matrix& x, const Matrix& a, std::span<const double> b,
                     Activation activation) {
    if (x.cols != a.cols)
        throw InvalidInput("hidden_output: feature count mismatch");
    if (int(b.size()) != a.rows)
        throw InvalidInput("hidden_output: bias count mismatch");

    const int n = x.rows, l = a.rows, d = x.cols;
    Matrix g(n, l);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
        const double* xr = x.row_ptr(j);
        double* gr = g.row_ptr(j);
        for (int i = 0; i < l; ++i) {
            const double* ar = a.row_ptr(i);
            if (activation == Activation::rbf_l2) {
                double dist2 = 0.0;
                for (int f = 0; f < d; ++f) {
                    const double dlt = xr[f] - ar[f];
                    dist2 += dlt * dlt;
                }
                gr[i] = std::exp(-b[i] * dist2);
            } else {
                double dot = 0.0;
                for (int f = 0; f < d; ++f) dot += ar[f] * xr[f];
                gr[i] = 1.0 / (1.0 + std::exp(-(dot + b[i])));
            }
        }
    }
    return g;
}

Matrix one_hot(std::span<const int> labels, int n_classes) {
    if (labels.empty()) throw InvalidInput("one_hot: empty label list");
    if (n_classes < 2) throw InvalidInput("one_hot: need at least two classes");
    Matrix t(int(labels.size()), n_classes, 0.0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || labels[i] >= n_classes)
            throw InvalidInput("one_hot: label index out of range");
        t(int(i), labels[i]) = 1.0;
    }
    return t;
}

ElmModel train(const Matrix& x, std::span<const int> labels,
               const std::vector<std::string>& class_order, int n_hidden,
               Activation activation, std::uint64_t seed) {
    const int m = int(class_order.size());
    if (m < 2) throw InvalidInput("train: need at least two classes");
    if (x.rows != int(labels.size()))
        throw InvalidInput("train: feature rows and label count differ");
    if (x.rows < m) throw InvalidInput("train: fewer samples than classes");

    std::vector<int> seen(m, 0);
    for (int y : labels) {
        if (y < 0 || y >= m) throw InvalidInput("train: label index out of range");
        seen[y] = 1;
    }
    for (int c = 0; c < m; ++c)
        if (!seen[c])
            throw InvalidInput("train: class '" + class_order[c] +
                               "' absent from training data");

    ElmModel model;
    model.activation = activation;
    model.n_features = x.cols;
    model.n_hidden = n_hidden;
    model.n_classes = m;
    model.class_order = class_order;
    model.seed = seed;
    model.standardizer = Standardizer::fit(x);

    const Matrix xs = model.standardizer.apply(x);
    auto [a, b] = init_hidden(x.cols, n_hidden, activation, seed);
    model.A = std::move(a);
    model.b = std::move(b);

    const Matrix g = hidden_output(xs, model.A, model.b, activation);
    model.beta = least_squares_solve(g, one_hot(labels, m));
    return model;
}

Prediction predict(const ElmModel& model, const Matrix& x) {
    if (x.cols != model.n_features)
        throw InvalidInput("predict: feature count mismatch");
    const Matrix xs = model.standardizer.apply(x);
    const Matrix g = hidden_output(xs, model.A, model.b, model.activation);

    Prediction p;
    p.scores = matmul(g, model.beta);
    p.labels.resize(x.rows);
    for (int i = 0; i < x.rows; ++i) {
        int best = 0;
        for (int c = 1; c < model.n_classes; ++c)
            if (p.scores(i, c) > p.scores(i, best)) best = c;
        p.labels[i] = best;
    }
    return p;
}

}  // namespace covelm

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "covelm/matrix.hpp"

namespace covelm {

enum class Activation { rbf_l2, sigmoid };

const char* activation_name(Activation a);
Activation activation_from_name(const std::string& name);

/// Per-feature z-score parameters fitted on a training fold. Features with
/// zero training variance keep scale 1 so they pass through centered.
struct Standardizer {
    std::vector<double> mean;
    std::vector<double> scale;

    static Standardizer fit(const Matrix& x);
    Matrix apply(const Matrix& x) const;
};

struct ElmModel {
    Matrix A;                // L x n hidden-node parameter vectors
    std::vector<double> b;   // L biases (rbf widths or additive biases)
    Matrix beta;             // L x m output weights
    Activation activation = Activation::rbf_l2;
    int n_features = 0;
    int n_hidden = 0;
    int n_classes = 0;
    std::vector<std::string> class_order;
    Standardizer standardizer;
    std::uint64_t seed = 0;
    // Persistence metadata: the cache layout the model expects and the
    // feature subset it was trained on.
    std::string layout_digest;
    std::string subset = "combined";
};

/// Draws hidden-node parameters deterministically from the seed.
/// rbf_l2: centers uniform in [-1,1]^n, widths uniform in (0,1].
/// sigmoid: weights and biases uniform in [-1,1].
std::pair<Matrix, std::vector<double>> init_hidden(int n_features, int n_hidden,
                                                   Activation activation,
                                                   std::uint64_t seed);

/// Hidden-layer output for standardized inputs.
/// rbf_l2: G[j,i] = exp(-b_i * ||x_j - a_i||^2); sigmoid: logistic(a_i.x_j + b_i).
Matrix hidden_output(const Matrix& x, const Matrix& a, std::span<const double> b,
                     Activation activation);

/// One-hot target rows; labels are class indices in [0, n_classes).
Matrix one_hot(std::span<const int> labels, int n_classes);

/// Closed-form training: standardize, draw hidden nodes, solve beta = G^+ T.
/// Every class index must appear at least once in the labels.
ElmModel train(const Matrix& x, std::span<const int> labels,
               const std::vector<std::string>& class_order, int n_hidden,
               Activation activation, std::uint64_t seed);

struct Prediction {
    Matrix scores;            // N x m output-layer values
    std::vector<int> labels;  // argmax per row, ties to the lowest class index
};

Prediction predict(const ElmModel& model, const Matrix& x);

}  // namespace covelm

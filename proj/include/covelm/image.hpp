#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "covelm/error.hpp"

namespace covelm {

/// Dense grayscale raster, row-major. value_range declares the closed
/// interval the intensities are expected to lie in; operations that require
/// a specific range ([0,1] for CLAHE and quantization) validate it.
struct GrayImage {
    int height = 0;
    int width = 0;
    std::pair<double, double> value_range{0.0, 1.0};
    std::vector<double> pixels;

    GrayImage() = default;

    GrayImage(int h, int w, std::pair<double, double> range = {0.0, 1.0}, double fill = 0.0)
        : height(h), width(w), value_range(range), pixels() {
        if (h <= 0 || w <= 0)
            throw InvalidInput("GrayImage: dimensions must be positive");
        if (!(range.first < range.second))
            throw InvalidInput("GrayImage: value_range must be a non-empty interval");
        pixels.assign(static_cast<std::size_t>(h) * w, fill);
    }

    double& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * width + c]; }
    double at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * width + c]; }

    std::size_t size() const { return pixels.size(); }
    bool empty() const { return pixels.empty(); }
};

}  // namespace covelm

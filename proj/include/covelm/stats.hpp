#pragma once

#include <array>
#include <span>
#include <string_view>

namespace covelm {

/// The 14 summary statistics computed for every feature map, in the fixed
/// order used throughout the feature layout.
struct StatBlock {
    double area;      // count of strictly positive elements
    double mean;
    double stddev;    // population standard deviation
    double skewness;  // third standardized central moment, 0 for zero variance
    double kurtosis;  // fourth standardized central moment (non-excess), 0 for zero variance
    double energy;    // sum of squares
    double entropy;   // Shannon entropy (bits) of a 256-bin histogram over the value range
    double max;
    double min;
    double mad;       // mean absolute deviation around the mean
    double median;
    double range;
    double rms;
    double uniformity;  // sum of squared bin probabilities of the same histogram

    static constexpr int kCount = 14;

    std::array<double, kCount> to_array() const {
        return {area, mean, stddev, skewness, kurtosis, energy, entropy,
                max,  min,  mad,    median,   range,    rms,    uniformity};
    }

    static const std::array<std::string_view, kCount>& names();
};

/// Histogram resolution used for the entropy and uniformity statistics.
inline constexpr int kStatHistogramBins = 256;

/// Computes all 14 statistics of a non-empty value collection.
/// Throws InvalidInput on an empty input.
StatBlock stat_block(std::span<const double> values);

}  // namespace covelm

#include "covelm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "covelm/error.hpp"

namespace covelm {

const std::array<std::string_view, StatBlock::kCount>& StatBlock::names() {
    static const std::array<std::string_view, kCount> kNames = {
        "area",    "mean", "std", "skewness", "kurtosis", "energy", "entropy",
        "max",     "min",  "mad", "median",   "range",    "rms",    "uniformity"};
    return kNames;
}

StatBlock stat_block(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) throw InvalidInput("stat_block: empty input");

    double sum = 0.0, sumsq = 0.0;
    double vmin = values[0], vmax = values[0];
    std::size_t positive = 0;
    for (double v : values) {
        sum += v;
        sumsq += v * v;
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
        if (v > 0.0) ++positive;
    }
    const double mean = sum / double(n);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0, absdev = 0.0;
    for (double v : values) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
        absdev += std::abs(d);
    }
    m2 /= double(n);
    m3 /= double(n);
    m4 /= double(n);

    StatBlock s{};
    s.area = double(positive);
    s.mean = mean;
    s.stddev = std::sqrt(m2);
    s.skewness = m2 > 0.0 ? m3 / (m2 * s.stddev) : 0.0;
    s.kurtosis = m2 > 0.0 ? m4 / (m2 * m2) : 0.0;
    s.energy = sumsq;
    s.max = vmax;
    s.min = vmin;
    s.mad = absdev / double(n);
    s.range = vmax - vmin;
    s.rms = std::sqrt(sumsq / double(n));

    // Median via partial selection; average of the two middles for even n.
    std::vector<double> work(values.begin(), values.end());
    const std::size_t mid = n / 2;
    std::nth_element(work.begin(), work.begin() + mid, work.end());
    double med = work[mid];
    if (n % 2 == 0) {
        std::nth_element(work.begin(), work.begin() + (mid - 1), work.begin() + mid);
        med = 0.5 * (med + work[mid - 1]);
    }
    s.median = med;

    // Entropy and uniformity over a fixed-resolution histogram of [min, max].
    if (vmax > vmin) {
        std::array<std::size_t, kStatHistogramBins> hist{};
        const double scale = double(kStatHistogramBins) / (vmax - vmin);
        for (double v : values) {
            int b = int((v - vmin) * scale);
            b = std::clamp(b, 0, kStatHistogramBins - 1);
            ++hist[b];
        }
        double entropy = 0.0, uniformity = 0.0;
        for (std::size_t c : hist) {
            if (c == 0) continue;
            const double p = double(c) / double(n);
            entropy -= p * std::log2(p);
            uniformity += p * p;
        }
        s.entropy = entropy;
        s.uniformity = uniformity;
    } else {
        s.entropy = 0.0;
        s.uniformity = 1.0;
    }
    return s;
}

}  // namespace covelm

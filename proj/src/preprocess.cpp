#include "covelm/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace covelm {

GrayImage resize_bilinear(const GrayImage& img, int target_h, int target_w) {
    if (img.empty()) throw InvalidInput("resize: empty image");
    if (target_h < 8 || target_w < 8)
        throw InvalidInput("resize: target dimensions must be at least 8");

    GrayImage out(target_h, target_w, img.value_range);
    const int h = img.height, w = img.width;
    const double sy = target_h > 1 ? double(h - 1) / double(target_h - 1) : 0.0;
    const double sx = target_w > 1 ? double(w - 1) / double(target_w - 1) : 0.0;

#pragma omp parallel for schedule(static)
    for (int i = 0; i < target_h; ++i) {
        const double fy = i * sy;
        const int y0 = std::min(int(fy), h - 1);
        const int y1 = std::min(y0 + 1, h - 1);
        const double wy = fy - y0;
        for (int j = 0; j < target_w; ++j) {
            const double fx = j * sx;
            const int x0 = std::min(int(fx), w - 1);
            const int x1 = std::min(x0 + 1, w - 1);
            const double wx = fx - x0;
            const double top = (1.0 - wx) * img.at(y0, x0) + wx * img.at(y0, x1);
            const double bot = (1.0 - wx) * img.at(y1, x0) + wx * img.at(y1, x1);
            out.at(i, j) = (1.0 - wy) * top + wy * bot;
        }
    }
    return out;
}

GrayImage min_max_normalize(const GrayImage& img) {
    if (img.empty()) throw InvalidInput("min_max_normalize: empty image");
    const auto [lo, hi] = std::minmax_element(img.pixels.begin(), img.pixels.end());
    const double vmin = *lo, vmax = *hi;

    GrayImage out(img.height, img.width, {0.0, 1.0});
    if (vmax > vmin) {
        const double inv = 1.0 / (vmax - vmin);
        const std::size_t n = img.pixels.size();
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i)
            out.pixels[i] = (img.pixels[i] - vmin) * inv;
    }
    return out;
}

namespace {

// Tile boundary k*extent/tiles; edge tiles absorb any remainder.
std::vector<int> tile_bounds(int extent, int tiles) {
    std::vector<int> b(tiles + 1);
    for (int t = 0; t <= tiles; ++t) b[t] = int(std::int64_t(t) * extent / tiles);
    return b;
}

struct AxisBlend {
    int t0, t1;
    double w;  // weight of t1
};

// Per-coordinate blend between the two nearest tile centers, clamped at the
// borders so corner pixels use a single tile.
std::vector<AxisBlend> axis_blend(const std::vector<int>& bounds, int extent) {
    const int tiles = int(bounds.size()) - 1;
    std::vector<double> center(tiles);
    for (int t = 0; t < tiles; ++t) center[t] = 0.5 * (bounds[t] + bounds[t + 1] - 1);

    std::vector<AxisBlend> blend(extent);
    for (int p = 0; p < extent; ++p) {
        if (p <= center[0]) {
            blend[p] = {0, 0, 0.0};
        } else if (p >= center[tiles - 1]) {
            blend[p] = {tiles - 1, tiles - 1, 0.0};
        } else {
            int t = 0;
            while (center[t + 1] < p) ++t;
            const double w = (p - center[t]) / (center[t + 1] - center[t]);
            blend[p] = {t, t + 1, w};
        }
    }
    return blend;
}

}  // namespace

GrayImage clahe(const GrayImage& img, const ClaheParams& params) {
    if (img.empty()) throw InvalidInput("clahe: empty image");
    if (params.bins < 2) throw InvalidInput("clahe: bins must be at least 2");
    if (params.tiles_y < 1 || params.tiles_x < 1)
        throw InvalidInput("clahe: tile counts must be positive");
    if (img.height < params.tiles_y || img.width < params.tiles_x)
        throw InvalidInput("clahe: image smaller than the tile grid");
    if (!(params.clip_limit > 0.0)) throw InvalidInput("clahe: clip_limit must be positive");
    for (double v : img.pixels)
        if (!(v >= 0.0 && v <= 1.0))
            throw InvalidInput("clahe: pixel values must lie in [0,1]");

    const int h = img.height, w = img.width;
    const int ty = params.tiles_y, tx = params.tiles_x;
    const int bins = params.bins;
    const auto rb = tile_bounds(h, ty);
    const auto cb = tile_bounds(w, tx);

    // Per-tile equalization mapping over the shared [0,1] bin grid.
    // A clipped histogram keeps real-valued mass; the mapping is the
    // cdf re-anchored at the first occupied bin so a constant tile maps to 0.
    std::vector<std::vector<double>> mapping(std::size_t(ty) * tx,
                                             std::vector<double>(bins, 0.0));
#pragma omp parallel for collapse(2) schedule(static)
    for (int tr = 0; tr < ty; ++tr) {
        for (int tc = 0; tc < tx; ++tc) {
            std::vector<double> hist(bins, 0.0);
            const int r0 = rb[tr], r1 = rb[tr + 1];
            const int c0 = cb[tc], c1 = cb[tc + 1];
            for (int r = r0; r < r1; ++r)
                for (int c = c0; c < c1; ++c) {
                    int b = int(img.at(r, c) * bins);
                    b = std::min(b, bins - 1);
                    hist[b] += 1.0;
                }
            const double count = double(r1 - r0) * double(c1 - c0);
            const double limit = params.clip_limit * count / bins;
            double excess = 0.0;
            for (double& hb : hist) {
                if (hb > limit) {
                    excess += hb - limit;
                    hb = limit;
                }
            }
            const double share = excess / bins;
            for (double& hb : hist) hb += share;

            double cdf = 0.0, cdf_min = -1.0;
            auto& map = mapping[std::size_t(tr) * tx + tc];
            for (int b = 0; b < bins; ++b) {
                cdf += hist[b];
                if (cdf_min < 0.0 && hist[b] > 0.0) cdf_min = cdf;
                map[b] = cdf;
            }
            const double denom = count - cdf_min;
            for (int b = 0; b < bins; ++b)
                map[b] = denom > 0.0 ? std::clamp((map[b] - cdf_min) / denom, 0.0, 1.0) : 0.0;
        }
    }

    const auto rowb = axis_blend(rb, h);
    const auto colb = axis_blend(cb, w);

    GrayImage out(h, w, {0.0, 1.0});
#pragma omp parallel for schedule(static)
    for (int r = 0; r < h; ++r) {
        const AxisBlend& by = rowb[r];
        for (int c = 0; c < w; ++c) {
            const AxisBlend& bx = colb[c];
            int b = int(img.at(r, c) * bins);
            b = std::min(b, bins - 1);
            const double m00 = mapping[std::size_t(by.t0) * tx + bx.t0][b];
            const double m01 = mapping[std::size_t(by.t0) * tx + bx.t1][b];
            const double m10 = mapping[std::size_t(by.t1) * tx + bx.t0][b];
            const double m11 = mapping[std::size_t(by.t1) * tx + bx.t1][b];
            const double top = (1.0 - bx.w) * m00 + bx.w * m01;
            const double bot = (1.0 - bx.w) * m10 + bx.w * m11;
            out.at(r, c) = (1.0 - by.w) * top + by.w * bot;
        }
    }
    return out;
}

GrayImage preprocess_pipeline(const GrayImage& img, const ClaheParams& params) {
    return clahe(min_max_normalize(resize_bilinear(img, kPreprocessSize, kPreprocessSize)),
                 params);
}

}  // namespace covelm

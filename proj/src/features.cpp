#include "covelm/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>

#include "covelm/error.hpp"

namespace covelm {

namespace {

struct Offset {
    int dr, dc;
};

Offset glcm_offset(GlcmAngle angle, int distance) {
    switch (angle) {
        case GlcmAngle::deg0: return {0, distance};
        case GlcmAngle::deg45: return {-distance, distance};
        case GlcmAngle::deg90: return {-distance, 0};
        case GlcmAngle::deg135: return {-distance, -distance};
    }
    throw InvalidInput("glcm: unknown angle");
}

Offset gldm_offset(GldmDirection d) {
    switch (d) {
        case GldmDirection::east: return {0, 1};
        case GldmDirection::southeast: return {1, 1};
        case GldmDirection::south: return {1, 0};
        case GldmDirection::southwest: return {1, -1};
    }
    throw InvalidInput("gldm: unknown direction");
}

void require_unit_range(const GrayImage& img, const char* what) {
    for (double v : img.pixels)
        if (!(v >= 0.0 && v <= 1.0))
            throw InvalidInput(std::string(what) + ": pixel values must lie in [0,1]");
}

}  // namespace

CoocMatrix glcm(const GrayImage& img, int levels, int distance, GlcmAngle angle) {
    if (img.empty()) throw InvalidInput("glcm: empty image");
    if (levels < 2) throw InvalidInput("glcm: quantization levels must be at least 2");
    if (distance < 1) throw InvalidInput("glcm: distance must be at least 1");
    require_unit_range(img, "glcm");

    const Offset off = glcm_offset(angle, distance);
    const int h = img.height, w = img.width;
    if (std::abs(off.dr) >= h || std::abs(off.dc) >= w)
        throw InvalidInput("glcm: image smaller than displacement");

    std::vector<int> quant(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
        quant[i] = std::min(int(img.pixels[i] * levels), levels - 1);

    std::vector<std::int64_t> counts(std::size_t(levels) * levels, 0);
    const int r0 = std::max(0, -off.dr), r1 = h - std::max(0, off.dr);
    const int c0 = std::max(0, -off.dc), c1 = w - std::max(0, off.dc);
    for (int r = r0; r < r1; ++r) {
        for (int c = c0; c < c1; ++c) {
            const int a = quant[std::size_t(r) * w + c];
            const int b = quant[std::size_t(r + off.dr) * w + (c + off.dc)];
            ++counts[std::size_t(a) * levels + b];
            ++counts[std::size_t(b) * levels + a];
        }
    }

    std::int64_t total = 0;
    for (std::int64_t v : counts) total += v;
    if (total == 0) throw InvalidInput("glcm: image smaller than displacement");

    CoocMatrix out;
    out.levels = levels;
    out.distance = distance;
    out.angle = angle;
    out.probs = Matrix(levels, levels);
    const double inv = 1.0 / double(total);
    for (std::size_t i = 0; i < counts.size(); ++i) out.probs.data[i] = counts[i] * inv;
    return out;
}

Matrix gldm(const GrayImage& img, GldmDirection direction) {
    if (img.height < 2 || img.width < 2)
        throw InvalidInput("gldm: image must be at least 2x2");
    const Offset off = gldm_offset(direction);
    const int h = img.height, w = img.width;
    const int oh = h - std::abs(off.dr), ow = w - std::abs(off.dc);

    Matrix out(oh, ow);
    const int rbase = std::max(0, -off.dr);
    const int cbase = std::max(0, -off.dc);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < oh; ++r) {
        for (int c = 0; c < ow; ++c) {
            const int pr = r + rbase, pc = c + cbase;
            out(r, c) = std::abs(img.at(pr, pc) - img.at(pr + off.dr, pc + off.dc));
        }
    }
    return out;
}

std::vector<double> hog_descriptor(const GrayImage& img, const HogParams& p) {
    if (img.empty()) throw InvalidInput("hog: empty image");
    if (p.bins < 2) throw InvalidInput("hog: bins must be at least 2");
    if (p.cell < 1 || p.block_cells < 1) throw InvalidInput("hog: invalid geometry");
    const int h = img.height, w = img.width;
    if (h % p.cell != 0 || w % p.cell != 0)
        throw InvalidInput("hog: image dimensions must be multiples of the cell size");
    const int cells_y = h / p.cell, cells_x = w / p.cell;
    if (cells_y < p.block_cells || cells_x < p.block_cells)
        throw InvalidInput("hog: image smaller than one block");

    // Per-cell orientation histograms. Central-difference gradients with
    // replicated borders; votes split linearly between the two nearest bins.
    std::vector<double> cell_hist(std::size_t(cells_y) * cells_x * p.bins, 0.0);
    const double bin_width = 180.0 / p.bins;
#pragma omp parallel for collapse(2) schedule(static)
    for (int cy = 0; cy < cells_y; ++cy) {
        for (int cx = 0; cx < cells_x; ++cx) {
            double* hist = &cell_hist[(std::size_t(cy) * cells_x + cx) * p.bins];
            for (int r = cy * p.cell; r < (cy + 1) * p.cell; ++r) {
                for (int c = cx * p.cell; c < (cx + 1) * p.cell; ++c) {
                    const double gx = img.at(r, std::min(c + 1, w - 1)) -
                                      img.at(r, std::max(c - 1, 0));
                    const double gy = img.at(std::min(r + 1, h - 1), c) -
                                      img.at(std::max(r - 1, 0), c);
                    const double mag = std::sqrt(gx * gx + gy * gy);
                    if (mag == 0.0) continue;
                    double deg = std::atan2(gy, gx) * 180.0 / std::numbers::pi;
                    if (deg < 0.0) deg += 180.0;
                    if (deg >= 180.0) deg -= 180.0;
                    const double fbin = deg / bin_width;
                    const int b0 = std::min(int(fbin), p.bins - 1);
                    const int b1 = (b0 + 1) % p.bins;
                    const double frac = fbin - b0;
                    hist[b0] += mag * (1.0 - frac);
                    hist[b1] += mag * frac;
                }
            }
        }
    }

    const int blocks_y = cells_y - p.block_cells + 1;
    const int blocks_x = cells_x - p.block_cells + 1;
    const int block_len = p.block_cells * p.block_cells * p.bins;
    std::vector<double> desc(std::size_t(blocks_y) * blocks_x * block_len, 0.0);

    // L2-hys per block: normalize, clip at 0.2, renormalize.
#pragma omp parallel for collapse(2) schedule(static)
    for (int by = 0; by < blocks_y; ++by) {
        for (int bx = 0; bx < blocks_x; ++bx) {
            double* block = &desc[(std::size_t(by) * blocks_x + bx) * block_len];
            int k = 0;
            for (int dy = 0; dy < p.block_cells; ++dy)
                for (int dx = 0; dx < p.block_cells; ++dx) {
                    const double* hist =
                        &cell_hist[(std::size_t(by + dy) * cells_x + (bx + dx)) * p.bins];
                    for (int b = 0; b < p.bins; ++b) block[k++] = hist[b];
                }
            double norm = 0.0;
            for (int i = 0; i < block_len; ++i) norm += block[i] * block[i];
            norm = 1.0 / std::sqrt(norm + p.epsilon * p.epsilon);
            for (int i = 0; i < block_len; ++i)
                block[i] = std::min(block[i] * norm, 0.2);
            norm = 0.0;
            for (int i = 0; i < block_len; ++i) norm += block[i] * block[i];
            norm = 1.0 / std::sqrt(norm + p.epsilon * p.epsilon);
            for (int i = 0; i < block_len; ++i) block[i] *= norm;
        }
    }
    return desc;
}

std::vector<double> extract_features(const GrayImage& img, const ExtractParams& params) {
    if (img.empty()) throw InvalidInput("extract_features: empty image");
    require_unit_range(img, "extract_features");

    std::vector<double> out;
    out.reserve(kFeatureCount);
    auto append = [&out](const StatBlock& s) {
        const auto a = s.to_array();
        out.insert(out.end(), a.begin(), a.end());
    };

    append(stat_block(img.pixels));
    for (GlcmAngle a : kGlcmAngles)
        append(stat_block(glcm(img, params.glcm.levels, params.glcm.distance, a).probs.data));
    for (GldmDirection d : kGldmDirections) append(stat_block(gldm(img, d).data));
    append(stat_block(hog_descriptor(img, params.hog)));
    append(stat_block(fft_magnitude(img, params.fft_log).data));
    append(stat_block(dwt_ll3(img).data));
    return out;
}

std::vector<double> select_subset(std::span<const double> features, Subset subset) {
    if (features.size() != std::size_t(kFeatureCount))
        throw InvalidInput("select_subset: expected a full 168-feature vector");
    switch (subset) {
        case Subset::texture:
            return {features.begin(), features.begin() + kTextureFeatures};
        case Subset::frequency:
            return {features.begin() + kTextureFeatures, features.end()};
        case Subset::combined:
            return {features.begin(), features.end()};
    }
    throw InvalidInput("select_subset: unknown subset");
}

const char* subset_name(Subset s) {
    switch (s) {
        case Subset::texture: return "texture";
        case Subset::frequency: return "frequency";
        case Subset::combined: return "combined";
    }
    return "?";
}

Subset subset_from_name(const std::string& name) {
    if (name == "texture") return Subset::texture;
    if (name == "frequency") return Subset::frequency;
    if (name == "combined") return Subset::combined;
    throw InvalidInput("unknown subset '" + name + "'");
}

const std::vector<std::string>& feature_layout() {
    static const std::vector<std::string> kLayout = [] {
        std::vector<std::string> names;
        names.reserve(kFeatureCount);
        const char* families[] = {"spatial",    "glcm_d1_a0", "glcm_d1_a45", "glcm_d1_a90",
                                  "glcm_d1_a135", "gldm_e",   "gldm_se",     "gldm_s",
                                  "gldm_sw",    "hog",        "fft_logmag",  "dwt_ll3"};
        for (const char* fam : families)
            for (auto stat : StatBlock::names())
                names.push_back(std::string(fam) + "_" + std::string(stat));
        return names;
    }();
    return kLayout;
}

const std::string& layout_digest() {
    static const std::string kDigest = [] {
        std::uint64_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](char c) {
            h ^= std::uint64_t(static_cast<unsigned char>(c));
            h *= 0x100000001b3ull;
        };
        for (const auto& name : feature_layout()) {
            for (char c : name) mix(c);
            mix('\n');
        }
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
        return std::string(buf);
    }();
    return kDigest;
}

}  // namespace covelm

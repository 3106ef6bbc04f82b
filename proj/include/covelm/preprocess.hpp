#pragma once

#include "covelm/image.hpp"

namespace covelm {

struct ClaheParams {
    double clip_limit = 2.0;  // relative to the uniform bin level (tile_pixels / bins)
    int tiles_y = 8;
    int tiles_x = 8;
    int bins = 256;
};

/// Side of the square input consumed by feature extraction.
inline constexpr int kPreprocessSize = 512;

/// Bilinear resize with corner-aligned sampling. Resizing to the original
/// dimensions is the identity map. Preserves value_range.
GrayImage resize_bilinear(const GrayImage& img, int target_h, int target_w);

/// Maps intensities to [0,1] via (v - min) / (max - min). A constant image
/// maps to all zeros.
GrayImage min_max_normalize(const GrayImage& img);

/// Contrast-limited adaptive histogram equalization on a [0,1] image.
/// Per-tile histograms are clipped at clip_limit * tile_pixels / bins with
/// the excess redistributed uniformly; per-pixel output blends the four
/// surrounding tile mappings bilinearly. Output stays in [0,1].
GrayImage clahe(const GrayImage& img, const ClaheParams& params = {});

/// resize to 512x512, then min-max normalize, then CLAHE.
GrayImage preprocess_pipeline(const GrayImage& img, const ClaheParams& params = {});

}  // namespace covelm

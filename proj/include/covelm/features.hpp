#pragma once

#include <span>
#include <string>
#include <vector>

#include "covelm/image.hpp"
#include "covelm/matrix.hpp"
#include "covelm/stats.hpp"

namespace covelm {

/// Fixed feature-vector geometry: 14 statistics over each of 10 texture maps
/// (spatial image, GLCM at 4 orientations, GLDM at 4 directions, HOG
/// descriptor) and 2 frequency maps (FFT log-magnitude, DWT LL3).
inline constexpr int kTextureFeatures = 140;
inline constexpr int kFrequencyFeatures = 28;
inline constexpr int kFeatureCount = kTextureFeatures + kFrequencyFeatures;

enum class GlcmAngle { deg0, deg45, deg90, deg135 };
enum class GldmDirection { east, southeast, south, southwest };

inline constexpr GlcmAngle kGlcmAngles[] = {GlcmAngle::deg0, GlcmAngle::deg45,
                                            GlcmAngle::deg90, GlcmAngle::deg135};
inline constexpr GldmDirection kGldmDirections[] = {
    GldmDirection::east, GldmDirection::southeast, GldmDirection::south,
    GldmDirection::southwest};

/// Normalized symmetric co-occurrence matrix of quantized gray-level pairs.
struct CoocMatrix {
    int levels = 0;
    int distance = 0;
    GlcmAngle angle = GlcmAngle::deg0;
    Matrix probs;  // levels x levels, sums to 1
};

struct HogParams {
    int cell = 16;        // cell side in pixels
    int block_cells = 2;  // block side in cells; block stride is one cell
    int bins = 9;         // unsigned orientation bins over [0, 180)
    double epsilon = 1e-5;
};

struct GlcmParams {
    int levels = 32;
    int distance = 1;
};

struct ExtractParams {
    GlcmParams glcm;
    HogParams hog;
    bool fft_log = true;  // statistics over log(1+|F|); raw |F| when false
};

/// Image quantized to levels via floor(v*levels) clamped to levels-1, then
/// co-occurring pairs counted in both directions and normalized to sum to 1.
/// Requires pixel values in [0,1].
CoocMatrix glcm(const GrayImage& img, int levels, int distance, GlcmAngle angle);

/// Absolute-difference map |I(p) - I(p + direction)| over all valid pixels.
Matrix gldm(const GrayImage& img, GldmDirection direction);

/// Dalal-Triggs style descriptor: central-difference gradients, unsigned
/// orientations with linear vote interpolation, L2-hysteresis block
/// normalization. Image dimensions must be multiples of the cell size and
/// cover at least one block.
std::vector<double> hog_descriptor(const GrayImage& img, const HogParams& params = {});

/// Centered 2D DFT magnitude map (DC at the middle); log(1+|F|) by default.
Matrix fft_magnitude(const GrayImage& img, bool log_scale = true);

/// Full packed 2D orthonormal Haar transform (approximation recursively in
/// the top-left corner). Each level requires even sub-dimensions.
Matrix haar_dwt2d(const Matrix& img, int levels);

/// Level-3 approximation subband, size (H/8) x (W/8). Dimensions must be
/// divisible by 8.
Matrix dwt_ll3(const GrayImage& img);

/// The full 168-feature vector in the documented layout.
std::vector<double> extract_features(const GrayImage& img, const ExtractParams& params = {});

enum class Subset { texture, frequency, combined };

std::vector<double> select_subset(std::span<const double> features, Subset subset);

const char* subset_name(Subset s);
Subset subset_from_name(const std::string& name);

/// Ordered names of all 168 features: <family>_<statistic> with the
/// orientation or direction embedded in the family tag.
const std::vector<std::string>& feature_layout();

/// FNV-1a digest of the layout, recorded in feature caches and models.
const std::string& layout_digest();

}  // namespace covelm

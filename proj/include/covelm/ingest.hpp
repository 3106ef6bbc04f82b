#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "covelm/features.hpp"
#include "covelm/image.hpp"
#include "covelm/matrix.hpp"
#include "covelm/preprocess.hpp"

namespace covelm {

inline const std::vector<std::string> kClassOrder = {"covid", "normal", "pneumonia"};

int class_index(const std::string& label);  // -1 when unknown

struct ManifestRecord {
    std::string path;
    std::string label;  // covid | normal | pneumonia
    std::string view;   // PA | AP | anything else (filtered out)
};

/// Parses `path,label,view` rows under the exact header. Labels are
/// normalized to lowercase; unknown labels raise ParseError with the line.
std::vector<ManifestRecord> load_manifest(const std::filesystem::path& path);

/// Keeps PA and AP views (case-insensitive), preserving order. The number of
/// dropped records is returned through `dropped` when non-null.
std::vector<ManifestRecord> filter_frontal(const std::vector<ManifestRecord>& records,
                                           int* dropped = nullptr);

/// Decodes an 8- or 16-bit raster to [0,1] reals; color inputs are reduced
/// to luminance (0.299 R + 0.587 G + 0.114 B) first.
GrayImage decode_gray(const std::filesystem::path& path);

struct ExtractConfig {
    ClaheParams clahe;
    ExtractParams features;
};

struct FeatureCache {
    std::vector<std::string> ids;
    std::vector<std::string> labels;
    Matrix features;  // n x 168
    std::string digest;
    ExtractConfig config;  // parameters recorded in the header cell
};

void write_feature_cache(const FeatureCache& cache, const std::filesystem::path& path);
FeatureCache load_feature_cache(const std::filesystem::path& path);

/// Labels mapped through kClassOrder; throws InvalidInput on unknown labels.
std::vector<int> cache_label_indices(const FeatureCache& cache);

struct CacheSummary {
    std::map<std::string, int> class_counts;
    std::string digest;
    int written = 0;
    std::vector<std::string> errors;  // one entry per failed record (non-strict)
};

/// Decodes, preprocesses, and extracts features for every record, writing one
/// cache row per successful record in manifest order. Relative record paths
/// resolve against base_dir. In strict mode any failure aborts before the
/// cache is written; otherwise failures are reported in the summary.
CacheSummary build_feature_cache(const std::vector<ManifestRecord>& records,
                                 const std::filesystem::path& out_path,
                                 const ExtractConfig& config, bool strict,
                                 const std::filesystem::path& base_dir = {});

}  // namespace covelm

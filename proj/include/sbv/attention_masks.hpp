#pragma once

#include <vector>

#include "sbv/geometry.hpp"
#include "sbv/view_switch.hpp"

namespace sbv {

inline constexpr double kMaskOut = -1e9; // finite stand-in for -inf

struct PatchGrid {
    int rows = 14;
    int cols = 14;
    bool has_class_token = true;

    void validate() const;
    int patches() const { return rows * cols; }
    int tokens() const { return patches() + (has_class_token ? 1 : 0); }
};

struct NoiseEmbedding {
    std::vector<double> chi; // unit norm

    void validate() const;
};

struct SimilarityMap {
    int rows = 0;
    int cols = 0;
    std::vector<double> values; // row-major, cosine similarities in [-1, 1]

    void validate() const;
};

struct NoiseMaskConfig {
    double sigma_scale = 4.0; // s

    void validate() const;
};

struct SimilarityStats {
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation
};

SimilarityStats similarity_stats(const SimilarityMap& map);

// Additive pre-softmax mask: kMaskOut where similarity > mean + s * stddev,
// zero elsewhere. Token order: class token first (never masked), then
// patches row-major.
std::vector<double> noise_mask(const SimilarityMap& map,
                               const NoiseMaskConfig& cfg,
                               bool has_class_token = true);

// Per-patch view level for a crop tokenized into grid patches: the deepest
// view whose box contains the patch center (local > middle > global).
std::vector<ViewLevel> assign_patch_views(const PatchGrid& grid,
                                          const BBox& crop,
                                          const ViewSet& views);

// Multiplicative mask over key tokens: delta weight of each token's level;
// class token weight 1.
std::vector<double> view_mask(const std::vector<ViewLevel>& assignment,
                              const ViewWeights& weights,
                              bool has_class_token = true);

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data; // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

struct AttentionInputs {
    Matrix q; // tokens x (heads * head_dim)
    Matrix k;
    Matrix v;
    int head_dim = 0;
    int heads = 0;

    void validate() const;
};

// Per head: (softmax(Q Kt / sqrt(d) + noise) * view) x V, with the view
// mask applied per key column and no renormalization afterwards.
Matrix masked_attention(const AttentionInputs& inp,
                        const std::vector<double>& noise,
                        const std::vector<double>& view);

int unmasked_key_count(const std::vector<double>& noise);

} // namespace sbv

#include "sbv/attention_masks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sbv {

void PatchGrid::validate() const {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("patch grid: rows and cols must be >= 1");
    }
}

void NoiseEmbedding::validate() const {
    if (chi.empty()) {
        throw std::invalid_argument("noise embedding: empty vector");
    }
    double sq = 0.0;
    for (double x : chi) {
        sq += x * x;
    }
    if (std::abs(std::sqrt(sq) - 1.0) > 1e-6) {
        throw std::invalid_argument("noise embedding: must have unit norm");
    }
}

void SimilarityMap::validate() const {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("similarity map: rows and cols must be >= 1");
    }
    if (values.size() != static_cast<std::size_t>(rows) * cols) {
        throw std::invalid_argument("similarity map: value count mismatch");
    }
    for (double v : values) {
        if (!(v >= -1.0 && v <= 1.0)) {
            throw std::invalid_argument("similarity map: values must lie in [-1, 1]");
        }
    }
}

void NoiseMaskConfig::validate() const {
    if (!(sigma_scale > 0.0)) {
        throw std::invalid_argument("noise mask: sigma scale must be > 0");
    }
}

SimilarityStats similarity_stats(const SimilarityMap& map) {
    map.validate();
    const std::size_t n = map.values.size();
    if (n < 2) {
        throw std::invalid_argument("similarity stats: need at least 2 patches");
    }
    double sum = 0.0;
    for (double v : map.values) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (double v : map.values) {
        sq += (v - mean) * (v - mean);
    }
    SimilarityStats stats;
    stats.mean = mean;
    stats.stddev = std::sqrt(sq / static_cast<double>(n - 1));
    return stats;
}

std::vector<double> noise_mask(const SimilarityMap& map,
                               const NoiseMaskConfig& cfg,
                               bool has_class_token) {
    cfg.validate();
    const SimilarityStats stats = similarity_stats(map);
    const double threshold = stats.mean + cfg.sigma_scale * stats.stddev;
    std::vector<double> mask;
    mask.reserve(map.values.size() + (has_class_token ? 1 : 0));
    if (has_class_token) {
        mask.push_back(0.0);
    }
    for (double v : map.values) {
        mask.push_back(v > threshold ? kMaskOut : 0.0);
    }
    return mask;
}

std::vector<ViewLevel> assign_patch_views(const PatchGrid& grid,
                                          const BBox& crop,
                                          const ViewSet& views) {
    grid.validate();
    std::vector<ViewLevel> levels;
    levels.reserve(static_cast<std::size_t>(grid.patches()));
    const double pw = crop.width() / grid.cols;
    const double ph = crop.height() / grid.rows;
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            const double cx = crop.x1 + (c + 0.5) * pw;
            const double cy = crop.y1 + (r + 0.5) * ph;
            ViewLevel level = ViewLevel::Global;
            if (views.middle.contains_point(cx, cy)) {
                level = ViewLevel::Middle;
            }
            for (const BBox& local : views.locals) {
                if (local.contains_point(cx, cy)) {
                    level = ViewLevel::Local;
                    break;
                }
            }
            levels.push_back(level);
        }
    }
    return levels;
}

std::vector<double> view_mask(const std::vector<ViewLevel>& assignment,
                              const ViewWeights& weights,
                              bool has_class_token) {
    weights.validate();
    std::vector<double> mask;
    mask.reserve(assignment.size() + (has_class_token ? 1 : 0));
    if (has_class_token) {
        mask.push_back(1.0);
    }
    for (ViewLevel level : assignment) {
        mask.push_back(weights.of(level));
    }
    return mask;
}

void AttentionInputs::validate() const {
    if (head_dim < 1 || heads < 1) {
        throw std::invalid_argument("attention: head_dim and heads must be >= 1");
    }
    const int model_dim = head_dim * heads;
    if (q.cols != model_dim || k.cols != model_dim || v.cols != model_dim) {
        throw std::invalid_argument("attention: matrix width must be heads * head_dim");
    }
    if (q.rows != k.rows || q.rows != v.rows || q.rows < 1) {
        throw std::invalid_argument("attention: token counts must match and be >= 1");
    }
}

Matrix masked_attention(const AttentionInputs& inp,
                        const std::vector<double>& noise,
                        const std::vector<double>& view) {
    inp.validate();
    const int tokens = inp.q.rows;
    if (noise.size() != static_cast<std::size_t>(tokens) ||
        view.size() != static_cast<std::size_t>(tokens)) {
        throw std::invalid_argument("attention: mask length must equal token count");
    }
    const int d = inp.head_dim;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix out(tokens, inp.heads * d);
    std::vector<double> logits(static_cast<std::size_t>(tokens));
    for (int h = 0; h < inp.heads; ++h) {
        const int off = h * d;
        for (int i = 0; i < tokens; ++i) {
            double max_logit = -std::numeric_limits<double>::infinity();
            for (int j = 0; j < tokens; ++j) {
                double dot = 0.0;
                for (int c = 0; c < d; ++c) {
                    dot += inp.q.at(i, off + c) * inp.k.at(j, off + c);
                }
                const double logit = dot * scale + noise[static_cast<std::size_t>(j)];
                logits[static_cast<std::size_t>(j)] = logit;
                max_logit = std::max(max_logit, logit);
            }
            double denom = 0.0;
            for (int j = 0; j < tokens; ++j) {
                logits[static_cast<std::size_t>(j)] =
                    std::exp(logits[static_cast<std::size_t>(j)] - max_logit);
                denom += logits[static_cast<std::size_t>(j)];
            }
            for (int j = 0; j < tokens; ++j) {
                const double weight = logits[static_cast<std::size_t>(j)] / denom *
                                      view[static_cast<std::size_t>(j)];
                if (weight == 0.0) {
                    continue;
                }
                for (int c = 0; c < d; ++c) {
                    out.at(i, off + c) += weight * inp.v.at(j, off + c);
                }
            }
        }
    }
    return out;
}

int unmasked_key_count(const std::vector<double>& noise) {
    int count = 0;
    for (double v : noise) {
        if (v == 0.0) {
            ++count;
        }
    }
    return count;
}

} // namespace sbv

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace sbv {

struct CnnParams {
    std::uint64_t kernel = 1;  // K
    std::uint64_t c_in = 1;
    std::uint64_t c_out = 1;
    std::uint64_t h_in = 1;
    std::uint64_t w_in = 1;
    std::uint64_t stride_h = 1;
    std::uint64_t stride_w = 1;

    void validate() const; // rejects non-integral output dims
    std::uint64_t h_out() const { return h_in / stride_h; }
    std::uint64_t w_out() const { return w_in / stride_w; }
};

struct AttnParams {
    std::uint64_t batch = 1;    // B
    std::uint64_t heads = 1;    // H
    std::uint64_t head_dim = 1; // D
    std::uint64_t window = 1;   // W, token count
    std::uint64_t unmasked = 1; // N, unmasked key count

    void validate() const; // requires 1 <= unmasked <= window
};

struct MlpParams {
    std::uint64_t batch = 1;  // B
    std::uint64_t window = 1; // W
    std::uint64_t d_fc = 1;
    std::uint64_t d_proj = 1;

    void validate() const;
};

using StageParams = std::variant<CnnParams, AttnParams, MlpParams>;

struct FlopsReport {
    std::uint64_t cnn = 0;
    std::uint64_t attention = 0;
    std::uint64_t mlp = 0;
    std::uint64_t total = 0;
    std::uint64_t crops = 0;
};

// (K^2 C_in C_out) x (H_out W_out)
std::uint64_t flops_cnn(const CnnParams& p);
// 2 B H D x W N
std::uint64_t flops_attention(const AttnParams& p);
// 2 B W D_fc + B W D_proj, as printed (no input-dimension factor)
std::uint64_t flops_mlp(const MlpParams& p);

FlopsReport pipeline_report(const std::vector<StageParams>& stages,
                            std::uint64_t crops);

// 100 (baseline - ours) / baseline
double reduction_percent(double baseline, double ours);
double reduction_percent(const FlopsReport& baseline, const FlopsReport& ours);

// total / 1e15 at 3 significant digits
std::string pflops_display(std::uint64_t total);

// ViT-B/16 stage list: 16x16/3->768 patch embed on a 224x224 crop, then
// `layers` x (attention + MLP) blocks over `tokens` tokens with `unmasked`
// visible keys.
struct VitProfile {
    std::uint64_t image_side = 224;
    std::uint64_t patch = 16;
    std::uint64_t width = 768;
    std::uint64_t heads = 12;
    std::uint64_t head_dim = 64;
    std::uint64_t layers = 12;
    std::uint64_t d_fc = 3072;
    std::uint64_t d_proj = 768;

    std::uint64_t tokens() const {
        const std::uint64_t side = image_side / patch;
        return side * side + 1; // patches + class token
    }
};

std::vector<StageParams> vit_stages(const VitProfile& profile,
                                    std::uint64_t unmasked);

} // namespace sbv

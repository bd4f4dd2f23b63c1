#include "sbv/flops_audit.hpp"

#include <cstdio>
#include <stdexcept>

namespace sbv {

void CnnParams::validate() const {
    for (std::uint64_t v : {kernel, c_in, c_out, h_in, w_in, stride_h, stride_w}) {
        if (v < 1) {
            throw std::invalid_argument("cnn flops: parameters must be >= 1");
        }
    }
    if (h_in % stride_h != 0 || w_in % stride_w != 0) {
        throw std::invalid_argument("cnn flops: output dims must be integral");
    }
}

void AttnParams::validate() const {
    for (std::uint64_t v : {batch, heads, head_dim, window, unmasked}) {
        if (v < 1) {
            throw std::invalid_argument("attention flops: parameters must be >= 1");
        }
    }
    if (unmasked > window) {
        throw std::invalid_argument("attention flops: unmasked count exceeds window");
    }
}

void MlpParams::validate() const {
    for (std::uint64_t v : {batch, window, d_fc, d_proj}) {
        if (v < 1) {
            throw std::invalid_argument("mlp flops: parameters must be >= 1");
        }
    }
}

std::uint64_t flops_cnn(const CnnParams& p) {
    p.validate();
    return p.kernel * p.kernel * p.c_in * p.c_out * p.h_out() * p.w_out();
}

std::uint64_t flops_attention(const AttnParams& p) {
    p.validate();
    return 2 * p.batch * p.heads * p.head_dim * p.window * p.unmasked;
}

std::uint64_t flops_mlp(const MlpParams& p) {
    p.validate();
    return 2 * p.batch * p.window * p.d_fc + p.batch * p.window * p.d_proj;
}

FlopsReport pipeline_report(const std::vector<StageParams>& stages,
                            std::uint64_t crops) {
    FlopsReport report;
    report.crops = crops;
    for (const StageParams& stage : stages) {
        if (const auto* cnn = std::get_if<CnnParams>(&stage)) {
            report.cnn += flops_cnn(*cnn);
        } else if (const auto* attn = std::get_if<AttnParams>(&stage)) {
            report.attention += flops_attention(*attn);
        } else {
            report.mlp += flops_mlp(std::get<MlpParams>(stage));
        }
    }
    report.cnn *= crops;
    report.attention *= crops;
    report.mlp *= crops;
    report.total = report.cnn + report.attention + report.mlp;
    return report;
}

double reduction_percent(double baseline, double ours) {
    if (!(baseline > 0.0)) {
        throw std::invalid_argument("reduction: baseline must be > 0");
    }
    return 100.0 * (baseline - ours) / baseline;
}

double reduction_percent(const FlopsReport& baseline, const FlopsReport& ours) {
    return reduction_percent(static_cast<double>(baseline.total),
                             static_cast<double>(ours.total));
}

std::string pflops_display(std::uint64_t total) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", static_cast<double>(total) / 1e15);
    return buf;
}

std::vector<StageParams> vit_stages(const VitProfile& profile,
                                    std::uint64_t unmasked) {
    CnnParams embed;
    embed.kernel = profile.patch;
    embed.c_in = 3;
    embed.c_out = profile.width;
    embed.h_in = profile.image_side;
    embed.w_in = profile.image_side;
    embed.stride_h = profile.patch;
    embed.stride_w = profile.patch;

    AttnParams attn;
    attn.batch = 1;
    attn.heads = profile.heads;
    attn.head_dim = profile.head_dim;
    attn.window = profile.tokens();
    attn.unmasked = unmasked;

    MlpParams mlp;
    mlp.batch = 1;
    mlp.window = profile.tokens();
    mlp.d_fc = profile.d_fc;
    mlp.d_proj = profile.d_proj;

    std::vector<StageParams> stages;
    stages.push_back(embed);
    for (std::uint64_t l = 0; l < profile.layers; ++l) {
        stages.push_back(attn);
        stages.push_back(mlp);
    }
    return stages;
}

} // namespace sbv

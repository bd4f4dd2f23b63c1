#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sbv/flops_audit.hpp"
#include "sbv/rng.hpp"

using namespace sbv;

TEST_CASE("cnn flops") {
    SUBCASE("all-ones layer costs exactly one multiply-add") {
        CHECK(flops_cnn(CnnParams{}) == 1);
    }
    SUBCASE("patch embedding of a 224 crop") {
        CnnParams p;
        p.kernel = 16;
        p.c_in = 3;
        p.c_out = 768;
        p.h_in = 224;
        p.w_in = 224;
        p.stride_h = 16;
        p.stride_w = 16;
        CHECK(p.h_out() == 14);
        CHECK(p.w_out() == 14);
        CHECK(flops_cnn(p) == 115'605'504ULL);
    }
    SUBCASE("linear in output channels") {
        CnnParams p;
        p.kernel = 3;
        p.c_in = 7;
        p.c_out = 5;
        p.h_in = 12;
        p.w_in = 8;
        p.stride_h = 2;
        p.stride_w = 2;
        const std::uint64_t base = flops_cnn(p);
        p.c_out = 10;
        CHECK(flops_cnn(p) == 2 * base);
    }
    SUBCASE("rejects non-integral output dims and zero params") {
        CnnParams p;
        p.h_in = 10;
        p.stride_h = 3;
        CHECK_THROWS_AS(flops_cnn(p), std::invalid_argument);
        p = CnnParams{};
        p.c_in = 0;
        CHECK_THROWS_AS(flops_cnn(p), std::invalid_argument);
    }
}

TEST_CASE("attention flops") {
    SUBCASE("unit config costs two flops") {
        CHECK(flops_attention(AttnParams{}) == 2);
    }
    SUBCASE("one dense transformer layer at 197 tokens") {
        AttnParams p;
        p.batch = 1;
        p.heads = 12;
        p.head_dim = 64;
        p.window = 197;
        p.unmasked = 197;
        CHECK(flops_attention(p) == 59'610'624ULL);
    }
    SUBCASE("linear in the unmasked key count") {
        AttnParams p;
        p.batch = 2;
        p.heads = 4;
        p.head_dim = 8;
        p.window = 64;
        p.unmasked = 16;
        const std::uint64_t base = flops_attention(p);
        p.unmasked = 32;
        CHECK(flops_attention(p) == 2 * base);
    }
    SUBCASE("unmasked count must stay within the window") {
        AttnParams p;
        p.window = 8;
        p.unmasked = 9;
        CHECK_THROWS_AS(flops_attention(p), std::invalid_argument);
        p.unmasked = 0;
        CHECK_THROWS_AS(flops_attention(p), std::invalid_argument);
    }
}

TEST_CASE("mlp flops") {
    SUBCASE("unit config costs three flops") {
        CHECK(flops_mlp(MlpParams{}) == 3);
    }
    SUBCASE("one transformer mlp block at 197 tokens") {
        MlpParams p;
        p.batch = 1;
        p.window = 197;
        p.d_fc = 3072;
        p.d_proj = 768;
        CHECK(flops_mlp(p) == 1'361'664ULL);
    }
    SUBCASE("linear in batch") {
        MlpParams p;
        p.batch = 3;
        p.window = 17;
        p.d_fc = 40;
        p.d_proj = 10;
        CHECK(flops_mlp(p) == 3 * flops_mlp(MlpParams{1, 17, 40, 10}));
    }
    SUBCASE("zero params rejected") {
        MlpParams p;
        p.d_fc = 0;
        CHECK_THROWS_AS(flops_mlp(p), std::invalid_argument);
    }
}

TEST_CASE("pipeline report") {
    VitProfile profile;
    CHECK(profile.tokens() == 197);
    const auto stages = vit_stages(profile, profile.tokens());
    CHECK(stages.size() == 25); // embed + 12 x (attn, mlp)

    SUBCASE("twelve-layer dense backbone total") {
        const FlopsReport report = pipeline_report(stages, 1);
        CHECK(report.cnn == 115'605'504ULL);
        CHECK(report.attention == 12 * 59'610'624ULL);
        CHECK(report.mlp == 12 * 1'361'664ULL);
        CHECK(report.total == 847'272'960ULL);
        CHECK(report.crops == 1);
    }
    SUBCASE("zero crops zero the report") {
        const FlopsReport report = pipeline_report(stages, 0);
        CHECK(report.cnn == 0);
        CHECK(report.attention == 0);
        CHECK(report.mlp == 0);
        CHECK(report.total == 0);
    }
    SUBCASE("crops scale every category") {
        const FlopsReport one = pipeline_report(stages, 1);
        const FlopsReport two = pipeline_report(stages, 2);
        CHECK(two.cnn == 2 * one.cnn);
        CHECK(two.attention == 2 * one.attention);
        CHECK(two.mlp == 2 * one.mlp);
        CHECK(two.total == 2 * one.total);
    }
    SUBCASE("masking reduces only the attention bucket") {
        const FlopsReport dense = pipeline_report(stages, 1);
        const FlopsReport sparse = pipeline_report(vit_stages(profile, 100), 1);
        CHECK(sparse.cnn == dense.cnn);
        CHECK(sparse.mlp == dense.mlp);
        CHECK(sparse.attention == 12 * 2ULL * 12 * 64 * 197 * 100);
        CHECK(sparse.attention < dense.attention);
        CHECK(sparse.total == sparse.cnn + sparse.attention + sparse.mlp);
    }
    SUBCASE("matches a stage-by-stage tally on random mixes") {
        SplitMix64 rng(701);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<StageParams> mix;
            std::uint64_t cnn = 0, attn = 0, mlp = 0;
            const int n = 1 + static_cast<int>(rng.next_below(8));
            for (int i = 0; i < n; ++i) {
                switch (rng.next_below(3)) {
                case 0: {
                    CnnParams p;
                    p.kernel = 1 + rng.next_below(4);
                    p.c_in = 1 + rng.next_below(8);
                    p.c_out = 1 + rng.next_below(8);
                    p.stride_h = 1 + rng.next_below(3);
                    p.stride_w = 1 + rng.next_below(3);
                    p.h_in = p.stride_h * (1 + rng.next_below(6));
                    p.w_in = p.stride_w * (1 + rng.next_below(6));
                    mix.emplace_back(p);
                    cnn += p.kernel * p.kernel * p.c_in * p.c_out *
                           (p.h_in / p.stride_h) * (p.w_in / p.stride_w);
                    break;
                }
                case 1: {
                    AttnParams p;
                    p.batch = 1 + rng.next_below(3);
                    p.heads = 1 + rng.next_below(4);
                    p.head_dim = 1 + rng.next_below(16);
                    p.window = 1 + rng.next_below(32);
                    p.unmasked = 1 + rng.next_below(p.window);
                    mix.emplace_back(p);
                    attn += 2 * p.batch * p.heads * p.head_dim * p.window * p.unmasked;
                    break;
                }
                default: {
                    MlpParams p;
                    p.batch = 1 + rng.next_below(3);
                    p.window = 1 + rng.next_below(32);
                    p.d_fc = 1 + rng.next_below(64);
                    p.d_proj = 1 + rng.next_below(32);
                    mix.emplace_back(p);
                    mlp += 2 * p.batch * p.window * p.d_fc + p.batch * p.window * p.d_proj;
                    break;
                }
                }
            }
            const std::uint64_t crops = rng.next_below(4);
            const FlopsReport report = pipeline_report(mix, crops);
            CHECK(report.cnn == crops * cnn);
            CHECK(report.attention == crops * attn);
            CHECK(report.mlp == crops * mlp);
            CHECK(report.total == crops * (cnn + attn + mlp));
        }
    }
}

TEST_CASE("reduction percent") {
    CHECK(reduction_percent(100.0, 50.0) == doctest::Approx(50.0));
    CHECK(reduction_percent(55.3, 10.9) == doctest::Approx(80.3).epsilon(0.001));
    CHECK(reduction_percent(55.3, 25.7) == doctest::Approx(53.5).epsilon(0.001));
    CHECK(reduction_percent(10.0, 10.0) == 0.0);
    CHECK(reduction_percent(10.0, 20.0) == -100.0);
    CHECK_THROWS_AS(reduction_percent(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(reduction_percent(-5.0, 1.0), std::invalid_argument);

    FlopsReport baseline, ours;
    baseline.total = 1000;
    ours.total = 250;
    CHECK(reduction_percent(baseline, ours) == doctest::Approx(75.0));
    baseline.total = 0;
    CHECK_THROWS_AS(reduction_percent(baseline, ours), std::invalid_argument);
}

TEST_CASE("petaflops display") {
    CHECK(pflops_display(847'272'960ULL) == "8.47e-07");
    CHECK(pflops_display(55'300'000'000'000'000ULL) == "55.3");
    CHECK(pflops_display(1'000'000'000'000'000ULL) == "1");
    CHECK(pflops_display(0) == "0");
    CHECK(pflops_display(6'778'183'680ULL) == "6.78e-06");
}

#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbv/io.hpp"
#include "sbv/pipeline.hpp"
#include "sbv/strategy_bench.hpp"
#include "sbv/svg_render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;    // bad input or config
constexpr int kExitInternal = 3; // violated internal invariant

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        sbv::write_file(out_path, text);
    }
}

sbv::PipelineConfig load_config_or_default(const std::string& path) {
    if (path.empty()) {
        return sbv::PipelineConfig{};
    }
    return sbv::parse_config(sbv::read_file(path));
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> parts;
    std::stringstream stream(csv);
    std::string part;
    while (std::getline(stream, part, ',')) {
        if (!part.empty()) {
            parts.push_back(part);
        }
    }
    return parts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concept-and-view region sampler for open-vocabulary detection"};
    app.require_subcommand(1);

    std::string scene_path, config_path, out_path, input_path, sample_path;
    std::string layers_csv = "canvas,edges,concepts,views";
    std::string strategies_csv = "grid,random,random_tight,random_neighbor,"
                                 "baron_reduced,baron,sbv";
    std::string format = "json";
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto* sample = app.add_subcommand("sample", "Run the full pipeline on a scene");
    sample->add_option("scene", scene_path, "Scene JSON file")->required();
    sample->add_option("--config", config_path, "Pipeline config JSON");
    sample->add_option("--seed", seed, "Override the config seed")
        ->each([&](const std::string&) { seed_set = true; });
    sample->add_option("--out", out_path, "Output file (default stdout)");

    auto* canvas = app.add_subcommand("canvas", "Dump the probability canvas");
    canvas->add_option("scene", scene_path, "Scene JSON file")->required();
    canvas->add_option("--config", config_path, "Pipeline config JSON");
    canvas->add_option("--out", out_path, "Output file (default stdout)");

    auto* audit = app.add_subcommand("audit", "FLOPs audit: baseline vs ours");
    audit->add_option("input", input_path, "Audit input JSON")->required();
    audit->add_option("--out", out_path, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Compare sampling strategies");
    bench->add_option("scene", scene_path, "Scene JSON file")->required();
    bench->add_option("--config", config_path, "Pipeline config JSON");
    bench->add_option("--strategies", strategies_csv, "Comma-separated list");
    bench->add_option("--seed", seed, "Override the config seed")
        ->each([&](const std::string&) { seed_set = true; });
    bench->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    bench->add_option("--out", out_path, "Output file (default stdout)");

    auto* render = app.add_subcommand("render", "Render a sample output as SVG");
    render->add_option("sample", sample_path, "Sample output JSON")->required();
    render->add_option("scene", scene_path, "Scene JSON file")->required();
    render->add_option("--layers", layers_csv, "Comma-separated layer names");
    render->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (sample->parsed()) {
            const sbv::SceneInput scene = sbv::parse_scene(sbv::read_file(scene_path));
            sbv::PipelineConfig cfg = load_config_or_default(config_path);
            if (seed_set) {
                cfg.seed = seed;
            }
            const sbv::SampleOutput output = sbv::run_pipeline(scene, cfg);
            emit(sbv::serialize_sample(output, cfg), out_path);
        } else if (canvas->parsed()) {
            const sbv::SceneInput scene = sbv::parse_scene(sbv::read_file(scene_path));
            const sbv::PipelineConfig cfg = load_config_or_default(config_path);
            cfg.validate();
            const sbv::ProposalSets sets = sbv::preprocess(
                scene.proposals, scene.topk, cfg.prep(), scene.image);
            emit(sbv::serialize_canvas(
                     sbv::build_canvas(sets.reduced, cfg.delta, scene.image)),
                 out_path);
        } else if (audit->parsed()) {
            const sbv::AuditInput input = sbv::parse_audit(sbv::read_file(input_path));
            const sbv::FlopsReport baseline = sbv::pipeline_report(
                sbv::vit_stages(input.profile, input.baseline.unmasked),
                input.baseline.crops);
            const sbv::FlopsReport ours = sbv::pipeline_report(
                sbv::vit_stages(input.profile, input.ours.unmasked),
                input.ours.crops);
            emit(sbv::serialize_audit(baseline, ours), out_path);
        } else if (bench->parsed()) {
            const sbv::SceneInput scene = sbv::parse_scene(sbv::read_file(scene_path));
            sbv::PipelineConfig cfg = load_config_or_default(config_path);
            if (seed_set) {
                cfg.seed = seed;
            }
            sbv::BenchConfig bench_cfg;
            bench_cfg.seed = cfg.seed;
            std::vector<sbv::BenchRow> rows;
            for (const std::string& name : split_csv(strategies_csv)) {
                const auto strategy = sbv::strategy_from_name(name);
                if (!strategy) {
                    throw sbv::ValidationError("bench: unknown strategy \"" +
                                               name + "\"");
                }
                const auto groups = sbv::sample_strategy(
                    *strategy, scene, bench_cfg, cfg, bench_cfg.seed);
                sbv::BenchRow row;
                row.strategy = name;
                row.groups = static_cast<int>(groups.size());
                row.regions = sbv::region_count(groups);
                row.flops = sbv::pipeline_report(
                    sbv::vit_stages(sbv::VitProfile{},
                                    sbv::VitProfile{}.tokens()),
                    static_cast<std::uint64_t>(groups.size()));
                rows.push_back(std::move(row));
            }
            emit(format == "text" ? sbv::bench_text_table(rows)
                                  : sbv::serialize_bench(rows),
                 out_path);
        } else if (render->parsed()) {
            const sbv::SampleFile file = sbv::parse_sample(sbv::read_file(sample_path));
            const sbv::SceneInput scene = sbv::parse_scene(sbv::read_file(scene_path));
            std::set<sbv::SvgLayer> layers;
            for (const std::string& name : split_csv(layers_csv)) {
                const auto layer = sbv::layer_from_name(name);
                if (!layer) {
                    throw sbv::ValidationError("render: unknown layer \"" +
                                               name + "\"");
                }
                layers.insert(*layer);
            }
            emit(sbv::render_svg(file.output, scene, layers, file.config),
                 out_path);
        }
    } catch (const sbv::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sbv::PipelineError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

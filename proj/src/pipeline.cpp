#include "sbv/pipeline.hpp"

#include <map>
#include <utility>

namespace sbv {

namespace {

template <typename F>
auto stage(const char* name, F&& fn) {
    try {
        return fn();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(name, e.what());
    }
}

// Pair concepts from the already-walked paths: intersection of hit sets over
// each pair's Reached paths, union over pairs (ascending pair order).
std::vector<Concept> concepts_from_edges(const std::vector<EdgePath>& edges,
                                         const std::vector<ScoredBox>& reduced) {
    std::map<std::pair<int, int>, std::set<int>> common;
    std::map<std::pair<int, int>, bool> seen;
    for (const EdgePath& path : edges) {
        if (path.terminated != Termination::Reached) {
            continue;
        }
        const std::pair<int, int> pair{path.start, path.end};
        if (!seen[pair]) {
            common[pair] = path.hit_concepts;
            seen[pair] = true;
            continue;
        }
        std::set<int>& acc = common[pair];
        std::set<int> kept;
        for (int id : acc) {
            if (path.hit_concepts.count(id)) {
                kept.insert(id);
            }
        }
        acc = std::move(kept);
    }
    std::set<int> ids;
    for (const auto& [pair, hits] : common) {
        ids.insert(hits.begin(), hits.end());
    }
    std::vector<Concept> nu;
    nu.reserve(ids.size());
    for (int id : ids) {
        nu.push_back(Concept{id, reduced[static_cast<std::size_t>(id)]});
    }
    return nu;
}

} // namespace

SampleOutput run_pipeline(const SceneInput& scene, const PipelineConfig& cfg) {
    cfg.validate();
    SampleOutput out;
    out.image = scene.image;
    if (scene.proposals.empty()) {
        return out;
    }

    const ProposalSets sets = stage("prep", [&] {
        return preprocess(scene.proposals, scene.topk, cfg.prep(), scene.image);
    });
    out.reduced = sets.reduced;
    out.added = sets.added;

    const Canvas canvas = stage("canvas", [&] {
        return build_canvas(sets.reduced, cfg.delta, scene.image);
    });

    const EdgeConfig edge_cfg = cfg.edges();
    out.edges = stage("edges", [&] {
        return collect_all_edges(canvas, sets.added, sets.reduced, edge_cfg);
    });

    out.nu = stage("concepts", [&] {
        return concepts_from_edges(out.edges, sets.reduced);
    });

    out.bags = stage("bags", [&] {
        return form_bags(sets.added, out.nu, cfg.concepts(), scene.image,
                         cfg.seed);
    });

    const ViewWeights weights = cfg.weights();
    std::vector<ViewSet> crop_views; // ViewSet behind each ViewRecord
    stage("views", [&] {
        for (const ConceptBag& bag : out.bags) {
            if (bag.windows.empty() && bag.fallback_regions.empty()) {
                continue; // every direction was trimmed away
            }
            const ViewSet views = hierarchical_views(bag, scene.image);
            for (std::size_t li = 0; li < views.locals.size(); ++li) {
                SwitchDecision decision =
                    select_view(static_cast<int>(li), views, out.nu, weights,
                                cfg.tau_switch, cfg.coverage);
                decision.concept_id =
                    bag.windows.empty() ? -1 : bag.windows[li].concept_id;
                ViewRecord rec;
                rec.proposal_id = bag.proposal_id;
                rec.window_index = static_cast<int>(li);
                rec.decision = decision;
                rec.crop = view_box(decision, views);
                out.views.push_back(rec);
                crop_views.push_back(views);
            }
        }
        return 0;
    });

    const PatchGrid grid; // ViT-B/16 tokenization: 14x14 + class token
    const VitProfile profile;
    stage("masks", [&] {
        for (std::size_t i = 0; i < out.views.size(); ++i) {
            if (!scene.similarity_maps.empty()) {
                const SimilarityMap& map =
                    scene.similarity_maps[i % scene.similarity_maps.size()];
                const SimilarityStats stats = similarity_stats(map);
                const std::vector<double> mask =
                    noise_mask(map, cfg.noise(), true);
                MaskSummary summary;
                summary.crop_index = static_cast<int>(i);
                summary.mean = stats.mean;
                summary.stddev = stats.stddev;
                summary.threshold = stats.mean + cfg.sigma_scale * stats.stddev;
                summary.unmasked = unmasked_key_count(mask);
                summary.masked = static_cast<int>(mask.size()) - summary.unmasked;
                out.noise_summaries.push_back(summary);
            }
            out.view_masks.push_back(view_mask(
                assign_patch_views(grid, out.views[i].crop, crop_views[i]),
                weights, true));
        }
        return 0;
    });

    stage("flops", [&] {
        FlopsReport total;
        total.crops = out.views.size();
        for (std::size_t i = 0; i < out.views.size(); ++i) {
            std::uint64_t unmasked = profile.tokens();
            if (i < out.noise_summaries.size()) {
                const MaskSummary& m = out.noise_summaries[i];
                // Mask lengths match the window only for 14x14 maps; other
                // shapes keep the full window in the audit.
                if (m.masked + m.unmasked ==
                    static_cast<int>(profile.tokens())) {
                    unmasked = static_cast<std::uint64_t>(m.unmasked);
                }
            }
            const FlopsReport crop =
                pipeline_report(vit_stages(profile, unmasked), 1);
            total.cnn += crop.cnn;
            total.attention += crop.attention;
            total.mlp += crop.mlp;
        }
        total.total = total.cnn + total.attention + total.mlp;
        out.flops = total;
        return 0;
    });

    return out;
}

} // namespace sbv

#include "sbv/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace sbv {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string(what) + ": " + e.what());
    }
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const char* what) {
    if (!j.is_object()) {
        throw ValidationError(std::string(what) + ": expected an object");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* key) {
                return it.key() == key;
            }) == allowed.end()) {
            throw ValidationError(std::string(what) + ": unknown key \"" +
                                  it.key() + "\"");
        }
    }
}

void check_schema(const json& j, const char* what) {
    if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
        throw ValidationError(std::string(what) + ": unsupported schema version");
    }
}

json box_to_json(const BBox& b) {
    return json::array({b.x1, b.y1, b.x2, b.y2});
}

BBox box_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw ValidationError("box: expected [x1, y1, x2, y2]");
    }
    return BBox(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                j[3].get<double>());
}

json scored_to_json(const ScoredBox& b) {
    return json{{"box", box_to_json(b.box)}, {"objectness", b.objectness}};
}

ScoredBox scored_from_json(const json& j) {
    check_keys(j, {"box", "objectness"}, "scored box");
    return ScoredBox(box_from_json(j.at("box")), j.at("objectness").get<double>());
}

json image_to_json(const ImageDims& image) {
    return json{{"width", image.width}, {"height", image.height}};
}

ImageDims image_from_json(const json& j) {
    check_keys(j, {"width", "height"}, "image");
    return ImageDims(j.at("width").get<int>(), j.at("height").get<int>());
}

const char* termination_name(Termination t) {
    switch (t) {
    case Termination::Reached:   return "reached";
    case Termination::DeadEnd:   return "dead_end";
    case Termination::LeftImage: return "left_image";
    case Termination::Budget:    return "budget";
    }
    return "dead_end";
}

Termination termination_from(const std::string& name) {
    if (name == "reached")    return Termination::Reached;
    if (name == "dead_end")   return Termination::DeadEnd;
    if (name == "left_image") return Termination::LeftImage;
    if (name == "budget")     return Termination::Budget;
    throw ValidationError("edge: unknown termination \"" + name + "\"");
}

const char* level_name(ViewLevel level) {
    switch (level) {
    case ViewLevel::Global: return "global";
    case ViewLevel::Middle: return "middle";
    case ViewLevel::Local:  return "local";
    }
    return "local";
}

ViewLevel level_from(const std::string& name) {
    if (name == "global") return ViewLevel::Global;
    if (name == "middle") return ViewLevel::Middle;
    if (name == "local")  return ViewLevel::Local;
    throw ValidationError("view: unknown level \"" + name + "\"");
}

json config_to_json(const PipelineConfig& cfg) {
    json j{{"schema", kSchemaVersion},
           {"delta", cfg.delta},
           {"edges_per_pair", cfg.edges_per_pair},
           {"extra_proposals", cfg.extra_proposals},
           {"topk", cfg.topk},
           {"fallback_bags", cfg.fallback_bags},
           {"distance_weight", cfg.distance_weight},
           {"aspect_weight", cfg.aspect_weight},
           {"distance_threshold", cfg.distance_threshold},
           {"sigma_scale", cfg.sigma_scale},
           {"delta_global", cfg.delta_global},
           {"delta_middle", cfg.delta_middle},
           {"delta_local", cfg.delta_local},
           {"tau_switch", cfg.tau_switch},
           {"coverage", cfg.coverage},
           {"seed", cfg.seed},
           {"overlap_threshold", cfg.overlap_threshold},
           {"directions_per_proposal", cfg.directions_per_proposal}};
    if (cfg.min_area) {
        j["min_area"] = *cfg.min_area;
    }
    return j;
}

PipelineConfig config_from_json(const json& j) {
    check_keys(j,
               {"schema", "delta", "edges_per_pair", "extra_proposals", "topk",
                "fallback_bags", "distance_weight", "aspect_weight",
                "distance_threshold", "sigma_scale", "delta_global",
                "delta_middle", "delta_local", "tau_switch", "coverage", "seed",
                "overlap_threshold", "directions_per_proposal", "min_area"},
               "config");
    check_schema(j, "config");
    PipelineConfig cfg;
    auto load = [&](const char* key, auto& field) {
        if (j.contains(key)) {
            field = j.at(key).get<std::decay_t<decltype(field)>>();
        }
    };
    load("delta", cfg.delta);
    load("edges_per_pair", cfg.edges_per_pair);
    load("extra_proposals", cfg.extra_proposals);
    load("topk", cfg.topk);
    load("fallback_bags", cfg.fallback_bags);
    load("distance_weight", cfg.distance_weight);
    load("aspect_weight", cfg.aspect_weight);
    load("distance_threshold", cfg.distance_threshold);
    load("sigma_scale", cfg.sigma_scale);
    load("delta_global", cfg.delta_global);
    load("delta_middle", cfg.delta_middle);
    load("delta_local", cfg.delta_local);
    load("tau_switch", cfg.tau_switch);
    load("coverage", cfg.coverage);
    load("seed", cfg.seed);
    load("overlap_threshold", cfg.overlap_threshold);
    load("directions_per_proposal", cfg.directions_per_proposal);
    if (j.contains("min_area")) {
        cfg.min_area = j.at("min_area").get<double>();
    }
    cfg.validate();
    return cfg;
}

json flops_to_json(const FlopsReport& r) {
    return json{{"cnn", r.cnn},           {"attention", r.attention},
                {"mlp", r.mlp},           {"total", r.total},
                {"crops", r.crops},       {"pflops", pflops_display(r.total)}};
}

FlopsReport flops_from_json(const json& j) {
    check_keys(j, {"cnn", "attention", "mlp", "total", "crops", "pflops"},
               "flops report");
    FlopsReport r;
    r.cnn = j.at("cnn").get<std::uint64_t>();
    r.attention = j.at("attention").get<std::uint64_t>();
    r.mlp = j.at("mlp").get<std::uint64_t>();
    r.total = j.at("total").get<std::uint64_t>();
    r.crops = j.at("crops").get<std::uint64_t>();
    return r;
}

json similarity_to_json(const SimilarityMap& map) {
    return json{{"rows", map.rows}, {"cols", map.cols}, {"values", map.values}};
}

SimilarityMap similarity_from_json(const json& j) {
    check_keys(j, {"rows", "cols", "values"}, "similarity map");
    SimilarityMap map;
    map.rows = j.at("rows").get<int>();
    map.cols = j.at("cols").get<int>();
    map.values = j.at("values").get<std::vector<double>>();
    map.validate();
    return map;
}

json output_to_json(const SampleOutput& out) {
    json j;
    j["image"] = image_to_json(out.image);
    j["reduced"] = json::array();
    for (const ScoredBox& b : out.reduced) {
        j["reduced"].push_back(scored_to_json(b));
    }
    j["added"] = json::array();
    for (const ScoredBox& b : out.added) {
        j["added"].push_back(scored_to_json(b));
    }
    j["nu"] = json::array();
    for (const Concept& c : out.nu) {
        j["nu"].push_back(json{{"id", c.id},
                               {"box", box_to_json(c.box.box)},
                               {"objectness", c.box.objectness}});
    }
    j["bags"] = json::array();
    for (const ConceptBag& bag : out.bags) {
        json jb{{"proposal_id", bag.proposal_id},
                {"fallback", bag.fallback},
                {"directions_retained", bag.directions_retained}};
        jb["windows"] = json::array();
        for (const ConceptWindow& w : bag.windows) {
            jb["windows"].push_back(json{{"direction", w.direction},
                                         {"concept_id", w.concept_id},
                                         {"representative", scored_to_json(w.representative)},
                                         {"window", box_to_json(w.window)}});
        }
        jb["fallback_regions"] = json::array();
        for (const BBox& b : bag.fallback_regions) {
            jb["fallback_regions"].push_back(box_to_json(b));
        }
        j["bags"].push_back(std::move(jb));
    }
    j["edges"] = json::array();
    for (const EdgePath& path : out.edges) {
        json je{{"start", path.start},
                {"end", path.end},
                {"terminated", termination_name(path.terminated)}};
        je["steps"] = json::array();
        for (const GridCoord& c : path.steps) {
            je["steps"].push_back(json::array({c.row, c.col}));
        }
        je["hits"] = json::array();
        for (int id : path.hit_concepts) {
            je["hits"].push_back(id);
        }
        j["edges"].push_back(std::move(je));
    }
    j["views"] = json::array();
    for (const ViewRecord& v : out.views) {
        j["views"].push_back(json{
            {"proposal_id", v.proposal_id},
            {"window_index", v.window_index},
            {"crop", box_to_json(v.crop)},
            {"decision",
             json{{"local_index", v.decision.local_index},
                  {"concept_id", v.decision.concept_id},
                  {"r", v.decision.r},
                  {"local_count", v.decision.local_count},
                  {"parent_count", v.decision.parent_count},
                  {"tau", v.decision.tau},
                  {"chosen", level_name(v.decision.chosen)}}}});
    }
    j["noise_summaries"] = json::array();
    for (const MaskSummary& m : out.noise_summaries) {
        j["noise_summaries"].push_back(json{{"crop_index", m.crop_index},
                                            {"mean", m.mean},
                                            {"stddev", m.stddev},
                                            {"threshold", m.threshold},
                                            {"masked", m.masked},
                                            {"unmasked", m.unmasked}});
    }
    j["view_masks"] = out.view_masks;
    j["flops"] = flops_to_json(out.flops);
    return j;
}

SampleOutput output_from_json(const json& j) {
    check_keys(j,
               {"image", "reduced", "added", "nu", "bags", "edges", "views",
                "noise_summaries", "view_masks", "flops"},
               "sample output");
    SampleOutput out;
    out.image = image_from_json(j.at("image"));
    for (const json& jb : j.at("reduced")) {
        out.reduced.push_back(scored_from_json(jb));
    }
    for (const json& jb : j.at("added")) {
        out.added.push_back(scored_from_json(jb));
    }
    for (const json& jc : j.at("nu")) {
        check_keys(jc, {"id", "box", "objectness"}, "concept");
        Concept c;
        c.id = jc.at("id").get<int>();
        c.box = ScoredBox(box_from_json(jc.at("box")),
                          jc.at("objectness").get<double>());
        out.nu.push_back(std::move(c));
    }
    for (const json& jb : j.at("bags")) {
        check_keys(jb,
                   {"proposal_id", "fallback", "directions_retained", "windows",
                    "fallback_regions"},
                   "concept bag");
        ConceptBag bag;
        bag.proposal_id = jb.at("proposal_id").get<int>();
        bag.fallback = jb.at("fallback").get<bool>();
        bag.directions_retained =
            jb.at("directions_retained").get<std::vector<int>>();
        for (const json& jw : jb.at("windows")) {
            check_keys(jw, {"direction", "concept_id", "representative", "window"},
                       "concept window");
            ConceptWindow w;
            w.direction = jw.at("direction").get<int>();
            w.concept_id = jw.at("concept_id").get<int>();
            w.representative = scored_from_json(jw.at("representative"));
            w.window = box_from_json(jw.at("window"));
            bag.windows.push_back(std::move(w));
        }
        for (const json& jr : jb.at("fallback_regions")) {
            bag.fallback_regions.push_back(box_from_json(jr));
        }
        out.bags.push_back(std::move(bag));
    }
    for (const json& je : j.at("edges")) {
        check_keys(je, {"start", "end", "terminated", "steps", "hits"}, "edge");
        EdgePath path;
        path.start = je.at("start").get<int>();
        path.end = je.at("end").get<int>();
        path.terminated = termination_from(je.at("terminated").get<std::string>());
        for (const json& js : je.at("steps")) {
            if (!js.is_array() || js.size() != 2) {
                throw ValidationError("edge: step must be [row, col]");
            }
            path.steps.push_back(GridCoord{js[0].get<int>(), js[1].get<int>()});
        }
        for (const json& jh : je.at("hits")) {
            path.hit_concepts.insert(jh.get<int>());
        }
        out.edges.push_back(std::move(path));
    }
    for (const json& jv : j.at("views")) {
        check_keys(jv, {"proposal_id", "window_index", "crop", "decision"},
                   "view record");
        ViewRecord v;
        v.proposal_id = jv.at("proposal_id").get<int>();
        v.window_index = jv.at("window_index").get<int>();
        v.crop = box_from_json(jv.at("crop"));
        const json& jd = jv.at("decision");
        check_keys(jd,
                   {"local_index", "concept_id", "r", "local_count",
                    "parent_count", "tau", "chosen"},
                   "switch decision");
        v.decision.local_index = jd.at("local_index").get<int>();
        v.decision.concept_id = jd.at("concept_id").get<int>();
        v.decision.r = jd.at("r").get<double>();
        v.decision.local_count = jd.at("local_count").get<int>();
        v.decision.parent_count = jd.at("parent_count").get<int>();
        v.decision.tau = jd.at("tau").get<double>();
        v.decision.chosen = level_from(jd.at("chosen").get<std::string>());
        out.views.push_back(std::move(v));
    }
    for (const json& jm : j.at("noise_summaries")) {
        check_keys(jm,
                   {"crop_index", "mean", "stddev", "threshold", "masked",
                    "unmasked"},
                   "mask summary");
        MaskSummary m;
        m.crop_index = jm.at("crop_index").get<int>();
        m.mean = jm.at("mean").get<double>();
        m.stddev = jm.at("stddev").get<double>();
        m.threshold = jm.at("threshold").get<double>();
        m.masked = jm.at("masked").get<int>();
        m.unmasked = jm.at("unmasked").get<int>();
        out.noise_summaries.push_back(m);
    }
    out.view_masks = j.at("view_masks").get<std::vector<std::vector<double>>>();
    out.flops = flops_from_json(j.at("flops"));
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

void PipelineConfig::validate() const {
    if (!(delta > 0.0)) {
        throw ValidationError("config: delta must be > 0");
    }
    if (!(coverage > 0.0 && coverage <= 1.0)) {
        throw ValidationError("config: coverage must lie in (0, 1]");
    }
    if (tau_switch < 0.0) {
        throw ValidationError("config: tau_switch must be >= 0");
    }
    try {
        prep().validate();
        edges().validate();
        concepts().validate();
        weights().validate();
        noise().validate();
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
}

PrepConfig PipelineConfig::prep() const {
    PrepConfig cfg;
    cfg.topk = topk;
    cfg.extra_proposals = extra_proposals;
    cfg.distance_weight = distance_weight;
    cfg.distance_threshold = distance_threshold;
    cfg.overlap_threshold = overlap_threshold;
    cfg.min_area = min_area;
    return cfg;
}

EdgeConfig PipelineConfig::edges() const {
    EdgeConfig cfg;
    cfg.edges_per_pair = edges_per_pair;
    cfg.max_steps = 0;
    cfg.seed = seed;
    return cfg;
}

ConceptConfig PipelineConfig::concepts() const {
    ConceptConfig cfg;
    cfg.distance_weight = distance_weight;
    cfg.aspect_weight = aspect_weight;
    cfg.distance_threshold = distance_threshold;
    cfg.directions_per_proposal = directions_per_proposal;
    cfg.fallback_bags = fallback_bags;
    return cfg;
}

ViewWeights PipelineConfig::weights() const {
    ViewWeights w;
    w.global_weight = delta_global;
    w.middle_weight = delta_middle;
    w.local_weight = delta_local;
    return w;
}

NoiseMaskConfig PipelineConfig::noise() const {
    NoiseMaskConfig cfg;
    cfg.sigma_scale = sigma_scale;
    return cfg;
}

std::string serialize_config(const PipelineConfig& cfg) {
    return dump(config_to_json(cfg));
}

PipelineConfig parse_config(const std::string& text) {
    return config_from_json(parse_json(text, "config"));
}

std::string serialize_scene(const SceneInput& scene) {
    json j{{"schema", kSchemaVersion}, {"image", image_to_json(scene.image)}};
    j["proposals"] = json::array();
    for (const ScoredBox& b : scene.proposals) {
        j["proposals"].push_back(scored_to_json(b));
    }
    j["topk"] = json::array();
    for (const ScoredBox& b : scene.topk) {
        j["topk"].push_back(scored_to_json(b));
    }
    if (!scene.ground_truth.empty()) {
        j["ground_truth"] = json::array();
        for (const BBox& b : scene.ground_truth) {
            j["ground_truth"].push_back(box_to_json(b));
        }
    }
    if (!scene.similarity_maps.empty()) {
        j["similarity_maps"] = json::array();
        for (const SimilarityMap& m : scene.similarity_maps) {
            j["similarity_maps"].push_back(similarity_to_json(m));
        }
    }
    if (!scene.chi.empty()) {
        j["chi"] = scene.chi;
    }
    if (!scene.neighbor_embeddings.empty()) {
        j["neighbor_embeddings"] = scene.neighbor_embeddings;
    }
    return dump(j);
}

SceneInput parse_scene(const std::string& text) {
    const json j = parse_json(text, "scene");
    check_keys(j,
               {"schema", "image", "proposals", "topk", "ground_truth",
                "similarity_maps", "chi", "neighbor_embeddings"},
               "scene");
    check_schema(j, "scene");
    SceneInput scene;
    try {
        scene.image = image_from_json(j.at("image"));
        const double w = scene.image.width;
        const double h = scene.image.height;
        int clamped = 0;
        auto clamp_box = [&](const BBox& b) {
            const double x1 = std::clamp(b.x1, 0.0, w);
            const double y1 = std::clamp(b.y1, 0.0, h);
            const double x2 = std::clamp(b.x2, 0.0, w);
            const double y2 = std::clamp(b.y2, 0.0, h);
            if (x1 != b.x1 || y1 != b.y1 || x2 != b.x2 || y2 != b.y2) {
                ++clamped;
            }
            if (!(x1 < x2) || !(y1 < y2)) {
                throw ValidationError("scene: box degenerate after clamping");
            }
            return BBox(x1, y1, x2, y2);
        };
        if (j.contains("proposals")) {
            for (const json& jb : j.at("proposals")) {
                ScoredBox b = scored_from_json(jb);
                b.box = clamp_box(b.box);
                scene.proposals.push_back(b);
            }
        }
        if (j.contains("topk")) {
            for (const json& jb : j.at("topk")) {
                ScoredBox b = scored_from_json(jb);
                b.box = clamp_box(b.box);
                scene.topk.push_back(b);
            }
        }
        if (j.contains("ground_truth")) {
            for (const json& jb : j.at("ground_truth")) {
                scene.ground_truth.push_back(clamp_box(box_from_json(jb)));
            }
        }
        if (j.contains("similarity_maps")) {
            for (const json& jm : j.at("similarity_maps")) {
                scene.similarity_maps.push_back(similarity_from_json(jm));
            }
        }
        if (j.contains("chi")) {
            scene.chi = j.at("chi").get<std::vector<double>>();
        }
        if (j.contains("neighbor_embeddings")) {
            scene.neighbor_embeddings =
                j.at("neighbor_embeddings").get<std::vector<std::vector<double>>>();
        }
        if (clamped > 0) {
            std::cerr << "scene: clamped " << clamped
                      << " box(es) to image bounds\n";
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("scene: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("scene: ") + e.what());
    }
    return scene;
}

std::string serialize_sample(const SampleOutput& output,
                             const PipelineConfig& cfg) {
    // The generating config (seed included) rides along as the file header.
    json j{{"schema", kSchemaVersion},
           {"config", config_to_json(cfg)},
           {"output", output_to_json(output)}};
    return dump(j);
}

SampleFile parse_sample(const std::string& text) {
    const json j = parse_json(text, "sample");
    check_keys(j, {"schema", "config", "output"}, "sample");
    check_schema(j, "sample");
    SampleFile file;
    try {
        file.config = config_from_json(j.at("config"));
        file.output = output_from_json(j.at("output"));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("sample: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("sample: ") + e.what());
    }
    return file;
}

std::string serialize_canvas(const Canvas& canvas) {
    json j{{"schema", kSchemaVersion},
           {"delta", canvas.delta()},
           {"image", image_to_json(canvas.image())},
           {"rows", canvas.rows()},
           {"cols", canvas.cols()}};
    json rows = json::array();
    for (int r = 0; r < canvas.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < canvas.cols(); ++c) {
            const GridCoord coord{r, c};
            row.push_back(json::array({canvas.prob(coord, Direction::Up),
                                       canvas.prob(coord, Direction::Down),
                                       canvas.prob(coord, Direction::Left),
                                       canvas.prob(coord, Direction::Right)}));
        }
        rows.push_back(std::move(row));
    }
    j["probs"] = std::move(rows);
    return dump(j);
}

AuditInput parse_audit(const std::string& text) {
    const json j = parse_json(text, "audit");
    check_keys(j, {"schema", "profile", "baseline", "ours"}, "audit");
    check_schema(j, "audit");
    AuditInput input;
    try {
        if (j.contains("profile")) {
            const json& jp = j.at("profile");
            check_keys(jp,
                       {"image_side", "patch", "width", "heads", "head_dim",
                        "layers", "d_fc", "d_proj"},
                       "audit profile");
            auto load = [&](const char* key, std::uint64_t& field) {
                if (jp.contains(key)) {
                    field = jp.at(key).get<std::uint64_t>();
                }
            };
            load("image_side", input.profile.image_side);
            load("patch", input.profile.patch);
            load("width", input.profile.width);
            load("heads", input.profile.heads);
            load("head_dim", input.profile.head_dim);
            load("layers", input.profile.layers);
            load("d_fc", input.profile.d_fc);
            load("d_proj", input.profile.d_proj);
        }
        auto side = [&](const char* key) {
            const json& js = j.at(key);
            check_keys(js, {"crops", "unmasked"}, "audit side");
            AuditSide s;
            s.crops = js.at("crops").get<std::uint64_t>();
            s.unmasked = js.contains("unmasked")
                             ? js.at("unmasked").get<std::uint64_t>()
                             : input.profile.tokens();
            return s;
        };
        input.baseline = side("baseline");
        input.ours = side("ours");
    } catch (const json::exception& e) {
        throw ValidationError(std::string("audit: ") + e.what());
    }
    return input;
}

std::string serialize_audit(const FlopsReport& baseline,
                            const FlopsReport& ours) {
    json j{{"schema", kSchemaVersion},
           {"baseline", flops_to_json(baseline)},
           {"ours", flops_to_json(ours)},
           {"reduction_percent", reduction_percent(baseline, ours)}};
    return dump(j);
}

std::string serialize_bench(const std::vector<BenchRow>& rows) {
    json j{{"schema", kSchemaVersion}};
    j["rows"] = json::array();
    for (const BenchRow& row : rows) {
        j["rows"].push_back(json{{"strategy", row.strategy},
                                 {"groups", row.groups},
                                 {"regions", row.regions},
                                 {"flops", flops_to_json(row.flops)}});
    }
    return dump(j);
}

std::string bench_text_table(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    char line[128];
    std::snprintf(line, sizeof(line), "%-16s %8s %8s %10s\n", "strategy",
                  "groups", "regions", "pflops");
    out << line;
    for (const BenchRow& row : rows) {
        std::snprintf(line, sizeof(line), "%-16s %8d %8d %10s\n",
                      row.strategy.c_str(), row.groups, row.regions,
                      pflops_display(row.flops.total).c_str());
        out << line;
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot write file: " + path);
    }
    out << content;
    if (!out.flush()) {
        throw ValidationError("cannot write file: " + path);
    }
}

} // namespace sbv

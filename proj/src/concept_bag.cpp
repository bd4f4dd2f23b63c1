#include "sbv/concept_bag.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sbv/rng.hpp"
#include "sbv/strategy_bench.hpp"

namespace sbv {

namespace {

constexpr std::uint64_t kFallbackStream = 0xBA60;

double capped_distance(const BBox& a, const BBox& b, double eta,
                       const ImageDims& image) {
    return std::min(center_distance(a, b) / (eta * image.diagonal()), 1.0);
}

} // namespace

void ConceptConfig::validate() const {
    if (distance_weight < 0.0 || aspect_weight < 0.0) {
        throw std::invalid_argument("concept bag: weights must be >= 0");
    }
    if (!(distance_threshold > 0.0)) {
        throw std::invalid_argument("concept bag: distance threshold must be > 0");
    }
    if (directions_per_proposal != 4 && directions_per_proposal != 8) {
        throw std::invalid_argument("concept bag: directions must be 4 or 8");
    }
    if (fallback_bags < 1) {
        throw std::invalid_argument("concept bag: fallback bag count must be >= 1");
    }
}

int sector_of(const BBox& proposal, double cx, double cy, int directions) {
    const double dx = cx - proposal.center_x();
    const double dy = cy - proposal.center_y();
    const double deg = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
    const double width = 360.0 / directions;
    const double norm = std::fmod(deg + 360.0, 360.0);
    return static_cast<int>(std::floor((norm + width / 2.0) / width)) % directions;
}

std::vector<Concept> candidate_concepts(const BBox& proposal, int direction,
                                        const std::vector<Concept>& nu,
                                        const ConceptConfig& cfg,
                                        const ImageDims& image) {
    std::vector<Concept> sorted = nu;
    std::sort(sorted.begin(), sorted.end(),
              [](const Concept& a, const Concept& b) { return a.id < b.id; });
    const double max_dist = cfg.distance_threshold * image.diagonal();
    std::vector<Concept> out;
    for (const Concept& c : sorted) {
        if (center_distance(c.box.box, proposal) > max_dist) {
            continue;
        }
        if (sector_of(proposal, c.box.box.center_x(), c.box.box.center_y(),
                      cfg.directions_per_proposal) != direction) {
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::optional<Concept> select_representative(const std::vector<Concept>& cands,
                                             const BBox& proposal,
                                             const ConceptConfig& cfg,
                                             const ImageDims& image) {
    std::vector<Concept> sorted = cands;
    std::sort(sorted.begin(), sorted.end(),
              [](const Concept& a, const Concept& b) { return a.id < b.id; });
    std::optional<Concept> best;
    double best_score = 0.0;
    for (const Concept& c : sorted) {
        const double score =
            cfg.distance_weight *
                capped_distance(c.box.box, proposal, cfg.distance_threshold, image) +
            cfg.aspect_weight * aspect_score(merge(c.box.box, proposal));
        // Ascending id scan, so equal (score, objectness) keeps the lower id.
        bool better = !best;
        if (best && score != best_score) {
            better = score > best_score;
        } else if (best && c.box.objectness != best->box.objectness) {
            better = c.box.objectness > best->box.objectness;
        }
        if (better) {
            best = c;
            best_score = score;
        }
    }
    return best;
}

std::vector<ConceptBag> form_bags(const std::vector<ScoredBox>& proposals,
                                  const std::vector<Concept>& nu,
                                  const ConceptConfig& cfg,
                                  const ImageDims& image, std::uint64_t seed) {
    cfg.validate();
    std::vector<ConceptBag> bags;
    bags.reserve(proposals.size());
    for (std::size_t i = 0; i < proposals.size(); ++i) {
        const BBox& owner = proposals[i].box;
        ConceptBag bag;
        bag.proposal_id = static_cast<int>(i);
        for (int dir = 0; dir < cfg.directions_per_proposal; ++dir) {
            const auto cands = candidate_concepts(owner, dir, nu, cfg, image);
            if (cands.empty()) {
                continue;
            }
            bag.directions_retained.push_back(dir);
            const auto rep = select_representative(cands, owner, cfg, image);
            const BBox window = merge(rep->box.box, owner);
            std::vector<BBox> obstacles;
            for (std::size_t o = 0; o < proposals.size(); ++o) {
                if (o == i) {
                    continue;
                }
                // Proposals overlapping the owner never trim its windows.
                if (intersection_area(proposals[o].box, owner) > 0.0) {
                    continue;
                }
                obstacles.push_back(proposals[o].box);
            }
            const auto trimmed = trim(window, owner, obstacles);
            if (!trimmed) {
                continue;
            }
            bag.windows.push_back(
                ConceptWindow{dir, rep->id, rep->box, *trimmed});
        }
        bag.fallback = bag.directions_retained.empty();
        if (bag.fallback) {
            SplitMix64 rng(mix_seed(seed, kFallbackStream,
                                    static_cast<std::uint64_t>(i)));
            const auto groups = baron_bags(owner, image, cfg.fallback_bags,
                                           kBaronNeighborsPerBag, rng);
            for (const auto& group : groups) {
                bag.fallback_regions.insert(bag.fallback_regions.end(),
                                            group.begin(), group.end());
            }
        }
        bags.push_back(std::move(bag));
    }
    return bags;
}

} // namespace sbv

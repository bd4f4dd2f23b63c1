#include "sbv/edge_sampler.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

#include "sbv/rng.hpp"

namespace sbv {

namespace {

GridCoord stepped(const GridCoord& c, Direction d) {
    switch (d) {
    case Direction::Up:    return GridCoord{c.row - 1, c.col};
    case Direction::Down:  return GridCoord{c.row + 1, c.col};
    case Direction::Left:  return GridCoord{c.row, c.col - 1};
    case Direction::Right: return GridCoord{c.row, c.col + 1};
    }
    return c;
}

int l1(const GridCoord& a, const GridCoord& b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

EdgePath walk(const Canvas& canvas, const GridCoord& origin,
              const GridCoord& dest, const std::vector<BBox>& others,
              int max_steps, SplitMix64& rng) {
    EdgePath path;
    path.steps.push_back(origin);
    GridCoord cur = origin;
    int moves = 0;
    while (true) {
        if (cur == dest) {
            path.terminated = Termination::Reached;
            break;
        }
        if (moves >= max_steps) {
            path.terminated = Termination::Budget;
            break;
        }
        std::array<Direction, 4> admissible{};
        std::array<double, 4> weight{};
        int n = 0;
        double total = 0.0;
        const int cur_dist = l1(cur, dest);
        for (Direction d : kDirections) {
            const GridCoord next = stepped(cur, d);
            if (!canvas.in_bounds(next)) {
                continue;
            }
            if (l1(next, dest) >= cur_dist) {
                continue;
            }
            const double px = canvas.pixel_x(next);
            const double py = canvas.pixel_y(next);
            bool blocked = false;
            for (const BBox& b : others) {
                if (b.strictly_inside(px, py)) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) {
                continue;
            }
            admissible[static_cast<std::size_t>(n)] = d;
            weight[static_cast<std::size_t>(n)] = canvas.prob(cur, d);
            total += weight[static_cast<std::size_t>(n)];
            ++n;
        }
        if (n == 0) {
            path.terminated = Termination::DeadEnd;
            break;
        }
        Direction chosen = admissible[0];
        if (total > 0.0) {
            const double u = rng.next_double() * total;
            double acc = 0.0;
            chosen = admissible[static_cast<std::size_t>(n - 1)];
            for (int k = 0; k < n; ++k) {
                acc += weight[static_cast<std::size_t>(k)];
                if (u < acc) {
                    chosen = admissible[static_cast<std::size_t>(k)];
                    break;
                }
            }
        } else {
            chosen = admissible[rng.next_below(static_cast<std::uint64_t>(n))];
        }
        cur = stepped(cur, chosen);
        path.steps.push_back(cur);
        ++moves;
    }
    return path;
}

std::set<int> path_hit_set(const EdgePath& path,
                           const std::vector<ScoredBox>& reduced,
                           const Canvas& canvas) {
    std::set<int> hits;
    const double delta = canvas.delta();
    for (std::size_t r = 0; r < reduced.size(); ++r) {
        const BBox& b = reduced[r].box;
        const BBox dilated{b.x1 - delta, b.y1 - delta, b.x2 + delta, b.y2 + delta};
        for (const GridCoord& c : path.steps) {
            if (dilated.contains_point(canvas.pixel_x(c), canvas.pixel_y(c))) {
                hits.insert(static_cast<int>(r));
                break;
            }
        }
    }
    return hits;
}

} // namespace

void EdgeConfig::validate() const {
    if (edges_per_pair < 1) {
        throw std::invalid_argument("edge sampler: edges per pair must be >= 1");
    }
    if (max_steps < 0) {
        throw std::invalid_argument("edge sampler: step budget must be >= 0");
    }
}

int EdgeConfig::resolved_max_steps(const Canvas& canvas) const {
    return max_steps > 0 ? max_steps : canvas.cols() + canvas.rows();
}

std::vector<EdgePath> generate_edges(const Canvas& canvas, const BBox& start,
                                     const BBox& end,
                                     const std::vector<BBox>& others,
                                     const EdgeConfig& cfg, PairId pair_id) {
    cfg.validate();
    if (start == end) {
        throw std::invalid_argument("edge sampler: start and end must differ");
    }
    const GridCoord origin = canvas.nearest_coord(start.center_x(), start.center_y());
    const GridCoord dest = canvas.nearest_coord(end.center_x(), end.center_y());
    const int budget = cfg.resolved_max_steps(canvas);
    SplitMix64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(pair_id.i),
                            static_cast<std::uint64_t>(pair_id.j)));
    std::vector<EdgePath> paths;
    paths.reserve(static_cast<std::size_t>(cfg.edges_per_pair));
    for (int e = 0; e < cfg.edges_per_pair; ++e) {
        EdgePath path = walk(canvas, origin, dest, others, budget, rng);
        path.start = pair_id.i;
        path.end = pair_id.j;
        paths.push_back(std::move(path));
    }
    return paths;
}

std::set<int> extract_pair_concepts(const std::vector<EdgePath>& paths,
                                    const std::vector<ScoredBox>& reduced,
                                    const Canvas& canvas) {
    std::set<int> common;
    bool first = true;
    for (const EdgePath& path : paths) {
        if (path.terminated != Termination::Reached) {
            continue;
        }
        const std::set<int> hits = path_hit_set(path, reduced, canvas);
        if (first) {
            common = hits;
            first = false;
        } else {
            std::set<int> kept;
            for (int id : common) {
                if (hits.count(id)) {
                    kept.insert(id);
                }
            }
            common = std::move(kept);
        }
        if (common.empty()) {
            break;
        }
    }
    return common;
}

std::set<int> collect_visual_concept_ids(const Canvas& canvas,
                                         const std::vector<ScoredBox>& r_added,
                                         const std::vector<ScoredBox>& reduced,
                                         const EdgeConfig& cfg) {
    std::set<int> concepts;
    const int n = static_cast<int>(r_added.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<BBox> others;
            for (int o = 0; o < n; ++o) {
                if (o != i && o != j) {
                    others.push_back(r_added[static_cast<std::size_t>(o)].box);
                }
            }
            const auto paths =
                generate_edges(canvas, r_added[static_cast<std::size_t>(i)].box,
                               r_added[static_cast<std::size_t>(j)].box, others,
                               cfg, PairId{i, j});
            for (int id : extract_pair_concepts(paths, reduced, canvas)) {
                concepts.insert(id);
            }
        }
    }
    return concepts;
}

std::vector<ScoredBox> collect_visual_concepts(const Canvas& canvas,
                                               const std::vector<ScoredBox>& r_added,
                                               const std::vector<ScoredBox>& reduced,
                                               const EdgeConfig& cfg) {
    std::vector<ScoredBox> out;
    for (int id : collect_visual_concept_ids(canvas, r_added, reduced, cfg)) {
        out.push_back(reduced[static_cast<std::size_t>(id)]);
    }
    return out;
}

std::vector<EdgePath> collect_all_edges(const Canvas& canvas,
                                        const std::vector<ScoredBox>& r_added,
                                        const std::vector<ScoredBox>& reduced,
                                        const EdgeConfig& cfg) {
    std::vector<EdgePath> all;
    const int n = static_cast<int>(r_added.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<BBox> others;
            for (int o = 0; o < n; ++o) {
                if (o != i && o != j) {
                    others.push_back(r_added[static_cast<std::size_t>(o)].box);
                }
            }
            auto paths =
                generate_edges(canvas, r_added[static_cast<std::size_t>(i)].box,
                               r_added[static_cast<std::size_t>(j)].box, others,
                               cfg, PairId{i, j});
            for (EdgePath& path : paths) {
                path.hit_concepts = path_hit_set(path, reduced, canvas);
                all.push_back(std::move(path));
            }
        }
    }
    return all;
}

} // namespace sbv

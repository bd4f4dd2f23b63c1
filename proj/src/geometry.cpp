#include "sbv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sbv {

BBox::BBox(double x1, double y1, double x2, double y2)
    : x1(x1), y1(y1), x2(x2), y2(y2) {
    if (!(std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) && std::isfinite(y2))) {
        throw std::invalid_argument("BBox: coordinates must be finite");
    }
    if (!(x1 < x2 && y1 < y2)) {
        throw std::invalid_argument("BBox: requires x1 < x2 and y1 < y2");
    }
}

ScoredBox::ScoredBox(const BBox& box, double objectness)
    : box(box), objectness(objectness) {
    if (!(objectness >= 0.0 && objectness <= 1.0)) {
        throw std::invalid_argument("ScoredBox: objectness must be in [0, 1]");
    }
}

ImageDims::ImageDims(int width, int height) : width(width), height(height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("ImageDims: width and height must be >= 1");
    }
}

double ImageDims::diagonal() const {
    return std::hypot(static_cast<double>(width), static_cast<double>(height));
}

double intersection_area(const BBox& a, const BBox& b) {
    const double iw = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
    const double ih = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
    if (iw <= 0.0 || ih <= 0.0) {
        return 0.0;
    }
    return iw * ih;
}

double iou(const BBox& a, const BBox& b) {
    const double inter = intersection_area(a, b);
    const double uni = a.area() + b.area() - inter;
    return inter / uni;
}

double giou(const BBox& a, const BBox& b) {
    const double inter = intersection_area(a, b);
    const double uni = a.area() + b.area() - inter;
    const double hull = merge(a, b).area();
    return inter / uni - (hull - uni) / hull;
}

BBox merge(const BBox& a, const BBox& b) {
    return BBox(std::min(a.x1, b.x1), std::min(a.y1, b.y1),
                std::max(a.x2, b.x2), std::max(a.y2, b.y2));
}

double center_distance(const BBox& a, const BBox& b) {
    return std::hypot(a.center_x() - b.center_x(), a.center_y() - b.center_y());
}

double aspect_score(const BBox& b) {
    const double w = b.width();
    const double h = b.height();
    return std::min(w, h) / std::max(w, h);
}

namespace {

bool interior_overlaps(const BBox& a, const BBox& b) {
    return intersection_area(a, b) > 0.0;
}

} // namespace

std::optional<BBox> trim(const BBox& window, const BBox& owner,
                         const std::vector<BBox>& obstacles) {
    if (!window.contains(owner)) {
        throw std::invalid_argument("trim: owner must be contained in window");
    }
    BBox current = window;
    for (const BBox& obs : obstacles) {
        if (!interior_overlaps(current, obs)) {
            continue;
        }
        // Candidate single-side shrinks that clear this obstacle while
        // keeping the owner inside. Order fixes the tie-break: left, top,
        // right, bottom.
        struct Candidate {
            double loss;
            BBox shrunk;
        };
        std::optional<Candidate> best;
        auto consider = [&](bool valid, double loss, double nx1, double ny1,
                            double nx2, double ny2) {
            if (!valid) {
                return;
            }
            if (!best || loss < best->loss) {
                best = Candidate{loss, BBox(nx1, ny1, nx2, ny2)};
            }
        };
        consider(obs.x2 <= owner.x1 && obs.x2 > current.x1,
                 (obs.x2 - current.x1) * current.height(),
                 obs.x2, current.y1, current.x2, current.y2);
        consider(obs.y2 <= owner.y1 && obs.y2 > current.y1,
                 (obs.y2 - current.y1) * current.width(),
                 current.x1, obs.y2, current.x2, current.y2);
        consider(obs.x1 >= owner.x2 && obs.x1 < current.x2,
                 (current.x2 - obs.x1) * current.height(),
                 current.x1, current.y1, obs.x1, current.y2);
        consider(obs.y1 >= owner.y2 && obs.y1 < current.y2,
                 (current.y2 - obs.y1) * current.width(),
                 current.x1, current.y1, current.x2, obs.y1);
        if (!best) {
            return std::nullopt;
        }
        current = best->shrunk;
    }
    return current;
}

} // namespace sbv

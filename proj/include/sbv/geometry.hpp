#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace sbv {

// Axis-aligned box in image coordinates (origin top-left, real-valued,
// closed). Degenerate or non-finite boxes are rejected at construction.
struct BBox {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;

    BBox() = default;
    BBox(double x1, double y1, double x2, double y2);

    double width() const { return x2 - x1; }
    double height() const { return y2 - y1; }
    double area() const { return width() * height(); }
    double center_x() const { return 0.5 * (x1 + x2); }
    double center_y() const { return 0.5 * (y1 + y2); }

    bool contains(const BBox& other) const {
        return x1 <= other.x1 && y1 <= other.y1 && x2 >= other.x2 && y2 >= other.y2;
    }
    bool contains_point(double px, double py) const {
        return x1 <= px && px <= x2 && y1 <= py && py <= y2;
    }
    // Strict interior membership; boundary points do not count.
    bool strictly_inside(double px, double py) const {
        return x1 < px && px < x2 && y1 < py && py < y2;
    }

    bool operator==(const BBox& other) const = default;
};

// Box with an RPN objectness score in [0, 1].
struct ScoredBox {
    BBox box;
    double objectness = 0.0;

    ScoredBox() = default;
    ScoredBox(const BBox& box, double objectness);

    bool operator==(const ScoredBox& other) const = default;
};

struct ImageDims {
    int width = 1;
    int height = 1;

    ImageDims() = default;
    ImageDims(int width, int height);

    double diagonal() const;
    BBox full_box() const { return BBox(0.0, 0.0, width, height); }
};

double intersection_area(const BBox& a, const BBox& b);
double iou(const BBox& a, const BBox& b);

// IoU minus the hull area not covered by the union, in [-1, 1].
double giou(const BBox& a, const BBox& b);

// Smallest axis-aligned box containing both operands.
BBox merge(const BBox& a, const BBox& b);

double center_distance(const BBox& a, const BBox& b);

// min(w, h) / max(w, h): 1 for squares, -> 0 for elongated boxes.
double aspect_score(const BBox& b);

// Shrinks `window` one side per obstacle overlapping its interior until no
// obstacle overlap remains, always keeping `owner` contained. Side choice
// minimizes the area lost; ties prefer left, then top, then right, then
// bottom. Returns nullopt when no side can clear an obstacle without cutting
// into the owner.
std::optional<BBox> trim(const BBox& window, const BBox& owner,
                         const std::vector<BBox>& obstacles);

} // namespace sbv

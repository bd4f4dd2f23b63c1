#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "sbv/geometry.hpp"

namespace sbv {

enum class Direction { Up = 0, Down = 1, Left = 2, Right = 3 };

inline constexpr std::array<Direction, 4> kDirections = {
    Direction::Up, Direction::Down, Direction::Left, Direction::Right};

struct GridCoord {
    int row = 0;
    int col = 0;
    bool operator==(const GridCoord&) const = default;
};

// Grid of interval `delta` over the image. Each coordinate stores, per
// cardinal direction, the average objectness-weighted IoU of the reduced
// RPN boxes against the delta-sized directional probe box.
class Canvas {
public:
    Canvas(double delta, const ImageDims& image);

    double delta() const { return delta_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const ImageDims& image() const { return image_; }

    bool in_bounds(const GridCoord& c) const {
        return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
    }

    // Pixel position of a coordinate, clamped to the image.
    double pixel_x(const GridCoord& c) const;
    double pixel_y(const GridCoord& c) const;

    // Grid coordinate nearest to a pixel position.
    GridCoord nearest_coord(double px, double py) const;

    double prob(const GridCoord& c, Direction d) const;
    double& prob(const GridCoord& c, Direction d);

    const std::vector<double>& raw() const { return probs_; }

private:
    double delta_;
    int rows_;
    int cols_;
    ImageDims image_;
    std::vector<double> probs_; // rows x cols x 4

    std::size_t index(const GridCoord& c, Direction d) const;
};

// The delta x delta probe square adjacent to the coordinate in direction
// `dir`, centered on the perpendicular axis and clipped to the image.
// Nullopt when the clipped square is empty.
std::optional<BBox> directional_box(const GridCoord& coord, Direction dir,
                                    double delta, const ImageDims& image);

Canvas build_canvas(const std::vector<ScoredBox>& reduced, double delta,
                    const ImageDims& image);

} // namespace sbv

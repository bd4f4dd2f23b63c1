#include "sbv/canvas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sbv {

Canvas::Canvas(double delta, const ImageDims& image)
    : delta_(delta), image_(image) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw std::invalid_argument("canvas: grid interval must be positive");
    }
    cols_ = static_cast<int>(std::ceil(image.width / delta)) + 1;
    rows_ = static_cast<int>(std::ceil(image.height / delta)) + 1;
    probs_.assign(static_cast<std::size_t>(rows_) * cols_ * 4, 0.0);
}

std::size_t Canvas::index(const GridCoord& c, Direction d) const {
    if (!in_bounds(c)) {
        throw std::out_of_range("canvas: coordinate out of bounds");
    }
    return ((static_cast<std::size_t>(c.row) * cols_) + c.col) * 4 +
           static_cast<std::size_t>(d);
}

double Canvas::pixel_x(const GridCoord& c) const {
    return std::min(c.col * delta_, static_cast<double>(image_.width));
}

double Canvas::pixel_y(const GridCoord& c) const {
    return std::min(c.row * delta_, static_cast<double>(image_.height));
}

GridCoord Canvas::nearest_coord(double px, double py) const {
    const int col = static_cast<int>(std::lround(px / delta_));
    const int row = static_cast<int>(std::lround(py / delta_));
    return GridCoord{std::clamp(row, 0, rows_ - 1), std::clamp(col, 0, cols_ - 1)};
}

double Canvas::prob(const GridCoord& c, Direction d) const {
    return probs_[index(c, d)];
}

double& Canvas::prob(const GridCoord& c, Direction d) {
    return probs_[index(c, d)];
}

std::optional<BBox> directional_box(const GridCoord& coord, Direction dir,
                                    double delta, const ImageDims& image) {
    const double px = std::min(coord.col * delta, static_cast<double>(image.width));
    const double py = std::min(coord.row * delta, static_cast<double>(image.height));
    const double half = delta / 2.0;
    double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;
    switch (dir) {
    case Direction::Up:
        x1 = px - half; x2 = px + half; y1 = py - delta; y2 = py;
        break;
    case Direction::Down:
        x1 = px - half; x2 = px + half; y1 = py; y2 = py + delta;
        break;
    case Direction::Left:
        x1 = px - delta; x2 = px; y1 = py - half; y2 = py + half;
        break;
    case Direction::Right:
        x1 = px; x2 = px + delta; y1 = py - half; y2 = py + half;
        break;
    }
    x1 = std::max(x1, 0.0);
    y1 = std::max(y1, 0.0);
    x2 = std::min(x2, static_cast<double>(image.width));
    y2 = std::min(y2, static_cast<double>(image.height));
    if (!(x1 < x2) || !(y1 < y2)) {
        return std::nullopt;
    }
    return BBox{x1, y1, x2, y2};
}

Canvas build_canvas(const std::vector<ScoredBox>& reduced, double delta,
                    const ImageDims& image) {
    Canvas canvas(delta, image);
    if (reduced.empty()) {
        return canvas;
    }
    for (int row = 0; row < canvas.rows(); ++row) {
        for (int col = 0; col < canvas.cols(); ++col) {
            const GridCoord coord{row, col};
            for (Direction dir : kDirections) {
                const auto probe = directional_box(coord, dir, delta, image);
                if (!probe) {
                    continue;
                }
                double sum = 0.0;
                for (const ScoredBox& b : reduced) {
                    sum += b.objectness * iou(b.box, *probe);
                }
                canvas.prob(coord, dir) = sum / static_cast<double>(reduced.size());
            }
        }
    }
    return canvas;
}

} // namespace sbv

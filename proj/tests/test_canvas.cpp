#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sbv/canvas.hpp"
#include "sbv/rng.hpp"

using namespace sbv;

namespace {

// Fully independent per-cell recomputation: probe geometry and IoU are
// restated inline rather than calling the library helpers.
double oracle_prob(int row, int col, Direction dir,
                   const std::vector<ScoredBox>& reduced, double delta,
                   const ImageDims& image) {
    if (reduced.empty()) {
        return 0.0;
    }
    const double w = image.width, h = image.height;
    const double px = std::min(col * delta, w);
    const double py = std::min(row * delta, h);
    const double half = delta / 2.0;
    double qx1 = 0, qy1 = 0, qx2 = 0, qy2 = 0;
    switch (dir) {
    case Direction::Up:    qx1 = px - half; qx2 = px + half; qy1 = py - delta; qy2 = py; break;
    case Direction::Down:  qx1 = px - half; qx2 = px + half; qy1 = py; qy2 = py + delta; break;
    case Direction::Left:  qx1 = px - delta; qx2 = px; qy1 = py - half; qy2 = py + half; break;
    case Direction::Right: qx1 = px; qx2 = px + delta; qy1 = py - half; qy2 = py + half; break;
    }
    qx1 = std::max(qx1, 0.0);
    qy1 = std::max(qy1, 0.0);
    qx2 = std::min(qx2, w);
    qy2 = std::min(qy2, h);
    if (!(qx1 < qx2) || !(qy1 < qy2)) {
        return 0.0;
    }
    const double probe_area = (qx2 - qx1) * (qy2 - qy1);
    double sum = 0.0;
    for (const ScoredBox& b : reduced) {
        const double iw = std::min(b.box.x2, qx2) - std::max(b.box.x1, qx1);
        const double ih = std::min(b.box.y2, qy2) - std::max(b.box.y1, qy1);
        const double inter = (iw > 0.0 && ih > 0.0) ? iw * ih : 0.0;
        const double box_area = (b.box.x2 - b.box.x1) * (b.box.y2 - b.box.y1);
        sum += b.objectness * (inter / (box_area + probe_area - inter));
    }
    return sum / static_cast<double>(reduced.size());
}

ScoredBox random_scored_box(SplitMix64& rng, const ImageDims& image) {
    for (;;) {
        double x1 = rng.next_double() * image.width;
        double x2 = rng.next_double() * image.width;
        double y1 = rng.next_double() * image.height;
        double y2 = rng.next_double() * image.height;
        if (x1 > x2) std::swap(x1, x2);
        if (y1 > y2) std::swap(y1, y2);
        if (x2 - x1 > 1.0 && y2 - y1 > 1.0) {
            return ScoredBox(BBox(x1, y1, x2, y2), rng.next_double());
        }
    }
}

} // namespace

TEST_CASE("canvas dimensions and pixel mapping") {
    const ImageDims image(800, 600);
    const Canvas c(100.0, image);
    CHECK(c.rows() == 7);  // ceil(600/100) + 1
    CHECK(c.cols() == 9);  // ceil(800/100) + 1
    CHECK(c.pixel_x(GridCoord{0, 3}) == 300.0);
    CHECK(c.pixel_y(GridCoord{2, 0}) == 200.0);

    const Canvas odd(250.0, image);
    CHECK(odd.cols() == 5); // ceil(3.2) + 1
    CHECK(odd.rows() == 4); // ceil(2.4) + 1
    // Last row/col clamp onto the image border.
    CHECK(odd.pixel_x(GridCoord{0, 4}) == 800.0);
    CHECK(odd.pixel_y(GridCoord{3, 0}) == 600.0);

    CHECK_THROWS_AS(Canvas(0.0, image), std::invalid_argument);
    CHECK_THROWS_AS(Canvas(-5.0, image), std::invalid_argument);
}

TEST_CASE("nearest coord rounds and clamps") {
    const Canvas c(100.0, ImageDims(800, 600));
    CHECK(c.nearest_coord(430.0, 80.0) == GridCoord{1, 4});
    CHECK(c.nearest_coord(449.9, 49.9) == GridCoord{0, 4});
    CHECK(c.nearest_coord(0.0, 0.0) == GridCoord{0, 0});
    // Off-image pixels clamp to the border coordinates.
    CHECK(c.nearest_coord(-50.0, 10000.0) == GridCoord{6, 0});
    CHECK(c.nearest_coord(10000.0, -1.0) == GridCoord{0, 8});
}

TEST_CASE("prob access is bounds checked") {
    Canvas c(100.0, ImageDims(800, 600));
    CHECK(c.prob(GridCoord{0, 0}, Direction::Up) == 0.0);
    c.prob(GridCoord{1, 2}, Direction::Left) = 0.5;
    CHECK(c.prob(GridCoord{1, 2}, Direction::Left) == 0.5);
    CHECK_THROWS_AS(c.prob(GridCoord{-1, 0}, Direction::Up), std::out_of_range);
    CHECK_THROWS_AS(c.prob(GridCoord{0, 9}, Direction::Up), std::out_of_range);
    CHECK(c.raw().size() == 7u * 9u * 4u);
}

TEST_CASE("directional box geometry at the image center") {
    const ImageDims image(800, 600);
    const double delta = 100.0;
    const GridCoord center{3, 4}; // pixel (400, 300)
    const auto right = directional_box(center, Direction::Right, delta, image);
    REQUIRE(right.has_value());
    CHECK(*right == BBox(400, 250, 500, 350));
    const auto left = directional_box(center, Direction::Left, delta, image);
    REQUIRE(left.has_value());
    CHECK(*left == BBox(300, 250, 400, 350));
    // Left/Right mirror across the coordinate's vertical line.
    CHECK(right->y1 == left->y1);
    CHECK(right->y2 == left->y2);
    CHECK(right->x1 - 400.0 == 400.0 - left->x2);

    const auto up = directional_box(center, Direction::Up, delta, image);
    const auto down = directional_box(center, Direction::Down, delta, image);
    REQUIRE(up.has_value());
    REQUIRE(down.has_value());
    CHECK(*up == BBox(350, 200, 450, 300));
    CHECK(*down == BBox(350, 300, 450, 400));
    // Up/Down are vertical mirror images about the coordinate row.
    CHECK(up->x1 == down->x1);
    CHECK(up->x2 == down->x2);
    CHECK(300.0 - up->y1 == down->y2 - 300.0);
}

TEST_CASE("directional box clips and vanishes at borders") {
    const ImageDims image(800, 600);
    CHECK_FALSE(directional_box(GridCoord{0, 0}, Direction::Left, 100.0, image).has_value());
    CHECK_FALSE(directional_box(GridCoord{0, 0}, Direction::Up, 100.0, image).has_value());
    const auto clipped = directional_box(GridCoord{0, 0}, Direction::Right, 100.0, image);
    REQUIRE(clipped.has_value());
    CHECK(*clipped == BBox(0, 0, 100, 50)); // top half cut away
    // Bottom-right corner coordinate: Right probe is fully outside.
    const Canvas c(100.0, image);
    const GridCoord corner{c.rows() - 1, c.cols() - 1};
    CHECK_FALSE(directional_box(corner, Direction::Right, 100.0, image).has_value());
    CHECK_FALSE(directional_box(corner, Direction::Down, 100.0, image).has_value());
}

TEST_CASE("empty reduced set gives an all-zero canvas") {
    const Canvas c = build_canvas({}, 100.0, ImageDims(800, 600));
    for (double p : c.raw()) {
        CHECK(p == 0.0);
    }
}

TEST_CASE("a perfect-overlap box saturates its cell direction") {
    const ImageDims image(800, 600);
    // Probe for coord (3,4) Right is (400,250,500,350); plant that exact box.
    const std::vector<ScoredBox> reduced = {
        ScoredBox(BBox(400, 250, 500, 350), 1.0)};
    const Canvas c = build_canvas(reduced, 100.0, image);
    CHECK(c.prob(GridCoord{3, 4}, Direction::Right) == 1.0);
    // The same square is the Left probe of the next column over.
    CHECK(c.prob(GridCoord{3, 5}, Direction::Left) == 1.0);
}

TEST_CASE("canvas matches the double-loop oracle exactly on random scenes") {
    SplitMix64 rng(201);
    for (int trial = 0; trial < 50; ++trial) {
        const ImageDims image(800, 600);
        const double delta = (trial % 2 == 0) ? 100.0 : 50.0;
        std::vector<ScoredBox> reduced;
        for (int i = 0; i < 5; ++i) {
            reduced.push_back(random_scored_box(rng, image));
        }
        const Canvas c = build_canvas(reduced, delta, image);
        for (int row = 0; row < c.rows(); ++row) {
            for (int col = 0; col < c.cols(); ++col) {
                for (Direction dir : kDirections) {
                    const double got = c.prob(GridCoord{row, col}, dir);
                    const double want =
                        oracle_prob(row, col, dir, reduced, delta, image);
                    CHECK(got == want); // bit-exact by construction
                    CHECK(got >= 0.0);
                    CHECK(got <= 1.0);
                }
            }
        }
    }
}

TEST_CASE("canvas probabilities are order invariant") {
    SplitMix64 rng(202);
    const ImageDims image(640, 480);
    std::vector<ScoredBox> reduced;
    for (int i = 0; i < 6; ++i) {
        reduced.push_back(random_scored_box(rng, image));
    }
    const Canvas a = build_canvas(reduced, 100.0, image);
    std::reverse(reduced.begin(), reduced.end());
    const Canvas b = build_canvas(reduced, 100.0, image);
    REQUIRE(a.raw().size() == b.raw().size());
    for (std::size_t i = 0; i < a.raw().size(); ++i) {
        CHECK(a.raw()[i] == doctest::Approx(b.raw()[i]).epsilon(1e-12));
    }
}

TEST_CASE("raising objectness never lowers a probability") {
    SplitMix64 rng(203);
    const ImageDims image(640, 480);
    std::vector<ScoredBox> reduced;
    for (int i = 0; i < 6; ++i) {
        reduced.push_back(random_scored_box(rng, image));
    }
    std::vector<ScoredBox> boosted = reduced;
    for (ScoredBox& b : boosted) {
        b.objectness = std::min(1.0, b.objectness * 2.0);
    }
    const Canvas low = build_canvas(reduced, 100.0, image);
    const Canvas high = build_canvas(boosted, 100.0, image);
    for (std::size_t i = 0; i < low.raw().size(); ++i) {
        CHECK(high.raw()[i] >= low.raw()[i]);
    }
}

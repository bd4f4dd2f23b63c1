#include "sbv/svg_render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sbv {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void rect(std::ostringstream& out, const BBox& b, const char* stroke,
          double width, const char* dash = nullptr) {
    out << "  <rect x=\"" << fmt(b.x1) << "\" y=\"" << fmt(b.y1) << "\" width=\""
        << fmt(b.width()) << "\" height=\"" << fmt(b.height())
        << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
        << fmt(width) << "\"";
    if (dash) {
        out << " stroke-dasharray=\"" << dash << "\"";
    }
    out << "/>\n";
}

} // namespace

std::optional<SvgLayer> layer_from_name(const std::string& name) {
    if (name == "canvas")   return SvgLayer::Canvas;
    if (name == "edges")    return SvgLayer::Edges;
    if (name == "concepts") return SvgLayer::Concepts;
    if (name == "views")    return SvgLayer::Views;
    return std::nullopt;
}

std::string render_svg(const SampleOutput& output, const SceneInput& scene,
                       const std::set<SvgLayer>& layers,
                       const PipelineConfig& cfg) {
    if (layers.empty()) {
        throw ValidationError("render: layer set must not be empty");
    }
    const ImageDims& image = scene.image;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << image.width
        << "\" height=\"" << image.height << "\" viewBox=\"0 0 " << image.width
        << " " << image.height << "\">\n";
    out << "<g id=\"frame\">\n";
    rect(out, image.full_box(), "#333333", 1.0);
    out << "</g>\n";

    if (layers.count(SvgLayer::Canvas)) {
        const Canvas canvas = build_canvas(output.reduced, cfg.delta, image);
        out << "<g id=\"canvas\">\n";
        for (int r = 0; r < canvas.rows(); ++r) {
            for (int c = 0; c < canvas.cols(); ++c) {
                const GridCoord coord{r, c};
                double maxp = 0.0;
                for (Direction d : kDirections) {
                    maxp = std::max(maxp, canvas.prob(coord, d));
                }
                out << "  <circle cx=\"" << fmt(canvas.pixel_x(coord))
                    << "\" cy=\"" << fmt(canvas.pixel_y(coord)) << "\" r=\""
                    << fmt(1.5 + 4.0 * maxp) << "\" fill=\"#888888\" opacity=\""
                    << fmt(0.2 + 0.8 * maxp) << "\"/>\n";
            }
        }
        out << "</g>\n";
    }

    if (layers.count(SvgLayer::Edges)) {
        const Canvas canvas(cfg.delta, image); // pixel mapping only
        out << "<g id=\"edges\">\n";
        for (const EdgePath& path : output.edges) {
            out << "  <polyline points=\"";
            for (std::size_t i = 0; i < path.steps.size(); ++i) {
                if (i > 0) {
                    out << " ";
                }
                out << fmt(canvas.pixel_x(path.steps[i])) << ","
                    << fmt(canvas.pixel_y(path.steps[i]));
            }
            out << "\" fill=\"none\" stroke=\"#7fb2e5\" stroke-width=\"1.5\""
                   " opacity=\"0.8\"/>\n";
        }
        out << "</g>\n";
    }

    if (layers.count(SvgLayer::Concepts)) {
        out << "<g id=\"concepts\">\n";
        for (const ScoredBox& b : output.reduced) {
            rect(out, b.box, "#c5b3e6", 1.0);
        }
        for (const Concept& c : output.nu) {
            rect(out, c.box.box, "#9575cd", 2.5);
        }
        for (const ConceptBag& bag : output.bags) {
            for (const ConceptWindow& w : bag.windows) {
                rect(out, w.window, "#8e6fc8", 1.5, "6 3");
            }
        }
        out << "</g>\n";
    }

    if (layers.count(SvgLayer::Views)) {
        out << "<g id=\"views\">\n";
        for (const ViewRecord& v : output.views) {
            rect(out, v.crop, "#3b6fd4", 2.0);
        }
        out << "</g>\n";
    }

    out << "<g id=\"proposals\">\n";
    const std::size_t proposal_count = scene.proposals.size();
    for (const ScoredBox& b : scene.proposals) {
        rect(out, b.box, "#2e9e5b", 2.0);
    }
    for (std::size_t i = proposal_count; i < output.added.size(); ++i) {
        rect(out, output.added[i].box, "#e0b020", 2.0);
    }
    out << "</g>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace sbv

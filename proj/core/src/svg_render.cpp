#include "engeltori/svg_render.hpp"

#include <algorithm>
#include <sstream>

#include "engeltori/errors.hpp"

namespace engeltori::io {

using knots::EventKind;
using knots::FrontEvent;
using knots::FrontWord;

namespace {

constexpr double kColW = 48.0;
constexpr double kRowH = 36.0;
constexpr double kMargin = 28.0;
constexpr double kStroke = 2.0;
constexpr double kHalo = 9.0;

std::string cubic(double x0, double y0, double x1, double y1) {
    double xm = (x0 + x1) / 2.0;
    std::ostringstream p;
    p << "M " << x0 << ' ' << y0 << " C " << xm << ' ' << y0 << ", " << xm << ' ' << y1
      << ", " << x1 << ' ' << y1;
    return p.str();
}

// Left-pointing (open = false) or right-pointing (open = true is the left
// cusp, opening rightward) arc joining the two branch endpoints.
std::string cusp_arc(double x_tip_side, double x_open, double y_lo, double y_hi) {
    std::ostringstream p;
    p << "M " << x_open << ' ' << y_lo << " C " << x_tip_side << ' ' << y_lo << ", "
      << x_tip_side << ' ' << y_hi << ", " << x_open << ' ' << y_hi;
    return p.str();
}

}  // namespace

std::string render_front_svg(const FrontWord& f) {
    knots::ValidationReport rep = knots::validate_front(f);
    if (!rep.valid)
        throw InvalidInputError("cannot render an invalid front: " +
                                rep.violations.front());

    const int m = static_cast<int>(f.events.size());
    int count = 0, max_count = 0;
    for (const FrontEvent& e : f.events) {
        count += (e.kind == EventKind::LeftCusp) ? 2
                 : (e.kind == EventKind::RightCusp) ? -2
                                                    : 0;
        max_count = std::max(max_count, count);
    }

    const double width = 2 * kMargin + m * kColW;
    const double height = 2 * kMargin + std::max(1, max_count - 1) * kRowH;
    auto lane_y = [&](int slot) { return height - kMargin - slot * kRowH; };

    std::ostringstream paths;
    auto stroke = [&](const std::string& d, const char* color, double w) {
        paths << "  <path d=\"" << d << "\" fill=\"none\" stroke=\"" << color
              << "\" stroke-width=\"" << w << "\" stroke-linecap=\"round\"/>\n";
    };
    auto strand = [&](const std::string& d) { stroke(d, "#1a1a1a", kStroke); };

    count = 0;
    for (int t = 0; t < m; ++t) {
        const FrontEvent& e = f.events[t];
        const double x0 = kMargin + t * kColW;
        const double x1 = x0 + kColW;
        switch (e.kind) {
            case EventKind::LeftCusp: {
                for (int s = 0; s < count; ++s) {
                    int post = (s < e.pos) ? s : s + 2;
                    strand(cubic(x0, lane_y(s), x1, lane_y(post)));
                }
                strand(cusp_arc(x0 + 0.08 * kColW, x1, lane_y(e.pos), lane_y(e.pos + 1)));
                count += 2;
                break;
            }
            case EventKind::RightCusp: {
                for (int s = 0; s < count; ++s) {
                    if (s == e.pos || s == e.pos + 1) continue;
                    int post = (s < e.pos) ? s : s - 2;
                    strand(cubic(x0, lane_y(s), x1, lane_y(post)));
                }
                strand(cusp_arc(x1 - 0.08 * kColW, x0, lane_y(e.pos), lane_y(e.pos + 1)));
                count -= 2;
                break;
            }
            case EventKind::Crossing: {
                for (int s = 0; s < count; ++s) {
                    if (s == e.pos || s == e.pos + 1) continue;
                    strand(cubic(x0, lane_y(s), x1, lane_y(s)));
                }
                // The descending strand is the over-strand; a halo under it
                // breaks the ascending strand at the crossing point.
                std::string under = cubic(x0, lane_y(e.pos), x1, lane_y(e.pos + 1));
                std::string over = cubic(x0, lane_y(e.pos + 1), x1, lane_y(e.pos));
                strand(under);
                stroke(over, "#ffffff", kHalo);
                strand(over);
                break;
            }
        }
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
        << paths.str() << "</svg>\n";
    return svg.str();
}

}  // namespace engeltori::io

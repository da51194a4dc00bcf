#include "edcert/cli/newton_svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace edcert::cli {

namespace {

constexpr double width = 640, height = 480;
constexpr double left = 70, right = 30, top = 30, bottom = 60;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

} // namespace

std::string newton_svg(const FormalPoly& poly, const PAdic& v) {
    const NewtonPolygon polygon = newton_polygon(poly, v);

    std::vector<LatticePoint> points;
    for (std::size_t i = 0; i <= poly.formal_degree(); ++i) {
        if (!poly[i].is_zero()) points.push_back({i, v(poly[i]).value()});
    }

    const double max_i = std::max<double>(1, static_cast<double>(poly.formal_degree()));
    long vmin = points.front().value, vmax = points.front().value;
    for (const auto& p : points) {
        vmin = std::min(vmin, p.value);
        vmax = std::max(vmax, p.value);
    }
    if (vmin == vmax) {
        --vmin;
        ++vmax;
    }
    auto sx = [&](double i) { return left + (width - left - right) * i / max_i; };
    auto sy = [&](double val) {
        return top + (height - top - bottom) * (static_cast<double>(vmax) - val) / static_cast<double>(vmax - vmin);
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"480\" "
          "viewBox=\"0 0 640 480\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

    // Axes along the bottom and left edges of the plot area.
    const double x0 = left, x1 = width - right, y0 = height - bottom, y1 = top;
    os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1) << "\" y2=\"" << fmt(y0)
       << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x0) << "\" y2=\"" << fmt(y1)
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt((x0 + x1) / 2) << "\" y=\"" << fmt(height - 15)
       << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">i</text>\n"
       << "<text x=\"20\" y=\"" << fmt((y0 + y1) / 2) << "\" font-family=\"sans-serif\" font-size=\"14\" "
       << "text-anchor=\"middle\" transform=\"rotate(-90 20 " << fmt((y0 + y1) / 2) << ")\">v(a_i)</text>\n";

    const std::size_t step = std::max<std::size_t>(1, poly.formal_degree() / 16);
    for (std::size_t i = 0; i <= poly.formal_degree(); i += step) {
        os << "<text x=\"" << fmt(sx(static_cast<double>(i))) << "\" y=\"" << fmt(y0 + 18)
           << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << i << "</text>\n";
    }
    for (long val : {vmin, vmax}) {
        os << "<text x=\"" << fmt(x0 - 8) << "\" y=\"" << fmt(sy(static_cast<double>(val)) + 4)
           << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << val << "</text>\n";
    }

    os << "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < polygon.vertices.size(); ++k) {
        const auto& p = polygon.vertices[k];
        os << (k ? " " : "") << fmt(sx(static_cast<double>(p.index))) << ","
           << fmt(sy(static_cast<double>(p.value)));
    }
    os << "\"/>\n";

    for (const auto& p : points) {
        os << "<circle cx=\"" << fmt(sx(static_cast<double>(p.index))) << "\" cy=\""
           << fmt(sy(static_cast<double>(p.value))) << "\" r=\"4\" fill=\"#c0392b\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace edcert::cli

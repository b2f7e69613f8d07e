#include "dsradar/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dsradar/csv.hpp"

namespace dsradar {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 48.0;

struct Extent {
    double lo = 0.0;
    double hi = 1.0;
    double map(double v, double pixel_lo, double pixel_hi) const {
        if (hi == lo) return (pixel_lo + pixel_hi) / 2.0;
        return pixel_lo + (v - lo) / (hi - lo) * (pixel_hi - pixel_lo);
    }
};

Extent extent_of(const std::vector<const std::vector<double>*>& columns) {
    Extent e{0.0, 1.0};
    bool first = true;
    for (const auto* col : columns) {
        for (double v : *col) {
            if (!std::isfinite(v)) continue;
            if (first) {
                e.lo = e.hi = v;
                first = false;
            } else {
                e.lo = std::min(e.lo, v);
                e.hi = std::max(e.hi, v);
            }
        }
    }
    if (!first && e.hi == e.lo) {
        e.lo -= 1.0;
        e.hi += 1.0;
    }
    return e;
}

}  // namespace

std::string LinePlot::to_svg() const {
    std::vector<const std::vector<double>*> xs, ys;
    for (const auto& s : series) {
        xs.push_back(&s.x);
        ys.push_back(&s.y);
    }
    Extent ex = extent_of(xs);
    Extent ey = extent_of(ys);
    if (reference_y) {
        ey.lo = std::min(ey.lo, *reference_y);
        ey.hi = std::max(ey.hi, *reference_y);
    }

    const double plot_x0 = kMarginLeft, plot_x1 = kWidth - kMarginRight;
    const double plot_y0 = kHeight - kMarginBottom, plot_y1 = kMarginTop;  // y grows upward

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">"
        << title << "</text>\n";

    // axes
    out << "<line x1=\"" << plot_x0 << "\" y1=\"" << plot_y0 << "\" x2=\"" << plot_x1
        << "\" y2=\"" << plot_y0 << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << plot_x0 << "\" y1=\"" << plot_y0 << "\" x2=\"" << plot_x0
        << "\" y2=\"" << plot_y1 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (plot_x0 + plot_x1) / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << (plot_y0 + plot_y1) / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
        << (plot_y0 + plot_y1) / 2 << ")\">" << y_label << "</text>\n";

    const int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = ex.lo + (ex.hi - ex.lo) * i / kTicks;
        const double px = ex.map(fx, plot_x0, plot_x1);
        out << "<line x1=\"" << px << "\" y1=\"" << plot_y0 << "\" x2=\"" << px << "\" y2=\""
            << plot_y0 + 4 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px << "\" y=\"" << plot_y0 + 18
            << "\" text-anchor=\"middle\" font-size=\"10\">" << format_sig6(fx) << "</text>\n";
        const double fy = ey.lo + (ey.hi - ey.lo) * i / kTicks;
        const double py = ey.map(fy, plot_y0, plot_y1);
        out << "<line x1=\"" << plot_x0 - 4 << "\" y1=\"" << py << "\" x2=\"" << plot_x0
            << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << plot_x0 - 8 << "\" y=\"" << py + 3
            << "\" text-anchor=\"end\" font-size=\"10\">" << format_sig6(fy) << "</text>\n";
    }

    if (reference_y) {
        const double py = ey.map(*reference_y, plot_y0, plot_y1);
        out << "<line x1=\"" << plot_x0 << "\" y1=\"" << py << "\" x2=\"" << plot_x1
            << "\" y2=\"" << py << "\" stroke=\"#c0392b\" stroke-dasharray=\"6 3\"/>\n";
    }

    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        const std::size_t n = std::min(s.x.size(), s.y.size());
        for (std::size_t i = 0; i < n; ++i) {
            out << ex.map(s.x[i], plot_x0, plot_x1) << ',' << ey.map(s.y[i], plot_y0, plot_y1)
                << ' ';
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void LinePlot::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    out << to_svg();
    if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

}  // namespace dsradar

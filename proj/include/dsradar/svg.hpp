// Bare-bones SVG line plots for sweep curves and range profiles.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dsradar {

struct PlotSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f6fb2";
};

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
    std::optional<double> reference_y;  // horizontal marker line

    std::string to_svg() const;
    void write(const std::string& path) const;
};

}  // namespace dsradar

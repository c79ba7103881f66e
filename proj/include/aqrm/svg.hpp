#pragma once

#include <string>
#include <vector>

namespace aqrm {

/// Minimal line-plot writer: a framed plot area, axis ranges as tick
/// labels, one polyline per series and a text legend.
class SvgPlot {
public:
    struct Series {
        std::string label;
        std::vector<double> x;
        std::vector<double> y;
        std::string color = "#000000";
        std::string dash;  ///< stroke-dasharray, empty for solid
    };

    SvgPlot(std::string title, std::string x_label, std::string y_label);

    void add_series(Series series);
    /// Legend rows are skipped for series with an empty label.
    std::string render(int width = 800, int height = 560) const;

private:
    std::string title_;
    std::string x_label_;
    std::string y_label_;
    std::vector<Series> series_;
};

/// Cycles through a fixed palette.
std::string palette_color(std::size_t index);

}  // namespace aqrm

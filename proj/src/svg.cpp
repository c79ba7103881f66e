#include "aqrm/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "aqrm/error.hpp"

namespace aqrm {
namespace {

std::string fixed(double v, int digits = 2) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
    return std::string(buf, res.ptr);
}

std::string label_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
    return std::string(buf, res.ptr);
}

std::string escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::add_series(Series series) {
    if (series.x.size() != series.y.size()) throw InvalidInputError("svg series x/y length mismatch");
    series_.push_back(std::move(series));
}

std::string SvgPlot::render(int width, int height) const {
    const double left = 80, right = 180, top = 40, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series_) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            y_min = std::min(y_min, s.y[i]);
            y_max = std::max(y_max, s.y[i]);
        }
    }
    if (!std::isfinite(x_min)) x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    if (x_max == x_min) x_max = x_min + 1;
    if (y_max == y_min) y_max = y_min + 1;
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;

    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" fill=\"white\"/>\n";
    out += "<text x=\"" + fixed(left + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
           escape(title_) + "</text>\n";
    out += "<rect x=\"" + fixed(left) + "\" y=\"" + fixed(top) + "\" width=\"" + fixed(plot_w) + "\" height=\"" +
           fixed(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

    // Axis range labels.
    out += "<text x=\"" + fixed(left) + "\" y=\"" + fixed(top + plot_h + 18) + "\" text-anchor=\"middle\">" +
           label_number(x_min) + "</text>\n";
    out += "<text x=\"" + fixed(left + plot_w) + "\" y=\"" + fixed(top + plot_h + 18) +
           "\" text-anchor=\"middle\">" + label_number(x_max) + "</text>\n";
    out += "<text x=\"" + fixed(left - 6) + "\" y=\"" + fixed(top + plot_h) + "\" text-anchor=\"end\">" +
           label_number(y_min) + "</text>\n";
    out += "<text x=\"" + fixed(left - 6) + "\" y=\"" + fixed(top + 10) + "\" text-anchor=\"end\">" +
           label_number(y_max) + "</text>\n";
    out += "<text x=\"" + fixed(left + plot_w / 2) + "\" y=\"" + fixed(height - 16.0) + "\" text-anchor=\"middle\">" +
           escape(x_label_) + "</text>\n";
    out += "<text x=\"20\" y=\"" + fixed(top + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           fixed(top + plot_h / 2) + ")\">" + escape(y_label_) + "</text>\n";

    int legend_row = 0;
    for (const auto& s : series_) {
        out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"";
        if (!s.dash.empty()) out += " stroke-dasharray=\"" + s.dash + "\"";
        out += " points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!first) out += ' ';
            out += fixed(px(s.x[i])) + ',' + fixed(py(s.y[i]));
            first = false;
        }
        out += "\"/>\n";
        if (s.label.empty()) continue;
        const double ly = top + 12 + 18 * legend_row++;
        const double lx = left + plot_w + 12;
        out += "<line x1=\"" + fixed(lx) + "\" y1=\"" + fixed(ly - 4) + "\" x2=\"" + fixed(lx + 24) + "\" y2=\"" +
               fixed(ly - 4) + "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"";
        if (!s.dash.empty()) out += " stroke-dasharray=\"" + s.dash + "\"";
        out += "/>\n";
        out += "<text x=\"" + fixed(lx + 30) + "\" y=\"" + fixed(ly) + "\">" + escape(s.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string palette_color(std::size_t index) {
    static const char* const colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                         "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    return colors[index % (sizeof colors / sizeof colors[0])];
}

}  // namespace aqrm

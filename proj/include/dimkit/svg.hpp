#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dimkit {

// Minimal hand-emitted SVG line chart: axes, ticks, polyline series with a
// small legend.  Dashed strokes mark bounds, solid strokes mark values,
// matching the figure conventions used throughout.
class SvgChart {
public:
    SvgChart(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)),
          y_label_(std::move(y_label)) {}

    void add_series(const std::string& name,
                    std::vector<std::pair<double, double>> points, bool dashed,
                    const std::string& color);

    std::string render() const;
    void write(const std::string& path) const;

private:
    struct Series {
        std::string name;
        std::vector<std::pair<double, double>> points;
        bool dashed = false;
        std::string color;
    };

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

}  // namespace dimkit

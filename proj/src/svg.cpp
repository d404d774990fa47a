#include "dimkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dimkit/errors.hpp"
#include "dimkit/io.hpp"

namespace dimkit {

namespace {

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void SvgChart::add_series(const std::string& name,
                          std::vector<std::pair<double, double>> points, bool dashed,
                          const std::string& color) {
    if (points.empty()) throw_domain("SvgChart: empty series");
    series_.push_back({name, std::move(points), dashed, color});
}

std::string SvgChart::render() const {
    if (series_.empty()) throw_domain("SvgChart: no series to render");

    constexpr double W = 640, H = 480;
    constexpr double ML = 64, MR = 24, MT = 40, MB = 56;

    double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
    for (const auto& s : series_) {
        for (const auto& [x, y] : s.points) {
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    auto px = [&](double x) { return ML + (x - x_lo) / (x_hi - x_lo) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - y_lo) / (y_hi - y_lo) * (H - MT - MB); };

    std::ostringstream out;
    out.precision(6);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
        << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H
        << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << escape_xml(title_) << "</text>\n";

    // Axes.
    out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR
        << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\""
        << H - MB << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 16
        << "\" text-anchor=\"middle\" font-size=\"12\">" << escape_xml(x_label_)
        << "</text>\n";
    out << "<text x=\"18\" y=\"" << (MT + H - MB) / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 18 "
        << (MT + H - MB) / 2 << ")\">" << escape_xml(y_label_) << "</text>\n";

    // Ticks: 5 per axis.
    for (int i = 0; i <= 5; ++i) {
        const double fx = x_lo + (x_hi - x_lo) * i / 5.0;
        const double fy = y_lo + (y_hi - y_lo) * i / 5.0;
        out << "<line x1=\"" << px(fx) << "\" y1=\"" << H - MB << "\" x2=\"" << px(fx)
            << "\" y2=\"" << H - MB + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(fx) << "\" y=\"" << H - MB + 18
            << "\" text-anchor=\"middle\" font-size=\"10\">" << fx << "</text>\n";
        out << "<line x1=\"" << ML - 5 << "\" y1=\"" << py(fy) << "\" x2=\"" << ML
            << "\" y2=\"" << py(fy) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ML - 8 << "\" y=\"" << py(fy) + 3
            << "\" text-anchor=\"end\" font-size=\"10\">" << fy << "</text>\n";
    }

    // Series.
    for (const auto& s : series_) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
        if (s.dashed) out << " stroke-dasharray=\"6,4\"";
        out << " points=\"";
        for (const auto& [x, y] : s.points) out << px(x) << "," << py(y) << " ";
        out << "\"/>\n";
    }

    // Legend.
    double ly = MT + 8;
    for (const auto& s : series_) {
        out << "<line x1=\"" << W - MR - 150 << "\" y1=\"" << ly << "\" x2=\""
            << W - MR - 120 << "\" y2=\"" << ly << "\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\"" << (s.dashed ? " stroke-dasharray=\"6,4\"" : "")
            << "/>\n";
        out << "<text x=\"" << W - MR - 114 << "\" y=\"" << ly + 4
            << "\" font-size=\"11\">" << escape_xml(s.name) << "</text>\n";
        ly += 16;
    }

    out << "</svg>\n";
    return out.str();
}

void SvgChart::write(const std::string& path) const { write_text_file(path, render()); }

}  // namespace dimkit

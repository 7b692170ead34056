#include "irt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "irt/errors.hpp"
#include "irt/fmt.hpp"

namespace irt {

namespace {

constexpr int kPanelWidth = 430;
constexpr int kPanelHeight = 240;
constexpr int kMargin = 20;
constexpr int kPlotLeft = 56;
constexpr int kPlotTop = 34;
constexpr int kPlotBottom = 26;
constexpr int kPlotRight = 12;

const char* kColors[] = {"#1f6fb4", "#c23b22", "#3a8f3f", "#8058a5", "#b07d2b"};

std::string coord(double v) { return to_digits(v, 6); }

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

void render_panel(std::string& svg, const ChartPanel& panel, int x0, int y0) {
    const int plot_x = x0 + kPlotLeft;
    const int plot_y = y0 + kPlotTop;
    const int plot_w = kPanelWidth - kPlotLeft - kPlotRight;
    const int plot_h = kPanelHeight - kPlotTop - kPlotBottom;

    double lo = 0.0;
    double hi = 0.0;
    bool any = false;
    std::size_t max_len = 0;
    for (const ChartSeries& s : panel.series) {
        max_len = std::max(max_len, s.values.size());
        for (double v : s.values) {
            if (!any) {
                lo = hi = v;
                any = true;
            } else {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    if (!any) {
        lo = 0.0;
        hi = 1.0;
    }
    if (hi - lo < 1e-12) {
        const double pad = std::max(1e-6, std::abs(hi) * 0.05);
        lo -= pad;
        hi += pad;
    }

    svg += "<g>\n";
    svg += "<rect x=\"" + std::to_string(plot_x) + "\" y=\"" + std::to_string(plot_y) +
           "\" width=\"" + std::to_string(plot_w) + "\" height=\"" + std::to_string(plot_h) +
           "\" fill=\"none\" stroke=\"#999\"/>\n";
    svg += "<text x=\"" + std::to_string(x0 + kPanelWidth / 2) + "\" y=\"" +
           std::to_string(y0 + 20) +
           "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" +
           escape_xml(panel.title) + "</text>\n";
    svg += "<text x=\"" + std::to_string(plot_x - 4) + "\" y=\"" + std::to_string(plot_y + 10) +
           "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">" +
           escape_xml(to_digits(hi, 4)) + "</text>\n";
    svg += "<text x=\"" + std::to_string(plot_x - 4) + "\" y=\"" +
           std::to_string(plot_y + plot_h) +
           "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">" +
           escape_xml(to_digits(lo, 4)) + "</text>\n";
    svg += "<text x=\"" + std::to_string(plot_x + plot_w) + "\" y=\"" +
           std::to_string(plot_y + plot_h + 14) +
           "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">" +
           std::to_string(max_len == 0 ? 0 : max_len - 1) + "</text>\n";
    svg += "<text x=\"" + std::to_string(plot_x) + "\" y=\"" +
           std::to_string(plot_y + plot_h + 14) +
           "\" font-size=\"10\" font-family=\"sans-serif\">0</text>\n";

    int color_idx = 0;
    int legend_y = plot_y + 12;
    for (const ChartSeries& s : panel.series) {
        const char* color = kColors[color_idx % 5];
        if (s.values.size() >= 2) {
            std::string points;
            const double dx = static_cast<double>(plot_w) /
                              static_cast<double>(s.values.size() - 1);
            for (std::size_t i = 0; i < s.values.size(); ++i) {
                const double px = plot_x + dx * static_cast<double>(i);
                const double py =
                    plot_y + plot_h - (s.values[i] - lo) / (hi - lo) * plot_h;
                if (i) points += ' ';
                points += coord(px) + "," + coord(py);
            }
            svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                   "\" stroke-width=\"1.4\" points=\"" + points + "\"/>\n";
        }
        svg += "<line x1=\"" + std::to_string(plot_x + plot_w - 120) + "\" y1=\"" +
               std::to_string(legend_y - 4) + "\" x2=\"" +
               std::to_string(plot_x + plot_w - 104) + "\" y2=\"" +
               std::to_string(legend_y - 4) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + std::to_string(plot_x + plot_w - 100) + "\" y=\"" +
               std::to_string(legend_y) +
               "\" font-size=\"10\" font-family=\"sans-serif\">" + escape_xml(s.label) +
               "</text>\n";
        legend_y += 13;
        ++color_idx;
    }
    svg += "</g>\n";
}

}  // namespace

std::string render_chart_svg(const std::string& title,
                             const std::vector<ChartPanel>& panels) {
    const int cols = panels.size() > 1 ? 2 : 1;
    const int rows = static_cast<int>((panels.size() + 1) / 2);
    const int width = kMargin * 2 + kPanelWidth * cols;
    const int height = kMargin * 2 + 26 + kPanelHeight * std::max(rows, 1);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + std::to_string(width / 2) + "\" y=\"" + std::to_string(kMargin + 6) +
           "\" text-anchor=\"middle\" font-size=\"15\" font-family=\"sans-serif\">" +
           escape_xml(title) + "</text>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const int col = static_cast<int>(i % 2);
        const int row = static_cast<int>(i / 2);
        render_panel(svg, panels[i], kMargin + col * kPanelWidth,
                     kMargin + 26 + row * kPanelHeight);
    }
    svg += "</svg>\n";
    return svg;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ModelError("cannot write '" + path + "'");
    }
    out << content;
    if (!out) {
        throw ModelError("write failed for '" + path + "'");
    }
}

}  // namespace irt

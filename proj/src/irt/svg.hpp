#pragma once

#include <string>
#include <vector>

namespace irt {

struct ChartSeries {
    std::string label;
    std::vector<double> values;  // x is the index (period)
};

struct ChartPanel {
    std::string title;
    std::vector<ChartSeries> series;
};

// Renders a grid of simple line charts (two panels per row) as a
// self-contained SVG document. Purely cosmetic output; the numeric artifacts
// are the CSVs.
std::string render_chart_svg(const std::string& title, const std::vector<ChartPanel>& panels);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace irt

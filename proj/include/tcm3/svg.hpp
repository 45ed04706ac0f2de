#pragma once
#include <string>
#include <vector>

#include "tcm3/husimi.hpp"

namespace tcm3 {

struct SeriesColumn {
    std::string name;
    std::vector<double> values;
};

// Stacked line panels over a shared tau axis. Deterministic: identical input
// produces identical bytes. Rejects empty series.
std::string svg_series(const std::vector<double>& tau, const std::vector<SeriesColumn>& columns);

// Grayscale heatmap, brighter = larger Q, imaginary axis pointing up.
std::string svg_heatmap(const QGrid& grid, const std::string& title);

}  // namespace tcm3

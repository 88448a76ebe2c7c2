#pragma once

#include <string>
#include <vector>

namespace attinit {

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

/// Static log-y line plot. Throws IoError when the file cannot be written.
void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series);

/// Plot images are a convenience on top of the CSV outputs: failures degrade
/// to a stderr warning instead of failing the run.
void write_line_plot_or_warn(const std::string& path, const std::string& title,
                             const std::string& x_label, const std::string& y_label,
                             const std::vector<PlotSeries>& series);

}  // namespace attinit

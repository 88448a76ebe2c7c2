#include "attinit/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "attinit/errors.hpp"

namespace attinit {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 160.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;
constexpr double kFloor = 1e-9;  // log-scale floor for zero errors

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf"};

double clamp_log(double v) { return std::log10(std::max(v, kFloor)); }

}  // namespace

void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series) {
    double x_min = 0.0, x_max = 1.0;
    double ly_min = 0.0, ly_max = 1.0;
    bool any = false;
    for (const PlotSeries& s : series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                continue;
            }
            const double lx = s.x[i];
            const double ly = clamp_log(s.y[i]);
            if (!any) {
                x_min = x_max = lx;
                ly_min = ly_max = ly;
                any = true;
            } else {
                x_min = std::min(x_min, lx);
                x_max = std::max(x_max, lx);
                ly_min = std::min(ly_min, ly);
                ly_max = std::max(ly_max, ly);
            }
        }
    }
    if (!any) {
        x_min = 0.0;
        x_max = 1.0;
    }
    ly_min = std::floor(ly_min);
    ly_max = std::ceil(std::max(ly_max, ly_min + 1.0));
    if (x_max <= x_min) {
        x_max = x_min + 1.0;
    }

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double ly) {
        return kMarginTop + (ly_max - ly) / (ly_max - ly_min) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
        << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";

    // axes box
    svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

    // y decade gridlines and labels
    for (double d = ly_min; d <= ly_max + 0.5; d += 1.0) {
        const double y = sy(d);
        svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << y << "\" x2=\""
            << kMarginLeft + plot_w << "\" y2=\"" << y
            << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n"
            << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e"
            << static_cast<int>(d) << "</text>\n";
    }
    // x ticks (5 divisions)
    for (int i = 0; i <= 5; ++i) {
        const double x_val = x_min + (x_max - x_min) * i / 5.0;
        const double x = sx(x_val);
        svg << "<line x1=\"" << x << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << x
            << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"#333\"/>\n"
            << "<text x=\"" << x << "\" y=\"" << kMarginTop + plot_h + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << x_val << "</text>\n";
    }
    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << x_label << "</text>\n"
        << "<text x=\"16\" y=\"" << kMarginTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
           "transform=\"rotate(-90 16 " << kMarginTop + plot_h / 2 << ")\">" << y_label
        << " (log)</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const PlotSeries& s = series[si];
        const char* color = kColors[si % (sizeof(kColors) / sizeof(kColors[0]))];
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.2\" points=\"";
        // thin dense curves so files stay small
        const std::size_t n = std::min(s.x.size(), s.y.size());
        const std::size_t stride = std::max<std::size_t>(1, n / 2000);
        for (std::size_t i = 0; i < n; i += stride) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                continue;
            }
            svg << sx(s.x[i]) << "," << sy(clamp_log(s.y[i])) << " ";
        }
        svg << "\"/>\n";
        const double ly0 = kMarginTop + 16.0 + 18.0 * si;
        svg << "<line x1=\"" << kMarginLeft + plot_w + 10 << "\" y1=\"" << ly0 << "\" x2=\""
            << kMarginLeft + plot_w + 34 << "\" y2=\"" << ly0 << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << kMarginLeft + plot_w + 40 << "\" y=\"" << ly0 + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.name << "</text>\n";
    }
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << svg.str();
    out.flush();
    if (!out) {
        throw IoError("write failure on '" + path + "'");
    }
}

void write_line_plot_or_warn(const std::string& path, const std::string& title,
                             const std::string& x_label, const std::string& y_label,
                             const std::vector<PlotSeries>& series) {
    try {
        write_line_plot(path, title, x_label, y_label, series);
    } catch (const std::exception& e) {
        std::cerr << "warning: plot skipped: " << e.what() << "\n";
    }
}

}  // namespace attinit

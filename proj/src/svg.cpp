#include "tcm3/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tcm3 {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string svg_series(const std::vector<double>& tau, const std::vector<SeriesColumn>& columns) {
    if (tau.empty() || columns.empty()) throw std::invalid_argument("svg_series: empty series");
    for (const SeriesColumn& c : columns)
        if (c.values.size() != tau.size())
            throw std::invalid_argument("svg_series: column length mismatch");

    const double ml = 70, mr = 20, mt = 30, mb = 40;
    const double pw = 880, ph = 110, gap = 34;
    const double width = ml + pw + mr;
    const double height = mt + columns.size() * ph + (columns.size() - 1) * gap + mb;

    double t0 = tau.front(), t1 = tau.back();
    if (t1 <= t0) t1 = t0 + 1.0;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < columns.size(); ++p) {
        const SeriesColumn& col = columns[p];
        const double y0 = mt + double(p) * (ph + gap);

        double vmin = col.values[0], vmax = col.values[0];
        for (double v : col.values) {
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
        if (vmax - vmin < 1e-300) {
            vmin -= 0.5;
            vmax += 0.5;
        } else {
            const double pad = 0.05 * (vmax - vmin);
            vmin -= pad;
            vmax += pad;
        }

        s += "<rect x=\"" + fmt(ml) + "\" y=\"" + fmt(y0) + "\" width=\"" + fmt(pw) +
             "\" height=\"" + fmt(ph) + "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
        s += "<text x=\"" + fmt(ml) + "\" y=\"" + fmt(y0 - 6) +
             "\" font-family=\"monospace\" font-size=\"13\">" + escape_xml(col.name) + "</text>\n";
        s += "<text x=\"" + fmt(ml - 6) + "\" y=\"" + fmt(y0 + 12) +
             "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" + fmt(vmax) +
             "</text>\n";
        s += "<text x=\"" + fmt(ml - 6) + "\" y=\"" + fmt(y0 + ph) +
             "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" + fmt(vmin) +
             "</text>\n";

        s += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
        for (std::size_t k = 0; k < tau.size(); ++k) {
            const double x = ml + (tau[k] - t0) / (t1 - t0) * pw;
            const double y = y0 + ph - (col.values[k] - vmin) / (vmax - vmin) * ph;
            if (k) s += ' ';
            s += fmt(x) + "," + fmt(y);
        }
        s += "\"/>\n";
    }

    const double yb = mt + columns.size() * ph + (columns.size() - 1) * gap;
    s += "<text x=\"" + fmt(ml) + "\" y=\"" + fmt(yb + 18) +
         "\" font-family=\"monospace\" font-size=\"11\">tau = " + fmt(t0) + "</text>\n";
    s += "<text x=\"" + fmt(ml + pw) + "\" y=\"" + fmt(yb + 18) +
         "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" + fmt(t1) +
         "</text>\n";
    s += "</svg>\n";
    return s;
}

std::string svg_heatmap(const QGrid& grid, const std::string& title) {
    if (grid.values.empty()) throw std::invalid_argument("svg_heatmap: empty grid");
    double vmax = 0.0;
    for (double v : grid.values) vmax = std::max(vmax, v);

    const std::size_t nx = grid.nx, ny = grid.ny;
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 " +
         std::to_string(nx) + " " + std::to_string(ny) + "\">\n";
    s += "<title>" + escape_xml(title) + "</title>\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"black\"/>\n";

    for (std::size_t iy = 0; iy < ny; ++iy) {
        const std::size_t row = ny - 1 - iy;  // +im up
        std::size_t ix = 0;
        while (ix < nx) {
            const int g =
                vmax > 0.0 ? int(std::lround(255.0 * grid.values[iy * nx + ix] / vmax)) : 0;
            std::size_t run = 1;
            while (ix + run < nx) {
                const int g2 =
                    vmax > 0.0 ? int(std::lround(255.0 * grid.values[iy * nx + ix + run] / vmax))
                               : 0;
                if (g2 != g) break;
                ++run;
            }
            if (g > 0) {
                const std::string gs = std::to_string(g);
                s += "<rect x=\"" + std::to_string(ix) + "\" y=\"" + std::to_string(row) +
                     "\" width=\"" + std::to_string(run) +
                     "\" height=\"1\" fill=\"rgb(" + gs + "," + gs + "," + gs + ")\"/>\n";
            }
            ix += run;
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace tcm3

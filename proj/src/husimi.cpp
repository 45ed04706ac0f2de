#include "tcm3/husimi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tcm3/numerics.hpp"

namespace tcm3 {
namespace {

std::array<std::vector<cx>, 4> level_columns(const SymmetricWavefunction& psi) {
    std::array<std::vector<cx>, 4> cols;
    for (int i = 0; i < 4; ++i) {
        cols[i].resize(psi.x.size());
        for (std::size_t n = 0; n < psi.x.size(); ++n) cols[i][n] = psi.x[n][i];
    }
    return cols;
}

double q_from_columns(const std::array<std::vector<cx>, 4>& cols, cx beta) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::norm(coherent_coefficient_series(beta, i, cols[i]));
    return s / std::numbers::pi;
}

}  // namespace

double q_value(const SymmetricWavefunction& psi, cx beta) {
    return q_from_columns(level_columns(psi), beta);
}

QGrid q_grid(const SymmetricWavefunction& psi, double re_min, double re_max, double im_min,
             double im_max, std::size_t nx, std::size_t ny) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("q_grid: resolution must be at least 2x2");
    if (!(re_max > re_min) || !(im_max > im_min))
        throw std::invalid_argument("q_grid: empty window");

    QGrid g;
    g.re_min = re_min;
    g.re_max = re_max;
    g.im_min = im_min;
    g.im_max = im_max;
    g.nx = nx;
    g.ny = ny;
    g.values.resize(nx * ny);

    const auto cols = level_columns(psi);
    double sum = 0.0;
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double q = q_from_columns(cols, cx(g.re_at(ix), g.im_at(iy)));
            g.values[iy * nx + ix] = q;
            sum += q;
        }
    const double dre = (re_max - re_min) / double(nx - 1);
    const double dim = (im_max - im_min) / double(ny - 1);
    g.integral = sum * dre * dim;
    return g;
}

std::vector<QPeak> peak_census(const QGrid& grid, double floor) {
    if (!(floor > 0.0)) throw std::invalid_argument("peak_census: floor must be positive");
    std::vector<QPeak> peaks;
    const std::ptrdiff_t nx = std::ptrdiff_t(grid.nx), ny = std::ptrdiff_t(grid.ny);
    for (std::ptrdiff_t iy = 0; iy < ny; ++iy)
        for (std::ptrdiff_t ix = 0; ix < nx; ++ix) {
            const double v = grid.values[std::size_t(iy * nx + ix)];
            if (v <= floor) continue;
            bool is_peak = true;
            for (std::ptrdiff_t dy = -1; dy <= 1 && is_peak; ++dy)
                for (std::ptrdiff_t dx = -1; dx <= 1 && is_peak; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const std::ptrdiff_t jx = ix + dx, jy = iy + dy;
                    if (jx < 0 || jx >= nx || jy < 0 || jy >= ny) continue;
                    if (grid.values[std::size_t(jy * nx + jx)] >= v) is_peak = false;
                }
            if (is_peak)
                peaks.push_back({grid.re_at(std::size_t(ix)), grid.im_at(std::size_t(iy)), v});
        }
    std::sort(peaks.begin(), peaks.end(),
              [](const QPeak& a, const QPeak& b) { return a.height > b.height; });
    return peaks;
}

}  // namespace tcm3

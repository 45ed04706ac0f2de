#pragma once
#include <cstddef>
#include <vector>

#include "tcm3/cmat.hpp"
#include "tcm3/dynamics.hpp"

namespace tcm3 {

// Husimi Q of the cavity field sampled on a rectangular beta-plane window,
// endpoints inclusive.
struct QGrid {
    double re_min = 0, re_max = 0;
    double im_min = 0, im_max = 0;
    std::size_t nx = 0, ny = 0;
    std::vector<double> values;  // values[iy*nx + ix]
    double integral = 0;         // Riemann-sum diagnostic over the window

    double re_at(std::size_t ix) const { return re_min + (re_max - re_min) * double(ix) / double(nx - 1); }
    double im_at(std::size_t iy) const { return im_min + (im_max - im_min) * double(iy) / double(ny - 1); }
    double at(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }
};

struct QPeak {
    double re = 0, im = 0;
    double height = 0;
};

// Q(beta) = (1/pi) sum_i |<beta, level i | psi>|^2, photon offsets 0..3.
double q_value(const SymmetricWavefunction& psi, cx beta);

QGrid q_grid(const SymmetricWavefunction& psi, double re_min = -15.0, double re_max = 15.0,
             double im_min = -15.0, double im_max = 15.0, std::size_t nx = 201,
             std::size_t ny = 201);

// Strict 8-neighbor local maxima with height above `floor` (absolute,
// suggested 5% of the grid max), sorted by height descending.
std::vector<QPeak> peak_census(const QGrid& grid, double floor);

}  // namespace tcm3

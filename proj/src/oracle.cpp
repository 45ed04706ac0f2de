#include "tcm3/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace tcm3 {
namespace {

void axpy(std::vector<cx>& y, cx a, const std::vector<cx>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

BlockHamiltonian block_hamiltonian(int n) {
    if (n < 0) throw std::invalid_argument("block_hamiltonian: n must be >= 0");
    const double g = std::sqrt(double(n) + 1.0);
    const double b = std::sqrt(double(n) + 2.0);
    const double e = std::sqrt(double(n) + 3.0);
    const double s3 = std::sqrt(3.0);

    BlockHamiltonian out;
    out.n = n;

    out.h4 = cmat(4);
    out.h4(0, 1) = out.h4(1, 0) = s3 * g;
    out.h4(1, 2) = out.h4(2, 1) = 2.0 * b;
    out.h4(2, 3) = out.h4(3, 2) = s3 * e;

    // Product states of the block, grouped by photon number:
    // |eee,n>, {|eeg>,|ege>,|gee>}x(n+1), {|egg>,|geg>,|gge>}x(n+2), |ggg,n+3>.
    // sigma_i^+ a + sigma_i^- a^dag couples states differing in exactly one
    // atom, with the photon matrix element of the lower-photon member + 1.
    out.h8 = cmat(8);
    auto set = [&out](int i, int j, double v) { out.h8(i, j) = out.h8(j, i) = v; };
    set(0, 1, g);
    set(0, 2, g);
    set(0, 3, g);
    set(1, 4, b);  // eeg -> egg (atom b)
    set(1, 5, b);  // eeg -> geg (atom a)
    set(2, 4, b);  // ege -> egg (atom c)
    set(2, 6, b);  // ege -> gge (atom a)
    set(3, 5, b);  // gee -> geg (atom c)
    set(3, 6, b);  // gee -> gge (atom b)
    set(4, 7, e);
    set(5, 7, e);
    set(6, 7, e);
    return out;
}

std::vector<cx> integrate_block(const BlockHamiltonian& h, const std::vector<cx>& x0, double tau,
                                double dt) {
    const cmat* m = nullptr;
    if (x0.size() == 4)
        m = &h.h4;
    else if (x0.size() == 8)
        m = &h.h8;
    else
        throw std::invalid_argument("integrate_block: state must have 4 or 8 amplitudes");
    const double dt_max = 1e-3 / std::sqrt(double(h.n) + 3.0);
    if (!(dt > 0.0) || dt > dt_max * (1.0 + 1e-12))
        throw std::invalid_argument("integrate_block: dt exceeds stability margin");
    if (tau < 0.0) throw std::invalid_argument("integrate_block: tau must be >= 0");
    if (tau == 0.0) return x0;

    const long steps = long(std::ceil(tau / dt));
    const double step = tau / double(steps);
    const cx mi(0.0, -1.0);

    std::vector<cx> x = x0;
    for (long s = 0; s < steps; ++s) {
        std::vector<cx> k1 = *m * x;
        for (cx& z : k1) z *= mi;

        std::vector<cx> t = x;
        axpy(t, 0.5 * step, k1);
        std::vector<cx> k2 = *m * t;
        for (cx& z : k2) z *= mi;

        t = x;
        axpy(t, 0.5 * step, k2);
        std::vector<cx> k3 = *m * t;
        for (cx& z : k3) z *= mi;

        t = x;
        axpy(t, step, k3);
        std::vector<cx> k4 = *m * t;
        for (cx& z : k4) z *= mi;

        axpy(x, step / 6.0, k1);
        axpy(x, step / 3.0, k2);
        axpy(x, step / 3.0, k3);
        axpy(x, step / 6.0, k4);
    }
    return x;
}

}  // namespace tcm3

#include "tcm3/reduced_states.hpp"

#include <cmath>
#include <stdexcept>

namespace tcm3 {
namespace {

// Spec ordering |eee>,|eeg>,|ege>,|gee>,|egg>,|geg>,|gge>,|ggg> is sorted by
// excitation, not by bit pattern; this maps each index to its Kronecker
// position (e=0, g=1, atom a most significant).
constexpr int kToBinary[8] = {0, 1, 2, 4, 3, 5, 6, 7};

}  // namespace

AtomicDensitySym atomic_density_sym(const SymmetricWavefunction& psi) {
    const int nmax = int(psi.n_max());
    AtomicDensitySym out;
    out.rho4 = cmat(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cx s = 0.0;
            double leaked = 0.0;
            for (int n = 0; n <= nmax; ++n) {
                const int m = n + i - j;  // photon numbers must match: n+i-1 == m+j-1
                if (m < 0 || m > nmax) {
                    leaked += std::norm(psi.x[n][i]);
                    continue;
                }
                s += psi.x[n][i] * std::conj(psi.x[m][j]);
            }
            out.rho4(i, j) = s;
            out.leaked = std::max(out.leaked, leaked);
        }
    return out;
}

AtomicDensityProd embed_symmetric(const AtomicDensitySym& sym) {
    // Columns of the isometry V: the atomic parts of |D1>..|D4>.
    const double r3 = 1.0 / std::sqrt(3.0);
    double v[8][4] = {};
    v[0][0] = 1.0;
    v[1][1] = v[2][1] = v[3][1] = r3;
    v[4][2] = v[5][2] = v[6][2] = r3;
    v[7][3] = 1.0;

    AtomicDensityProd out;
    out.rho8 = cmat(8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            cx s = 0.0;
            for (int i = 0; i < 4; ++i) {
                if (v[a][i] == 0.0) continue;
                for (int j = 0; j < 4; ++j) s += v[a][i] * sym.rho4(i, j) * v[b][j];
            }
            out.rho8(a, b) = s;
        }
    return out;
}

cmat to_binary_order(const cmat& rho8) {
    if (rho8.dim() != 8) throw std::invalid_argument("to_binary_order: expected 8x8");
    cmat out(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out(kToBinary[i], kToBinary[j]) = rho8(i, j);
    return out;
}

cmat trace_out_one(const AtomicDensityProd& rho) {
    const cmat rb = to_binary_order(rho.rho8);
    cmat out(4);
    for (int ab = 0; ab < 4; ++ab)
        for (int ab2 = 0; ab2 < 4; ++ab2) {
            cx s = 0.0;
            for (int c = 0; c < 2; ++c) s += rb(ab * 2 + c, ab2 * 2 + c);
            out(ab, ab2) = s;
        }
    return out;
}

cmat trace_out_two(const AtomicDensityProd& rho) {
    const cmat rb = to_binary_order(rho.rho8);
    cmat out(2);
    for (int a = 0; a < 2; ++a)
        for (int a2 = 0; a2 < 2; ++a2) {
            cx s = 0.0;
            for (int bc = 0; bc < 4; ++bc) s += rb(a * 4 + bc, a2 * 4 + bc);
            out(a, a2) = s;
        }
    return out;
}

double purity(const cmat& rho) {
    cx s = 0.0;
    const std::size_t d = rho.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) s += rho(i, j) * rho(j, i);
    return s.real();
}

}  // namespace tcm3

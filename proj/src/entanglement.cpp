#include "tcm3/entanglement.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "tcm3/numerics.hpp"

namespace tcm3 {
namespace {

// Swap the b and c atom slots of an excitation-sorted 8-dim index.
constexpr int kSwapBC[8] = {0, 2, 1, 3, 4, 6, 5, 7};

cmat projector(const std::vector<cx>& v) {
    cmat r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r(i, j) = v[i] * std::conj(v[j]);
    return r;
}

}  // namespace

double i_concurrence_from_purity(double p) {
    if (!(p > 0.0) || p > 1.0 + 1e-9)
        throw std::invalid_argument("i_concurrence_from_purity: purity outside (0, 1]");
    return std::sqrt(2.0 * std::max(0.0, 1.0 - p));
}

double i_max(int d1, int d2) {
    if (d1 < 2 || d2 < 2) throw std::invalid_argument("i_max: dimensions must be >= 2");
    const double m = std::min(d1, d2);
    return std::sqrt(2.0 * (m - 1.0) / m);
}

cmat spin_flip(const cmat& rho_ab) {
    if (rho_ab.dim() != 4) throw std::invalid_argument("spin_flip: expected 4x4");
    cmat yy(4);  // sigma_y (x) sigma_y is real in the product basis
    yy(0, 3) = yy(3, 0) = -1.0;
    yy(1, 2) = yy(2, 1) = 1.0;
    return yy * rho_ab.conj() * yy;
}

double concurrence(const cmat& rho_ab) {
    const cmat s = matrix_sqrt_psd(rho_ab);
    cmat m = s * spin_flip(rho_ab) * s;
    // m is Hermitian up to roundoff; symmetrize before eigensolving.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
            const cx z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    std::vector<double> ev = hermitian_eigenvalues(m);
    // Noise eigenvalues of order eps*|m| would square-root into O(1e-8)
    // spurious lambdas and bias the difference low; zero them out.
    const double floor = 64.0 * DBL_EPSILON * std::max(0.0, m.trace().real());
    double c = 0.0;
    for (std::size_t k = 0; k < ev.size(); ++k) {
        const double lam = ev[k] > floor ? std::sqrt(ev[k]) : 0.0;
        c += (k == 0) ? lam : -lam;
    }
    return std::max(0.0, c);
}

double negativity(const cmat& rho, int d_a, int d_b) {
    if (std::size_t(d_a) * std::size_t(d_b) != rho.dim())
        throw std::invalid_argument("negativity: dimensions do not factor the matrix");
    cmat pt(rho.dim());
    for (int a = 0; a < d_a; ++a)
        for (int b = 0; b < d_b; ++b)
            for (int a2 = 0; a2 < d_a; ++a2)
                for (int b2 = 0; b2 < d_b; ++b2)
                    pt(a * d_b + b, a2 * d_b + b2) = rho(a2 * d_b + b, a * d_b + b2);
    double neg = 0.0;
    for (double lam : hermitian_eigenvalues(pt))
        if (lam < 0.0) neg += lam;
    return 2.0 * std::abs(neg);
}

ResidualNegativity residual_negativity(const AtomicDensityProd& rho8) {
    ResidualNegativity r;
    r.n_a_bc = negativity(to_binary_order(rho8.rho8), 2, 4);
    r.n_ab = negativity(trace_out_one(rho8), 2, 2);
    // N_a|b == N_a|c by atom-exchange symmetry, so both pairwise terms fold
    // into one.
    r.n_abc = r.n_a_bc - 2.0 * r.n_ab;
    return r;
}

TangleDecomposition tangle_decomposition(const std::vector<cx>& pure3) {
    if (pure3.size() != 8) throw std::invalid_argument("tangle_decomposition: expected 8 amplitudes");
    double nrm = 0.0;
    for (const cx& z : pure3) nrm += std::norm(z);
    if (std::abs(nrm - 1.0) > 1e-9)
        throw std::invalid_argument("tangle_decomposition: state is not normalized");

    AtomicDensityProd rho{projector(pure3)};
    const double p_a = purity(trace_out_two(rho));
    const double c_ab = concurrence(trace_out_one(rho));

    std::vector<cx> swapped(8);
    for (int i = 0; i < 8; ++i) swapped[kSwapBC[i]] = pure3[i];
    AtomicDensityProd rho_sw{projector(swapped)};
    const double c_ac = concurrence(trace_out_one(rho_sw));

    TangleDecomposition t;
    t.tau_a_bc = 2.0 * std::max(0.0, 1.0 - p_a);
    t.tau_ab = c_ab * c_ab;
    t.tau_ac = c_ac * c_ac;
    t.tau_abc = t.tau_a_bc - t.tau_ab - t.tau_ac;
    return t;
}

}  // namespace tcm3

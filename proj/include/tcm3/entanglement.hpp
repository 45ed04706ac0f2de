#pragma once
#include <vector>

#include "tcm3/cmat.hpp"
#include "tcm3/reduced_states.hpp"

namespace tcm3 {

struct EntanglementSample {
    double tau = 0;
    double i_f_abc = 0;   // field vs three atoms
    double i_fc_ab = 0;   // (field + atom c) vs (a, b)
    double i_fcb_a = 0;   // (field + b + c) vs atom a
    double c_ab = 0;      // Wootters concurrence of rho_ab
    double n_a_bc = 0;    // negativity across a | bc
    double n_ab = 0;      // pairwise negativity
    double n_abc = 0;     // residual three-particle negativity
};

// Pure-state I-concurrence from the purity of either reduction: sqrt(2(1-p)).
double i_concurrence_from_purity(double p);

// Upper bound sqrt(2(m-1)/m) with m = min(d1, d2).
double i_max(int d1, int d2);

// (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y).
cmat spin_flip(const cmat& rho_ab);

// Wootters concurrence of a two-qubit state (basis |ee>,|eg>,|ge>,|gg>).
double concurrence(const cmat& rho_ab);

// Negativity of rho across the dA x dB split, Kronecker ordering: twice the
// absolute sum of negative partial-transpose eigenvalues.
double negativity(const cmat& rho, int d_a, int d_b);

struct ResidualNegativity {
    double n_a_bc = 0;
    double n_ab = 0;
    double n_abc = 0;
};

// Eq.-style decomposition N_abc = N_a|bc - 2 N_ab, valid because the state is
// symmetric under atom exchange. Input in the excitation-sorted ordering.
ResidualNegativity residual_negativity(const AtomicDensityProd& rho8);

struct TangleDecomposition {
    double tau_a_bc = 0;
    double tau_ab = 0;
    double tau_ac = 0;
    double tau_abc = 0;  // residual three-tangle, >= 0 up to roundoff
};

// Monogamy decomposition of a pure three-qubit state given in the
// excitation-sorted ordering (|eee>,|eeg>,...,|ggg>).
TangleDecomposition tangle_decomposition(const std::vector<cx>& pure3);

}  // namespace tcm3

#pragma once
#include <array>
#include <string>
#include <vector>

#include "tcm3/cmat.hpp"

namespace tcm3 {

// Per-block Rabi parameters: the two squared eigenfrequencies of the
// four-level block with photon index n.
struct RabiBlockParams {
    int n = 0;
    double gamma = 0, beta = 0, eta = 0;  // sqrt(n+1), sqrt(n+2), sqrt(n+3)
    double delta = 0;                     // 4b^2 + 3g^2 + 3e^2
    double mu1 = 0, mu2 = 0;              // mu1 >= mu2 > 0
};

struct EvolutionBlock {
    int n = 0;
    double tau = 0;
    cmat u;  // 4x4, unitary, symmetric
};

// Coefficients of the symmetric atomic initial state:
// c_e|eee> + c_w1|W1> + c_w2|W2> + c_g|ggg>.
struct AtomicInitState {
    cx c_e, c_w1, c_w2, c_g;
};

struct CoherentField {
    cx alpha0;
    double nbar = 0;
    std::size_t n_max = 0;
    std::vector<cx> q;  // q[0..n_max]
};

// Amplitudes X_i^{(n)}: x[n][i-1] multiplies |D_i, n+i-1>.
struct SymmetricWavefunction {
    double tau = 0;
    std::vector<std::array<cx, 4>> x;

    std::size_t n_max() const { return x.size() - 1; }
    double norm_sq() const;
    // <N> with the block-n sector counted as n + 3/2 excitations.
    double excitation_expectation() const;
};

RabiBlockParams rabi_params(int n);

// Closed-form exp(-i H_blk tau) for the four-level block n.
EvolutionBlock evolution_block(int n, double tau);

CoherentField coherent_amplitudes(cx alpha0, double tail_tol);

SymmetricWavefunction initial_amplitudes(const AtomicInitState& atoms, const CoherentField& field);

SymmetricWavefunction evolve(const SymmetricWavefunction& initial, double tau);

// Built-in atomic presets: "eee", "ghz", "w".
AtomicInitState preset_atoms(const std::string& name);

}  // namespace tcm3

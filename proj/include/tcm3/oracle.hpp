#pragma once
#include <vector>

#include "tcm3/cmat.hpp"

namespace tcm3 {

// Brute-force verification support for the test suite: interaction
// Hamiltonian blocks built from first principles, plus a fixed-step RK4
// integrator sharing no machinery with the closed-form propagator.
struct BlockHamiltonian {
    int n = 0;
    cmat h4;  // symmetric-sector tridiagonal, off-diagonals sqrt(3)g, 2b, sqrt(3)e
    cmat h8;  // full product-basis block of the excitation-(n+3/2) sector
};

BlockHamiltonian block_hamiltonian(int n);

// RK4 for dX/dtau = -i h X from 0 to tau; picks h4 or h8 by x0 size.
// Requires dt <= 1e-3/sqrt(n+3).
std::vector<cx> integrate_block(const BlockHamiltonian& h, const std::vector<cx>& x0, double tau,
                                double dt);

}  // namespace tcm3

#pragma once
#include <string>
#include <vector>

#include "tcm3/dynamics.hpp"

namespace tcm3 {

struct InversionSample {
    double tau = 0;
    double w_total = 0;   // sum_n |X1|^2 - |X4|^2
    double w_single = 0;  // <sigma_z> of one atom, in [-1, 1]
    double p_ini = 0;     // survival probability, in [0, 1]
};

// Population difference between the fully excited and fully ground rungs.
double total_inversion(const SymmetricWavefunction& psi);

// Single-atom inversion <sigma_z^(a)>; by symmetry the same for all atoms.
double single_atom_inversion(const SymmetricWavefunction& psi);

// <sum_a sigma_z^(a)> = 3 * single_atom_inversion, kept as its own routine
// because it is NOT the same quantity as total_inversion.
double full_sz_expectation(const SymmetricWavefunction& psi);

// Probability that the system is still in its initial state, resolved per
// excitation block: sum_n |<psi0_n|psi_n>|^2 normalized to 1 at tau=0. Each
// block evolves unitarily, so the value stays in [0, 1] exactly.
double initial_population(const SymmetricWavefunction& psi0, const SymmetricWavefunction& psi);

// The bare squared overlap |<psi0|psi>|^2 of the joint atom-field state.
// Collapses to ~0 between revivals; kept for completeness.
double state_overlap(const SymmetricWavefunction& psi0, const SymmetricWavefunction& psi);

struct Revival {
    double time = 0;
    double relative_weight = 0;
};

// Strong-field analytic revival predictions for the preset scenarios.
std::vector<Revival> predicted_revivals(const std::string& initial_kind,
                                        const std::string& quantity, double nbar);

}  // namespace tcm3

#pragma once
#include "tcm3/cmat.hpp"
#include "tcm3/dynamics.hpp"

namespace tcm3 {

// Reduced atomic density matrix in the symmetric Dicke basis
// {|3/2,3/2>, |3/2,1/2>, |3/2,-1/2>, |3/2,-3/2>}, photon mode traced out.
struct AtomicDensitySym {
    cmat rho4;          // 4x4
    double leaked = 0;  // trace deficit from dropped out-of-range photon terms
};

// Same state written in the three-qubit product basis, ordered
// |eee>,|eeg>,|ege>,|gee>,|egg>,|geg>,|gge>,|ggg>.
struct AtomicDensityProd {
    cmat rho8;  // 8x8
};

AtomicDensitySym atomic_density_sym(const SymmetricWavefunction& psi);

AtomicDensityProd embed_symmetric(const AtomicDensitySym& sym);

// Rewrites an 8x8 matrix from the excitation-sorted product ordering into
// plain Kronecker (bit-pattern) ordering, which partial traces and partial
// transposes index against.
cmat to_binary_order(const cmat& rho8);

// Partial trace over the third atom slot; basis |ee>,|eg>,|ge>,|gg>.
cmat trace_out_one(const AtomicDensityProd& rho);

// Partial trace down to one atom; basis |e>,|g>.
cmat trace_out_two(const AtomicDensityProd& rho);

double purity(const cmat& rho);

}  // namespace tcm3

#pragma once
#include <vector>

#include "tcm3/cmat.hpp"

namespace tcm3 {

struct EigenSystem {
    std::vector<double> values;  // descending
    cmat vectors;                // column k pairs with values[k]
};

// Eigenvalues of a Hermitian matrix, descending. Rejects inputs whose
// hermiticity defect exceeds 1e-10.
std::vector<double> hermitian_eigenvalues(const cmat& m);

// Eigenvalues and an orthonormal set of eigenvectors.
EigenSystem hermitian_eigensystem(const cmat& m);

// Hermitian square root of a positive semidefinite matrix. Eigenvalues in
// [-1e-10, 0) are clipped to 0; anything below -1e-10 is rejected.
cmat matrix_sqrt_psd(const cmat& m);

// Sum_n d_{n+offset}(beta) * amplitudes[n] with d_k = e^{-|b|^2/2} (b*)^k/sqrt(k!),
// accumulated through the bounded recurrence d_{k+1} = d_k * b*/sqrt(k+1).
cx coherent_coefficient_series(cx beta, std::size_t offset, const std::vector<cx>& amplitudes);

}  // namespace tcm3

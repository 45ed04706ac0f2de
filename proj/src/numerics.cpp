#include "tcm3/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tcm3 {
namespace {

// Plain cyclic Jacobi on a real symmetric matrix held row-major in `a`
// (dimension d), accumulating rotations into `v`. The caller pre-scales so
// the absolute convergence threshold is meaningful.
void jacobi_real(std::vector<double>& a, std::vector<double>& v, std::size_t d) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * d + j]; };
    auto vt = [&](std::size_t i, std::size_t j) -> double& { return v[i * d + j]; };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) vt(i, j) = (i == j) ? 1.0 : 0.0;

    const double thresh = 1e-14;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) off += 2.0 * at(i, j) * at(i, j);
        if (std::sqrt(off) < thresh) return;

        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < d; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double vkp = vt(k, p), vkq = vt(k, q);
                    vt(k, p) = c * vkp - s * vkq;
                    vt(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    throw std::runtime_error("jacobi eigensolver failed to converge in 100 sweeps");
}

struct RealEigen {
    std::vector<double> values;   // 2n, ascending
    std::vector<double> vectors;  // column k belongs to values[k]
    std::size_t d = 0;
    double scale = 1.0;
};

// Real-embedding route: A+iB Hermitian -> [[A,-B],[B,A]] real symmetric with
// every eigenvalue doubled.
RealEigen embedded_eigen(const cmat& m) {
    if (m.hermiticity_defect() > 1e-10)
        throw std::invalid_argument("hermitian eigensolver: input is not Hermitian");
    const std::size_t n = m.dim(), d = 2 * n;

    std::vector<double> a(d * d, 0.0);
    double fro = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cx z = 0.5 * (m(i, j) + std::conj(m(j, i)));  // symmetrize roundoff away
            a[i * d + j] = z.real();
            a[(i + n) * d + (j + n)] = z.real();
            a[i * d + (j + n)] = -z.imag();
            a[(i + n) * d + j] = z.imag();
            fro += 2.0 * std::norm(z);
        }
    const double scale = std::max(1.0, std::sqrt(fro));
    for (double& x : a) x /= scale;

    std::vector<double> v(d * d);
    jacobi_real(a, v, d);

    RealEigen r;
    r.d = d;
    r.scale = scale;
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(d);
    for (std::size_t i = 0; i < d; ++i) diag[i] = a[i * d + i] * scale;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

    r.values.resize(d);
    r.vectors.assign(d * d, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        r.values[k] = diag[order[k]];
        for (std::size_t i = 0; i < d; ++i) r.vectors[i * d + k] = v[i * d + order[k]];
    }
    return r;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const cmat& m) {
    const RealEigen re = embedded_eigen(m);
    const std::size_t n = m.dim();
    std::vector<double> out(n);
    // The embedded spectrum is doubled: adjacent sorted entries pair up.
    for (std::size_t k = 0; k < n; ++k) out[k] = 0.5 * (re.values[2 * k] + re.values[2 * k + 1]);
    std::reverse(out.begin(), out.end());
    return out;
}

EigenSystem hermitian_eigensystem(const cmat& m) {
    const RealEigen re = embedded_eigen(m);
    const std::size_t n = m.dim(), d = re.d;

    EigenSystem es;
    es.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) es.values[k] = 0.5 * (re.values[2 * k] + re.values[2 * k + 1]);
    es.vectors = cmat(n);

    // A real eigenvector (x, y) of the embedding maps to x+iy; its partner
    // (-y, x) maps to i(x+iy) — the same complex vector. Within a cluster of
    // (near-)equal values, Gram–Schmidt in complex arithmetic discards the
    // redundant copies and resolves genuine degeneracies.
    const double ctol = 1e-10 * re.scale;
    std::vector<std::vector<cx>> accepted;  // in ascending-eigenvalue order
    std::size_t k = 0;
    while (k < d) {
        std::size_t end = k + 1;
        while (end < d && re.values[end] - re.values[end - 1] <= ctol) ++end;
        const std::size_t want = (end - k) / 2;
        if (want * 2 != end - k)
            throw std::runtime_error("hermitian eigensolver: odd embedding cluster");

        std::vector<std::vector<cx>> cluster;
        for (std::size_t c = k; c < end && cluster.size() < want; ++c) {
            std::vector<cx> cand(n);
            for (std::size_t i = 0; i < n; ++i)
                cand[i] = cx{re.vectors[i * d + c], re.vectors[(i + n) * d + c]};
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& u : cluster) {
                    cx proj = 0.0;
                    for (std::size_t i = 0; i < n; ++i) proj += std::conj(u[i]) * cand[i];
                    for (std::size_t i = 0; i < n; ++i) cand[i] -= proj * u[i];
                }
            double nrm = 0.0;
            for (const cx& z : cand) nrm += std::norm(z);
            nrm = std::sqrt(nrm);
            if (nrm < 1e-3) continue;  // redundant partner copy
            for (cx& z : cand) z /= nrm;
            cluster.push_back(std::move(cand));
        }
        if (cluster.size() != want)
            throw std::runtime_error("hermitian eigensolver: eigenvector extraction failed");
        for (auto& vec : cluster) accepted.push_back(std::move(vec));
        k = end;
    }

    // Flip to descending to match the eigenvalue convention.
    std::reverse(es.values.begin(), es.values.end());
    std::reverse(accepted.begin(), accepted.end());
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, c) = accepted[c][i];
    return es;
}

cmat matrix_sqrt_psd(const cmat& m) {
    EigenSystem es = hermitian_eigensystem(m);
    for (double& lam : es.values) {
        if (lam < -1e-10) throw std::invalid_argument("matrix_sqrt_psd: input is not PSD");
        lam = lam < 0.0 ? 0.0 : std::sqrt(lam);
    }
    const std::size_t n = m.dim();
    cmat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cx s = 0.0;
            for (std::size_t c = 0; c < n; ++c)
                s += es.vectors(i, c) * es.values[c] * std::conj(es.vectors(j, c));
            r(i, j) = s;
        }
    // Symmetrize away the last bits of roundoff.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const cx z = 0.5 * (r(i, j) + std::conj(r(j, i)));
            r(i, j) = z;
            r(j, i) = std::conj(z);
        }
    return r;
}

cx coherent_coefficient_series(cx beta, std::size_t offset, const std::vector<cx>& amplitudes) {
    const cx bstar = std::conj(beta);
    cx d = std::exp(-0.5 * std::norm(beta));
    for (std::size_t k = 0; k < offset; ++k) d *= bstar / std::sqrt(double(k + 1));
    cx acc = 0.0;
    for (std::size_t n = 0; n < amplitudes.size(); ++n) {
        acc += d * amplitudes[n];
        d *= bstar / std::sqrt(double(n + offset + 1));
    }
    return acc;
}

}  // namespace tcm3

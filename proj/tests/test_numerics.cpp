#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "tcm3/numerics.hpp"

using namespace tcm3;

namespace {

cmat random_hermitian(std::size_t dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    cmat m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = u(rng);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cx z(u(rng), u(rng));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

cmat random_psd(std::size_t dim, unsigned seed) {
    const cmat g = random_hermitian(dim, seed);
    cmat m = g * g.adjoint();
    double tr = m.trace().real();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) /= tr;
    return m;
}

// Real symmetric embedding [[A, -B], [B, A]] of A + iB; its spectrum is that
// of the complex matrix, doubled.
std::vector<std::vector<double>> embed(const cmat& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<double>> e(2 * n, std::vector<double>(2 * n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            e[i][j] = m(i, j).real();
            e[i][j + n] = -m(i, j).imag();
            e[i + n][j] = m(i, j).imag();
            e[i + n][j + n] = m(i, j).real();
        }
    return e;
}

// Number of eigenvalues strictly below x, from the inertia of the Gaussian
// elimination pivots of E - xI (Sylvester's law).
int count_below(std::vector<std::vector<double>> g, double x) {
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) g[i][i] -= x;
    int cnt = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double d = g[k][k];
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++cnt;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = g[i][k] / d;
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) g[i][j] -= f * g[k][j];
        }
    }
    return cnt;
}

// All eigenvalues of a real symmetric matrix by bisection, ascending.
std::vector<double> bisection_eigenvalues(const std::vector<std::vector<double>>& e) {
    const std::size_t n = e.size();
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(e[i][j]);
        r = std::max(r, row);
    }
    r = std::max(r, 1.0);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lo = -r, hi = r;
        for (int it = 0; it < 200 && hi - lo > 1e-12 * r; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (count_below(e, mid) >= int(k) + 1)
                hi = mid;
            else
                lo = mid;
        }
        out[k] = 0.5 * (lo + hi);
    }
    return out;
}

double max_abs_diff(const cmat& a, const cmat& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("identity and diagonal eigenvalues") {
    const std::vector<double> id2 = hermitian_eigenvalues(cmat::identity(2));
    REQUIRE(id2.size() == 2);
    CHECK(id2[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id2[1] == doctest::Approx(1.0).epsilon(1e-14));

    cmat d(4);
    d(0, 0) = 3.0;
    d(1, 1) = -1.0;
    d(2, 2) = 0.5;
    d(3, 3) = 0.0;
    const std::vector<double> ev = hermitian_eigenvalues(d);
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(ev[1] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(ev[2]) < 1e-13);
    CHECK(ev[3] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("random hermitian matrices match the bisection oracle") {
    for (unsigned seed : {11u, 22u, 33u, 44u, 55u}) {
        const cmat m = random_hermitian(8, seed);
        std::vector<double> got = hermitian_eigenvalues(m);  // descending
        const std::vector<double> doubled = bisection_eigenvalues(embed(m));
        REQUIRE(got.size() == 8);
        REQUIRE(doubled.size() == 16);
        std::reverse(got.begin(), got.end());
        for (std::size_t k = 0; k < 8; ++k) {
            const double oracle = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
            CHECK(std::abs(got[k] - oracle) < 1e-8);
        }
        double sum = 0.0;
        for (double v : got) sum += v;
        CHECK(std::abs(sum - m.trace().real()) < 1e-9);
    }
}

TEST_CASE("non-hermitian input is rejected") {
    cmat m(3);
    m(0, 1) = 1.0;  // m(1,0) left at 0
    CHECK_THROWS(hermitian_eigenvalues(m));
}

TEST_CASE("spectrum is invariant under unitary conjugation") {
    const cmat h = random_hermitian(6, 7u);
    const cmat u = hermitian_eigensystem(random_hermitian(6, 99u)).vectors;
    const std::vector<double> a = hermitian_eigenvalues(h);
    const std::vector<double> b = hermitian_eigenvalues(u * h * u.adjoint());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-8);
}

TEST_CASE("eigensystem reconstructs the matrix") {
    for (unsigned seed : {3u, 17u}) {
        const cmat m = random_hermitian(8, seed);
        const EigenSystem es = hermitian_eigensystem(m);
        CHECK(max_abs_diff(es.vectors.adjoint() * es.vectors, cmat::identity(8)) < 1e-10);
        cmat lam(8);
        for (std::size_t k = 0; k < 8; ++k) lam(k, k) = es.values[k];
        CHECK(max_abs_diff(es.vectors * lam * es.vectors.adjoint(), m) < 1e-9);
    }
}

TEST_CASE("eigensystem handles degenerate spectra") {
    // diag(2, 2, 2, 1) hidden by a random rotation.
    cmat d(4);
    d(0, 0) = d(1, 1) = d(2, 2) = 2.0;
    d(3, 3) = 1.0;
    const cmat u = hermitian_eigensystem(random_hermitian(4, 5u)).vectors;
    const cmat m = u * d * u.adjoint();
    const EigenSystem es = hermitian_eigensystem(m);
    CHECK(es.values[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(es.values[2] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(es.values[3] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(max_abs_diff(es.vectors.adjoint() * es.vectors, cmat::identity(4)) < 1e-10);
    cmat lam(4);
    for (std::size_t k = 0; k < 4; ++k) lam(k, k) = es.values[k];
    CHECK(max_abs_diff(es.vectors * lam * es.vectors.adjoint(), m) < 1e-9);
}

TEST_CASE("psd square root") {
    CHECK(max_abs_diff(matrix_sqrt_psd(cmat::identity(3)), cmat::identity(3)) < 1e-13);

    cmat d(2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const cmat r = matrix_sqrt_psd(d);
    CHECK(r(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r(1, 1).real() == doctest::Approx(3.0).epsilon(1e-12));

    for (unsigned seed : {21u, 42u}) {
        const cmat m = random_psd(6, seed);
        const cmat s = matrix_sqrt_psd(m);
        CHECK(max_abs_diff(s * s, m) < 1e-8);
        CHECK(s.hermiticity_defect() < 1e-12);
        const std::vector<double> em = hermitian_eigenvalues(m);
        const std::vector<double> es = hermitian_eigenvalues(s);
        for (std::size_t k = 0; k < 6; ++k)
            CHECK(std::abs(es[k] - std::sqrt(std::max(0.0, em[k]))) < 1e-8);
    }
}

TEST_CASE("psd square root rejects genuinely indefinite input") {
    cmat m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1e-6;
    CHECK_THROWS(matrix_sqrt_psd(m));

    cmat ok(2);
    ok(0, 0) = 1.0;
    ok(1, 1) = -1e-11;  // inside the clip band
    const cmat r = matrix_sqrt_psd(ok);
    CHECK(r(1, 1).real() >= 0.0);
}

TEST_CASE("coherent coefficient series basics") {
    CHECK(coherent_coefficient_series(0.0, 0, {1.0, 0.0, 0.0}) == cx(1.0));
    CHECK(coherent_coefficient_series(0.0, 1, {0.3, 0.7, -0.2}) == cx(0.0));
}

TEST_CASE("coherent series reproduces coherent-state overlaps") {
    // q_n of a coherent state alpha = 10, truncated far past the tail.
    const double alpha = 10.0;
    std::vector<cx> q(321);
    q[0] = std::exp(-0.5 * alpha * alpha);
    for (std::size_t n = 1; n < q.size(); ++n)
        q[n] = q[n - 1] * alpha / std::sqrt(double(n));

    CHECK(std::abs(coherent_coefficient_series(cx(10.0), 0, q) - cx(1.0)) < 1e-10);

    for (cx beta : {cx(8.0, 0.0), cx(10.0, 2.0), cx(7.0, 3.0), cx(12.0, -1.0), cx(11.5, 0.5)}) {
        const cx s = coherent_coefficient_series(beta, 0, q);
        const double expected = std::exp(-std::norm(beta - cx(alpha)));
        CHECK(std::abs(std::norm(s) - expected) < 1e-10);
    }
}

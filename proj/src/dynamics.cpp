#include "tcm3/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace tcm3 {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
const cx kI{0.0, 1.0};
}  // namespace

double SymmetricWavefunction::norm_sq() const {
    double s = 0.0;
    for (const auto& blk : x)
        for (const cx& a : blk) s += std::norm(a);
    return s;
}

double SymmetricWavefunction::excitation_expectation() const {
    double s = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
        double w = 0.0;
        for (const cx& a : x[n]) w += std::norm(a);
        s += (double(n) + 1.5) * w;
    }
    return s;
}

RabiBlockParams rabi_params(int n) {
    if (n < 0) throw std::invalid_argument("rabi_params: n must be nonnegative");
    RabiBlockParams p;
    p.n = n;
    const double g2 = n + 1.0, b2 = n + 2.0, e2 = n + 3.0;
    p.gamma = std::sqrt(g2);
    p.beta = std::sqrt(b2);
    p.eta = std::sqrt(e2);
    p.delta = 4.0 * b2 + 3.0 * g2 + 3.0 * e2;
    const double root = std::sqrt(p.delta * p.delta - 36.0 * e2 * g2);
    p.mu1 = 0.5 * (p.delta + root);
    p.mu2 = 0.5 * (p.delta - root);
    return p;
}

EvolutionBlock evolution_block(int n, double tau) {
    if (!std::isfinite(tau)) throw std::invalid_argument("evolution_block: tau must be finite");
    const RabiBlockParams p = rabi_params(n);
    const double g = p.gamma, b = p.beta, e = p.eta;
    const double g2 = g * g, b2 = b * b, e2 = e * e;
    const double d = p.mu1 - p.mu2;
    if (!(d > 1e-6)) throw std::runtime_error("evolution_block: degenerate Rabi roots");

    const double s1 = std::sqrt(p.mu1), s2 = std::sqrt(p.mu2);
    const double c1 = std::cos(s1 * tau), c2 = std::cos(s2 * tau);
    const double sn1 = std::sin(s1 * tau) / s1, sn2 = std::sin(s2 * tau) / s2;

    // Partial-fraction split of exp(-i H tau) over the two squared
    // frequencies: cosine weights (mu - w)/d and sine weights likewise.
    auto cos_pair = [&](double w) { return ((p.mu1 - w) * c1 - (p.mu2 - w) * c2) / d; };
    auto sin_pair = [&](double w) { return ((p.mu1 - w) * sn1 - (p.mu2 - w) * sn2) / d; };

    EvolutionBlock blk;
    blk.n = n;
    blk.tau = tau;
    blk.u = cmat(4);
    cmat& u = blk.u;

    u(0, 0) = cos_pair(4.0 * b2 + 3.0 * e2);
    u(0, 1) = -kI * kSqrt3 * g * sin_pair(3.0 * e2);
    u(0, 2) = 2.0 * kSqrt3 * b * g * (c1 - c2) / d;
    u(0, 3) = -6.0 * kI * b * g * e * (sn1 - sn2) / d;
    u(1, 1) = cos_pair(3.0 * e2);
    u(1, 2) = -2.0 * kI * b * (p.mu1 * sn1 - p.mu2 * sn2) / d;
    u(1, 3) = 2.0 * kSqrt3 * b * e * (c1 - c2) / d;
    u(2, 2) = cos_pair(3.0 * g2);
    u(2, 3) = -kI * kSqrt3 * e * sin_pair(3.0 * g2);
    u(3, 3) = cos_pair(4.0 * b2 + 3.0 * g2);

    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < i; ++j) u(i, j) = u(j, i);
    return blk;
}

CoherentField coherent_amplitudes(cx alpha0, double tail_tol) {
    if (!(tail_tol > 0.0) || tail_tol > 1e-6)
        throw std::invalid_argument("coherent_amplitudes: tail_tol must be in (0, 1e-6]");

    CoherentField f;
    f.alpha0 = alpha0;
    f.nbar = std::norm(alpha0);

    std::vector<cx> q;
    cx qn = std::exp(-0.5 * f.nbar);
    q.push_back(qn);
    double mass = std::norm(qn);
    const std::size_t hard_cap = 64 + std::size_t(16.0 * (f.nbar + 1.0));
    std::size_t n = 0;
    while (1.0 - mass >= tail_tol && n < hard_cap) {
        ++n;
        qn *= alpha0 / std::sqrt(double(n));
        q.push_back(qn);
        mass += std::norm(qn);
    }
    if (1.0 - mass >= tail_tol)
        throw std::runtime_error("coherent_amplitudes: truncation cap exceeded");

    // Pad so the q_{n+3} lookups in initial_amplitudes stay in range, then
    // drop padding that is exactly zero (the vacuum case collapses to [1]).
    for (int k = 0; k < 5; ++k) {
        qn *= alpha0 / std::sqrt(double(++n));
        q.push_back(qn);
    }
    while (q.size() > 1 && q.back() == cx{}) q.pop_back();

    f.q = std::move(q);
    f.n_max = f.q.size() - 1;
    return f;
}

SymmetricWavefunction initial_amplitudes(const AtomicInitState& atoms, const CoherentField& field) {
    const double nrm = std::norm(atoms.c_e) + std::norm(atoms.c_w1) +
                       std::norm(atoms.c_w2) + std::norm(atoms.c_g);
    if (std::abs(nrm - 1.0) > 1e-9)
        throw std::invalid_argument("initial_amplitudes: atomic state is not normalized");

    SymmetricWavefunction psi;
    psi.tau = 0.0;
    psi.x.assign(field.n_max + 1, {});
    auto qat = [&](std::size_t k) { return k <= field.n_max ? field.q[k] : cx{}; };
    for (std::size_t n = 0; n <= field.n_max; ++n) {
        psi.x[n][0] = atoms.c_e * qat(n);
        psi.x[n][1] = atoms.c_w1 * qat(n + 1);
        psi.x[n][2] = atoms.c_w2 * qat(n + 2);
        psi.x[n][3] = atoms.c_g * qat(n + 3);
    }
    return psi;
}

SymmetricWavefunction evolve(const SymmetricWavefunction& initial, double tau) {
    if (initial.tau != 0.0)
        throw std::invalid_argument("evolve: expects a tau=0 wavefunction");
    SymmetricWavefunction out;
    out.tau = tau;
    out.x.resize(initial.x.size());
    for (std::size_t n = 0; n < initial.x.size(); ++n) {
        const cmat& u = evolution_block(int(n), tau).u;
        for (int i = 0; i < 4; ++i) {
            cx s = 0.0;
            for (int j = 0; j < 4; ++j) s += u(i, j) * initial.x[n][j];
            out.x[n][i] = s;
        }
    }
    return out;
}

AtomicInitState preset_atoms(const std::string& name) {
    const double r = 1.0 / std::sqrt(2.0);
    if (name == "eee") return {1.0, 0.0, 0.0, 0.0};
    if (name == "ghz") return {r, 0.0, 0.0, r};
    if (name == "w") return {0.0, 1.0, 0.0, 0.0};
    throw std::invalid_argument("unknown atomic preset: " + name);
}

}  // namespace tcm3

#include "tcm3/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace tcm3 {

double total_inversion(const SymmetricWavefunction& psi) {
    double s = 0.0;
    for (const auto& b : psi.x) s += std::norm(b[0]) - std::norm(b[3]);
    return s;
}

double single_atom_inversion(const SymmetricWavefunction& psi) {
    double s = 0.0;
    for (const auto& b : psi.x)
        s += std::norm(b[0]) + std::norm(b[1]) / 3.0 - std::norm(b[2]) / 3.0 - std::norm(b[3]);
    return s;
}

double full_sz_expectation(const SymmetricWavefunction& psi) {
    double s = 0.0;
    for (const auto& b : psi.x)
        s += 3.0 * std::norm(b[0]) + std::norm(b[1]) - std::norm(b[2]) - 3.0 * std::norm(b[3]);
    return s;
}

double initial_population(const SymmetricWavefunction& psi0, const SymmetricWavefunction& psi) {
    if (psi0.x.size() != psi.x.size())
        throw std::invalid_argument("initial_population: truncation mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n < psi.x.size(); ++n) {
        cx ov = 0.0;
        double w = 0.0;
        for (int i = 0; i < 4; ++i) {
            ov += std::conj(psi0.x[n][i]) * psi.x[n][i];
            w += std::norm(psi0.x[n][i]);
        }
        num += std::norm(ov);
        den += w * w;
    }
    return den > 0.0 ? num / den : 0.0;
}

double state_overlap(const SymmetricWavefunction& psi0, const SymmetricWavefunction& psi) {
    if (psi0.x.size() != psi.x.size())
        throw std::invalid_argument("state_overlap: truncation mismatch");
    cx ov = 0.0;
    for (std::size_t n = 0; n < psi.x.size(); ++n)
        for (int i = 0; i < 4; ++i) ov += std::conj(psi0.x[n][i]) * psi.x[n][i];
    return std::norm(ov);
}

std::vector<Revival> predicted_revivals(const std::string& initial_kind,
                                        const std::string& quantity, double nbar) {
    if (!(nbar >= 25.0))
        throw std::invalid_argument("predicted_revivals: analysis needs nbar >= 25");
    const double T = 2.0 * M_PI * std::sqrt(nbar);  // fundamental revival period

    auto bad = [&]() -> std::vector<Revival> {
        throw std::invalid_argument("predicted_revivals: unknown kind/quantity " + initial_kind +
                                    "/" + quantity);
    };

    if (initial_kind == "eee") {
        // Summand harmonics: W_T ~ (cos6 + 15 cos2)/16, W_a ~ cos2,
        // P_ini ~ (10 + cos6 + 6 cos4 + 15 cos2)/32.
        if (quantity == "w_total") return {{T / 3, 1.0 / 16}, {2 * T / 3, 1.0 / 16}, {T, 1.0}};
        if (quantity == "w_single") return {{T, 1.0}};
        if (quantity == "p_ini")
            return {{T / 3, 1.0 / 22}, {T / 2, 6.0 / 22}, {2 * T / 3, 1.0 / 22}, {T, 1.0}};
        return bad();
    }
    if (initial_kind == "ghz") {
        // Inversions are trapped; P_ini ~ (5 + 3 cos4)/8.
        if (quantity == "w_total" || quantity == "w_single") return {};
        if (quantity == "p_ini") return {{T / 2, 1.0}, {T, 1.0}};
        return bad();
    }
    if (initial_kind == "w") {
        // W_T ~ cos6 + cos2: the k=6 harmonic revives at T/3 and 2T/3, and at
        // T it coincides with the k=2 one, doubling the first-revival weight.
        if (quantity == "w_total") return {{T / 3, 0.5}, {2 * T / 3, 0.5}, {T, 1.0}};
        if (quantity == "w_single") return {{T, 1.0}};
        // P_ini summand (10 + 9 cos6 + 6 cos4 + 7 cos2)/32.
        if (quantity == "p_ini")
            return {{T / 3, 9.0 / 22}, {T / 2, 6.0 / 22}, {2 * T / 3, 9.0 / 22}, {T, 1.0}};
        return bad();
    }
    return bad();
}

}  // namespace tcm3

#include "tcm3/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "tcm3/entanglement.hpp"
#include "tcm3/husimi.hpp"
#include "tcm3/observables.hpp"
#include "tcm3/reduced_states.hpp"
#include "tcm3/svg.hpp"

namespace fs = std::filesystem;

namespace tcm3 {
namespace {

constexpr double kTailTol = 1e-12;
constexpr double kNormDriftTol = 1e-6;

const std::vector<std::string> kKnownProducts = {"inversions", "entanglement", "negativity",
                                                 "qgrid", "qsnapshots"};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& tok, int line, const std::string& key) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        fail(line, "malformed value for '" + key + "': '" + tok + "'");
    }
    if (pos != tok.size()) fail(line, "malformed value for '" + key + "': '" + tok + "'");
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// "RE" or "RE IM".
cx parse_complex(const std::string& val, int line, const std::string& key) {
    std::string v = val;
    std::replace(v.begin(), v.end(), ',', ' ');
    const auto toks = split_ws(v);
    if (toks.empty() || toks.size() > 2) fail(line, "malformed value for '" + key + "': '" + val + "'");
    const double re = parse_double(toks[0], line, key);
    const double im = toks.size() == 2 ? parse_double(toks[1], line, key) : 0.0;
    return {re, im};
}

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string qgrid_csv(const QGrid& g, double tau, const std::string& scenario) {
    std::string s;
    s += "# scenario=" + scenario + "\n";
    s += "# tau=" + fmt17(tau) + "\n";
    s += "# re_min=" + fmt17(g.re_min) + "\n";
    s += "# re_max=" + fmt17(g.re_max) + "\n";
    s += "# im_min=" + fmt17(g.im_min) + "\n";
    s += "# im_max=" + fmt17(g.im_max) + "\n";
    s += "# nx=" + std::to_string(g.nx) + "\n";
    s += "# ny=" + std::to_string(g.ny) + "\n";
    s += "# integral=" + fmt17(g.integral) + "\n";
    s += "re,im,q\n";
    for (std::size_t iy = 0; iy < g.ny; ++iy)
        for (std::size_t ix = 0; ix < g.nx; ++ix)
            s += fmt17(g.re_at(ix)) + "," + fmt17(g.im_at(iy)) + "," + fmt17(g.at(ix, iy)) + "\n";
    return s;
}

}  // namespace

double Scenario::resolved_tau_end() const {
    if (tau_end >= tau_start) return tau_end;
    return 2.0 * std::numbers::pi * std::sqrt(nbar()) + 2.0;
}

bool Scenario::wants(const std::string& product) const {
    return std::find(products.begin(), products.end(), product) != products.end();
}

Scenario parse_config(const std::string& text) {
    Scenario s;
    s.products.clear();

    bool have_c[4] = {false, false, false, false};
    cx cval[4];
    int c_line[4] = {0, 0, 0, 0};
    int atoms_line = 0;
    bool products_set = false;
    bool tau_end_set = false;
    std::map<std::string, int> key_line;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) fail(lineno, "expected 'key = value'");
        if (val.empty()) fail(lineno, "missing value for '" + key + "'");
        key_line[key] = lineno;

        if (key == "name") {
            s.name = val;
        } else if (key == "atoms") {
            if (val != "eee" && val != "ghz" && val != "w" && val != "custom")
                fail(lineno, "atoms must be one of eee, ghz, w, custom");
            s.atoms_kind = val;
            atoms_line = lineno;
        } else if (key == "c_e" || key == "c_w1" || key == "c_w2" || key == "c_g") {
            const int idx = key == "c_e" ? 0 : key == "c_w1" ? 1 : key == "c_w2" ? 2 : 3;
            cval[idx] = parse_complex(val, lineno, key);
            have_c[idx] = true;
            c_line[idx] = lineno;
        } else if (key == "alpha0") {
            s.alpha0 = parse_complex(val, lineno, key);
        } else if (key == "tau_start") {
            s.tau_start = parse_double(val, lineno, key);
        } else if (key == "tau_end") {
            s.tau_end = parse_double(val, lineno, key);
            tau_end_set = true;
        } else if (key == "tau_step") {
            s.tau_step = parse_double(val, lineno, key);
        } else if (key == "products") {
            std::string v = val;
            std::replace(v.begin(), v.end(), ',', ' ');
            const auto toks = split_ws(v);
            if (toks.empty()) fail(lineno, "products list is empty");
            for (const std::string& p : toks)
                if (std::find(kKnownProducts.begin(), kKnownProducts.end(), p) ==
                    kKnownProducts.end())
                    fail(lineno, "unknown product '" + p + "'");
            s.products = toks;
            products_set = true;
        } else if (key == "q_window") {
            const auto toks = split_ws(val);
            if (toks.size() != 4) fail(lineno, "q_window needs re_min re_max im_min im_max");
            s.q_re_min = parse_double(toks[0], lineno, key);
            s.q_re_max = parse_double(toks[1], lineno, key);
            s.q_im_min = parse_double(toks[2], lineno, key);
            s.q_im_max = parse_double(toks[3], lineno, key);
            if (!(s.q_re_max > s.q_re_min) || !(s.q_im_max > s.q_im_min))
                fail(lineno, "q_window is empty");
        } else if (key == "q_resolution") {
            const auto toks = split_ws(val);
            if (toks.size() != 2) fail(lineno, "q_resolution needs nx ny");
            const double nx = parse_double(toks[0], lineno, key);
            const double ny = parse_double(toks[1], lineno, key);
            if (nx < 2 || ny < 2 || nx != std::floor(nx) || ny != std::floor(ny))
                fail(lineno, "q_resolution must be integers >= 2");
            s.q_nx = std::size_t(nx);
            s.q_ny = std::size_t(ny);
        } else if (key == "output_dir") {
            s.output_dir = val;
        } else {
            fail(lineno, "unknown key '" + key + "'");
        }
    }

    if (!products_set) s.products = {"inversions", "entanglement", "negativity"};

    if (s.atoms_kind == "custom") {
        for (int i = 0; i < 4; ++i)
            if (!have_c[i])
                fail(atoms_line ? atoms_line : lineno,
                     "custom atoms require c_e, c_w1, c_w2, c_g");
        double nrm = 0.0;
        for (const cx& z : cval) nrm += std::norm(z);
        if (std::abs(nrm - 1.0) > 1e-9)
            fail(atoms_line, "custom atoms not normalized: |c|^2 sums to " + fmt17(nrm));
        s.atoms = {cval[0], cval[1], cval[2], cval[3]};
    } else {
        for (int i = 0; i < 4; ++i)
            if (have_c[i]) fail(c_line[i], "c_* keys require atoms = custom");
        s.atoms = preset_atoms(s.atoms_kind);
    }

    if (!(s.tau_step > 0.0)) fail(key_line.count("tau_step") ? key_line["tau_step"] : lineno,
                                  "tau_step must be > 0");
    if (tau_end_set && !(s.tau_end > s.tau_start))
        fail(key_line.count("tau_end") ? key_line["tau_end"] : lineno,
             "tau_end must exceed tau_start");
    return s;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, target);
}

RunResult run_scenario(const Scenario& s, bool svg) {
    const auto t_begin = std::chrono::steady_clock::now();

    if (!(s.tau_step > 0.0)) throw std::runtime_error("tau_step must be > 0");
    const double tau_end = s.resolved_tau_end();
    if (!(tau_end > s.tau_start)) throw std::runtime_error("tau_end must exceed tau_start");
    for (const std::string& p : s.products)
        if (std::find(kKnownProducts.begin(), kKnownProducts.end(), p) == kKnownProducts.end())
            throw std::runtime_error("unknown product '" + p + "'");

    const CoherentField field = coherent_amplitudes(s.alpha0, kTailTol);
    double mass = 0.0;
    for (const cx& q : field.q) mass += std::norm(q);
    const double tail_mass = std::max(0.0, 1.0 - mass);

    const SymmetricWavefunction psi0 = initial_amplitudes(s.atoms, field);
    const double norm0 = psi0.norm_sq();

    fs::create_directories(s.output_dir);
    const std::string dir = s.output_dir;
    RunResult result;
    result.n_max = field.n_max;
    result.tail_mass = tail_mass;

    std::vector<double> taus;
    for (std::size_t k = 0;; ++k) {
        const double tau = s.tau_start + double(k) * s.tau_step;
        if (tau > tau_end + 1e-9 * std::max(1.0, std::abs(tau_end))) break;
        taus.push_back(tau);
    }

    const bool want_inv = s.wants("inversions");
    const bool want_ent = s.wants("entanglement");
    const bool want_neg = s.wants("negativity");
    const bool series_wanted = want_inv || want_ent || want_neg;

    std::vector<std::string> col_names = {"tau"};
    if (want_inv) {
        col_names.push_back("w_total");
        col_names.push_back("w_single");
        col_names.push_back("p_ini");
    }
    if (want_ent) {
        col_names.push_back("i_f_abc");
        col_names.push_back("i_fc_ab");
        col_names.push_back("i_fcb_a");
        col_names.push_back("c_ab");
    }
    if (want_neg) {
        col_names.push_back("n_a_bc");
        col_names.push_back("n_ab");
        col_names.push_back("n_abc");
    }

    std::vector<std::vector<double>> rows;
    if (series_wanted) {
        rows.reserve(taus.size());
        for (double tau : taus) {
            const SymmetricWavefunction psi = evolve(psi0, tau);
            const double drift = std::abs(psi.norm_sq() - norm0);
            if (drift > kNormDriftTol)
                throw numeric_abort("norm drift " + fmt17(drift) + " at tau=" + fmt17(tau) +
                                    " exceeds " + fmt17(kNormDriftTol));
            std::vector<double> row = {tau};
            if (want_inv) {
                row.push_back(total_inversion(psi));
                row.push_back(single_atom_inversion(psi));
                row.push_back(initial_population(psi0, psi));
            }
            if (want_ent || want_neg) {
                const AtomicDensitySym sym = atomic_density_sym(psi);
                const AtomicDensityProd prod = embed_symmetric(sym);
                if (want_ent) {
                    const cmat rho_ab = trace_out_one(prod);
                    const cmat rho_a = trace_out_two(prod);
                    row.push_back(i_concurrence_from_purity(purity(sym.rho4)));
                    row.push_back(i_concurrence_from_purity(purity(rho_ab)));
                    row.push_back(i_concurrence_from_purity(purity(rho_a)));
                    row.push_back(concurrence(rho_ab));
                }
                if (want_neg) {
                    const ResidualNegativity rn = residual_negativity(prod);
                    row.push_back(rn.n_a_bc);
                    row.push_back(rn.n_ab);
                    row.push_back(rn.n_abc);
                }
            }
            rows.push_back(std::move(row));
        }

        std::string csv = join(col_names, ",") + "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) csv += ',';
                csv += fmt17(row[i]);
            }
            csv += '\n';
        }
        const std::string path = dir + "/series.csv";
        write_file_atomic(path, csv);
        result.files.push_back(path);

        if (svg) {
            std::vector<SeriesColumn> cols;
            for (std::size_t c = 1; c < col_names.size(); ++c) {
                SeriesColumn col;
                col.name = col_names[c];
                col.values.reserve(rows.size());
                for (const auto& row : rows) col.values.push_back(row[c]);
                cols.push_back(std::move(col));
            }
            const std::string spath = dir + "/series.svg";
            write_file_atomic(spath, svg_series(taus, cols));
            result.files.push_back(spath);
        }
    }

    auto emit_qgrid = [&](double tau, const std::string& stem) {
        const SymmetricWavefunction psi = evolve(psi0, tau);
        const QGrid g =
            q_grid(psi, s.q_re_min, s.q_re_max, s.q_im_min, s.q_im_max, s.q_nx, s.q_ny);
        const std::string path = dir + "/" + stem + ".csv";
        write_file_atomic(path, qgrid_csv(g, tau, s.display_name()));
        result.files.push_back(path);
        if (svg) {
            const std::string spath = dir + "/" + stem + ".svg";
            write_file_atomic(spath, svg_heatmap(g, s.display_name() + " tau=" + fmt17(tau)));
            result.files.push_back(spath);
        }
    };

    if (s.wants("qgrid")) emit_qgrid(tau_end, "q_tau_end");
    if (s.wants("qsnapshots")) {
        const double t1 = std::numbers::pi * std::sqrt(s.nbar()) / 3.0;
        const double snaps[6] = {0.0, t1, 2.0 * t1, 3.0 * t1, 4.0 * t1, 6.0 * t1};
        for (int i = 0; i < 6; ++i) emit_qgrid(snaps[i], "q_t" + std::to_string(i));
    }

    const auto t_done = std::chrono::steady_clock::now();
    result.wall_seconds = std::chrono::duration<double>(t_done - t_begin).count();

    std::string manifest;
    manifest += "# scenario=" + s.display_name() + "\n";
    manifest += "# atoms=" + s.atoms_kind + "\n";
    manifest += "# alpha0=" + fmt17(s.alpha0.real()) + " " + fmt17(s.alpha0.imag()) + "\n";
    manifest += "# nbar=" + fmt17(s.nbar()) + "\n";
    manifest += "# tau_start=" + fmt17(s.tau_start) + "\n";
    manifest += "# tau_end=" + fmt17(tau_end) + "\n";
    manifest += "# tau_step=" + fmt17(s.tau_step) + "\n";
    manifest += "# products=" + join(s.products, " ") + "\n";
    manifest += "# n_max=" + std::to_string(field.n_max) + "\n";
    manifest += "# tail_mass=" + fmt17(tail_mass) + "\n";
    manifest += "# samples=" + std::to_string(taus.size()) + "\n";
    manifest += "# wall_seconds=" + fmt17(result.wall_seconds) + "\n";
    const std::string mpath = dir + "/manifest.txt";
    write_file_atomic(mpath, manifest);
    result.files.push_back(mpath);
    return result;
}

}  // namespace tcm3

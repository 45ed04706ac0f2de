#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tcm3/dynamics.hpp"
#include "tcm3/entanglement.hpp"
#include "tcm3/husimi.hpp"
#include "tcm3/numerics.hpp"
#include "tcm3/observables.hpp"
#include "tcm3/reduced_states.hpp"
#include "tcm3/scenario.hpp"

namespace py = pybind11;
using namespace tcm3;

namespace {

using nested = std::vector<std::vector<cx>>;

nested to_nested(const cmat& m) {
    nested out(m.dim(), std::vector<cx>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
    return out;
}

cmat from_nested(const nested& rows) {
    const std::size_t d = rows.size();
    cmat m(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != d) throw std::invalid_argument("matrix rows must be square");
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "three-atom Tavis-Cummings dynamics";

    py::class_<AtomicInitState>(mod, "AtomicInitState")
        .def(py::init<cx, cx, cx, cx>(), py::arg("c_e"), py::arg("c_w1"), py::arg("c_w2"),
             py::arg("c_g"))
        .def_readwrite("c_e", &AtomicInitState::c_e)
        .def_readwrite("c_w1", &AtomicInitState::c_w1)
        .def_readwrite("c_w2", &AtomicInitState::c_w2)
        .def_readwrite("c_g", &AtomicInitState::c_g);

    py::class_<CoherentField>(mod, "CoherentField")
        .def_readonly("alpha0", &CoherentField::alpha0)
        .def_readonly("nbar", &CoherentField::nbar)
        .def_readonly("n_max", &CoherentField::n_max)
        .def_readonly("q", &CoherentField::q);

    py::class_<SymmetricWavefunction>(mod, "SymmetricWavefunction")
        .def_readonly("tau", &SymmetricWavefunction::tau)
        .def_property_readonly("n_max", &SymmetricWavefunction::n_max)
        .def("norm_sq", &SymmetricWavefunction::norm_sq)
        .def("excitation_expectation", &SymmetricWavefunction::excitation_expectation)
        .def("amplitudes", [](const SymmetricWavefunction& psi) {
            nested out(psi.x.size(), std::vector<cx>(4));
            for (std::size_t n = 0; n < psi.x.size(); ++n)
                for (int i = 0; i < 4; ++i) out[n][i] = psi.x[n][i];
            return out;
        });

    py::class_<RabiBlockParams>(mod, "RabiBlockParams")
        .def_readonly("n", &RabiBlockParams::n)
        .def_readonly("gamma", &RabiBlockParams::gamma)
        .def_readonly("beta", &RabiBlockParams::beta)
        .def_readonly("eta", &RabiBlockParams::eta)
        .def_readonly("delta", &RabiBlockParams::delta)
        .def_readonly("mu1", &RabiBlockParams::mu1)
        .def_readonly("mu2", &RabiBlockParams::mu2);

    py::class_<Revival>(mod, "Revival")
        .def_readonly("time", &Revival::time)
        .def_readonly("relative_weight", &Revival::relative_weight);

    py::class_<ResidualNegativity>(mod, "ResidualNegativity")
        .def_readonly("n_a_bc", &ResidualNegativity::n_a_bc)
        .def_readonly("n_ab", &ResidualNegativity::n_ab)
        .def_readonly("n_abc", &ResidualNegativity::n_abc);

    py::class_<TangleDecomposition>(mod, "TangleDecomposition")
        .def_readonly("tau_a_bc", &TangleDecomposition::tau_a_bc)
        .def_readonly("tau_ab", &TangleDecomposition::tau_ab)
        .def_readonly("tau_ac", &TangleDecomposition::tau_ac)
        .def_readonly("tau_abc", &TangleDecomposition::tau_abc);

    py::class_<QGrid>(mod, "QGrid")
        .def_readonly("re_min", &QGrid::re_min)
        .def_readonly("re_max", &QGrid::re_max)
        .def_readonly("im_min", &QGrid::im_min)
        .def_readonly("im_max", &QGrid::im_max)
        .def_readonly("nx", &QGrid::nx)
        .def_readonly("ny", &QGrid::ny)
        .def_readonly("values", &QGrid::values)
        .def_readonly("integral", &QGrid::integral)
        .def("re_at", &QGrid::re_at)
        .def("im_at", &QGrid::im_at)
        .def("at", &QGrid::at);

    py::class_<QPeak>(mod, "QPeak")
        .def_readonly("re", &QPeak::re)
        .def_readonly("im", &QPeak::im)
        .def_readonly("height", &QPeak::height);

    py::class_<Scenario>(mod, "Scenario")
        .def(py::init<>())
        .def_readwrite("name", &Scenario::name)
        .def_readwrite("atoms_kind", &Scenario::atoms_kind)
        .def_readwrite("atoms", &Scenario::atoms)
        .def_readwrite("alpha0", &Scenario::alpha0)
        .def_readwrite("tau_start", &Scenario::tau_start)
        .def_readwrite("tau_end", &Scenario::tau_end)
        .def_readwrite("tau_step", &Scenario::tau_step)
        .def_readwrite("products", &Scenario::products)
        .def_readwrite("output_dir", &Scenario::output_dir)
        .def("nbar", &Scenario::nbar)
        .def("resolved_tau_end", &Scenario::resolved_tau_end);

    py::class_<RunResult>(mod, "RunResult")
        .def_readonly("files", &RunResult::files)
        .def_readonly("n_max", &RunResult::n_max)
        .def_readonly("tail_mass", &RunResult::tail_mass)
        .def_readonly("wall_seconds", &RunResult::wall_seconds);

    mod.def("preset_atoms", &preset_atoms, py::arg("name"));
    mod.def("rabi_params", &rabi_params, py::arg("n"));
    mod.def("coherent_amplitudes", &coherent_amplitudes, py::arg("alpha0"),
            py::arg("tail_tol") = 1e-12);
    mod.def("initial_amplitudes", &initial_amplitudes, py::arg("atoms"), py::arg("field"));
    mod.def("evolve", &evolve, py::arg("initial"), py::arg("tau"));

    mod.def("total_inversion", &total_inversion);
    mod.def("single_atom_inversion", &single_atom_inversion);
    mod.def("full_sz_expectation", &full_sz_expectation);
    mod.def("initial_population", &initial_population, py::arg("psi0"), py::arg("psi"));
    mod.def("state_overlap", &state_overlap, py::arg("psi0"), py::arg("psi"));
    mod.def("predicted_revivals", &predicted_revivals, py::arg("initial_kind"),
            py::arg("quantity"), py::arg("nbar"));

    mod.def("reduced_rho4", [](const SymmetricWavefunction& psi) {
        const AtomicDensitySym sym = atomic_density_sym(psi);
        return py::make_tuple(to_nested(sym.rho4), sym.leaked);
    });
    mod.def("reduced_rho_ab", [](const SymmetricWavefunction& psi) {
        return to_nested(trace_out_one(embed_symmetric(atomic_density_sym(psi))));
    });
    mod.def("reduced_rho_a", [](const SymmetricWavefunction& psi) {
        return to_nested(trace_out_two(embed_symmetric(atomic_density_sym(psi))));
    });
    mod.def("purity", [](const nested& rho) { return purity(from_nested(rho)); });

    mod.def("i_concurrence_from_purity", &i_concurrence_from_purity, py::arg("p"));
    mod.def("i_max", &i_max, py::arg("d1"), py::arg("d2"));
    mod.def("concurrence", [](const nested& rho_ab) { return concurrence(from_nested(rho_ab)); });
    mod.def("negativity", [](const nested& rho, int d_a, int d_b) {
        return negativity(from_nested(rho), d_a, d_b);
    });
    mod.def("residual_negativity", [](const SymmetricWavefunction& psi) {
        return residual_negativity(embed_symmetric(atomic_density_sym(psi)));
    });
    mod.def("tangle_decomposition", &tangle_decomposition, py::arg("pure3"));

    mod.def("q_value", &q_value, py::arg("psi"), py::arg("beta"));
    mod.def("q_grid", &q_grid, py::arg("psi"), py::arg("re_min") = -15.0,
            py::arg("re_max") = 15.0, py::arg("im_min") = -15.0, py::arg("im_max") = 15.0,
            py::arg("nx") = 201, py::arg("ny") = 201);
    mod.def("peak_census", &peak_census, py::arg("grid"), py::arg("floor"));

    mod.def("hermitian_eigenvalues",
            [](const nested& m) { return hermitian_eigenvalues(from_nested(m)); });

    mod.def("parse_config", &parse_config, py::arg("text"));
    mod.def("run_scenario", &run_scenario, py::arg("scenario"), py::arg("svg") = true);
}

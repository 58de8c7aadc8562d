#include "chancomp/channel.hpp"
#include "chancomp/linalg.hpp"
#include "chancomp/product.hpp"
#include "chancomp/purity.hpp"
#include "chancomp/random.hpp"
#include "chancomp/zoo.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace chancomp;

PYBIND11_MODULE(_chancomp, m) {
    m.doc() = "quantum channels, complements and output-purity optimization";
    m.attr("__version__") = CHANCOMP_VERSION;

    py::class_<KrausSet>(m, "KrausSet")
        .def(py::init([](int d_in, int d_out, std::vector<Matrix> ops) {
                 KrausSet k;
                 k.d_in = d_in;
                 k.d_out = d_out;
                 k.operators = std::move(ops);
                 return k;
             }),
             py::arg("d_in"), py::arg("d_out"), py::arg("operators"))
        .def_readonly("d_in", &KrausSet::d_in)
        .def_readonly("d_out", &KrausSet::d_out)
        .def_readonly("operators", &KrausSet::operators)
        .def_property_readonly("d_env", &KrausSet::d_env);

    py::enum_<KrausCondition>(m, "KrausCondition")
        .value("TracePreserving", KrausCondition::TracePreserving)
        .value("Unital", KrausCondition::Unital);

    m.def("validate", &validate, py::arg("kraus"),
          py::arg("mode") = KrausCondition::TracePreserving);
    m.def("channel_apply", &channel_apply, py::arg("kraus"), py::arg("rho"));
    m.def("complement_apply", &complement_apply, py::arg("kraus"), py::arg("rho"));
    m.def("complement_kraus", &complement_kraus, py::arg("kraus"));
    m.def("dual_apply", &dual_apply, py::arg("kraus"), py::arg("x"));
    m.def(
        "stinespring", [](const KrausSet& k) { return stinespring_from_kraus(k).v; },
        py::arg("kraus"));
    m.def(
        "dual_rep_operator", [](const KrausSet& k) { return dual_rep_operator(k).s; },
        py::arg("kraus"));
    m.def("kraus_from_dual_rep", &kraus_from_dual_rep, py::arg("s"), py::arg("d_in"),
          py::arg("d_out"));
    m.def("choi_matrix", &choi_matrix, py::arg("kraus"));
    m.def("choi_rank", &choi_rank, py::arg("kraus"), py::arg("tol") = 1e-10);
    m.def("minimalize", &minimalize, py::arg("t"), py::arg("d_in"), py::arg("d_out"));
    m.def("tensor_kraus", &tensor_kraus, py::arg("a"), py::arg("b"));

    m.def("tensor_product", &tensor_product, py::arg("a"), py::arg("b"));
    m.def(
        "partial_trace",
        [](const Matrix& mat, int d1, int d2, const std::string& keep) {
            return partial_trace(mat, d1, d2,
                                 keep == "first" ? TraceKeep::First : TraceKeep::Second);
        },
        py::arg("m"), py::arg("d1"), py::arg("d2"), py::arg("keep") = "first");
    m.def("psd_sqrt", &psd_sqrt, py::arg("m"));
    m.def(
        "hermitian_eig",
        [](const Matrix& mat) {
            const HermitianSpectrum s = hermitian_eig(mat);
            return py::make_tuple(s.eigenvalues, s.eigenvectors);
        },
        py::arg("m"), "eigenvalues (descending) and eigenvectors of a Hermitian matrix");
    m.def("schatten_norm", &schatten_norm, py::arg("m"), py::arg("p"));
    m.def("flip_operator", &flip_operator, py::arg("d"));
    m.def("maximally_entangled", &maximally_entangled, py::arg("d"));
    m.def(
        "cluster_spectrum",
        [](const RealVector& eigenvalues, double tol) {
            std::vector<std::pair<double, int>> out;
            for (const auto& c : cluster_spectrum(eigenvalues, tol).clusters)
                out.emplace_back(c.value, c.multiplicity);
            return out;
        },
        py::arg("eigenvalues"), py::arg("tol") = 1e-8);

    m.def(
        "depolarizing_kraus",
        [](int d, double p) { return depolarizing_kraus({d, p}); }, py::arg("d"),
        py::arg("p"));
    m.def(
        "depolarizing_complement",
        [](int d, double p, const Matrix& rho, const std::string& form) {
            return depolarizing_complement({d, p}, rho,
                                           form == "matrix"
                                               ? DepolarizingComplementForm::Matrix
                                               : DepolarizingComplementForm::Minimal);
        },
        py::arg("d"), py::arg("p"), py::arg("rho"), py::arg("form") = "minimal");
    m.def(
        "depolarizing_minimal_s", [](int d, double p) { return depolarizing_minimal_s({d, p}); },
        py::arg("d"), py::arg("p"));
    m.def(
        "depolarizing_block_t", [](int d, double p) { return depolarizing_block_t({d, p}); },
        py::arg("d"), py::arg("p"));
    m.def("td_kraus", [](int d, double t) { return td_kraus({d, t}); }, py::arg("d"),
          py::arg("t"));
    m.def(
        "td_complement",
        [](int d, double t, const Matrix& rho, const std::string& form) {
            return td_complement({d, t}, rho,
                                 form == "block" ? TdComplementForm::Block
                                                 : TdComplementForm::Minimal);
        },
        py::arg("d"), py::arg("t"), py::arg("rho"), py::arg("form") = "minimal");
    m.def("td_minimal_s", [](int d, double t) { return td_minimal_s({d, t}); },
          py::arg("d"), py::arg("t"));
    m.def("td_block_t", [](int d, double t) { return td_block_t({d, t}); }, py::arg("d"),
          py::arg("t"));
    m.def("wh_kraus", &wh_kraus, py::arg("d"));
    m.def("wh_complement_kraus", &wh_complement_kraus, py::arg("d"));
    m.def("wh_apply", &wh_apply, py::arg("d"), py::arg("rho"));

    m.def(
        "renyi_entropy",
        [](const Matrix& sigma, double p, const std::string& base) {
            return renyi_entropy(sigma, p,
                                 base == "2" ? LogBase::Two : LogBase::Natural);
        },
        py::arg("sigma"), py::arg("p"), py::arg("base") = "e");
    m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("sigma"));
    m.def("wh_nu_closed", &wh_nu_closed, py::arg("d"), py::arg("p"));

    py::class_<RestartRecord>(m, "RestartRecord")
        .def_readonly("iterations", &RestartRecord::iterations)
        .def_readonly("value", &RestartRecord::value)
        .def_readonly("converged", &RestartRecord::converged);

    py::class_<PurityResult>(m, "PurityResult")
        .def_readonly("value", &PurityResult::value)
        .def_readonly("argmax_state", &PurityResult::argmax_state)
        .def_readonly("renyi", &PurityResult::renyi)
        .def_readonly("restarts", &PurityResult::restarts)
        .def_readonly("any_converged", &PurityResult::any_converged);

    auto make_config = [](double p, int restarts, int max_iters, double step, double tol,
                          std::uint64_t seed) {
        PuritySearchConfig cfg;
        cfg.p = p;
        cfg.restarts = restarts;
        cfg.max_iters = max_iters;
        cfg.step = step;
        cfg.tol = tol;
        cfg.seed = seed;
        return cfg;
    };
    m.def(
        "nu_p",
        [make_config](const KrausSet& k, double p, int restarts, int max_iters,
                      double step, double tol, std::uint64_t seed) {
            return nu_p(k, make_config(p, restarts, max_iters, step, tol, seed));
        },
        py::arg("kraus"), py::arg("p") = 2.0, py::arg("restarts") = 64,
        py::arg("max_iters") = 500, py::arg("step") = 0.1, py::arg("tol") = 1e-10,
        py::arg("seed") = 0);
    m.def(
        "nu_p_product",
        [make_config](const KrausSet& a, const KrausSet& b, double p, int restarts,
                      int max_iters, double step, double tol, std::uint64_t seed) {
            return nu_p_product(a, b, make_config(p, restarts, max_iters, step, tol, seed));
        },
        py::arg("a"), py::arg("b"), py::arg("p") = 2.0, py::arg("restarts") = 64,
        py::arg("max_iters") = 500, py::arg("step") = 0.1, py::arg("tol") = 1e-10,
        py::arg("seed") = 0);
    m.def(
        "nu_p_schmidt",
        [make_config](const KrausSet& a, const KrausSet& b, double p, int restarts,
                      int max_iters, double step, double tol, std::uint64_t seed) {
            return nu_p_schmidt(a, b, make_config(p, restarts, max_iters, step, tol, seed));
        },
        py::arg("a"), py::arg("b"), py::arg("p") = 2.0, py::arg("restarts") = 64,
        py::arg("max_iters") = 500, py::arg("step") = 0.1, py::arg("tol") = 1e-10,
        py::arg("seed") = 0);
    m.def(
        "multiplicativity_report",
        [make_config](const KrausSet& a, const KrausSet& b, double p, int restarts,
                      std::uint64_t seed) {
            const MultiplicativityReport r =
                multiplicativity_report(a, b, p, make_config(p, restarts, 500, 0.1, 1e-10, seed));
            py::dict out;
            out["nu1"] = r.nu1;
            out["nu2"] = r.nu2;
            out["nu12"] = r.nu12;
            out["ratio"] = r.ratio;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("restarts") = 64,
        py::arg("seed") = 0);

    m.def(
        "omega_from_schmidt",
        [](int d, const RealVector& lambdas) {
            SchmidtVector s;
            s.d = d;
            s.lambdas = lambdas;
            return omega_from_schmidt(s);
        },
        py::arg("d"), py::arg("lambdas"));
    m.def("tr_omega_sq_closed", &tr_omega_sq_closed, py::arg("d"), py::arg("purity"));
    m.def("antisym_projector", &antisym_projector, py::arg("d"));
    m.def("omega_me", &omega_me, py::arg("d"));
    m.def(
        "omega_me_spectrum",
        [](int d, double tol) {
            std::vector<std::pair<double, int>> out;
            for (const auto& c : omega_me_spectrum(d, tol).clusters)
                out.emplace_back(c.value, c.multiplicity);
            return out;
        },
        py::arg("d"), py::arg("cluster_tol") = 1e-8);
    m.def("me_ratio_lower_bound", &me_ratio_lower_bound, py::arg("d"), py::arg("p"));
    m.def(
        "violation_scan",
        [](int d, const std::vector<double>& p_grid) {
            const ViolationScanResult r = violation_scan(d, p_grid);
            py::dict out;
            out["p"] = r.p_grid;
            out["ratio_lower_bound"] = r.ratio_lower_bounds;
            out["crossing"] = r.crossing ? py::cast(*r.crossing) : py::none();
            return out;
        },
        py::arg("d"), py::arg("p_grid"));
    m.def("violation_crossing", &violation_crossing, py::arg("d"), py::arg("p_lo") = 2.0,
          py::arg("p_hi") = 8.0, py::arg("tol") = 1e-6);

    m.def(
        "random_unitary",
        [](int d, std::uint64_t seed) {
            Rng rng(seed);
            return random_unitary(d, rng);
        },
        py::arg("d"), py::arg("seed") = 0);
    m.def(
        "random_density",
        [](int d, std::uint64_t seed) {
            Rng rng(seed);
            return random_density(d, rng);
        },
        py::arg("d"), py::arg("seed") = 0);
}

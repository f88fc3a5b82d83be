#include "kqm/groups.hpp"
#include "kqm/json_io.hpp"
#include "kqm/oracle.hpp"
#include "kqm/quantum.hpp"
#include "kqm/rng.hpp"
#include "kqm/spectral.hpp"
#include "kqm/tensor.hpp"
#include "kqm/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kqm;

namespace {

CorrelationQuery make_query(const std::vector<CMat>& ops, const CVec& psi, const CVec& phi) {
    CorrelationQuery query{.operators = {},
                           .psi = ComplexState(psi),
                           .phi = ComplexState(phi)};
    for (const CMat& op : ops) query.operators.emplace_back(ComplexOperator::classify(op));
    return query;
}

}  // namespace

PYBIND11_MODULE(kqm, m) {
    m.doc() = "Quantum mechanics over real Kahler spaces K^{2n}, with a "
              "complex-Hilbert-space oracle for differential verification";

    py::class_<KahlerVector>(m, "KahlerVector")
        .def(py::init<Vec, Vec>(), py::arg("q"), py::arg("p"))
        .def_property_readonly("n", &KahlerVector::dim)
        .def_property_readonly("q", &KahlerVector::q)
        .def_property_readonly("p", &KahlerVector::p)
        .def("stacked", &KahlerVector::stacked)
        .def("norm", &KahlerVector::norm)
        .def("normalized", &KahlerVector::normalized)
        .def("__add__", [](const KahlerVector& a, const KahlerVector& b) { return a + b; })
        .def("__sub__", [](const KahlerVector& a, const KahlerVector& b) { return a - b; })
        .def("__mul__", [](const KahlerVector& a, double s) { return a * s; })
        .def("__rmul__", [](const KahlerVector& a, double s) { return s * a; })
        .def("__neg__", [](const KahlerVector& a) { return -a; })
        .def("__repr__", [](const KahlerVector& v) {
            return "KahlerVector(n=" + std::to_string(v.dim()) + ")";
        });

    py::class_<KahlerOperator>(m, "KahlerOperator")
        .def(py::init<Mat, Mat>(), py::arg("S"), py::arg("A"))
        .def_static("identity", &KahlerOperator::identity, py::arg("n"))
        .def_static("from_expanded", &KahlerOperator::from_expanded, py::arg("matrix"),
                    py::arg("tol") = 1e-10)
        .def_property_readonly("n", &KahlerOperator::dim)
        .def_property_readonly("S", &KahlerOperator::S)
        .def_property_readonly("A", &KahlerOperator::A)
        .def("expanded", &KahlerOperator::expanded)
        .def("k_hermitian", [](const KahlerOperator& op) { return op.k_hermitian(); })
        .def("apply", &KahlerOperator::apply, py::arg("eta"))
        .def("__matmul__",
             [](const KahlerOperator& a, const KahlerOperator& b) { return a * b; })
        .def("transpose", &KahlerOperator::transpose);

    m.def("metric_g", &metric_g, py::arg("x"), py::arg("y"));
    m.def("symplectic_omega", &symplectic_omega, py::arg("x"), py::arg("y"));
    m.def("apply_j", &apply_J, py::arg("x"));
    m.def("complex_structure_matrix", &complex_structure_matrix, py::arg("n"));

    m.def(
        "gamma", [](const KahlerVector& x) { return gamma(x).entries(); }, py::arg("x"));
    m.def(
        "gamma_inv", [](const CVec& psi) { return gamma_inv(psi); }, py::arg("psi"));
    m.def(
        "complex_inner",
        [](const CVec& psi1, const CVec& psi2) { return oracle::inner(psi1, psi2); },
        py::arg("psi1"), py::arg("psi2"));
    m.def(
        "lift_operator", [](const CMat& l) { return lift_operator(l); }, py::arg("L"));
    m.def(
        "lower_operator", [](const KahlerOperator& op) { return lower_operator(op).matrix(); },
        py::arg("op"));
    m.def(
        "lower_expanded",
        [](const Mat& m_, double tol) { return lower_operator(m_, tol).matrix(); },
        py::arg("matrix"), py::arg("tol") = 1e-10);

    py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
        .def_property_readonly("n", &SpectralDecomposition::dim)
        .def("eigenvalues", &SpectralDecomposition::eigenvalues)
        .def("multiplicities", &SpectralDecomposition::multiplicities)
        .def("projectors",
             [](const SpectralDecomposition& d) {
                 std::vector<Mat> out;
                 for (const auto& cluster : d.clusters()) out.push_back(cluster.projector);
                 return out;
             })
        .def("pairs",
             [](const SpectralDecomposition& d) {
                 std::vector<std::vector<std::pair<KahlerVector, KahlerVector>>> out;
                 for (const auto& cluster : d.clusters()) {
                     std::vector<std::pair<KahlerVector, KahlerVector>> pairs;
                     for (const auto& pair : cluster.pairs) pairs.emplace_back(pair.v, pair.jv);
                     out.push_back(std::move(pairs));
                 }
                 return out;
             })
        .def("reconstruct", &SpectralDecomposition::reconstruct)
        .def("completeness", &SpectralDecomposition::completeness)
        .def("eigenbasis_matrix", &SpectralDecomposition::eigenbasis_matrix);

    m.def(
        "eigen_structured", [](const KahlerOperator& op) { return eigen_structured(op); },
        py::arg("op"));
    m.def(
        "eigen_dense", [](const KahlerOperator& op) { return eigen_dense(op); }, py::arg("op"));
    m.def(
        "eigen_closed_form_n2",
        [](const KahlerOperator& op) { return eigen_closed_form_n2(op); }, py::arg("op"));
    m.def(
        "orthonormalize_j_paired",
        [](const std::vector<KahlerVector>& vectors, const KahlerOperator& op, double lam) {
            std::vector<std::pair<KahlerVector, KahlerVector>> out;
            for (const auto& pair : orthonormalize_J_paired(vectors, op, lam)) {
                out.emplace_back(pair.v, pair.jv);
            }
            return out;
        },
        py::arg("vectors"), py::arg("op"), py::arg("eigenvalue"));

    py::class_<RealTensorVector>(m, "RealTensorVector")
        .def(py::init<Mat, Mat, Mat, Mat>(), py::arg("qq"), py::arg("pq"), py::arg("qp"),
             py::arg("pp"))
        .def_property_readonly("n1", &RealTensorVector::dim1)
        .def_property_readonly("n2", &RealTensorVector::dim2)
        .def_property_readonly("qq", &RealTensorVector::qq)
        .def_property_readonly("pq", &RealTensorVector::pq)
        .def_property_readonly("qp", &RealTensorVector::qp)
        .def_property_readonly("pp", &RealTensorVector::pp)
        .def("flattened", &RealTensorVector::flattened);

    m.def("tensor_r", &tensor_R, py::arg("x"), py::arg("y"));
    m.def("tensor_k", &tensor_K, py::arg("x"), py::arg("y"));
    m.def("projector_p", &projector_P, py::arg("t"));
    m.def(
        "projector_p_matrix",
        [](Index n1, Index n2) { return Mat(projector_P_matrix(n1, n2)); }, py::arg("n1"),
        py::arg("n2"));
    m.def("tensor_r_metric", &tensor_r_metric, py::arg("t"), py::arg("u"));
    m.def("tensor_r_omega", &tensor_r_omega, py::arg("t"), py::arg("u"));

    py::class_<MeasurementOutcome>(m, "MeasurementOutcome")
        .def_readonly("eigenvalue", &MeasurementOutcome::eigenvalue)
        .def_readonly("probability", &MeasurementOutcome::probability)
        .def_readonly("projector_rank", &MeasurementOutcome::projector_rank)
        .def("__repr__", [](const MeasurementOutcome& o) {
            return "MeasurementOutcome(eigenvalue=" + std::to_string(o.eigenvalue) +
                   ", probability=" + std::to_string(o.probability) + ")";
        });

    m.def(
        "born_probabilities",
        [](const KahlerVector& eta, const KahlerOperator& op, bool rank_divisor) {
            return born_probabilities(eta, op, rank_divisor);
        },
        py::arg("eta"), py::arg("op"), py::arg("rank_divisor") = false);
    m.def("compose_systems", &compose_systems, py::arg("eta1"), py::arg("eta2"));
    m.def("bell_state", &bell_state);
    m.def(
        "correlation",
        [](const std::vector<CMat>& ops, const CVec& psi, const CVec& phi) {
            const CorrelationResult result = correlation(make_query(ops, psi, phi));
            return py::make_tuple(result.value, result.residual);
        },
        py::arg("operators"), py::arg("psi"), py::arg("phi"),
        "Returns (g + i*omega value, residual against the complex side)");
    m.def(
        "bloch_coordinates",
        [](const KahlerVector& eta) {
            const BlochAngles angles = bloch_coordinates(eta);
            return py::make_tuple(angles.theta, angles.phi);
        },
        py::arg("eta"));
    m.def("bloch_state", &bloch_state, py::arg("theta"), py::arg("phi"));

    py::class_<Memberships>(m, "Memberships")
        .def_readonly("orthogonal", &Memberships::orthogonal)
        .def_readonly("symplectic", &Memberships::symplectic)
        .def_readonly("j_commuting", &Memberships::j_commuting)
        .def_readonly("block_form", &Memberships::block_form)
        .def_readonly("kahler_unitary", &Memberships::kahler_unitary)
        .def_readonly("orthogonal_residual", &Memberships::orthogonal_residual)
        .def_readonly("symplectic_residual", &Memberships::symplectic_residual)
        .def_readonly("j_commuting_residual", &Memberships::j_commuting_residual)
        .def_readonly("block_form_residual", &Memberships::block_form_residual);

    m.def("check_memberships", &check_memberships, py::arg("matrix"), py::arg("tol") = 1e-9);
    m.def("u2_generators", [] {
        const auto& generators = u2_generators();
        return std::vector<Mat>(generators.begin(), generators.end());
    });
    m.def(
        "exp_generator",
        [](const std::array<double, 4>& theta) { return exp_generator(theta).matrix(); },
        py::arg("theta"));
    m.def("phase_rotation", &phase_rotation, py::arg("phi"), py::arg("n"));

    m.def(
        "run_verify",
        [](const std::string& suite, std::vector<int> dims, int trials, std::uint64_t seed,
           std::optional<double> tol) {
            VerifyOptions opts{.dims = std::move(dims),
                               .trials = trials,
                               .seed = seed,
                               .tol_override = tol};
            if (suite == "all") {
                return reports_to_json(run_all(opts), opts.seed).dump();
            }
            return run_suite(suite, opts).to_json().dump();
        },
        py::arg("suite"), py::arg("dims") = std::vector<int>{}, py::arg("trials") = 0,
        py::arg("seed") = 1, py::arg("tol") = std::nullopt,
        "Runs a verification suite and returns the JSON report as a string");

    m.attr("__version__") = "1.0.0";
}

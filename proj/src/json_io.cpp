#include "kqm/json_io.hpp"

namespace kqm {

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of numbers");
    Vec v(static_cast<Index>(j.size()));
    for (Index i = 0; i < v.size(); ++i) v[i] = j.at(static_cast<std::size_t>(i)).get<double>();
    return v;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a JSON array of rows");
    const Index rows = static_cast<Index>(j.size());
    const Vec first = vec_from_json(j.at(0));
    Mat m(rows, first.size());
    m.row(0) = first;
    for (Index i = 1; i < rows; ++i) {
        const Vec row = vec_from_json(j.at(static_cast<std::size_t>(i)));
        if (row.size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
        m.row(i) = row;
    }
    return m;
}

}  // namespace

json to_json(const KahlerVector& v) {
    return json{{"n", v.dim()}, {"q", vec_to_json(v.q())}, {"p", vec_to_json(v.p())}};
}

KahlerVector kahler_vector_from_json(const json& j) {
    const Vec q = vec_from_json(j.at("q"));
    const Vec p = vec_from_json(j.at("p"));
    KahlerVector v(q, p);
    if (j.contains("n") && j.at("n").get<Index>() != v.dim()) {
        throw std::invalid_argument("declared n does not match array lengths");
    }
    return v;
}

json to_json(const KahlerOperator& op) {
    return json{{"n", op.dim()}, {"S", mat_to_json(op.S())}, {"A", mat_to_json(op.A())}};
}

KahlerOperator kahler_operator_from_json(const json& j) {
    KahlerOperator op(mat_from_json(j.at("S")), mat_from_json(j.at("A")));
    if (j.contains("n") && j.at("n").get<Index>() != op.dim()) {
        throw std::invalid_argument("declared n does not match block sizes");
    }
    return op;
}

json complex_vector_to_json(const CVec& v) {
    return json{{"re", vec_to_json(v.real())}, {"im", vec_to_json(v.imag())}};
}

CVec complex_vector_from_json(const json& j) {
    const Vec re = vec_from_json(j.at("re"));
    const Vec im = vec_from_json(j.at("im"));
    if (re.size() != im.size()) throw std::invalid_argument("re/im length mismatch");
    CVec v(re.size());
    v.real() = re;
    v.imag() = im;
    return v;
}

json complex_matrix_to_json(const CMat& m) {
    return json{{"re", mat_to_json(m.real())}, {"im", mat_to_json(m.imag())}};
}

CMat complex_matrix_from_json(const json& j) {
    const Mat re = mat_from_json(j.at("re"));
    const Mat im = mat_from_json(j.at("im"));
    if (re.rows() != im.rows() || re.cols() != im.cols()) {
        throw std::invalid_argument("re/im shape mismatch");
    }
    CMat m(re.rows(), re.cols());
    m.real() = re;
    m.imag() = im;
    return m;
}

json real_matrix_to_json(const Mat& m) { return json{{"matrix", mat_to_json(m)}}; }

Mat real_matrix_from_json(const json& j) {
    return mat_from_json(j.is_object() ? j.at("matrix") : j);
}

json to_json(const SpectralDecomposition& decomp) {
    json eigenvalues = json::array();
    json multiplicities = json::array();
    json projectors = json::array();
    for (const auto& cluster : decomp.clusters()) {
        eigenvalues.push_back(cluster.eigenvalue);
        multiplicities.push_back(cluster.multiplicity);
        projectors.push_back(mat_to_json(cluster.projector));
    }
    return json{{"eigenvalues", eigenvalues},
                {"multiplicities", multiplicities},
                {"projectors", projectors}};
}

json to_json(const Memberships& m) {
    return json{{"orthogonal", m.orthogonal},
                {"symplectic", m.symplectic},
                {"j_commuting", m.j_commuting},
                {"block_form", m.block_form},
                {"kahler_unitary", m.kahler_unitary},
                {"residuals",
                 json{{"orthogonal", m.orthogonal_residual},
                      {"symplectic", m.symplectic_residual},
                      {"j_commuting", m.j_commuting_residual},
                      {"block_form", m.block_form_residual}}}};
}

AnyState state_from_json(const json& j) {
    if (j.contains("q") || j.contains("p")) return kahler_vector_from_json(j);
    if (j.contains("re")) return ComplexState(complex_vector_from_json(j));
    throw std::invalid_argument("state must carry either q/p or re/im fields");
}

AnyOperator operator_from_json(const json& j) {
    if (j.contains("S") || j.contains("A")) return kahler_operator_from_json(j);
    if (j.contains("re")) return ComplexOperator::classify(complex_matrix_from_json(j));
    throw std::invalid_argument("operator must carry either S/A or re/im fields");
}

CorrelationQuery correlation_query_from_json(const json& j) {
    CorrelationQuery query{.operators = {},
                           .psi = state_from_json(j.at("psi")),
                           .phi = state_from_json(j.at("phi"))};
    for (const json& op : j.at("operators")) {
        query.operators.push_back(operator_from_json(op));
    }
    return query;
}

}  // namespace kqm

#include "kqm/json_io.hpp"
#include "kqm/rng.hpp"
#include "kqm/spectral.hpp"
#include "kqm/verify.hpp"

#include <doctest.h>

using namespace kqm;
using nlohmann::json;

TEST_CASE("state JSON uses the exact field names") {
    Vec q(2), p(2);
    q << 0.5, -1.0;
    p << 0.25, 2.0;
    const json j = to_json(KahlerVector(q, p));
    CHECK(j.at("n") == 2);
    CHECK(j.at("q") == json::array({0.5, -1.0}));
    CHECK(j.at("p") == json::array({0.25, 2.0}));

    const KahlerVector back = kahler_vector_from_json(j);
    CHECK(back.q() == q);
    CHECK(back.p() == p);

    CHECK_THROWS_AS(kahler_vector_from_json(json{{"n", 3}, {"q", {1.0}}, {"p", {1.0}}}),
                    std::invalid_argument);
}

TEST_CASE("operator JSON round trips") {
    Rng rng(71);
    const KahlerOperator op = random_k_hermitian(rng, 3);
    const json j = to_json(op);
    CHECK(j.contains("S"));
    CHECK(j.contains("A"));
    const KahlerOperator back = kahler_operator_from_json(j);
    CHECK((back.S() - op.S()).norm() == 0.0);
    CHECK((back.A() - op.A()).norm() == 0.0);

    const CMat m = random_cmat(rng, 3);
    const CMat back_c = complex_matrix_from_json(complex_matrix_to_json(m));
    CHECK((back_c - m).cwiseAbs().maxCoeff() == 0.0);

    const CVec v = random_cvec(rng, 4);
    CHECK((complex_vector_from_json(complex_vector_to_json(v)) - v).cwiseAbs().maxCoeff() == 0.0);

    const Mat r = random_mat(rng, 2, 2);
    CHECK((real_matrix_from_json(real_matrix_to_json(r)) - r).norm() == 0.0);
    CHECK((real_matrix_from_json(json::parse("[[1.0,0.0],[0.0,1.0]]")) - Mat::Identity(2, 2))
              .norm() == 0.0);
}

TEST_CASE("decomposition JSON carries the declared schema") {
    Rng rng(72);
    const KahlerOperator op = random_k_hermitian(rng, 2);
    const json j = to_json(eigen_structured(op));
    REQUIRE(j.contains("eigenvalues"));
    REQUIRE(j.contains("multiplicities"));
    REQUIRE(j.contains("projectors"));
    CHECK(j.at("projectors").at(0).size() == 4);
}

TEST_CASE("correlation queries parse in both representations") {
    const json q = json::parse(R"({
      "operators": [
        {"re": [[0, 1], [1, 0]], "im": [[0, 0], [0, 0]]},
        {"n": 2, "S": [[1, 0], [0, -1]], "A": [[0, 0], [0, 0]]}
      ],
      "psi": {"re": [1, 0], "im": [0, 0]},
      "phi": {"n": 2, "q": [0, 1], "p": [0, 0]}
    })");
    const CorrelationQuery query = correlation_query_from_json(q);
    CHECK(query.operators.size() == 2);
    CHECK(std::holds_alternative<ComplexOperator>(query.operators[0]));
    CHECK(std::holds_alternative<KahlerOperator>(query.operators[1]));
    CHECK(std::holds_alternative<ComplexState>(query.psi));
    CHECK(std::holds_alternative<KahlerVector>(query.phi));

    CHECK_THROWS_AS(state_from_json(json{{"foo", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(operator_from_json(json{{"foo", 1}}), std::invalid_argument);
}

TEST_CASE("verification reports are deterministic and honor the pass invariant") {
    VerifyOptions opts;
    opts.dims = {1, 2, 3};
    opts.trials = 50;
    opts.seed = 42;

    const VerificationReport first = run_suite("axioms", opts);
    const VerificationReport second = run_suite("axioms", opts);
    CHECK(first.to_json().dump() == second.to_json().dump());

    bool all_within = true;
    for (const CheckResult& check : first.checks) {
        all_within = all_within && check.residual <= check.tolerance;
    }
    CHECK(first.passed == all_within);
    CHECK(first.seed == 42);
    CHECK(first.dims == std::vector<int>{1, 2, 3});

    CHECK_THROWS_AS(run_suite("nope", opts), std::invalid_argument);
}

TEST_CASE("tolerance override reflects in every check") {
    VerifyOptions opts;
    opts.dims = {2};
    opts.trials = 20;
    opts.seed = 7;
    opts.tol_override = 0.5;
    const VerificationReport report = run_suite("tensor", opts);
    for (const CheckResult& check : report.checks) {
        CHECK(check.tolerance == 0.5);
    }
    CHECK(report.tolerance == 0.5);
}

TEST_CASE("suite catalog") {
    CHECK(suite_names().size() == 7);
    VerifyOptions opts;
    opts.dims = {1, 2};
    opts.trials = 10;
    const auto reports = run_all(opts);
    CHECK(reports.size() == 7);
    const json combined = reports_to_json(reports, opts.seed);
    CHECK(combined.at("suite") == "all");
    CHECK(combined.at("reports").size() == 7);
}

TEST_CASE("membership JSON") {
    const json j = to_json(check_memberships(complex_structure_matrix(2)));
    CHECK(j.at("kahler_unitary") == true);
    CHECK(j.at("residuals").contains("symplectic"));
}

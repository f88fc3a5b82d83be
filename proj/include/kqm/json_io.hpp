#pragma once

#include "kqm/groups.hpp"
#include "kqm/quantum.hpp"

#include <json.hpp>

namespace kqm {

// Wire formats (frozen; see README):
//   Kahler state     {"n": int, "q": [f...], "p": [f...]}
//   Kahler operator  {"n": int, "S": [[f...]], "A": [[f...]]}
//   complex vector   {"re": [f...], "im": [f...]}
//   complex operator {"re": [[f...]], "im": [[f...]]}
//   real matrix      {"matrix": [[f...]]} (bare [[f...]] also accepted)
//   decomposition    {"eigenvalues": [...], "multiplicities": [...],
//                     "projectors": [[[f...]]]}

nlohmann::json to_json(const KahlerVector& v);
KahlerVector kahler_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KahlerOperator& op);
KahlerOperator kahler_operator_from_json(const nlohmann::json& j);

nlohmann::json complex_vector_to_json(const CVec& v);
CVec complex_vector_from_json(const nlohmann::json& j);

nlohmann::json complex_matrix_to_json(const CMat& m);
CMat complex_matrix_from_json(const nlohmann::json& j);

nlohmann::json real_matrix_to_json(const Mat& m);
Mat real_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpectralDecomposition& decomp);
nlohmann::json to_json(const Memberships& m);

/// Accepts either representation of a state ({n,q,p} or {re,im}).
AnyState state_from_json(const nlohmann::json& j);
/// Accepts either representation of an operator ({n,S,A} or {re,im}).
AnyOperator operator_from_json(const nlohmann::json& j);

/// {"operators": [op...], "psi": state, "phi": state}.
CorrelationQuery correlation_query_from_json(const nlohmann::json& j);

}  // namespace kqm

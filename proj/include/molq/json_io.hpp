#pragma once

#include <json.hpp>

#include "molq/frame.hpp"
#include "molq/limit.hpp"
#include "molq/testset.hpp"

namespace molq {

using nlohmann::json;

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// { "ambient": d, "field": "Q"|"Qi", "basis": [[scalar strings]] }.
/// Non-canonical bases are accepted and canonicalized; when `was_canonical`
/// is given it reports whether the input already was canonical.
json to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, bool* was_canonical = nullptr);

/// { "d": d, "a": [subspaces], "bot": subspace, "top": subspace }.
json to_json(const Frame& f);
Frame frame_from_json(const json& j);

/// { "level": n, "space": subspace }.
json to_json(const LimitElement& x);
LimitElement limit_from_json(const json& j);

/// { "ambient": d, "field": ..., "elements": [subspaces] }.
json to_json(const TestSet& t);
TestSet testset_from_json(const json& j);

json to_json(const Substitution& sub);
Substitution substitution_from_json(const json& j);

json to_json(const RefutationCertificate& cert);

}  // namespace molq

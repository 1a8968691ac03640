#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "fewembed/combinatorics.hpp"
#include "fewembed/complex.hpp"
#include "fewembed/geometry.hpp"
#include "fewembed/verify.hpp"

namespace fewembed::io {

using nlohmann::json;

// All parsers throw Error(kMalformedInput) on shape or type errors and let
// the domain constructors raise their own codes (e.g. kVertexOutOfRange).

json to_json(Face f);
Face face_from_json(const json& j);

/// {"n": <int>, "facets": [[<int>,...],...]}; facets strictly increasing.
json to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const json& j);

/// {"n": <int>, "sets": [[...],...]}
json to_json(const FaceFamily& F);
FaceFamily family_from_json(const json& j);

/// {"dim", "on_sphere", "coords": {"<id>": ["p/q", ...]}}
json to_json(const Placement& P);
Placement placement_from_json(const json& j);

/// {"decision", "nu", "matching", "isolated_vertices"}
json to_json(const Verdict& v);
std::string decision_name(Decision d);

json to_json(const Certificate& c);
json to_json(const OverlapWitness& w);
json to_json(const CrossCheckReport& r);
json to_json(const Facet& f);
/// {"matching", "blocks": [[axis,...],...], "leftover_axes": {"<id>": axis}}; axes 0-based.
json to_json(const JoinLayout& layout);
std::string mode_name(VerifyMode m);

/// Two-space indented dump with a trailing newline; object keys are sorted.
std::string dump(const json& j);

json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace fewembed::io

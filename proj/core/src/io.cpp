#include "fewembed/io.hpp"

#include <fstream>
#include <sstream>

#include "fewembed/error.hpp"

namespace fewembed::io {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformedInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<Face> face_list(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) malformed(std::string("field '") + key + "' must be an array");
  std::vector<Face> out;
  for (const json& f : arr) out.push_back(face_from_json(f));
  return out;
}

json face_list_json(const std::vector<Face>& faces) {
  json arr = json::array();
  for (Face f : faces) arr.push_back(to_json(f));
  return arr;
}

json rationals(const RationalVector& v) {
  json arr = json::array();
  for (const Rational& q : v) arr.push_back(to_string(q));
  return arr;
}

}  // namespace

json to_json(Face f) { return json(f.vertices()); }

Face face_from_json(const json& j) {
  if (!j.is_array()) malformed("face must be an array of vertex ids");
  std::vector<VertexId> vs;
  for (const json& v : j) {
    if (!v.is_number_integer()) malformed("vertex ids must be integers");
    vs.push_back(v.get<int>());
  }
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i] <= vs[i - 1]) malformed("face vertex lists must be strictly increasing");
  }
  return Face::of(vs);
}

json to_json(const SimplicialComplex& K) {
  return json{{"n", K.n()}, {"facets", face_list_json(K.facets())}};
}

SimplicialComplex complex_from_json(const json& j) {
  return SimplicialComplex::from_facets(int_field(j, "n"), face_list(j, "facets"));
}

json to_json(const FaceFamily& F) { return json{{"n", F.n()}, {"sets", face_list_json(F.sets())}}; }

FaceFamily family_from_json(const json& j) { return FaceFamily(int_field(j, "n"), face_list(j, "sets")); }

json to_json(const Placement& P) {
  json coords = json::object();
  for (const auto& [v, x] : P.coords) coords[std::to_string(v)] = rationals(x);
  return json{{"dim", P.dim}, {"on_sphere", P.on_sphere}, {"coords", coords}};
}

Placement placement_from_json(const json& j) {
  Placement P;
  P.dim = int_field(j, "dim");
  if (P.dim < 0) malformed("dim must be non-negative");
  const json& flag = field(j, "on_sphere");
  if (!flag.is_boolean()) malformed("on_sphere must be a boolean");
  P.on_sphere = flag.get<bool>();
  const json& coords = field(j, "coords");
  if (!coords.is_object()) malformed("coords must be an object");
  for (const auto& [key, value] : coords.items()) {
    int v = 0;
    std::size_t used = 0;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
      malformed("coordinate key '" + key + "' is not a vertex id");
    }
    if (used != key.size() || v < 1) malformed("coordinate key '" + key + "' is not a vertex id");
    if (!value.is_array() || static_cast<int>(value.size()) != P.dim) {
      malformed("vertex " + key + " needs exactly dim coordinates");
    }
    RationalVector x;
    for (const json& q : value) {
      if (!q.is_string()) malformed("coordinates must be \"p/q\" strings");
      x.push_back(parse_rational(q.get<std::string>()));
    }
    P.coords.emplace(v, std::move(x));
  }
  return P;
}

std::string decision_name(Decision d) {
  switch (d) {
    case Decision::kEmbedsInSphere: return "embeds";
    case Decision::kNotEmbeddable: return "not_embeddable";
    case Decision::kOutOfScope: return "out_of_scope";
  }
  return "out_of_scope";
}

json to_json(const Verdict& v) {
  json j{{"decision", decision_name(v.decision)}, {"isolated_vertices", v.isolated_vertices}};
  j["nu"] = v.nu ? json(*v.nu) : json(nullptr);
  j["matching"] = v.matching ? face_list_json(v.matching->sets) : json(nullptr);
  return j;
}

std::string mode_name(VerifyMode m) { return m == VerifyMode::kGeodesic ? "geodesic" : "linear"; }

json to_json(const Certificate& c) {
  json pairs = json::array();
  for (const PairCheck& p : c.pairs) {
    json e{{"sigma", to_json(p.sigma)},
           {"tau", to_json(p.tau)},
           {"status", p.status == PairStatus::kProper ? "proper" : "overlap"}};
    e["farkas"] = p.farkas ? rationals(*p.farkas) : json(nullptr);
    e["off_shared_weight"] = p.off_shared_weight ? json(to_string(*p.off_shared_weight)) : json(nullptr);
    pairs.push_back(std::move(e));
  }
  json independence = json::array();
  for (const IndependenceCheck& i : c.independence) {
    independence.push_back(json{{"facet", to_json(i.facet)}, {"rank", i.rank}, {"ok", i.ok}});
  }
  json j{{"mode", mode_name(c.mode)},
         {"verdict", c.pass ? "pass" : "fail"},
         {"placement_hash", c.placement_hash},
         {"pairs", pairs},
         {"independence", independence}};
  j["complex"] = c.complex_form.empty() ? json(nullptr) : json(c.complex_form);
  j["offending_pair"] = c.offending_pair
                            ? json::array({to_json(c.offending_pair->first), to_json(c.offending_pair->second)})
                            : json(nullptr);
  j["offending_facet"] = c.offending_facet ? to_json(*c.offending_facet) : json(nullptr);
  return j;
}

json to_json(const OverlapWitness& w) {
  return json{{"sigma", to_json(w.sigma)},
              {"tau", to_json(w.tau)},
              {"lambda", rationals(w.lambda)},
              {"mu", rationals(w.mu)},
              {"point", rationals(w.point)}};
}

json to_json(const CrossCheckReport& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.disagreeing_pairs) pairs.push_back(json::array({to_json(a), to_json(b)}));
  return json{{"pair_checks", r.pair_checks}, {"disagreements", r.disagreements}, {"disagreeing_pairs", pairs}};
}

json to_json(const Facet& f) {
  return json{{"vertices", to_json(f.vertices)}, {"normal", rationals(f.normal)}, {"offset", to_string(f.offset)}};
}

json to_json(const JoinLayout& layout) {
  json leftover = json::object();
  for (const auto& [v, axis] : layout.leftover_axes) leftover[std::to_string(v)] = axis;
  return json{{"matching", face_list_json(layout.matching.sets)}, {"blocks", layout.blocks}, {"leftover_axes", leftover}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace fewembed::io

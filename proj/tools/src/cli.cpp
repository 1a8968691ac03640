#include "fewembed/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "fewembed/canonical.hpp"
#include "fewembed/combinatorics.hpp"
#include "fewembed/complex.hpp"
#include "fewembed/enumerate.hpp"
#include "fewembed/error.hpp"
#include "fewembed/geometry.hpp"
#include "fewembed/io.hpp"
#include "fewembed/verify.hpp"

namespace fewembed::cli {
namespace {

using io::json;

constexpr std::size_t kCrossCheckTrials = 64;

struct Globals {
  std::uint64_t seed = 0;
  std::string output;
  bool cross_check = false;
};

struct Outcome {
  json body;
  int code = kExitOk;
};

int exit_for(Decision d) {
  switch (d) {
    case Decision::kEmbedsInSphere: return kExitOk;
    case Decision::kNotEmbeddable: return kExitNegative;
    case Decision::kOutOfScope: return kExitOutOfScope;
  }
  return kExitNegative;
}

int parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be an integer, got '" + s + "'");
  }
  return v;
}

json faces_json(const std::vector<Face>& faces) {
  json arr = json::array();
  for (Face f : faces) arr.push_back(io::to_json(f));
  return arr;
}

SimplicialComplex load_complex(const std::string& path) { return io::complex_from_json(io::read_file(path)); }

int default_dim(const SimplicialComplex& K) { return std::max(1, K.n() - 3); }

void attach_cross_check(json& j, const Globals& g, const SimplicialComplex& K, const Placement& P,
                        VerifyMode mode) {
  if (!g.cross_check) return;
  j["cross_check"] = io::to_json(float_cross_check(K, P, mode, kCrossCheckTrials, g.seed));
}

// ---------------------------------------------------------------------------

Outcome analyze(const std::string& path, std::optional<int> dim) {
  const SimplicialComplex K = load_complex(path);
  const int d = dim.value_or(default_dim(K));
  const Verdict v = decide_embeddability(K, d);
  json j = io::to_json(v);
  j["n"] = K.n();
  j["d"] = d;
  j["minimal_nonfaces"] = faces_json(v.minimal_nonfaces.sets());
  j["f_vector"] = f_vector(K);
  std::optional<int> ekr;
  if (K.n() == d + 3) ekr = ekr_embeddability(K, d);
  j["ekr_k"] = ekr ? json(*ekr) : json(nullptr);
  return {j, exit_for(v.decision)};
}

Outcome embed(const Globals& g, const std::string& path, std::optional<int> dim, bool linear) {
  const SimplicialComplex K = load_complex(path);
  const int d = dim.value_or(default_dim(K));
  const Verdict v = decide_embeddability(K, d);
  json j{{"verdict", io::to_json(v)}, {"n", K.n()}, {"d", d}, {"f_vector", f_vector(K)}};
  std::optional<Matching> matching = v.matching;
  if (v.decision == Decision::kOutOfScope) {
    // Beyond d+3 vertices only the join construction can help.
    Matching m = maximum_matching(v.minimal_nonfaces);
    if (K.n() - m.size() <= d + 1) matching = std::move(m);
  }
  if (v.decision == Decision::kNotEmbeddable || !matching) {
    j["status"] = io::decision_name(v.decision);
    return {j, exit_for(v.decision)};
  }

  Placement P;
  Certificate c;
  VerifyMode mode = VerifyMode::kGeodesic;
  if (!linear) {
    const Embedding e = construct_embedding(K.n(), *matching);
    P = e.placement;
    c = verify_geodesic_embedding(K, P);
    j["status"] = "sphere";
    j["layout"] = io::to_json(e.layout);
  } else {
    const LinearizeResult r = linearize(K, d);
    P = r.placement;
    if (r.layout) j["layout"] = io::to_json(*r.layout);
    if (r.projection_facet) j["projection_facet"] = io::to_json(*r.projection_facet);
    if (r.kind == LinearizeKind::kLinearPlacement) {
      mode = VerifyMode::kLinear;
      c = verify_linear_embedding(K, P);
      j["status"] = "linear";
    } else {
      c = verify_geodesic_embedding(K, P);
      j["status"] = "sphere_only";
    }
  }
  j["placement"] = io::to_json(P);
  j["certificate"] = io::to_json(c);
  attach_cross_check(j, g, K, P, mode);
  return {j, c.pass ? kExitOk : kExitNegative};
}

Outcome verify(const Globals& g, const std::string& complex_path, const std::string& placement_path,
               const std::string& mode_name) {
  const SimplicialComplex K = load_complex(complex_path);
  const Placement P = io::placement_from_json(io::read_file(placement_path));
  const VerifyMode mode = mode_name == "linear" ? VerifyMode::kLinear : VerifyMode::kGeodesic;
  const Certificate c =
      mode == VerifyMode::kLinear ? verify_linear_embedding(K, P) : verify_geodesic_embedding(K, P);
  json j = io::to_json(c);
  attach_cross_check(j, g, K, P, mode);
  return {j, c.pass ? kExitOk : kExitNegative};
}

Outcome witness(const std::string& complex_path, const std::string& placement_path) {
  const SimplicialComplex K = load_complex(complex_path);
  const Placement P = io::placement_from_json(io::read_file(placement_path));
  const std::optional<OverlapWitness> w = overlap_witness(K, P);
  if (!w) return {json("none"), kExitNoWitness};
  return {io::to_json(*w), kExitOk};
}

Outcome generate(const std::string& kind, const std::vector<std::string>& params, int leftover) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorCode::kInvalidArgument,
                  "'" + kind + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (kind != "cross" && leftover != 0) {
    throw Error(ErrorCode::kInvalidArgument, "--leftover only applies to 'cross'");
  }
  SimplicialComplex K;
  if (kind == "vkf") {
    need(1);
    K = vkf_complex(parse_int(params[0], "d"));
  } else if (kind == "cross") {
    need(1);
    if (leftover < 0) throw Error(ErrorCode::kInvalidArgument, "--leftover must be >= 0");
    std::vector<int> sizes;
    std::stringstream ss(params[0]);
    for (std::string part; std::getline(ss, part, ',');) sizes.push_back(parse_int(part, "block size"));
    std::vector<Face> blocks;
    int next = 1;
    for (int p : sizes) {
      if (p < 1) throw Error(ErrorCode::kInvalidArgument, "block sizes must be >= 1");
      Face b;
      for (int i = 0; i < p; ++i) b = b.with(next++);
      blocks.push_back(b);
    }
    const int n = next - 1 + leftover;
    K = complex_of(n, FaceFamily(n, blocks));
  } else if (kind == "star") {
    need(3);
    const int n = parse_int(params[0], "n");
    K = complex_of(n, star_family(n, parse_int(params[1], "k"), parse_int(params[2], "center")));
  } else if (kind == "simplex") {
    need(1);
    K = full_simplex(parse_int(params[0], "m"));
  } else if (kind == "boundary") {
    need(1);
    K = boundary_simplex(parse_int(params[0], "m"));
  } else if (kind == "skeleton") {
    need(2);
    K = skeleton(load_complex(params[0]), parse_int(params[1], "k"));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown kind '" + kind + "'");
  }
  return {io::to_json(K), kExitOk};
}

struct Tally {
  std::size_t embeds = 0;
  std::size_t not_embeddable = 0;
  std::size_t out_of_scope = 0;

  void add(Decision d) {
    if (d == Decision::kEmbedsInSphere) ++embeds;
    else if (d == Decision::kNotEmbeddable) ++not_embeddable;
    else ++out_of_scope;
  }
  json to_json() const {
    return json{{"embeds", embeds}, {"not_embeddable", not_embeddable}, {"out_of_scope", out_of_scope}};
  }
};

Outcome enumerate(const Globals& g, int n, std::optional<int> dim, std::size_t sample,
                  const std::string& stream_path) {
  if (sample == 0 && n > kMaxExhaustiveGroundSet) {
    throw Error(ErrorCode::kGroundSetTooLarge, "exhaustive enumeration needs n <= " +
                                                   std::to_string(kMaxExhaustiveGroundSet) +
                                                   "; pass --sample");
  }
  const int d = dim.value_or(std::max(1, n - 3));
  const std::vector<SimplicialComplex> complexes =
      sample == 0 ? enumerate_complexes(n) : sample_complexes(n, sample, g.seed);

  std::ofstream stream;
  if (!stream_path.empty()) {
    stream.open(stream_path);
    if (!stream) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + stream_path + "'");
  }

  Tally total;
  std::map<std::vector<std::uint64_t>, Tally> by_f;
  std::size_t certified = 0;
  std::size_t certificate_failures = 0;
  std::size_t ekr_violations = 0;
  for (const SimplicialComplex& K : complexes) {
    if (K.is_void()) continue;
    const Verdict v = decide_embeddability(K, d);
    const std::vector<std::uint64_t> f = f_vector(K);
    total.add(v.decision);
    by_f[f].add(v.decision);

    std::optional<bool> pass;
    if (v.decision == Decision::kEmbedsInSphere) {
      const Embedding e = construct_embedding(K.n(), *v.matching);
      pass = verify_geodesic_embedding(K, e.placement).pass;
      ++certified;
      if (!*pass) ++certificate_failures;
    }
    if (K.n() == d + 3 && ekr_embeddability(K, d) && v.decision != Decision::kEmbedsInSphere) {
      ++ekr_violations;
    }
    if (stream.is_open()) {
      json line{{"complex", io::to_json(K)}, {"decision", io::decision_name(v.decision)}};
      line["certificate"] = pass ? json(*pass ? "pass" : "fail") : json(nullptr);
      stream << line.dump() << '\n';
    }
  }

  json classes = json::array();
  for (const auto& [f, t] : by_f) {
    json e = t.to_json();
    e["f_vector"] = f;
    classes.push_back(std::move(e));
  }
  json j{{"n", n},
         {"d", d},
         {"mode", sample == 0 ? "exhaustive" : "sampled"},
         {"total", total.embeds + total.not_embeddable + total.out_of_scope},
         {"verdicts", total.to_json()},
         {"by_f_vector", classes},
         {"certified", certified},
         {"certificate_failures", certificate_failures},
         {"ekr_violations", ekr_violations}};
  j["seed"] = sample == 0 ? json(nullptr) : json(g.seed);
  return {j, certificate_failures == 0 && ekr_violations == 0 ? kExitOk : kExitNegative};
}

Outcome ekr(int n, int k, std::ostream& err) {
  const IntersectingFamilyResult r = max_intersecting_family(n, k);
  const std::uint64_t bound = binomial(n - 1, k - 1);
  json j{{"n", n}, {"k", k}, {"max", r.size}, {"bound", bound}, {"family", faces_json(r.family.sets())}};
  if (r.size != bound) {
    err << "fatal: maximum intersecting family has size " << r.size << " but the bound is " << bound << '\n';
    return {j, kExitNegative};
  }
  return {j, kExitOk};
}

int code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kConstructionFailed:
    case ErrorCode::kDegenerateHull:
    case ErrorCode::kViewpointSearchFailed:
      return kExitNegative;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Embeddability of simplicial complexes on few vertices", "fewembed"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for the SplitMix64 generator");
  app.add_option("--output", g.output, "Write JSON here instead of standard output");
  app.add_flag("--cross-check", g.cross_check, "Add a double-precision re-check report");

  std::string complex_path;
  std::string placement_path;
  std::optional<int> dim;
  bool linear = false;
  std::string mode = "geodesic";
  std::string kind;
  std::vector<std::string> params;
  int leftover = 0;
  int n = 0;
  int k = 0;
  std::size_t sample = 0;
  std::string stream_path;

  CLI::App* a = app.add_subcommand("analyze", "Decide embeddability into S^d");
  a->add_option("complex", complex_path, "Complex JSON file")->required();
  a->add_option("--dim", dim, "Target sphere dimension d (default max(1, n-3))");

  CLI::App* e = app.add_subcommand("embed", "Construct and certify an embedding");
  e->add_option("complex", complex_path, "Complex JSON file")->required();
  e->add_option("--dim", dim, "Target dimension d (default max(1, n-3))");
  e->add_flag("--linear", linear, "Linear embedding into R^d");

  CLI::App* v = app.add_subcommand("verify", "Check a placement in exact arithmetic");
  v->add_option("complex", complex_path, "Complex JSON file")->required();
  v->add_option("placement", placement_path, "Placement JSON file")->required();
  v->add_option("--mode", mode, "geodesic or linear")->check(CLI::IsMember({"geodesic", "linear"}));

  CLI::App* w = app.add_subcommand("witness", "Find two disjoint faces whose images meet");
  w->add_option("complex", complex_path, "Complex JSON file")->required();
  w->add_option("placement", placement_path, "Placement JSON file")->required();

  CLI::App* gen = app.add_subcommand("generate", "Emit a named complex");
  gen->add_option("kind", kind, "vkf | cross | star | simplex | boundary | skeleton")->required();
  gen->add_option("params", params, "Parameters for the kind");
  gen->add_option("--leftover", leftover, "Extra cone vertices for 'cross'");

  CLI::App* en = app.add_subcommand("enumerate", "Sweep complexes and tally verdicts");
  en->add_option("--n", n, "Ground set size")->required()->check(CLI::Range(1, kMaxGroundSet));
  en->add_option("--dim", dim, "Target dimension d (default max(1, n-3))");
  en->add_option("--sample", sample, "Sample this many complexes instead of enumerating");
  en->add_option("--stream", stream_path, "Write one JSON line per complex here");

  CLI::App* ek = app.add_subcommand("ekr", "Exact maximum intersecting family of k-sets");
  ek->add_option("--n", n, "Ground set size")->required();
  ek->add_option("--k", k, "Set size")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    if (!app.get_subcommands().empty()) err << "run with --help for usage\n";
    return kExitInputError;
  }

  Outcome o;
  try {
    if (a->parsed()) o = analyze(complex_path, dim);
    else if (e->parsed()) o = embed(g, complex_path, dim, linear);
    else if (v->parsed()) o = verify(g, complex_path, placement_path, mode);
    else if (w->parsed()) o = witness(complex_path, placement_path);
    else if (gen->parsed()) o = generate(kind, params, leftover);
    else if (en->parsed()) o = enumerate(g, n, dim, sample, stream_path);
    else o = ekr(n, k, err);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return code_for(ex);
  }

  const std::string text = io::dump(o.body);
  if (g.output.empty()) {
    out << text;
  } else {
    std::ofstream file(g.output);
    if (!file) {
      err << "error: cannot write '" << g.output << "'\n";
      return kExitInputError;
    }
    file << text;
  }
  return o.code;
}

}  // namespace fewembed::cli

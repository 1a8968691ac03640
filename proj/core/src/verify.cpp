#include "fewembed/verify.hpp"

#include <algorithm>

#include "fewembed/canonical.hpp"
#include "fewembed/error.hpp"
#include "fewembed/lp.hpp"
#include "fewembed/random.hpp"

namespace fewembed {
namespace {

template <class T>
T convert(const Rational& q) {
  if constexpr (std::is_same_v<T, double>) {
    return q.get_d();
  } else {
    return q;
  }
}

template <class T>
int sign_of(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x > 1e-9 ? 1 : (x < -1e-9 ? -1 : 0);
  } else {
    return sgn(x);
  }
}

// LP for one face pair. Variables: lambda over sigma, then mu over tau.
//   sum lambda p - sum mu p = 0,  sum lambda = 1  (and sum mu = 1 if linear).
// When the faces share vertices the objective is the weight off the shared
// face; otherwise only feasibility is asked.
template <class T>
struct PairProblem {
  std::vector<std::vector<T>> A;
  std::vector<T> b;
  std::vector<std::size_t> nonneg;
  std::optional<std::vector<T>> objective;
};

template <class T>
PairProblem<T> build_pair(VerifyMode mode, const Placement& P, Face sigma, Face tau) {
  const std::vector<VertexId> sv = sigma.vertices(), tv = tau.vertices();
  const Face shared = sigma & tau;
  const std::size_t vars = sv.size() + tv.size();
  const auto dim = static_cast<std::size_t>(P.dim);
  PairProblem<T> p;
  p.A.assign(dim, std::vector<T>(vars, T(0)));
  p.b.assign(dim, T(0));
  for (std::size_t i = 0; i < sv.size(); ++i) {
    const RationalVector& x = P.at(sv[i]);
    for (std::size_t r = 0; r < dim; ++r) p.A[r][i] = convert<T>(x[r]);
  }
  for (std::size_t j = 0; j < tv.size(); ++j) {
    const RationalVector& x = P.at(tv[j]);
    for (std::size_t r = 0; r < dim; ++r) p.A[r][sv.size() + j] = convert<T>(-x[r]);
  }
  std::vector<T> sum_lambda(vars, T(0));
  for (std::size_t i = 0; i < sv.size(); ++i) sum_lambda[i] = T(1);
  p.A.push_back(std::move(sum_lambda));
  p.b.push_back(T(1));
  if (mode == VerifyMode::kLinear) {
    std::vector<T> sum_mu(vars, T(0));
    for (std::size_t j = 0; j < tv.size(); ++j) sum_mu[sv.size() + j] = T(1);
    p.A.push_back(std::move(sum_mu));
    p.b.push_back(T(1));
  }
  for (std::size_t i = 0; i < vars; ++i) p.nonneg.push_back(i);
  if (!shared.empty()) {
    std::vector<T> obj(vars, T(0));
    for (std::size_t i = 0; i < sv.size(); ++i) {
      if (!shared.contains(sv[i])) obj[i] = T(1);
    }
    for (std::size_t j = 0; j < tv.size(); ++j) {
      if (!shared.contains(tv[j])) obj[sv.size() + j] = T(1);
    }
    p.objective = std::move(obj);
  }
  return p;
}

template <class T>
bool pair_overlaps(const BasicLPResult<T>& r, bool shared) {
  if (!shared) return r.feasible();
  return r.status == LPStatus::kUnbounded || (r.optimum && sign_of(*r.optimum) > 0);
}

bool proportional_positive(const RationalVector& a, const RationalVector& b) {
  // a = c b with c > 0.
  std::optional<Rational> ratio;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (sgn(b[r]) == 0) {
      if (sgn(a[r]) != 0) return false;
      continue;
    }
    const Rational q = a[r] / b[r];
    if (ratio && *ratio != q) return false;
    ratio = q;
  }
  return ratio && sgn(*ratio) > 0;
}

void check_inputs(const SimplicialComplex& K, const Placement& P) {
  for (VertexId v : K.vertex_set().vertices()) {
    if (static_cast<int>(P.at(v).size()) != P.dim) {
      throw Error(ErrorCode::kDimensionMismatch, "vertex " + std::to_string(v) + " has wrong length");
    }
  }
}

IndependenceCheck independence(VerifyMode mode, const Placement& P, Face facet) {
  const std::vector<VertexId> vs = facet.vertices();
  RationalMatrix rows;
  if (mode == VerifyMode::kGeodesic) {
    for (VertexId v : vs) rows.push_back(P.at(v));
  } else {
    for (std::size_t i = 1; i < vs.size(); ++i) {
      RationalVector d = P.at(vs[i]);
      const RationalVector& base = P.at(vs[0]);
      for (std::size_t r = 0; r < d.size(); ++r) d[r] -= base[r];
      rows.push_back(std::move(d));
    }
  }
  IndependenceCheck c;
  c.facet = facet;
  c.rank = rank(rows);
  c.ok = c.rank == static_cast<int>(rows.size());
  return c;
}

Certificate verify(VerifyMode mode, const SimplicialComplex& K, const Placement& P, PairScope scope) {
  check_inputs(K, P);
  Certificate cert;
  cert.mode = mode;
  cert.complex_form = K.n() <= kMaxCanonicalGroundSet ? canonical_form(K).hex() : std::string();
  cert.placement_hash = P.fingerprint();
  cert.pass = true;

  for (Face f : K.facets()) {
    IndependenceCheck c = independence(mode, P, f);
    if (!c.ok && cert.pass) {
      cert.pass = false;
      cert.offending_facet = f;
    }
    cert.independence.push_back(c);
  }

  std::vector<Face> items;
  if (scope == PairScope::kFacets) {
    items = K.facets();
  } else {
    for (Face f : K.faces()) {
      if (!f.empty()) items.push_back(f);
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      PairCheck c = check_pair(mode, P, items[i], items[j]);
      if (c.status == PairStatus::kOverlap && cert.pass) {
        cert.pass = false;
        cert.offending_pair = std::make_pair(items[i], items[j]);
      }
      cert.pairs.push_back(std::move(c));
    }
  }
  return cert;
}

}  // namespace

PairCheck check_pair(VerifyMode mode, const Placement& P, Face sigma, Face tau) {
  PairCheck c;
  c.sigma = sigma;
  c.tau = tau;
  if (sigma.empty() || tau.empty()) return c;  // the empty face maps nowhere
  const Face shared = sigma & tau;
  if (shared.empty() && sigma.size() == 1 && tau.size() == 1) {
    const RationalVector& a = P.at(sigma.vertices().front());
    const RationalVector& b = P.at(tau.vertices().front());
    const bool same = mode == VerifyMode::kGeodesic ? proportional_positive(a, b) : a == b;
    c.status = same ? PairStatus::kOverlap : PairStatus::kProper;
    return c;
  }
  const PairProblem<Rational> p = build_pair<Rational>(mode, P, sigma, tau);
  const LPResult r = lp_feasible(p.A, p.b, p.nonneg, p.objective);
  c.status = pair_overlaps(r, !shared.empty()) ? PairStatus::kOverlap : PairStatus::kProper;
  if (r.status == LPStatus::kInfeasible) c.farkas = r.farkas;
  if (!shared.empty() && r.optimum) c.off_shared_weight = r.optimum;
  return c;
}

Certificate verify_geodesic_embedding(const SimplicialComplex& K, const Placement& P, PairScope scope) {
  if (!P.on_sphere) throw Error(ErrorCode::kNotOnSphere, "placement is not flagged on_sphere");
  for (VertexId v : K.vertex_set().vertices()) {
    if (squared_norm(P.at(v)) != 1) {
      throw Error(ErrorCode::kNotOnSphere, "vertex " + std::to_string(v) + " is not a unit vector");
    }
  }
  return verify(VerifyMode::kGeodesic, K, P, scope);
}

Certificate verify_linear_embedding(const SimplicialComplex& K, const Placement& P, PairScope scope) {
  return verify(VerifyMode::kLinear, K, P, scope);
}

std::optional<OverlapWitness> overlap_witness(const SimplicialComplex& K, const Placement& P) {
  check_inputs(K, P);
  std::vector<Face> faces;
  for (Face f : K.faces()) {
    if (!f.empty()) faces.push_back(f);
  }
  struct Candidate {
    std::size_t i, j;
    int weight;
  };
  std::vector<Candidate> pairs;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      if (!faces[i].intersects(faces[j])) pairs.push_back({i, j, faces[i].size() + faces[j].size()});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Candidate& a, const Candidate& b) { return a.weight < b.weight; });
  for (const Candidate& c : pairs) {
    const Face sigma = faces[c.i], tau = faces[c.j];
    const PairProblem<Rational> p = build_pair<Rational>(VerifyMode::kLinear, P, sigma, tau);
    const LPResult r = lp_feasible(p.A, p.b, p.nonneg);
    if (!r.feasible()) continue;
    OverlapWitness w;
    w.sigma = sigma;
    w.tau = tau;
    const std::size_t ns = static_cast<std::size_t>(sigma.size());
    w.lambda.assign(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(ns));
    w.mu.assign(r.point.begin() + static_cast<std::ptrdiff_t>(ns), r.point.end());
    w.point.assign(static_cast<std::size_t>(P.dim), 0);
    const std::vector<VertexId> sv = sigma.vertices();
    for (std::size_t i = 0; i < ns; ++i) {
      const RationalVector& x = P.at(sv[i]);
      for (std::size_t d = 0; d < w.point.size(); ++d) w.point[d] += w.lambda[i] * x[d];
    }
    return w;
  }
  return std::nullopt;
}

bool witness_is_valid(const SimplicialComplex& K, const Placement& P, const OverlapWitness& w) {
  if (w.sigma.empty() || w.tau.empty() || w.sigma.intersects(w.tau)) return false;
  if (!K.contains(w.sigma) || !K.contains(w.tau)) return false;
  const std::vector<VertexId> sv = w.sigma.vertices(), tv = w.tau.vertices();
  if (w.lambda.size() != sv.size() || w.mu.size() != tv.size()) return false;
  auto combine = [&](const std::vector<VertexId>& vs, const RationalVector& weights,
                     RationalVector& out) {
    Rational total = 0;
    out.assign(static_cast<std::size_t>(P.dim), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (sgn(weights[i]) < 0) return false;
      total += weights[i];
      const RationalVector& x = P.at(vs[i]);
      for (std::size_t d = 0; d < out.size(); ++d) out[d] += weights[i] * x[d];
    }
    return total == 1;
  };
  RationalVector a, b;
  return combine(sv, w.lambda, a) && combine(tv, w.mu, b) && a == b && a == w.point;
}

CrossCheckReport float_cross_check(const SimplicialComplex& K, const Placement& P, VerifyMode mode,
                                   std::size_t trials, std::uint64_t seed) {
  check_inputs(K, P);
  CrossCheckReport report;
  auto compare = [&](Face sigma, Face tau) {
    if (sigma.empty() || tau.empty() || sigma == tau) return;
    const bool exact = check_pair(mode, P, sigma, tau).status == PairStatus::kOverlap;
    const PairProblem<double> p = build_pair<double>(mode, P, sigma, tau);
    const bool approx = pair_overlaps(solve_lp<double>(p.A, p.b, p.nonneg, p.objective),
                                      !(sigma & tau).empty());
    ++report.pair_checks;
    if (exact != approx) {
      ++report.disagreements;
      report.disagreeing_pairs.emplace_back(sigma, tau);
    }
  };
  const std::vector<Face>& facets = K.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) compare(facets[i], facets[j]);
  }
  if (trials > 0) {
    std::vector<Face> faces;
    for (Face f : K.faces()) {
      if (!f.empty()) faces.push_back(f);
    }
    if (faces.size() >= 2) {
      SplitMix64 rng(seed);
      for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t i = rng.below(faces.size());
        const std::size_t j = rng.below(faces.size());
        compare(faces[i], faces[j]);
      }
    }
  }
  return report;
}

}  // namespace fewembed

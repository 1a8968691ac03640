#include "fewembed/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>

#include "fewembed/error.hpp"
#include "fewembed/lp.hpp"

namespace fewembed {

// ---------------------------------------------------------------------------
// Placement

const RationalVector& Placement::at(VertexId v) const {
  const auto it = coords.find(v);
  if (it == coords.end()) throw Error(ErrorCode::kUnplacedVertex, "vertex " + std::to_string(v));
  return it->second;
}

bool Placement::norms_are_one() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const auto& kv) { return squared_norm(kv.second) == 1; });
}

std::string Placement::fingerprint() const {
  std::string text = "dim=" + std::to_string(dim) + ";sphere=" + (on_sphere ? "1" : "0") + ";";
  for (const auto& [v, x] : coords) {
    text += std::to_string(v) + ":";
    for (const Rational& q : x) text += to_string(q) + ",";
    text += ";";
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kDigits[h & 0xF];
  return out;
}

Placement pad(const Placement& P, int dim) {
  if (dim < P.dim) throw Error(ErrorCode::kDimensionMismatch, "cannot pad to a smaller dimension");
  Placement out = P;
  out.dim = dim;
  for (auto& [v, x] : out.coords) x.resize(static_cast<std::size_t>(dim), Rational(0));
  return out;
}

// ---------------------------------------------------------------------------
// Sphere points

RationalVector rational_sphere_point(const RationalVector& u) {
  const Rational s = squared_norm(u);
  const Rational denom = s + 1;
  RationalVector out;
  out.reserve(u.size() + 1);
  for (const Rational& x : u) out.push_back(2 * x / denom);
  out.push_back((s - 1) / denom);
  return out;
}

bool origin_in_interior(const std::vector<RationalVector>& points) {
  if (points.empty()) return false;
  const std::size_t dim = points.front().size();
  const std::size_t count = points.size();
  RationalMatrix diffs;
  for (std::size_t i = 1; i < count; ++i) {
    RationalVector d(dim);
    for (std::size_t r = 0; r < dim; ++r) d[r] = points[i][r] - points[0][r];
    diffs.push_back(std::move(d));
  }
  if (rank(diffs) < static_cast<int>(dim)) return false;

  // Variables: weights w (count), margin t (free), slacks s (count).
  // sum w p = 0, sum w = 1, w_i - t - s_i = 0; maximize t.
  const std::size_t vars = 2 * count + 1;
  const std::size_t t_index = count;
  RationalMatrix A;
  RationalVector b;
  for (std::size_t r = 0; r < dim; ++r) {
    RationalVector row(vars, 0);
    for (std::size_t i = 0; i < count; ++i) row[i] = points[i][r];
    A.push_back(std::move(row));
    b.emplace_back(0);
  }
  {
    RationalVector row(vars, 0);
    for (std::size_t i = 0; i < count; ++i) row[i] = 1;
    A.push_back(std::move(row));
    b.emplace_back(1);
  }
  for (std::size_t i = 0; i < count; ++i) {
    RationalVector row(vars, 0);
    row[i] = 1;
    row[t_index] = -1;
    row[count + 1 + i] = -1;
    A.push_back(std::move(row));
    b.emplace_back(0);
  }
  std::vector<std::size_t> nonneg;
  for (std::size_t i = 0; i < vars; ++i) {
    if (i != t_index) nonneg.push_back(i);
  }
  RationalVector objective(vars, 0);
  objective[t_index] = 1;
  const LPResult r = lp_feasible(A, b, nonneg, objective);
  return r.status == LPStatus::kFeasible && r.optimum && sgn(*r.optimum) > 0;
}

namespace {

std::vector<RationalVector> build_simplex(int m, const std::vector<RationalVector>& lower) {
  constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  // t = m/(m-1) puts the ring of m vertices near height -1/m, close to the
  // regular simplex; the perturbations only matter if the check ever fails.
  const Rational base(m, m - 1);
  for (int attempt = -1; attempt < static_cast<int>(std::size(kPrimes)); ++attempt) {
    const Rational t = attempt < 0 ? base : base * Rational(kPrimes[attempt] + 1, kPrimes[attempt]);
    const RationalVector ba = rational_sphere_point({t});
    const Rational& b = ba[0];
    const Rational& a = ba[1];
    std::vector<RationalVector> out;
    RationalVector apex(static_cast<std::size_t>(m), 0);
    apex[0] = 1;
    out.push_back(std::move(apex));
    for (const RationalVector& y : lower) {
      RationalVector v;
      v.reserve(static_cast<std::size_t>(m));
      v.push_back(-a);
      for (const Rational& c : y) v.push_back(b * c);
      out.push_back(std::move(v));
    }
    if (origin_in_interior(out)) return out;
  }
  throw Error(ErrorCode::kConstructionFailed, "simplex_on_sphere(" + std::to_string(m) + ")");
}

}  // namespace

std::vector<RationalVector> simplex_on_sphere(int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "simplex_on_sphere needs m >= 1");
  static std::mutex mu;
  static std::vector<std::vector<RationalVector>> cache;  // cache[m-1]
  std::scoped_lock lock(mu);
  if (cache.empty()) cache.push_back({RationalVector{Rational(1)}, RationalVector{Rational(-1)}});
  while (static_cast<int>(cache.size()) < m) {
    const int next = static_cast<int>(cache.size()) + 1;
    cache.push_back(build_simplex(next, cache.back()));
  }
  return cache[static_cast<std::size_t>(m - 1)];
}

// ---------------------------------------------------------------------------
// Join construction

Embedding construct_embedding(int n, const FaceFamily& F) {
  if (F.n() != 0 && F.n() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "family ground set differs from n");
  }
  return construct_embedding(n, maximum_matching(F));
}

Embedding construct_embedding(int n, const Matching& matching) {
  if (n < 1) throw Error(ErrorCode::kEmptyGroundSet, "ground set size must be >= 1");
  Face covered;
  for (Face s : matching.sets) {
    if (s.empty()) throw Error(ErrorCode::kEmptyFaceInFamily, "matching contains the empty set");
    if (s.intersects(covered)) throw Error(ErrorCode::kInvalidArgument, "matching sets overlap");
    if (!s.subset_of(Face::ground(n))) throw Error(ErrorCode::kVertexOutOfRange, s.to_string());
    covered = covered | s;
  }
  Embedding e;
  e.layout.matching = matching;
  const int dim = n - matching.size();
  e.placement.dim = dim;
  e.placement.on_sphere = true;

  int axis = 0;
  for (Face s : matching.sets) {
    const int width = s.size() - 1;
    std::vector<int> block(static_cast<std::size_t>(width));
    std::iota(block.begin(), block.end(), axis);
    if (width > 0) {
      const std::vector<RationalVector> corners = simplex_on_sphere(width);
      const std::vector<VertexId> vs = s.vertices();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        RationalVector x(static_cast<std::size_t>(dim), 0);
        for (int c = 0; c < width; ++c) x[static_cast<std::size_t>(axis + c)] = corners[i][static_cast<std::size_t>(c)];
        e.placement.coords.emplace(vs[i], std::move(x));
      }
    }
    e.layout.blocks.push_back(std::move(block));
    axis += width;
  }
  for (VertexId v : Face::ground(n).minus(covered).vertices()) {
    RationalVector x(static_cast<std::size_t>(dim), 0);
    x[static_cast<std::size_t>(axis)] = 1;
    e.placement.coords.emplace(v, std::move(x));
    e.layout.leftover_axes.emplace(v, axis);
    ++axis;
  }
  return e;
}

// ---------------------------------------------------------------------------
// Facet enumeration

namespace {

struct PointSet {
  std::vector<VertexId> ids;
  std::vector<RationalVector> points;
};

PointSet collect(const Placement& P) {
  PointSet s;
  for (const auto& [v, x] : P.coords) {
    if (static_cast<int>(x.size()) != P.dim) {
      throw Error(ErrorCode::kDimensionMismatch, "vertex " + std::to_string(v) + " has wrong length");
    }
    s.ids.push_back(v);
    s.points.push_back(x);
  }
  return s;
}

// Scale to a primitive integer vector (offset scaled alike).
void normalize(RationalVector& normal, Rational& offset) {
  mpz_class lcm = 1;
  for (const Rational& q : normal) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  mpz_class g = 0;
  for (const Rational& q : normal) {
    const mpz_class num = q.get_num() * (lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  const Rational scale(lcm, g);
  for (Rational& q : normal) q *= scale;
  offset *= scale;
}

template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

FacetList facet_enumeration(const Placement& P) {
  const PointSet s = collect(P);
  const auto dim = static_cast<std::size_t>(P.dim);
  if (P.dim < 1 || s.points.size() < dim + 1) {
    throw Error(ErrorCode::kDegenerateHull, "too few points to span the ambient space");
  }
  {
    RationalMatrix diffs;
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      RationalVector d(dim);
      for (std::size_t r = 0; r < dim; ++r) d[r] = s.points[i][r] - s.points[0][r];
      diffs.push_back(std::move(d));
    }
    if (rank(diffs) < P.dim) throw Error(ErrorCode::kDegenerateHull, "points lie in a hyperplane");
  }

  FacetList facets;
  for_each_combination(s.points.size(), dim, [&](const std::vector<std::size_t>& idx) {
    RationalMatrix rows;
    for (std::size_t j = 1; j < idx.size(); ++j) {
      RationalVector d(dim);
      for (std::size_t r = 0; r < dim; ++r) d[r] = s.points[idx[j]][r] - s.points[idx[0]][r];
      rows.push_back(std::move(d));
    }
    const RationalMatrix ns = null_space(std::move(rows), dim);
    if (ns.size() != 1) return;  // chosen points not affinely independent
    RationalVector normal = ns.front();
    Rational offset = dot(normal, s.points[idx[0]]);
    int above = 0, below = 0;
    Face on;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const int side = sgn(Rational(dot(normal, s.points[i]) - offset));
      if (side > 0) ++above;
      if (side < 0) ++below;
      if (side == 0) on = on.with(s.ids[i]);
    }
    if (above > 0 && below > 0) return;
    if (above > 0) {
      for (Rational& q : normal) q = -q;
      offset = -offset;
    }
    if (std::any_of(facets.begin(), facets.end(), [on](const Facet& f) { return f.vertices == on; })) {
      return;
    }
    normalize(normal, offset);
    facets.push_back(Facet{on, std::move(normal), std::move(offset)});
  });
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return facets;
}

std::optional<Facet> choose_projection_facet(const SimplicialComplex& K, const FacetList& facets) {
  std::optional<Facet> best;
  for (const Facet& f : facets) {
    if (K.contains(f.vertices)) continue;
    if (!best || f.vertices < best->vertices) best = f;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Schlegel projection

Placement schlegel_project(const Placement& P, const Facet& facet) {
  const FacetList all = facet_enumeration(P);
  const PointSet s = collect(P);
  const auto dim = static_cast<std::size_t>(P.dim);

  RationalVector hull_centre(dim, 0), facet_centre(dim, 0);
  int on_facet = 0;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    for (std::size_t r = 0; r < dim; ++r) hull_centre[r] += s.points[i][r];
    if (facet.vertices.contains(s.ids[i])) {
      for (std::size_t r = 0; r < dim; ++r) facet_centre[r] += s.points[i][r];
      ++on_facet;
    }
  }
  if (on_facet == 0) throw Error(ErrorCode::kInvalidArgument, "facet has no placed vertices");
  for (std::size_t r = 0; r < dim; ++r) {
    hull_centre[r] /= static_cast<long>(s.points.size());
    facet_centre[r] /= on_facet;
  }

  // v = c + t (c - b), halving t until v is beyond `facet` only.
  constexpr int kMaxHalvings = 64;
  RationalVector view;
  Rational t = 1;
  bool found = false;
  for (int step = 0; step <= kMaxHalvings && !found; ++step, t /= 2) {
    view.assign(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) view[r] = facet_centre[r] + t * (facet_centre[r] - hull_centre[r]);
    found = dot(facet.normal, view) > facet.offset;
    for (const Facet& g : all) {
      if (!found) break;
      if (g.vertices == facet.vertices) continue;
      found = dot(g.normal, view) < g.offset;
    }
  }
  if (!found) throw Error(ErrorCode::kViewpointSearchFailed, "no viewpoint beyond facet " + facet.vertices.to_string());

  const auto drop = static_cast<std::size_t>(
      std::find_if(facet.normal.begin(), facet.normal.end(), [](const Rational& q) { return sgn(q) != 0; }) -
      facet.normal.begin());
  const Rational view_height = dot(facet.normal, view);

  Placement out;
  out.dim = P.dim - 1;
  out.on_sphere = false;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const RationalVector& p = s.points[i];
    // Ray view + k (p - view) meets normal . x = offset at k below.
    const Rational k = (facet.offset - view_height) / (dot(facet.normal, p) - view_height);
    RationalVector x;
    x.reserve(dim - 1);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r != drop) x.push_back(view[r] + k * (p[r] - view[r]));
    }
    out.coords.emplace(s.ids[i], std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linearization pipeline

LinearizeResult linearize(const SimplicialComplex& K, int d) {
  LinearizeResult result;
  result.verdict = decide_embeddability(K, d);
  if (result.verdict.decision == Decision::kNotEmbeddable) {
    result.kind = LinearizeKind::kNotEmbeddable;
    return result;
  }
  Matching matching;
  if (result.verdict.decision == Decision::kOutOfScope) {
    // Larger ground sets still embed when the join fits in S^d.
    matching = maximum_matching(result.verdict.minimal_nonfaces);
    if (K.n() - matching.size() > d + 1) {
      throw Error(ErrorCode::kInvalidArgument, "no construction: n > d+3 and n - nu > d+1");
    }
  } else {
    matching = *result.verdict.matching;
  }
  Embedding e = construct_embedding(K.n(), matching);
  result.layout = e.layout;

  if (e.placement.dim <= d) {
    result.kind = LinearizeKind::kLinearPlacement;
    result.placement = pad(e.placement, d);
    return result;
  }
  // dim == d + 1 from here on.
  const bool has_block = std::any_of(e.layout.matching.sets.begin(), e.layout.matching.sets.end(),
                                     [](Face f) { return f.size() >= 2; });
  if (!has_block) {
    // Only singletons were matched, so K is the full simplex on its d+1
    // vertices; any affinely independent points in R^d realize it.
    result.kind = LinearizeKind::kLinearPlacement;
    result.placement.dim = d;
    int axis = -1;
    for (const auto& [v, x] : e.placement.coords) {
      RationalVector y(static_cast<std::size_t>(d), 0);
      if (axis >= 0) y[static_cast<std::size_t>(axis)] = 1;
      ++axis;
      result.placement.coords.emplace(v, std::move(y));
    }
    return result;
  }
  const FacetList facets = facet_enumeration(e.placement);
  result.projection_facet = choose_projection_facet(K, facets);
  if (!result.projection_facet) {
    result.kind = LinearizeKind::kSphereOnly;
    result.placement = e.placement;
    return result;
  }
  result.kind = LinearizeKind::kLinearPlacement;
  result.placement = schlegel_project(e.placement, *result.projection_facet);
  return result;
}

}  // namespace fewembed

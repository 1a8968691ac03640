#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fewembed/combinatorics.hpp"
#include "fewembed/complex.hpp"
#include "fewembed/rational.hpp"

namespace fewembed {

/// Exact vertex coordinates in R^dim. Vertices absent from `coords` are
/// unplaced (isolated ground-set elements need no image).
struct Placement {
  int dim = 0;
  /// Declared property: every vector has squared norm exactly 1.
  bool on_sphere = false;
  std::map<VertexId, RationalVector> coords;

  bool has(VertexId v) const { return coords.contains(v); }
  /// Throws Error(kUnplacedVertex).
  const RationalVector& at(VertexId v) const;
  /// Checks the declared flag against the coordinates.
  bool norms_are_one() const;
  /// Stable 64-bit FNV-1a digest of the exact coordinates, as 16 hex digits.
  std::string fingerprint() const;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Copy of P with zero coordinates appended up to `dim` (>= P.dim).
Placement pad(const Placement& P, int dim);

/// How construct_embedding distributed coordinates.
struct JoinLayout {
  Matching matching;
  /// blocks[i] lists the 0-based coordinate indices carrying matching set i;
  /// its size is |S_i| - 1 (empty for singletons, whose vertex is unplaced).
  std::vector<std::vector<int>> blocks;
  /// Uncovered vertex -> its own 0-based coordinate axis.
  std::map<VertexId, int> leftover_axes;
};

struct Embedding {
  Placement placement;
  JoinLayout layout;
};

/// Supporting hyperplane normal . x <= offset of a hull facet. The normal is a
/// primitive integer vector.
struct Facet {
  Face vertices;
  RationalVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};
using FacetList = std::vector<Facet>;

/// (2u, |u|^2 - 1) / (|u|^2 + 1): a rational point on the unit sphere in
/// dimension u.size() + 1.
RationalVector rational_sphere_point(const RationalVector& u);

/// m+1 rational unit vectors in R^m whose convex hull has the origin in its
/// interior. Built recursively as e_1 together with (-a, b y) for y in
/// simplex_on_sphere(m-1), where (b, a) = rational_sphere_point(t) for a
/// rational t near the regular-simplex value. Throws kConstructionFailed if
/// the exact interior check fails on every scheduled perturbation of t.
std::vector<RationalVector> simplex_on_sphere(int m);

/// Exact LP test: the origin lies in the interior of conv(points), the points
/// affinely spanning their ambient space.
bool origin_in_interior(const std::vector<RationalVector>& points);

/// Places Sigma(F) on the unit sphere of R^{n - nu(F)} as a subcomplex of the
/// boundary of a generalized cross-polytope, using the lexicographically
/// least maximum matching of F.
Embedding construct_embedding(int n, const FaceFamily& F);
/// As above with a caller-supplied maximum matching.
Embedding construct_embedding(int n, const Matching& matching);

/// All facets of conv(placed points), sorted by vertex set. Points sharing a
/// supporting hyperplane are merged into one facet.
/// Throws kDegenerateHull unless the points affinely span R^dim.
FacetList facet_enumeration(const Placement& P);

/// Lexicographically least facet whose vertex set is not a face of K.
std::optional<Facet> choose_projection_facet(const SimplicialComplex& K, const FacetList& facets);

/// Central projection of every placed point from a viewpoint just beyond
/// `facet` onto its hyperplane, returned in dim-1 coordinates (the first
/// coordinate with non-zero normal entry is dropped). Facet vertices are
/// fixed. Throws kViewpointSearchFailed if the halving schedule runs out.
Placement schlegel_project(const Placement& P, const Facet& facet);

enum class LinearizeKind { kLinearPlacement, kSphereOnly, kNotEmbeddable };

struct LinearizeResult {
  LinearizeKind kind = LinearizeKind::kNotEmbeddable;
  /// In R^d for kLinearPlacement, on S^d (inside R^{d+1}) for kSphereOnly.
  Placement placement;
  Verdict verdict;
  std::optional<JoinLayout> layout;
  /// Facet used for the Schlegel projection, when one was needed.
  std::optional<Facet> projection_facet;
};

/// Linear embedding into R^d when one exists, else a geodesic one into S^d
/// when K is the whole boundary sphere. For n > d + 3 it proceeds when
/// n - nu <= d + 1 and throws kInvalidArgument otherwise.
LinearizeResult linearize(const SimplicialComplex& K, int d);

}  // namespace fewembed

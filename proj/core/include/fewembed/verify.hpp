#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewembed/complex.hpp"
#include "fewembed/geometry.hpp"
#include "fewembed/rational.hpp"

namespace fewembed {

enum class VerifyMode { kGeodesic, kLinear };

/// Which face pairs a verification visits. Facet pairs suffice once every
/// facet passes its independence check; kAllFaces exists to confirm that.
enum class PairScope { kFacets, kAllFaces };

enum class PairStatus {
  /// The images meet only where the shared face says (possibly nowhere);
  /// for disjoint faces an LP Farkas vector proves it.
  kProper,
  /// Some common point carries weight outside the shared face.
  kOverlap,
};

struct PairCheck {
  Face sigma;
  Face tau;
  PairStatus status = PairStatus::kProper;
  /// Farkas vector proving the images of disjoint faces do not meet.
  std::optional<RationalVector> farkas;
  /// Maximum weight outside the shared face, when the faces share vertices
  /// and the maximum is finite.
  std::optional<Rational> off_shared_weight;
};

struct IndependenceCheck {
  Face facet;
  int rank = 0;
  bool ok = false;
};

struct Certificate {
  VerifyMode mode = VerifyMode::kGeodesic;
  /// Hex canonical form of the complex; empty when n > 9.
  std::string complex_form;
  std::string placement_hash;
  std::vector<IndependenceCheck> independence;
  std::vector<PairCheck> pairs;
  bool pass = false;
  std::optional<std::pair<Face, Face>> offending_pair;
  std::optional<Face> offending_facet;
};

/// Cones over the facets must be pointed and simplicial, and any two must
/// meet exactly in the cone over their common face.
/// Throws kNotOnSphere unless P is flagged and normed, kUnplacedVertex.
Certificate verify_geodesic_embedding(const SimplicialComplex& K, const Placement& P,
                                      PairScope scope = PairScope::kFacets);

/// Facet simplices must be non-degenerate and any two must meet exactly in
/// their common face. Throws kUnplacedVertex.
Certificate verify_linear_embedding(const SimplicialComplex& K, const Placement& P,
                                    PairScope scope = PairScope::kFacets);

/// One face pair, for callers that need individual checks.
PairCheck check_pair(VerifyMode mode, const Placement& P, Face sigma, Face tau);

/// Disjoint faces whose convex hulls share `point`.
struct OverlapWitness {
  Face sigma;
  Face tau;
  /// Weights aligned with sigma.vertices() and tau.vertices().
  RationalVector lambda;
  RationalVector mu;
  RationalVector point;
};

/// First pair of disjoint non-empty faces, ordered by (|sigma|+|tau|, sigma,
/// tau) with faces in (size, lex) order, whose convex hulls intersect.
std::optional<OverlapWitness> overlap_witness(const SimplicialComplex& K, const Placement& P);

/// Exact re-check of a witness: disjoint faces of K and matching convex
/// combinations.
bool witness_is_valid(const SimplicialComplex& K, const Placement& P, const OverlapWitness& w);

struct CrossCheckReport {
  std::size_t pair_checks = 0;
  std::size_t disagreements = 0;
  std::vector<std::pair<Face, Face>> disagreeing_pairs;
};

/// Re-evaluates every facet-pair check (plus `trials` random face pairs drawn
/// with SplitMix64(seed)) in double precision with tolerance 1e-9 and counts
/// verdicts that differ from the exact ones. Exact results are never
/// overridden.
CrossCheckReport float_cross_check(const SimplicialComplex& K, const Placement& P, VerifyMode mode,
                                   std::size_t trials, std::uint64_t seed);

}  // namespace fewembed

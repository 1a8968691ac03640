#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fewembed/complex.hpp"

namespace fewembed {

/// Pairwise disjoint members of a family, sorted lexicographically.
struct Matching {
  std::vector<Face> sets;

  int size() const { return static_cast<int>(sets.size()); }
  /// Union of all members.
  Face covered() const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

enum class Decision { kEmbedsInSphere, kNotEmbeddable, kOutOfScope };

/// Sphere-embeddability decision for a complex on [n] and a target S^d.
struct Verdict {
  Decision decision = Decision::kOutOfScope;
  int n = 0;
  int d = 0;
  FaceFamily minimal_nonfaces;
  /// Matching number of minimal_nonfaces and a lexicographically least
  /// maximum matching; empty for out-of-scope inputs.
  std::optional<int> nu;
  std::optional<Matching> matching;
  /// n == d+3 and the minimal non-faces form an intersecting family.
  bool intersecting = false;
  /// n == d+2 and the complex is the full simplex.
  bool full_simplex = false;
  std::vector<VertexId> isolated_vertices;
};

std::uint64_t binomial(int n, int k);

/// True iff every two members share a vertex; vacuously true when empty.
bool is_intersecting(const FaceFamily& F);

/// Exact matching number with the lexicographically least maximum matching.
Matching maximum_matching(const FaceFamily& F);
inline int matching_number(const FaceFamily& F) { return maximum_matching(F).size(); }

/// Throws kVoidComplex, or kInvalidArgument when d < 1.
Verdict decide_embeddability(const SimplicialComplex& K, int d);

/// Smallest k in 2..floor((d+3)/2) with f_{k-1}(K) < C(d+2, k), i.e. the face
/// count criterion guarantees embeddability. Throws kWrongGroundSetSize unless
/// K.n() == d+3.
std::optional<int> ekr_embeddability(const SimplicialComplex& K, int d);

/// All k-subsets of [n] containing `center`.
FaceFamily star_family(int n, int k, VertexId center);

struct IntersectingFamilyResult {
  std::uint64_t size = 0;
  FaceFamily family;
};

inline constexpr std::uint64_t kMaxIntersectingSearchSets = 1000;

/// Exact maximum intersecting family of k-subsets of [n] by clique search,
/// reporting the lexicographically least attaining family.
/// Requires 2 <= k, n >= 2k; throws kSearchBudgetExceeded if C(n,k) > 1000.
IntersectingFamilyResult max_intersecting_family(int n, int k);

}  // namespace fewembed

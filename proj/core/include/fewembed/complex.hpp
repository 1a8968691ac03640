#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fewembed/face.hpp"

namespace fewembed {

/// A family of non-empty vertex subsets of [n], kept sorted
/// lexicographically and free of duplicates. Typical use: the minimal
/// non-faces of a complex.
class FaceFamily {
 public:
  FaceFamily() = default;

  /// Throws kEmptyGroundSet, kGroundSetTooLarge, kVertexOutOfRange or
  /// kEmptyFaceInFamily.
  FaceFamily(int n, std::vector<Face> sets);

  int n() const { return n_; }
  const std::vector<Face>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(Face f) const;

  bool is_antichain() const;
  /// Inclusion-minimal members only.
  FaceFamily antichain() const;

  friend bool operator==(const FaceFamily&, const FaceFamily&) = default;

 private:
  int n_ = 0;
  std::vector<Face> sets_;
};

/// An abstract simplicial complex on the ground set [n], stored by its facets.
///
/// The facets always form an antichain sorted lexicographically. A complex
/// with no facets at all is *void*; a complex whose only facet is the empty
/// face has the empty face as its sole member.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Reduces `facets` to its maximal elements.
  /// Throws kEmptyGroundSet for n == 0, kVertexOutOfRange for ids outside 1..n.
  static SimplicialComplex from_facets(int n, std::vector<Face> facets);
  /// The complex whose only face is the empty face.
  static SimplicialComplex empty_face_only(int n);
  /// The void complex (no faces).
  static SimplicialComplex void_complex(int n);

  int n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  /// True iff `f` is a subset of some facet.
  bool contains(Face f) const;
  /// -1 for the empty-face-only complex, -2 for the void complex.
  int dimension() const;
  /// Union of all facets.
  Face vertex_set() const;
  /// Ground-set elements that are not vertices, in increasing order.
  std::vector<VertexId> isolated_vertices() const;
  bool is_full_simplex() const { return facets_.size() == 1 && facets_[0] == Face::ground(n_); }
  /// Every face, sorted by (size, lex). Includes the empty face unless void.
  std::vector<Face> faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<Face> facets_;
};

/// Keeps only maximal elements; result sorted lexicographically.
std::vector<Face> maximal_elements(std::vector<Face> faces);
/// Keeps only minimal elements; result sorted lexicographically.
std::vector<Face> minimal_elements(std::vector<Face> faces);

/// Inclusion-minimal subsets of [n] that are not faces of K.
FaceFamily minimal_nonfaces(const SimplicialComplex& K);

/// All subsets of [n] that contain no member of F.
SimplicialComplex complex_of(int n, const FaceFamily& F);

/// Faces of K of dimension at most k.
SimplicialComplex skeleton(const SimplicialComplex& K, int k);

/// The join K1 * K2 on [n1 + n2], with K2's vertices shifted by n1.
SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2);

/// The m-simplex on [m+1].
SimplicialComplex full_simplex(int m);

/// All proper subsets of [m+1]; a triangulated (m-1)-sphere.
SimplicialComplex boundary_simplex(int m);

/// d-skeleton of the simplex on 2d+3 vertices.
SimplicialComplex vkf_complex(int d);

/// Entry i-1 counts faces with i vertices, up to the top dimension.
std::vector<std::uint64_t> f_vector(const SimplicialComplex& K);

/// Image of K under the vertex relabeling v -> perm[v-1].
SimplicialComplex relabel(const SimplicialComplex& K, std::span<const VertexId> perm);

}  // namespace fewembed

#include "fewembed/complex.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "fewembed/error.hpp"

namespace fewembed {
namespace {

void check_ground(int n) {
  if (n <= 0) throw Error(ErrorCode::kEmptyGroundSet, "ground set size " + std::to_string(n));
  if (n > kMaxGroundSet) {
    throw Error(ErrorCode::kGroundSetTooLarge, "ground set size " + std::to_string(n));
  }
}

void check_in_range(int n, Face f) {
  if (!f.subset_of(Face::ground(n))) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "face " + f.to_string() + " outside [" + std::to_string(n) + "]");
  }
}

void sort_unique(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

}  // namespace

std::vector<Face> maximal_elements(std::vector<Face> faces) {
  sort_unique(faces);
  std::stable_sort(faces.begin(), faces.end(),
                   [](Face a, Face b) { return a.size() > b.size(); });
  std::vector<Face> kept;
  for (Face f : faces) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [f](Face g) { return f.subset_of(g); });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Face> minimal_elements(std::vector<Face> faces) {
  sort_unique(faces);
  std::stable_sort(faces.begin(), faces.end(),
                   [](Face a, Face b) { return a.size() < b.size(); });
  std::vector<Face> kept;
  for (Face f : faces) {
    const bool covers =
        std::any_of(kept.begin(), kept.end(), [f](Face g) { return g.subset_of(f); });
    if (!covers) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// ---------------------------------------------------------------------------
// FaceFamily

FaceFamily::FaceFamily(int n, std::vector<Face> sets) : n_(n), sets_(std::move(sets)) {
  check_ground(n);
  for (Face f : sets_) {
    if (f.empty()) throw Error(ErrorCode::kEmptyFaceInFamily, "family contains the empty set");
    check_in_range(n, f);
  }
  sort_unique(sets_);
}

bool FaceFamily::contains(Face f) const {
  return std::binary_search(sets_.begin(), sets_.end(), f);
}

bool FaceFamily::is_antichain() const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (i != j && sets_[i].subset_of(sets_[j])) return false;
    }
  }
  return true;
}

FaceFamily FaceFamily::antichain() const {
  FaceFamily out;
  out.n_ = n_;
  out.sets_ = minimal_elements(sets_);
  return out;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Face> facets) {
  check_ground(n);
  for (Face f : facets) check_in_range(n, f);
  SimplicialComplex K;
  K.n_ = n;
  K.facets_ = maximal_elements(std::move(facets));
  return K;
}

SimplicialComplex SimplicialComplex::empty_face_only(int n) {
  return from_facets(n, {Face{}});
}

SimplicialComplex SimplicialComplex::void_complex(int n) { return from_facets(n, {}); }

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.subset_of(g); });
}

int SimplicialComplex::dimension() const {
  int best = -2;
  for (Face f : facets_) best = std::max(best, f.size() - 1);
  return best;
}

Face SimplicialComplex::vertex_set() const {
  Face u;
  for (Face f : facets_) u = u | f;
  return u;
}

std::vector<VertexId> SimplicialComplex::isolated_vertices() const {
  return Face::ground(n_).minus(vertex_set()).vertices();
}

std::vector<Face> SimplicialComplex::faces() const {
  std::unordered_set<Face::Mask> seen;
  for (Face f : facets_) {
    for_each_subset(f, [&](Face s) { seen.insert(s.mask()); });
  }
  std::vector<Face> out;
  out.reserve(seen.size());
  for (Face::Mask m : seen) out.emplace_back(m);
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

// ---------------------------------------------------------------------------
// Operations

FaceFamily minimal_nonfaces(const SimplicialComplex& K) {
  // Every minimal non-face sigma is tau + {v} with v = max(sigma) and tau a face.
  std::vector<Face> found;
  if (K.is_void()) {
    // Nothing is a face, so the empty set would be the unique minimal non-face;
    // families never contain it.
    throw Error(ErrorCode::kVoidComplex, "void complex has no non-empty minimal non-faces");
  }
  for (Face tau : K.faces()) {
    for (VertexId v = tau.max_vertex() + 1; v <= K.n(); ++v) {
      const Face sigma = tau.with(v);
      if (K.contains(sigma)) continue;
      bool minimal = true;
      for (VertexId u : sigma.vertices()) {
        if (u != v && !K.contains(sigma.without(u))) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.push_back(sigma);
    }
  }
  return FaceFamily(K.n(), std::move(found));
}

SimplicialComplex complex_of(int n, const FaceFamily& F) {
  check_ground(n);
  for (Face f : F.sets()) {
    if (f.empty()) throw Error(ErrorCode::kEmptyFaceInFamily, "family contains the empty set");
    check_in_range(n, f);
  }
  // Maximal F-free sets: repeatedly find a member inside the current set and
  // branch on which of its vertices to drop.
  std::vector<Face> candidates;
  std::unordered_set<Face::Mask> visited;
  std::vector<Face> stack{Face::ground(n)};
  while (!stack.empty()) {
    const Face s = stack.back();
    stack.pop_back();
    if (!visited.insert(s.mask()).second) continue;
    const auto hit = std::find_if(F.sets().begin(), F.sets().end(),
                                  [s](Face f) { return f.subset_of(s); });
    if (hit == F.sets().end()) {
      candidates.push_back(s);
      continue;
    }
    for (VertexId v : hit->vertices()) stack.push_back(s.without(v));
  }
  return SimplicialComplex::from_facets(n, std::move(candidates));
}

SimplicialComplex skeleton(const SimplicialComplex& K, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "skeleton dimension must be >= 0");
  std::vector<Face> facets;
  for (Face f : K.facets()) {
    if (f.size() <= k + 1) {
      facets.push_back(f);
    } else {
      for_each_k_subset(f, k + 1, [&](Face s) { facets.push_back(s); });
    }
  }
  return SimplicialComplex::from_facets(K.n(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2) {
  const int n = K1.n() + K2.n();
  std::vector<Face> facets;
  for (Face a : K1.facets()) {
    for (Face b : K2.facets()) facets.push_back(a | b.shifted(K1.n()));
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex full_simplex(int m) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "simplex dimension must be >= 0");
  return SimplicialComplex::from_facets(m + 1, {Face::ground(m + 1)});
}

SimplicialComplex boundary_simplex(int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "boundary_simplex needs m >= 1");
  std::vector<Face> facets;
  const Face all = Face::ground(m + 1);
  for (VertexId v = 1; v <= m + 1; ++v) facets.push_back(all.without(v));
  return SimplicialComplex::from_facets(m + 1, std::move(facets));
}

SimplicialComplex vkf_complex(int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "vkf_complex needs d >= 1");
  return skeleton(full_simplex(2 * d + 2), d);
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& K) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(0, K.dimension() + 1)), 0);
  for (Face f : K.faces()) {
    if (!f.empty()) ++counts[static_cast<std::size_t>(f.size() - 1)];
  }
  return counts;
}

SimplicialComplex relabel(const SimplicialComplex& K, std::span<const VertexId> perm) {
  if (static_cast<int>(perm.size()) != K.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation length differs from ground set");
  }
  std::vector<Face> facets;
  facets.reserve(K.facets().size());
  for (Face f : K.facets()) {
    Face g;
    for (VertexId v : f.vertices()) g = g.with(perm[static_cast<std::size_t>(v - 1)]);
    facets.push_back(g);
  }
  return SimplicialComplex::from_facets(K.n(), std::move(facets));
}

}  // namespace fewembed

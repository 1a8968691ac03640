#pragma once

#include <initializer_list>
#include <vector>

#include "fewembed/complex.hpp"
#include "fewembed/geometry.hpp"
#include "fewembed/random.hpp"
#include "oracle.hpp"

namespace testing_support {

using fewembed::Face;
using fewembed::FaceFamily;
using fewembed::SimplicialComplex;

inline std::vector<Face> faces(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<Face> out;
  for (auto l : lists) out.push_back(Face::of(std::vector<int>(l)));
  return out;
}

inline SimplicialComplex complex(int n, std::initializer_list<std::initializer_list<int>> facets) {
  return SimplicialComplex::from_facets(n, faces(facets));
}

inline FaceFamily family(int n, std::initializer_list<std::initializer_list<int>> sets) {
  return FaceFamily(n, faces(sets));
}

inline std::vector<oracle::Mask> masks(const std::vector<Face>& fs) {
  std::vector<oracle::Mask> out;
  for (Face f : fs) out.push_back(f.mask());
  return out;
}

inline std::vector<Face> from_masks(const std::vector<oracle::Mask>& ms) {
  std::vector<Face> out;
  for (auto m : ms) out.push_back(Face(m));
  return out;
}

/// Octahedron on [6] with antipodal pairs (1,4), (2,5), (3,6).
inline SimplicialComplex octahedron() {
  return fewembed::complex_of(6, family(6, {{1, 4}, {2, 5}, {3, 6}}));
}

inline SimplicialComplex octahedron_minus_123() {
  const SimplicialComplex oct = octahedron();
  std::vector<Face> fs;
  for (Face f : oct.facets()) {
    if (f != Face{1, 2, 3}) fs.push_back(f);
  }
  return SimplicialComplex::from_facets(6, fs);
}

/// All k-subsets of [n].
inline std::vector<Face> k_subsets(int n, int k) {
  std::vector<Face> out;
  fewembed::for_each_k_subset(Face::ground(n), k, [&](Face f) { out.push_back(f); });
  std::sort(out.begin(), out.end());
  return out;
}

inline fewembed::Placement placement(int dim, bool on_sphere,
                                     std::initializer_list<std::pair<int, std::vector<int>>> pts) {
  fewembed::Placement P;
  P.dim = dim;
  P.on_sphere = on_sphere;
  for (const auto& [v, xs] : pts) {
    fewembed::RationalVector x;
    for (int c : xs) x.emplace_back(c);
    P.coords.emplace(v, std::move(x));
  }
  return P;
}

/// Vertices 1..n at random rationals p/q with |p| <= 20, 1 <= q <= 7.
inline fewembed::Placement random_placement(int n, int dim, fewembed::SplitMix64& rng) {
  fewembed::Placement P;
  P.dim = dim;
  for (int v = 1; v <= n; ++v) {
    fewembed::RationalVector x;
    for (int i = 0; i < dim; ++i) {
      fewembed::Rational q(static_cast<long>(rng.between(-20, 20)), static_cast<unsigned long>(rng.between(1, 7)));
      q.canonicalize();
      x.push_back(q);
    }
    P.coords.emplace(v, std::move(x));
  }
  return P;
}

}  // namespace testing_support

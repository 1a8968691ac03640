#include <gtest/gtest.h>

#include "expect.hpp"
#include "fewembed/combinatorics.hpp"
#include "fewembed/enumerate.hpp"
#include "fewembed/geometry.hpp"
#include "fewembed/lp.hpp"
#include "fewembed/verify.hpp"
#include "helpers.hpp"

using namespace fewembed;
using namespace testing_support;

namespace {

Placement octahedron_placement() {
  return placement(3, true,
                   {{1, {1, 0, 0}}, {2, {0, 1, 0}}, {3, {0, 0, 1}}, {4, {-1, 0, 0}}, {5, {0, -1, 0}}, {6, {0, 0, -1}}});
}

int orient(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  const Rational v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sgn(v);
}

bool on_segment(const RationalVector& p, const RationalVector& a, const RationalVector& b) {
  return orient(a, b, p) == 0 && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_meet(const RationalVector& a, const RationalVector& b, const RationalVector& c, const RationalVector& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

/// Is this placement of a graph (faces of size <= 2) a straight-line
/// embedding in the plane? Independent of the LP machinery.
bool planar_graph_ok(const SimplicialComplex& K, const Placement& P) {
  std::vector<Face> cells;
  for (Face f : K.faces()) {
    if (!f.empty()) cells.push_back(f);
  }
  auto pts = [&](Face f) {
    std::vector<RationalVector> out;
    for (VertexId v : f.vertices()) out.push_back(P.at(v));
    if (out.size() == 1) out.push_back(out[0]);
    return out;
  };
  for (Face f : cells) {
    if (f.size() == 2 && P.at(f.vertices()[0]) == P.at(f.vertices()[1])) return false;
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const Face a = cells[i], b = cells[j];
      const Face shared = a & b;
      const auto pa = pts(a), pb = pts(b);
      if (shared.empty()) {
        if (segments_meet(pa[0], pa[1], pb[0], pb[1])) return false;
      } else if (a.size() == 2 && b.size() == 2) {
        // Edges sharing one vertex: only collinear overlap is a problem.
        const VertexId s = shared.vertices()[0];
        const VertexId x = a.minus(shared).vertices()[0], y = b.minus(shared).vertices()[0];
        if (orient(P.at(s), P.at(x), P.at(y)) == 0) {
          const RationalVector &o = P.at(s), &px = P.at(x), &py = P.at(y);
          const Rational dotv = (px[0] - o[0]) * (py[0] - o[0]) + (px[1] - o[1]) * (py[1] - o[1]);
          if (dotv > 0) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST(Geodesic, OctahedronPasses) {
  const auto c = verify_geodesic_embedding(octahedron(), octahedron_placement());
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.mode, VerifyMode::kGeodesic);
  EXPECT_EQ(c.independence.size(), 8u);
  EXPECT_EQ(c.pairs.size(), 28u);
  for (const auto& p : c.pairs) {
    EXPECT_EQ(p.status, PairStatus::kProper);
    if ((p.sigma & p.tau).empty()) {
      ASSERT_TRUE(p.farkas.has_value());
    } else {
      ASSERT_TRUE(p.off_shared_weight.has_value());
      EXPECT_EQ(*p.off_shared_weight, 0);
    }
  }
  EXPECT_FALSE(c.complex_form.empty());
  EXPECT_EQ(c.placement_hash, octahedron_placement().fingerprint());
}

TEST(Geodesic, CoincidentVertexFails) {
  auto P = octahedron_placement();
  P.coords[4] = P.coords[1];
  const auto c = verify_geodesic_embedding(octahedron(), P);
  EXPECT_FALSE(c.pass);
  ASSERT_TRUE(c.offending_pair.has_value());
  const auto bad = check_pair(VerifyMode::kGeodesic, P, Face{1, 2, 3}, Face{2, 3, 4});
  EXPECT_EQ(bad.status, PairStatus::kOverlap);
  ASSERT_TRUE(bad.off_shared_weight.has_value());
  EXPECT_GT(*bad.off_shared_weight, 0);
}

TEST(Geodesic, TriangleOnSimplexVectors) {
  const auto pts = simplex_on_sphere(2);
  Placement P;
  P.dim = 2;
  P.on_sphere = true;
  for (int v = 1; v <= 3; ++v) P.coords[v] = pts[static_cast<std::size_t>(v - 1)];
  const auto c = verify_geodesic_embedding(boundary_simplex(2), P);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.pairs.size(), 3u);
}

TEST(Geodesic, DependentFacetFails) {
  // A full triangle at three coplanar unit vectors.
  const auto pts = simplex_on_sphere(2);
  Placement P;
  P.dim = 2;
  P.on_sphere = true;
  for (int v = 1; v <= 3; ++v) P.coords[v] = pts[static_cast<std::size_t>(v - 1)];
  const auto c = verify_geodesic_embedding(full_simplex(2), P);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.offending_facet, (Face{1, 2, 3}));
}

TEST(Geodesic, Errors) {
  auto P = octahedron_placement();
  P.on_sphere = false;
  expect_code(ErrorCode::kNotOnSphere, [&] { verify_geodesic_embedding(octahedron(), P); });
  P.on_sphere = true;
  P.coords[1] = {2, 0, 0};
  expect_code(ErrorCode::kNotOnSphere, [&] { verify_geodesic_embedding(octahedron(), P); });
  P = octahedron_placement();
  P.coords.erase(6);
  expect_code(ErrorCode::kUnplacedVertex, [&] { verify_geodesic_embedding(octahedron(), P); });
}

TEST(Linear, SquareCycle) {
  const auto K = complex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const auto P = placement(2, false, {{1, {0, 0}}, {2, {1, 0}}, {3, {1, 1}}, {4, {0, 1}}});
  EXPECT_TRUE(verify_linear_embedding(K, P).pass);
  // Crossed labelling: edges {1,2} and {3,4} become the diagonals.
  const auto X = placement(2, false, {{1, {0, 0}}, {2, {1, 1}}, {3, {1, 0}}, {4, {0, 1}}});
  const auto c = verify_linear_embedding(K, X);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.offending_pair, std::make_pair(Face{1, 2}, Face{3, 4}));
}

TEST(Linear, K5NeverPlanar) {
  SplitMix64 rng(17);
  const auto K = vkf_complex(1);
  for (int t = 0; t < 30; ++t) EXPECT_FALSE(verify_linear_embedding(K, random_placement(5, 2, rng)).pass);
}

TEST(Linear, SchlegelOutput) {
  const auto r = linearize(octahedron_minus_123(), 2);
  ASSERT_EQ(r.kind, LinearizeKind::kLinearPlacement);
  EXPECT_TRUE(verify_linear_embedding(octahedron_minus_123(), r.placement).pass);
}

TEST(Linear, DegenerateFacetFails) {
  const auto K = complex(3, {{1, 2, 3}});
  const auto P = placement(2, false, {{1, {0, 0}}, {2, {1, 1}}, {3, {2, 2}}});
  const auto c = verify_linear_embedding(K, P);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.offending_facet, (Face{1, 2, 3}));
}

TEST(Linear, GraphsAgainstOrientationOracle) {
  // Small integer grids make collinear and coincident cases common.
  SplitMix64 rng(23);
  const auto graphs = sample_complexes(5, 150, 31);
  int checked = 0;
  for (const auto& G : graphs) {
    if (G.is_void()) continue;
    const auto K = skeleton(G, 1);
    if (K.dimension() < 0) continue;
    for (int t = 0; t < 4; ++t) {
      Placement P;
      P.dim = 2;
      for (VertexId v = 1; v <= 5; ++v) {
        P.coords[v] = {Rational(static_cast<long>(rng.between(0, 3))), Rational(static_cast<long>(rng.between(0, 3)))};
      }
      ASSERT_EQ(verify_linear_embedding(K, P).pass, planar_graph_ok(K, P));
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(Linear, FacetPairsMatchAllFaces) {
  SplitMix64 rng(8);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& K : enumerate_complexes(n)) {
      if (K.dimension() < 0) continue;
      const Placement P = random_placement(n, 2, rng);
      const Placement Q = random_placement(n, 3, rng);
      for (const Placement* X : {&P, &Q}) {
        ASSERT_EQ(verify_linear_embedding(K, *X).pass, verify_linear_embedding(K, *X, PairScope::kAllFaces).pass);
      }
      if (n - 3 >= 1 && decide_embeddability(K, n - 3).decision == Decision::kEmbedsInSphere) {
        const auto e = construct_embedding(n, minimal_nonfaces(K));
        ASSERT_TRUE(verify_geodesic_embedding(K, e.placement, PairScope::kAllFaces).pass);
      }
    }
  }
}

TEST(Linear, PassImpliesNoWitness) {
  for (int n = 4; n <= 5; ++n) {
    for (const auto& K : enumerate_complexes(n)) {
      const auto v = decide_embeddability(K, n - 3);
      if (v.decision != Decision::kEmbedsInSphere) continue;
      const auto r = linearize(K, n - 3);
      if (r.kind != LinearizeKind::kLinearPlacement) continue;
      ASSERT_TRUE(verify_linear_embedding(K, r.placement).pass);
      ASSERT_FALSE(overlap_witness(K, r.placement).has_value());
    }
  }
}

TEST(Witness, K5Example) {
  const auto K = vkf_complex(1);
  const auto P = placement(2, false, {{1, {0, 0}}, {2, {4, 0}}, {3, {2, 3}}, {4, {2, 1}}, {5, {100, 100}}});
  const auto w = overlap_witness(K, P);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(witness_is_valid(K, P, *w));
  EXPECT_FALSE(w->sigma.intersects(w->tau));
}

TEST(Witness, FarSegmentsNone) {
  const auto K = complex(4, {{1, 2}, {3, 4}});
  const auto P = placement(1, false, {{1, {0}}, {2, {1}}, {3, {5}}, {4, {6}}});
  EXPECT_FALSE(overlap_witness(K, P).has_value());
}

TEST(Witness, SmallestPairFirst) {
  // Vertex 3 sits on edge {1,2}; that vertex-edge pair beats any edge pair.
  const auto K = complex(4, {{1, 2}, {3, 4}});
  const auto P = placement(2, false, {{1, {0, 0}}, {2, {2, 0}}, {3, {1, 0}}, {4, {1, 1}}});
  const auto w = overlap_witness(K, P);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->sigma, (Face{3}));
  EXPECT_EQ(w->tau, (Face{1, 2}));
  EXPECT_EQ(w->point, (RationalVector{1, 0}));
}

TEST(Witness, VkfTwoInFourSpace) {
  SplitMix64 rng(41);
  const auto K = vkf_complex(2);
  for (int t = 0; t < 10; ++t) {
    const auto P = random_placement(7, 4, rng);
    const auto w = overlap_witness(K, P);
    ASSERT_TRUE(w.has_value());
    ASSERT_TRUE(witness_is_valid(K, P, *w));
  }
}

TEST(Witness, InvalidWitnessRejected) {
  const auto K = vkf_complex(1);
  const auto P = placement(2, false, {{1, {0, 0}}, {2, {4, 0}}, {3, {2, 3}}, {4, {2, 1}}, {5, {100, 100}}});
  auto w = *overlap_witness(K, P);
  w.lambda[0] += 1;
  EXPECT_FALSE(witness_is_valid(K, P, w));
  auto shared = *overlap_witness(K, P);
  shared.tau = shared.sigma;
  EXPECT_FALSE(witness_is_valid(K, P, shared));
}

TEST(CrossCheck, Octahedron) {
  const auto r = float_cross_check(octahedron(), octahedron_placement(), VerifyMode::kGeodesic, 50, 1);
  EXPECT_EQ(r.disagreements, 0u);
  EXPECT_GE(r.pair_checks, 28u);
}

TEST(CrossCheck, CoincidentFailAgrees) {
  auto P = octahedron_placement();
  P.coords[4] = P.coords[1];
  const auto r = float_cross_check(octahedron(), P, VerifyMode::kGeodesic, 0, 1);
  EXPECT_EQ(r.disagreements, 0u);
}

TEST(CrossCheck, RandomPlacements) {
  SplitMix64 rng(77);
  std::size_t pairs = 0, disagreements = 0;
  const auto K = vkf_complex(1);
  while (pairs < 10000) {
    const auto r = float_cross_check(K, random_placement(5, 2, rng), VerifyMode::kLinear, 60, rng.next());
    pairs += r.pair_checks;
    disagreements += r.disagreements;
  }
  EXPECT_EQ(disagreements, 0u);
}

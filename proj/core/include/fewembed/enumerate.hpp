#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fewembed/complex.hpp"

namespace fewembed {

inline constexpr int kMaxExhaustiveGroundSet = 5;

/// Calls `visit` once for every antichain of non-empty subsets of [n]
/// (including the empty antichain). Antichains are produced in a fixed
/// deterministic order. Throws kGroundSetTooLarge for n > 5.
void for_each_antichain(int n, const std::function<void(const FaceFamily&)>& visit);

/// One representative per isomorphism class of complexes on [n] that contain
/// the empty face, sorted by canonical form. Each representative is the
/// canonically relabeled complex. Throws kGroundSetTooLarge for n > 5.
std::vector<SimplicialComplex> enumerate_complexes(int n);

/// Pseudorandom minimal-non-face families on [n] drawn from SplitMix64(seed);
/// each is reduced to an antichain. Sizes of drawn sets favour 2..n-1; a
/// singleton appears with small probability.
std::vector<FaceFamily> sample_families(int n, std::size_t count, std::uint64_t seed);

/// complex_of applied to sample_families.
std::vector<SimplicialComplex> sample_complexes(int n, std::size_t count, std::uint64_t seed);

}  // namespace fewembed

#pragma once

#include <string>
#include <vector>

#include "fewembed/complex.hpp"

namespace fewembed {

inline constexpr int kMaxCanonicalGroundSet = 9;

/// Byte string identifying a complex up to vertex relabeling (for fixed n).
///
/// Layout: one byte n, the facet count as a little-endian u16, then the
/// facet bitmasks of the minimizing relabeling in ascending numeric order,
/// each as a little-endian u16.
struct CanonicalForm {
  std::string bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Minimum over all n! relabelings. Throws kGroundSetTooLarge for n > 9.
CanonicalForm canonical_form(const SimplicialComplex& K);

/// The relabeled copy of K whose encoding is canonical_form(K).
SimplicialComplex canonical_representative(const SimplicialComplex& K);

}  // namespace fewembed

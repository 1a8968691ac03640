#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fewembed {

/// 1-based vertex label.
using VertexId = int;

/// Largest ground set a Face bitmask can address.
inline constexpr int kMaxGroundSet = 32;

/// A finite vertex set stored as a bitmask (bit v-1 <=> vertex v).
///
/// Iteration and printing always produce the strictly increasing vertex list.
/// The ordering operator is lexicographic on those lists, so [1,2] < [1,2,3]
/// < [1,3] < [2].
class Face {
 public:
  using Mask = std::uint32_t;

  constexpr Face() = default;
  constexpr explicit Face(Mask mask) : mask_(mask) {}
  Face(std::initializer_list<VertexId> vertices);

  /// Builds a face from an arbitrary vertex list; duplicates collapse.
  /// Throws Error(kVertexOutOfRange) for ids outside 1..kMaxGroundSet.
  static Face of(std::span<const VertexId> vertices);

  /// {1, ..., n}.
  static constexpr Face ground(int n) {
    return Face(n >= kMaxGroundSet ? ~Mask{0} : ((Mask{1} << n) - 1));
  }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(VertexId v) const { return (mask_ >> (v - 1)) & 1U; }
  constexpr bool subset_of(Face other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(Face other) const { return (mask_ & other.mask_) != 0; }
  /// Largest vertex id, or 0 for the empty face.
  constexpr VertexId max_vertex() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

  constexpr Face with(VertexId v) const { return Face(mask_ | (Mask{1} << (v - 1))); }
  constexpr Face without(VertexId v) const { return Face(mask_ & ~(Mask{1} << (v - 1))); }
  constexpr Face operator|(Face o) const { return Face(mask_ | o.mask_); }
  constexpr Face operator&(Face o) const { return Face(mask_ & o.mask_); }
  constexpr Face minus(Face o) const { return Face(mask_ & ~o.mask_); }
  /// Every vertex shifted up by `offset`.
  constexpr Face shifted(int offset) const { return Face(mask_ << offset); }

  std::vector<VertexId> vertices() const;
  std::string to_string() const;

  friend constexpr bool operator==(Face a, Face b) { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(Face a, Face b);

 private:
  Mask mask_ = 0;
};

/// Lexicographic comparison of the sorted vertex lists.
constexpr bool lex_less(Face a, Face b) {
  const Face::Mask x = a.mask(), y = b.mask();
  if (x == y) return false;
  const Face::Mask diff = x ^ y;
  const Face::Mask low = diff & (~diff + 1);
  // Bits strictly above the first differing position. `low << 1` may wrap to
  // zero for bit 31, which correctly leaves nothing above.
  const Face::Mask above = ~((low << 1) - 1);
  if (x & low) return (y & above) != 0;  // y is a proper prefix of x otherwise
  return (x & above) == 0;
}

/// Sort by (size, lexicographic).
constexpr bool size_lex_less(Face a, Face b) {
  return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
}

/// Calls `fn(Face)` for every subset of `f` (including empty and f itself).
template <class Fn>
void for_each_subset(Face f, Fn&& fn) {
  const Face::Mask m = f.mask();
  Face::Mask s = m;
  while (true) {
    fn(Face(s));
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

/// Calls `fn(Face)` for every k-subset of `f`.
template <class Fn>
void for_each_k_subset(Face f, int k, Fn&& fn) {
  for_each_subset(f, [&](Face s) {
    if (s.size() == k) fn(s);
  });
}

}  // namespace fewembed

#include "fewembed/face.hpp"

#include "fewembed/error.hpp"

namespace fewembed {

Face::Face(std::initializer_list<VertexId> vertices)
    : Face(of(std::span<const VertexId>(vertices.begin(), vertices.size()))) {}

Face Face::of(std::span<const VertexId> vertices) {
  Mask m = 0;
  for (VertexId v : vertices) {
    if (v < 1 || v > kMaxGroundSet) {
      throw Error(ErrorCode::kVertexOutOfRange, "vertex id " + std::to_string(v));
    }
    m |= Mask{1} << (v - 1);
  }
  return Face(m);
}

std::vector<VertexId> Face::vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for (VertexId v : vertices()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::strong_ordering operator<=>(Face a, Face b) {
  if (a == b) return std::strong_ordering::equal;
  return lex_less(a, b) ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace fewembed

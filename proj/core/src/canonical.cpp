#include "fewembed/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "fewembed/error.hpp"

namespace fewembed {
namespace {

struct Best {
  std::vector<Face::Mask> masks;
};

Best minimize(const SimplicialComplex& K) {
  const int n = K.n();
  if (n > kMaxCanonicalGroundSet) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "canonical_form supports n <= 9, got " + std::to_string(n));
  }
  std::array<int, kMaxCanonicalGroundSet> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);

  // Facets as lists of 0-based vertex indices, built once.
  std::vector<std::vector<int>> facets;
  for (Face f : K.facets()) {
    std::vector<int> vs;
    for (VertexId v : f.vertices()) vs.push_back(v - 1);
    facets.push_back(std::move(vs));
  }

  Best best;
  std::vector<Face::Mask> cur(facets.size());
  bool first = true;
  do {
    for (std::size_t i = 0; i < facets.size(); ++i) {
      Face::Mask m = 0;
      for (int v : facets[i]) m |= Face::Mask{1} << perm[static_cast<std::size_t>(v)];
      cur[i] = m;
    }
    std::sort(cur.begin(), cur.end());
    if (first || cur < best.masks) {
      best.masks = cur;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 0xF];
  }
  return out;
}

CanonicalForm canonical_form(const SimplicialComplex& K) {
  const Best best = minimize(K);
  CanonicalForm form;
  auto put16 = [&](unsigned v) {
    form.bytes += static_cast<char>(v & 0xFF);
    form.bytes += static_cast<char>((v >> 8) & 0xFF);
  };
  form.bytes += static_cast<char>(K.n());
  put16(static_cast<unsigned>(best.masks.size()));
  for (Face::Mask m : best.masks) put16(m);
  return form;
}

SimplicialComplex canonical_representative(const SimplicialComplex& K) {
  const Best best = minimize(K);
  std::vector<Face> facets;
  for (Face::Mask m : best.masks) facets.emplace_back(m);
  return SimplicialComplex::from_facets(K.n(), std::move(facets));
}

}  // namespace fewembed

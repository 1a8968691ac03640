#include "fewembed/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fewembed/canonical.hpp"
#include "fewembed/error.hpp"
#include "fewembed/random.hpp"

namespace fewembed {
namespace {

void check_exhaustive(int n) {
  if (n < 1) throw Error(ErrorCode::kEmptyGroundSet, "ground set size must be >= 1");
  if (n > kMaxExhaustiveGroundSet) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "exhaustive enumeration supports n <= 5, got " + std::to_string(n));
  }
}

void extend(int n, Face::Mask next, Face::Mask last, std::vector<Face>& chosen,
            const std::function<void(const FaceFamily&)>& visit) {
  if (next > last) {
    visit(FaceFamily(n, chosen));
    return;
  }
  const Face s(next);
  const bool compatible = std::none_of(chosen.begin(), chosen.end(), [s](Face t) {
    return t.subset_of(s) || s.subset_of(t);
  });
  if (compatible) {
    chosen.push_back(s);
    extend(n, next + 1, last, chosen, visit);
    chosen.pop_back();
  }
  extend(n, next + 1, last, chosen, visit);
}

Face random_subset(int n, int size, SplitMix64& rng) {
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  Face f;
  for (int i = 0; i < size; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    f = f.with(pool[static_cast<std::size_t>(i)]);
  }
  return f;
}

}  // namespace

void for_each_antichain(int n, const std::function<void(const FaceFamily&)>& visit) {
  check_exhaustive(n);
  std::vector<Face> chosen;
  extend(n, 1, Face::ground(n).mask(), chosen, visit);
}

std::vector<SimplicialComplex> enumerate_complexes(int n) {
  std::map<CanonicalForm, SimplicialComplex> classes;
  for_each_antichain(n, [&](const FaceFamily& F) {
    const SimplicialComplex K = complex_of(n, F);
    CanonicalForm form = canonical_form(K);
    if (!classes.contains(form)) classes.emplace(std::move(form), canonical_representative(K));
  });
  std::vector<SimplicialComplex> out;
  out.reserve(classes.size());
  for (auto& [form, K] : classes) out.push_back(std::move(K));
  return out;
}

std::vector<FaceFamily> sample_families(int n, std::size_t count, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kEmptyGroundSet, "ground set size must be >= 1");
  if (n > kMaxGroundSet) throw Error(ErrorCode::kGroundSetTooLarge, "ground set too large");
  SplitMix64 rng(seed);
  std::vector<FaceFamily> out;
  out.reserve(count);
  const int lo = std::min(2, n);
  const int hi = std::max(lo, n - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const auto members = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<Face> sets;
    for (int j = 0; j < members; ++j) {
      const int size = rng.below(16) == 0 ? 1 : static_cast<int>(rng.between(lo, hi));
      sets.push_back(random_subset(n, size, rng));
    }
    out.push_back(FaceFamily(n, minimal_elements(std::move(sets))));
  }
  return out;
}

std::vector<SimplicialComplex> sample_complexes(int n, std::size_t count, std::uint64_t seed) {
  std::vector<SimplicialComplex> out;
  out.reserve(count);
  for (const FaceFamily& F : sample_families(n, count, seed)) out.push_back(complex_of(n, F));
  return out;
}

}  // namespace fewembed

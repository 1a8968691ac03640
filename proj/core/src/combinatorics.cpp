#include "fewembed/combinatorics.hpp"

#include <algorithm>
#include <bit>

#include "fewembed/error.hpp"

namespace fewembed {

Face Matching::covered() const {
  Face u;
  for (Face f : sets) u = u | f;
  return u;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

bool is_intersecting(const FaceFamily& F) {
  const auto& s = F.sets();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!s[i].intersects(s[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matching number

namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(const std::vector<Face>& sets) : sets_(sets) {}

  Matching run() {
    // Greedy lexicographic matching is the initial incumbent; it is also the
    // first leaf of the include-first search below.
    for (Face f : sets_) {
      if (!f.intersects(greedy_used())) best_.push_back(f);
    }
    chosen_.clear();
    search(0, Face{});
    return Matching{best_};
  }

 private:
  Face greedy_used() const {
    Face u;
    for (Face f : best_) u = u | f;
    return u;
  }

  // Upper bound on how many more disjoint sets fit among sets_[from..] that
  // avoid `used`.
  int bound(std::size_t from, Face used) const {
    int count = 0;
    int min_size = kMaxGroundSet + 1;
    Face reach;
    for (std::size_t i = from; i < sets_.size(); ++i) {
      if (sets_[i].intersects(used)) continue;
      ++count;
      min_size = std::min(min_size, sets_[i].size());
      reach = reach | sets_[i];
    }
    if (count == 0) return 0;
    return std::min(count, reach.size() / min_size);
  }

  // Include-first DFS over lexicographically sorted sets: among matchings of
  // equal size the first one reached is lexicographically least, so only
  // strict improvements replace the incumbent.
  void search(std::size_t from, Face used) {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (from >= sets_.size()) return;
    if (static_cast<int>(chosen_.size()) + bound(from, used) <= static_cast<int>(best_.size())) {
      return;
    }
    for (std::size_t i = from; i < sets_.size(); ++i) {
      if (sets_[i].intersects(used)) continue;
      chosen_.push_back(sets_[i]);
      search(i + 1, used | sets_[i]);
      chosen_.pop_back();
      if (static_cast<int>(chosen_.size()) + bound(i + 1, used) <=
          static_cast<int>(best_.size())) {
        return;
      }
    }
  }

  const std::vector<Face>& sets_;
  std::vector<Face> best_;
  std::vector<Face> chosen_;
};

}  // namespace

Matching maximum_matching(const FaceFamily& F) {
  for (Face f : F.sets()) {
    if (f.empty()) throw Error(ErrorCode::kEmptyFaceInFamily, "family contains the empty set");
  }
  return MatchingSearch(F.sets()).run();
}

// ---------------------------------------------------------------------------
// Decisions

Verdict decide_embeddability(const SimplicialComplex& K, int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "target dimension d must be >= 1");
  if (K.is_void()) throw Error(ErrorCode::kVoidComplex, "cannot decide a void complex");

  Verdict v;
  v.n = K.n();
  v.d = d;
  v.minimal_nonfaces = minimal_nonfaces(K);
  v.isolated_vertices = K.isolated_vertices();
  if (v.n > d + 3) {
    v.decision = Decision::kOutOfScope;
    return v;
  }
  Matching m = maximum_matching(v.minimal_nonfaces);
  v.nu = m.size();
  v.matching = std::move(m);

  if (v.n <= d + 1) {
    v.decision = Decision::kEmbedsInSphere;
  } else if (v.n == d + 2) {
    v.full_simplex = K.is_full_simplex();
    v.decision = v.full_simplex ? Decision::kNotEmbeddable : Decision::kEmbedsInSphere;
  } else if (v.minimal_nonfaces.empty()) {
    // K is the full simplex on d+3 vertices: the empty family is vacuously
    // intersecting and the simplex does not fit in S^d.
    v.intersecting = true;
    v.decision = Decision::kNotEmbeddable;
  } else {
    v.intersecting = is_intersecting(v.minimal_nonfaces);
    v.decision = v.intersecting ? Decision::kNotEmbeddable : Decision::kEmbedsInSphere;
  }
  return v;
}

std::optional<int> ekr_embeddability(const SimplicialComplex& K, int d) {
  if (K.n() != d + 3) {
    throw Error(ErrorCode::kWrongGroundSetSize,
                "criterion needs n = d+3, got n=" + std::to_string(K.n()) +
                    " d=" + std::to_string(d));
  }
  const std::vector<std::uint64_t> f = f_vector(K);
  for (int k = 2; k <= (d + 3) / 2; ++k) {
    const std::uint64_t faces = static_cast<std::size_t>(k) <= f.size() ? f[static_cast<std::size_t>(k - 1)] : 0;
    if (faces < binomial(d + 2, k)) return k;
  }
  return std::nullopt;
}

FaceFamily star_family(int n, int k, VertexId center) {
  if (center < 1 || center > n) {
    throw Error(ErrorCode::kVertexOutOfRange, "star center " + std::to_string(center));
  }
  if (k < 1 || k > n) throw Error(ErrorCode::kInvalidArgument, "star size k out of range");
  std::vector<Face> sets;
  for_each_k_subset(Face::ground(n), k, [&](Face s) {
    if (s.contains(center)) sets.push_back(s);
  });
  return FaceFamily(n, std::move(sets));
}

// ---------------------------------------------------------------------------
// Maximum intersecting family as a maximum clique

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  Bits& and_not(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t x = words_[w]; x != 0; x &= x - 1) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Face> vertices)
      : vertices_(std::move(vertices)), adj_(vertices_.size(), Bits(vertices_.size())) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (std::size_t j = 0; j < vertices_.size(); ++j) {
        if (i != j && vertices_[i].intersects(vertices_[j])) adj_[i].set(j);
      }
    }
  }

  std::size_t size() const { return vertices_.size(); }

  // Lexicographically first maximal clique (vertices are in lex order).
  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> clique;
    Bits cand(size());
    for (std::size_t i = 0; i < size(); ++i) cand.set(i);
    while (!cand.none()) {
      std::size_t first = size();
      cand.for_each([&](std::size_t i) { first = std::min(first, i); });
      clique.push_back(first);
      cand = cand & adj_[first];
    }
    return clique;
  }

  // Maximum clique size through `root`, given a known clique of size `lower`.
  // Returns a strictly larger clique when one exists, else empty.
  std::vector<std::size_t> improve(std::size_t root, std::size_t lower) {
    best_size_ = lower;
    best_.clear();
    current_ = {root};
    expand(adj_[root]);
    return best_;
  }

 private:
  // Greedy sequential colouring of P in index order; classes are sets of
  // pairwise non-adjacent vertices. Produces vertices sorted by colour.
  void colour(const Bits& P, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) const {
    Bits uncoloured = P;
    std::size_t c = 0;
    while (!uncoloured.none()) {
      ++c;
      Bits q = uncoloured;
      while (!q.none()) {
        std::size_t v = size();
        q.for_each([&](std::size_t i) { v = std::min(v, i); });
        uncoloured.reset(v);
        q.reset(v);
        q.and_not(adj_[v]);
        order.push_back(v);
        colours.push_back(c);
      }
    }
  }

  void expand(Bits P) {
    std::vector<std::size_t> order, colours;
    colour(P, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colours[i] <= best_size_) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bits next = P & adj_[v];
      if (next.none()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
        }
      } else {
        expand(next);
      }
      current_.pop_back();
      P.reset(v);
    }
  }

 public:
  // First clique of size `target` in lexicographic include-first order.
  bool lex_first(std::size_t target, std::vector<std::size_t>& out) {
    Bits all(size());
    for (std::size_t i = 0; i < size(); ++i) all.set(i);
    current_.clear();
    return lex_expand(all, target, out);
  }

 private:
  bool lex_expand(Bits P, std::size_t target, std::vector<std::size_t>& out) {
    if (current_.size() == target) {
      out = current_;
      return true;
    }
    std::vector<std::size_t> order, colours;
    colour(P, order, colours);
    const std::size_t bound = colours.empty() ? 0 : colours.back();
    if (current_.size() + bound < target) return false;
    std::vector<std::size_t> members;
    P.for_each([&](std::size_t i) { members.push_back(i); });
    for (std::size_t v : members) {
      if (current_.size() + P.count() < target) return false;
      current_.push_back(v);
      P.reset(v);
      if (lex_expand(P & adj_[v], target, out)) return true;
      current_.pop_back();
    }
    return false;
  }

  std::vector<Face> vertices_;
  std::vector<Bits> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;

 public:
  Face vertex(std::size_t i) const { return vertices_[i]; }
};

}  // namespace

IntersectingFamilyResult max_intersecting_family(int n, int k) {
  if (k < 2 || n < 2 * k) {
    throw Error(ErrorCode::kInvalidArgument, "need 2 <= k and n >= 2k");
  }
  if (binomial(n, k) > kMaxIntersectingSearchSets) {
    throw Error(ErrorCode::kSearchBudgetExceeded,
                "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds the search budget");
  }
  std::vector<Face> ksets;
  for_each_k_subset(Face::ground(n), k, [&](Face s) { ksets.push_back(s); });
  std::sort(ksets.begin(), ksets.end());
  CliqueSearch search(std::move(ksets));

  std::vector<std::size_t> clique = search.greedy();
  // The symmetric group acts transitively on k-subsets, so a clique larger
  // than the incumbent exists iff one exists through vertex 0.
  const std::vector<std::size_t> larger = search.improve(0, clique.size());
  if (!larger.empty()) {
    std::vector<std::size_t> lex;
    search.lex_first(larger.size(), lex);
    clique = std::move(lex);
  }
  std::vector<Face> family;
  for (std::size_t i : clique) family.push_back(search.vertex(i));
  IntersectingFamilyResult result;
  result.size = family.size();
  result.family = FaceFamily(n, std::move(family));
  return result;
}

}  // namespace fewembed

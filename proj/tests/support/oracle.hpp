#pragma once

// Brute-force reference implementations for the tests. They work on raw
// bitmasks (bit v-1 is vertex v) and GMP rationals and share no code with the
// library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;

inline int bits(Mask m) { return __builtin_popcount(m); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Every subset of [n] that contains no member of F.
inline std::vector<Mask> faces_avoiding(int n, const std::vector<Mask>& F) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::none_of(F.begin(), F.end(), [s](Mask f) { return subset(f, s); })) out.push_back(s);
  }
  return out;
}

/// Every subset of some facet.
inline std::vector<Mask> faces_below(int n, const std::vector<Mask>& facets) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::any_of(facets.begin(), facets.end(), [s](Mask f) { return subset(s, f); })) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> maximal(const std::vector<Mask>& faces) {
  std::vector<Mask> out;
  for (Mask f : faces) {
    bool top = true;
    for (Mask g : faces) top = top && (g == f || !subset(f, g));
    if (top) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Non-faces all of whose one-smaller subsets are faces.
inline std::vector<Mask> minimal_nonfaces(int n, const std::vector<Mask>& faces) {
  const std::set<Mask> in(faces.begin(), faces.end());
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (in.count(s)) continue;
    bool minimal = true;
    for (int v = 0; v < n; ++v) {
      if ((s >> v & 1) && !in.count(s & ~(Mask{1} << v))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

/// Largest pairwise-disjoint subfamily, by trying every subfamily.
inline int matching_number(const std::vector<Mask>& F) {
  int best = 0;
  const std::size_t m = F.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    Mask used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(pick >> i & 1)) continue;
      ok = (used & F[i]) == 0;
      used |= F[i];
    }
    if (ok) best = std::max(best, __builtin_popcountll(pick));
  }
  return best;
}

inline bool intersecting(const std::vector<Mask>& F) {
  for (Mask a : F) {
    for (Mask b : F) {
      if ((a & b) == 0) return false;
    }
  }
  return true;
}

/// All non-void downward-closed families on [n], built by deciding the
/// subsets in order of size.
inline std::vector<std::vector<Mask>> downsets(int n) {
  std::vector<Mask> order;
  for (Mask s = 1; s < (Mask{1} << n); ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return bits(a) < bits(b); });
  std::vector<std::vector<Mask>> out;
  std::vector<char> in(std::size_t{1} << n, 0);
  in[0] = 1;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      std::vector<Mask> fam;
      for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (in[s]) fam.push_back(s);
      }
      out.push_back(std::move(fam));
      return;
    }
    const Mask s = order[i];
    bool allowed = true;
    for (int v = 0; v < n; ++v) {
      if ((s >> v & 1) && !in[s & ~(Mask{1} << v)]) allowed = false;
    }
    self(self, i + 1);
    if (allowed) {
      in[s] = 1;
      self(self, i + 1);
      in[s] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

inline Mask permute(Mask s, const std::vector<int>& perm) {
  Mask out = 0;
  for (std::size_t v = 0; v < perm.size(); ++v) {
    if (s >> v & 1) out |= Mask{1} << perm[v];
  }
  return out;
}

/// Smallest sorted face list over all relabelings.
inline std::vector<Mask> canonical(int n, const std::vector<Mask>& faces) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  do {
    std::vector<Mask> img;
    for (Mask f : faces) img.push_back(permute(f, perm));
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::size_t iso_classes(int n) {
  std::set<std::vector<Mask>> seen;
  for (const auto& fam : downsets(n)) seen.insert(canonical(n, fam));
  return seen.size();
}

// ---------------------------------------------------------------------------
// Linear algebra

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& M, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
    std::size_t p = r;
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[r]);
    const Q inv = 1 / M[r][c];
    for (Q& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c] == 0) continue;
      const Q f = M[i][c];
      for (std::size_t j = 0; j < M[i].size(); ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Is {x : A x = b, x >= 0} non-empty? Checks every independent column set
/// of size at most rows(A) for a non-negative basic solution.
inline bool feasible_by_bases(const Mat& A, const Vec& b) {
  const std::size_t m = A.size();
  const std::size_t cols = m == 0 ? 0 : A[0].size();
  if (m == 0) return true;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cols); ++pick) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(pick));
    if (k > m) continue;
    std::vector<std::size_t> B;
    for (std::size_t j = 0; j < cols; ++j) {
      if (pick >> j & 1) B.push_back(j);
    }
    Mat M(m, Vec(k + 1));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t t = 0; t < k; ++t) M[i][t] = A[i][B[t]];
      M[i][k] = b[i];
    }
    const auto piv = rref(M, k + 1);
    if (piv.size() != k || (k > 0 && piv.back() == k)) continue;  // dependent columns, or inconsistent
    bool nonneg = true;
    for (std::size_t t = 0; t < k; ++t) nonneg = nonneg && M[t][k] >= 0;
    if (nonneg) return true;
  }
  return false;
}

/// Hyperplane a.x = c through the chosen points, when they are affinely
/// independent and span a hyperplane. Returns (a, c).
inline std::optional<std::pair<Vec, Q>> hyperplane_through(const std::vector<Vec>& pts) {
  const std::size_t dim = pts.front().size();
  Mat M;
  for (const Vec& p : pts) {
    Vec row(p);
    row.push_back(-1);
    M.push_back(std::move(row));
  }
  const auto piv = rref(M, dim + 1);
  if (piv.size() != dim) return std::nullopt;
  std::size_t free = 0;
  while (std::find(piv.begin(), piv.end(), free) != piv.end()) ++free;
  Vec sol(dim + 1, 0);
  sol[free] = 1;
  for (std::size_t r = 0; r < piv.size(); ++r) sol[piv[r]] = -M[r][free];
  const Q c = sol[dim];
  sol.pop_back();
  if (std::all_of(sol.begin(), sol.end(), [](const Q& q) { return q == 0; })) return std::nullopt;
  return std::make_pair(sol, c);
}

inline Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Topology on tiny complexes

/// Is the complex with these faces (empty face included) a combinatorial
/// d-sphere, d <= 2? Uses purity, the pseudomanifold condition,
/// connectivity, sphere links and the Euler characteristic.
inline bool is_sphere(const std::vector<Mask>& faces, int d) {
  std::vector<Mask> nonempty;
  for (Mask f : faces) {
    if (f != 0) nonempty.push_back(f);
  }
  if (d == 0) {
    return nonempty.size() == 2 && bits(nonempty[0]) == 1 && bits(nonempty[1]) == 1;
  }
  const std::vector<Mask> top = maximal(faces);
  for (Mask f : top) {
    if (bits(f) != d + 1) return false;
  }
  for (Mask r : nonempty) {
    if (bits(r) != d) continue;
    const auto count = std::count_if(top.begin(), top.end(), [r](Mask f) { return subset(r, f); });
    if (count != 2) return false;
  }
  // Connected through shared vertices.
  Mask vertices = 0;
  for (Mask f : nonempty) vertices |= f;
  Mask reached = top.empty() ? 0 : top.front();
  for (bool grew = true; grew;) {
    grew = false;
    for (Mask f : top) {
      if ((f & reached) && !subset(f, reached)) {
        reached |= f;
        grew = true;
      }
    }
  }
  if (reached != vertices) return false;
  for (int v = 0; v < 32; ++v) {
    if (!(vertices >> v & 1)) continue;
    std::vector<Mask> link;
    for (Mask f : faces) {
      if (f >> v & 1) link.push_back(f & ~(Mask{1} << v));
    }
    if (!is_sphere(link, d - 1)) return false;
  }
  long chi = 0;
  for (Mask f : nonempty) chi += bits(f) % 2 == 1 ? 1 : -1;
  return chi == (d % 2 == 0 ? 2 : 0);
}

}  // namespace oracle

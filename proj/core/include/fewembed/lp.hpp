#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fewembed/rational.hpp"

namespace fewembed {

enum class LPStatus { kFeasible, kInfeasible, kUnbounded };

/// Outcome of an equality-form LP {x : A x = b, x_i >= 0 for i in nonneg}.
///
/// kFeasible and kUnbounded both carry a feasible `point`; kUnbounded is only
/// reported when an objective was requested and it has no finite maximum.
/// kInfeasible carries a Farkas vector y with y.A_j <= 0 on non-negative
/// columns, y.A_j == 0 on free columns and y.b > 0.
template <class T>
struct BasicLPResult {
  LPStatus status = LPStatus::kInfeasible;
  std::vector<T> point;
  std::vector<T> farkas;
  /// Maximum of the objective when one was given and is bounded.
  std::optional<T> optimum;

  bool feasible() const { return status != LPStatus::kInfeasible; }
};

using LPResult = BasicLPResult<Rational>;

/// Two-phase dense tableau simplex with Bland's rule.
///
/// Instantiated for Rational (exact, the default everywhere) and double
/// (tolerance 1e-9, used only for cross-checks). `objective`, when present,
/// is maximized. Throws kDimensionMismatch on inconsistent shapes.
template <class T>
BasicLPResult<T> solve_lp(const std::vector<std::vector<T>>& A, const std::vector<T>& b,
                          const std::vector<std::size_t>& nonneg,
                          const std::optional<std::vector<T>>& objective = std::nullopt);

inline LPResult lp_feasible(const RationalMatrix& A, const RationalVector& b,
                            const std::vector<std::size_t>& nonneg,
                            const std::optional<RationalVector>& objective = std::nullopt) {
  return solve_lp<Rational>(A, b, nonneg, objective);
}

/// Exact substitution checks used to re-verify LP outcomes.
bool satisfies(const RationalMatrix& A, const RationalVector& b,
               const std::vector<std::size_t>& nonneg, const RationalVector& x);
bool certifies_infeasibility(const RationalMatrix& A, const RationalVector& b,
                             const std::vector<std::size_t>& nonneg, const RationalVector& y);

extern template BasicLPResult<Rational> solve_lp<Rational>(
    const std::vector<std::vector<Rational>>&, const std::vector<Rational>&,
    const std::vector<std::size_t>&, const std::optional<std::vector<Rational>>&);
extern template BasicLPResult<double> solve_lp<double>(
    const std::vector<std::vector<double>>&, const std::vector<double>&,
    const std::vector<std::size_t>&, const std::optional<std::vector<double>>&);

}  // namespace fewembed

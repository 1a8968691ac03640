#include "fewembed/lp.hpp"

#include "fewembed/error.hpp"

namespace fewembed {
namespace {

int sign(const Rational& x) { return sgn(x); }
int sign(double x) {
  constexpr double kEps = 1e-9;
  return x > kEps ? 1 : (x < -kEps ? -1 : 0);
}

template <class T>
class Simplex {
 public:
  Simplex(const std::vector<std::vector<T>>& A, const std::vector<T>& b,
          const std::vector<std::size_t>& nonneg, std::size_t vars)
      : rows_(b.size()), vars_(vars) {
    for (const auto& row : A) {
      if (row.size() != vars_) throw Error(ErrorCode::kDimensionMismatch, "ragged constraint matrix");
    }
    if (A.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "A and b row counts differ");
    std::vector<bool> is_nonneg(vars_, false);
    for (std::size_t i : nonneg) {
      if (i >= vars_) throw Error(ErrorCode::kDimensionMismatch, "non-negativity index out of range");
      is_nonneg[i] = true;
    }
    // Free variables become x+ - x-.
    for (std::size_t v = 0; v < vars_; ++v) {
      column_var_.push_back(v);
      column_sign_.push_back(1);
      if (!is_nonneg[v]) {
        column_var_.push_back(v);
        column_sign_.push_back(-1);
      }
    }
    structural_ = column_var_.size();
    width_ = structural_ + rows_;
    row_sign_.assign(rows_, 1);
    tab_.assign(rows_, std::vector<T>(width_ + 1, T(0)));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (sign(b[i]) < 0) row_sign_[i] = -1;
      for (std::size_t c = 0; c < structural_; ++c) {
        tab_[i][c] = A[i][column_var_[c]] * T(column_sign_[c] * row_sign_[i]);
      }
      tab_[i][structural_ + i] = T(1);
      tab_[i][width_] = b[i] * T(row_sign_[i]);
    }
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) basis_[i] = structural_ + i;
    active_.assign(rows_, true);
  }

  BasicLPResult<T> run(const std::optional<std::vector<T>>& objective) {
    BasicLPResult<T> result;
    if (objective && objective->size() != vars_) {
      throw Error(ErrorCode::kDimensionMismatch, "objective length differs from variable count");
    }
    // Phase 1: minimize the sum of artificials.
    cost_.assign(width_ + 1, T(0));
    for (std::size_t c = 0; c <= width_; ++c) {
      if (c >= structural_ && c < width_) continue;  // artificials start at 0
      for (std::size_t i = 0; i < rows_; ++i) cost_[c] -= tab_[i][c];
    }
    optimize();
    if (sign(cost_[width_]) < 0) {  // -(phase-1 optimum) < 0
      result.status = LPStatus::kInfeasible;
      result.farkas.resize(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        // Reduced cost of artificial i is 1 - y_i.
        result.farkas[i] = (T(1) - cost_[structural_ + i]) * T(row_sign_[i]);
      }
      return result;
    }
    drive_out_artificials();

    result.status = LPStatus::kFeasible;
    if (objective) {
      cost_.assign(width_ + 1, T(0));
      for (std::size_t c = 0; c < structural_; ++c) {
        cost_[c] = -(*objective)[column_var_[c]] * T(column_sign_[c]);
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!active_[i] || basis_[i] >= structural_) continue;
        const T cb = cost_[basis_[i]];
        if (sign(cb) == 0) continue;
        for (std::size_t c = 0; c <= width_; ++c) cost_[c] -= cb * tab_[i][c];
      }
      if (!optimize()) {
        result.status = LPStatus::kUnbounded;
      } else {
        result.optimum = cost_[width_];  // max c.x = -(min -c.x) = cost rhs
      }
    }
    result.point.assign(vars_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!active_[i] || basis_[i] >= structural_) continue;
      const std::size_t c = basis_[i];
      result.point[column_var_[c]] += tab_[i][width_] * T(column_sign_[c]);
    }
    return result;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const T inv = T(1) / tab_[r][c];
    for (std::size_t j = 0; j <= width_; ++j) tab_[r][j] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sign(tab_[i][c]) == 0) continue;
      const T f = tab_[i][c];
      for (std::size_t j = 0; j <= width_; ++j) tab_[i][j] -= f * tab_[r][j];
    }
    if (sign(cost_[c]) != 0) {
      const T f = cost_[c];
      for (std::size_t j = 0; j <= width_; ++j) cost_[j] -= f * tab_[r][j];
    }
    basis_[r] = c;
  }

  // Bland's rule on structural columns. Returns false when unbounded.
  bool optimize() {
    while (true) {
      std::size_t enter = structural_;
      for (std::size_t c = 0; c < structural_; ++c) {
        if (sign(cost_[c]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == structural_) return true;
      std::size_t leave = rows_;
      T best_ratio(0);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!active_[i] || sign(tab_[i][enter]) <= 0) continue;
        const T ratio = tab_[i][width_] / tab_[i][enter];
        if (leave == rows_ || sign(T(ratio - best_ratio)) < 0 ||
            (sign(T(ratio - best_ratio)) == 0 && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) continue;
      std::size_t c = 0;
      while (c < structural_ && sign(tab_[i][c]) == 0) ++c;
      if (c < structural_) {
        pivot(i, c);
      } else {
        active_[i] = false;  // redundant equality
      }
    }
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t structural_ = 0;
  std::size_t width_ = 0;
  std::vector<std::size_t> column_var_;
  std::vector<int> column_sign_;
  std::vector<int> row_sign_;
  std::vector<std::vector<T>> tab_;
  std::vector<T> cost_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace

template <class T>
BasicLPResult<T> solve_lp(const std::vector<std::vector<T>>& A, const std::vector<T>& b,
                          const std::vector<std::size_t>& nonneg,
                          const std::optional<std::vector<T>>& objective) {
  // Without constraint rows the variable count comes from the objective.
  const std::size_t vars = !A.empty() ? A.front().size() : (objective ? objective->size() : 0);
  return Simplex<T>(A, b, nonneg, vars).run(objective);
}

template BasicLPResult<Rational> solve_lp<Rational>(
    const std::vector<std::vector<Rational>>&, const std::vector<Rational>&,
    const std::vector<std::size_t>&, const std::optional<std::vector<Rational>>&);
template BasicLPResult<double> solve_lp<double>(
    const std::vector<std::vector<double>>&, const std::vector<double>&,
    const std::vector<std::size_t>&, const std::optional<std::vector<double>>&);

bool satisfies(const RationalMatrix& A, const RationalVector& b,
               const std::vector<std::size_t>& nonneg, const RationalVector& x) {
  if (A.size() != b.size()) return false;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != x.size() || dot(A[i], x) != b[i]) return false;
  }
  for (std::size_t i : nonneg) {
    if (i < x.size() && sgn(x[i]) < 0) return false;
  }
  return true;
}

bool certifies_infeasibility(const RationalMatrix& A, const RationalVector& b,
                             const std::vector<std::size_t>& nonneg, const RationalVector& y) {
  if (y.size() != b.size() || A.size() != b.size()) return false;
  const std::size_t vars = A.empty() ? 0 : A.front().size();
  std::vector<bool> is_nonneg(vars, false);
  for (std::size_t i : nonneg) {
    if (i < vars) is_nonneg[i] = true;
  }
  for (std::size_t j = 0; j < vars; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < A.size(); ++i) s += y[i] * A[i][j];
    if (is_nonneg[j] ? sgn(s) > 0 : sgn(s) != 0) return false;
  }
  return sgn(dot(y, b)) > 0;
}

}  // namespace fewembed

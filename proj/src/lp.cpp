#include "brickforge/lp.hpp"

#include <stdexcept>

namespace brickforge {

namespace {

// Dense phase-1 simplex tableau. Columns 0..ncols-1 are structural variables,
// ncols..ncols+nrows-1 the artificial basis, last column the right-hand side.
class PhaseOneTableau {
 public:
  PhaseOneTableau(const std::vector<QVec>& a, const QVec& b)
      : nrows_(a.size()), ncols_(a.empty() ? 0 : a[0].size()) {
    t_.assign(nrows_, QVec(ncols_ + nrows_ + 1, Rat(0)));
    basis_.resize(nrows_);
    for (std::size_t r = 0; r < nrows_; ++r) {
      Rat sign = b[r] < 0 ? -1 : 1;
      for (std::size_t c = 0; c < ncols_; ++c) t_[r][c] = sign * a[r][c];
      t_[r][ncols_ + r] = 1;
      t_[r].back() = sign * b[r];
      basis_[r] = ncols_ + r;
    }
    // Objective: minimize the sum of artificials. Reduced-cost row starts as
    // minus the sum of constraint rows on structural columns.
    obj_.assign(ncols_ + nrows_ + 1, Rat(0));
    for (std::size_t r = 0; r < nrows_; ++r) {
      for (std::size_t c = 0; c < ncols_; ++c) obj_[c] -= t_[r][c];
      obj_.back() -= t_[r].back();
    }
  }

  // Returns a feasible point of the original system, or nullopt.
  std::optional<QVec> solve() {
    // Dantzig pricing converges much faster in practice; after a fixed number
    // of iterations switch to Bland's rule, which guarantees termination.
    std::size_t dantzig_budget = 12 * (nrows_ + ncols_) + 64;
    for (;;) {
      std::size_t enter = npos;
      if (dantzig_budget > 0) {
        --dantzig_budget;
        const Rat* most = nullptr;
        for (std::size_t c = 0; c < ncols_ + nrows_; ++c)
          if (obj_[c] < 0 && (most == nullptr || obj_[c] < *most)) {
            enter = c;
            most = &obj_[c];
          }
      } else {
        for (std::size_t c = 0; c < ncols_ + nrows_; ++c)
          if (obj_[c] < 0) {
            enter = c;
            break;
          }
      }
      if (enter == npos) break;
      // Ratio test, ties by smallest basis variable (Bland-compatible).
      std::size_t leave = npos;
      Rat best;
      for (std::size_t r = 0; r < nrows_; ++r) {
        if (t_[r][enter] <= 0) continue;
        Rat ratio = t_[r].back() / t_[r][enter];
        if (leave == npos || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == npos) throw std::logic_error("phase-1 objective unbounded");
      pivot(leave, enter);
    }
    if (obj_.back() != 0) return std::nullopt;
    QVec x(ncols_, Rat(0));
    for (std::size_t r = 0; r < nrows_; ++r)
      if (basis_[r] < ncols_) x[basis_[r]] = t_[r].back();
    return x;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void pivot(std::size_t row, std::size_t col) {
    Rat p = t_[row][col];
    for (Rat& x : t_[row]) x /= p;
    for (std::size_t r = 0; r < nrows_; ++r) {
      if (r == row || t_[r][col] == 0) continue;
      Rat f = t_[r][col];
      for (std::size_t c = 0; c < t_[r].size(); ++c) t_[r][c] -= f * t_[row][c];
    }
    if (obj_[col] != 0) {
      Rat f = obj_[col];
      for (std::size_t c = 0; c < obj_.size(); ++c) obj_[c] -= f * t_[row][c];
    }
    basis_[row] = col;
  }

  std::size_t nrows_, ncols_;
  std::vector<QVec> t_;
  QVec obj_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<QVec> lp_feasible_point(const std::vector<QVec>& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lp_feasible_point: row mismatch");
  if (a.empty()) return QVec{};
  for (const QVec& row : a)
    if (row.size() != a[0].size()) throw std::invalid_argument("lp_feasible_point: ragged matrix");
  return PhaseOneTableau(a, b).solve();
}

bool in_convex_hull(const QVec& point, const std::vector<QVec>& generators) {
  if (generators.empty()) return false;
  std::size_t dim = point.size();
  std::size_t k = generators.size();
  // Rows: one per coordinate plus the convexity row; columns: lambda_j >= 0.
  std::vector<QVec> a(dim + 1, QVec(k, Rat(0)));
  QVec b(dim + 1, Rat(0));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = generators[j][i];
    a[dim][j] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) b[i] = point[i];
  b[dim] = 1;
  return lp_feasible_point(a, b).has_value();
}

bool has_edge_functional(const QVec& u, const QVec& v, const std::vector<QVec>& others) {
  std::size_t dim = u.size();
  // Find f with f.(u - v) = 0 and f.(u - w) >= 1 for all w (strictness scaled
  // to 1). Free f is split as fplus - fminus; surplus variables close the
  // inequalities. All columns are then nonnegative.
  std::size_t k = others.size();
  std::size_t cols = 2 * dim + k;
  std::vector<QVec> a(k + 1, QVec(cols, Rat(0)));
  QVec b(k + 1, Rat(0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < dim; ++i) {
      Rat d = u[i] - others[r][i];
      a[r][i] = d;
      a[r][dim + i] = -d;
    }
    a[r][2 * dim + r] = -1;
    b[r] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    Rat d = u[i] - v[i];
    a[k][i] = d;
    a[k][dim + i] = -d;
  }
  b[k] = 0;
  return lp_feasible_point(a, b).has_value();
}

}  // namespace brickforge

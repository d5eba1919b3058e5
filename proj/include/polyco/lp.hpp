#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "polyco/core.hpp"
#include "polyco/polyhedron.hpp"

namespace polyco {

enum class Sense { Min, Max };

enum class LpStatus { Optimal, Infeasible, Unbounded, NumericInstability };

struct LpResult {
    LpStatus status = LpStatus::NumericInstability;
    Vector x;       // solution point in original coordinates (Optimal)
    double value = 0.0;
    Vector duals;   // one multiplier per row of P, >= 0 (Optimal)
    Vector ray;     // certifying recession direction (Unbounded)
};

namespace detail {

// Dense two-phase tableau simplex on min c.x s.t. A x = b, x >= 0, b >= 0.
// Dantzig pricing with a degeneracy counter that trips into Bland's rule.
class Simplex {
  public:
    Simplex(Matrix A, Vector b) : A_(std::move(A)), b_(std::move(b)) {
        nrows_ = static_cast<int>(A_.rows());
        ncols_ = static_cast<int>(A_.cols());
    }

    // 0 = solved to phase-2 optimality, 1 = unbounded, 2 = infeasible, 3 = numeric failure
    int run(const Vector& cost) {
        const int total = ncols_ + nrows_;  // structurals + artificials
        T_.resize(nrows_, total + 1);
        T_.leftCols(ncols_) = A_;
        T_.middleCols(ncols_, nrows_) = Matrix::Identity(nrows_, nrows_);
        T_.col(total) = b_;
        basis_.resize(nrows_);
        for (int i = 0; i < nrows_; ++i) basis_[i] = ncols_ + i;
        blocked_.assign(total, false);

        // Phase 1: minimize sum of artificials.
        Vector phase1 = Vector::Zero(total);
        phase1.tail(nrows_).setOnes();
        price_out(phase1, total);
        int rc = iterate(total);
        if (rc != 0) return 3;  // phase 1 cannot be unbounded
        double infeas = -obj_(total);
        double bmax = (nrows_ > 0) ? b_.cwiseAbs().maxCoeff() : 0.0;
        double feas_tol = 1e-7 * (1.0 + bmax);
        if (infeas > feas_tol) return 2;

        // Drive artificials out of the basis where possible, then block them.
        for (int i = 0; i < nrows_; ++i) {
            if (basis_[i] < ncols_) continue;
            int piv = -1;
            for (int j = 0; j < ncols_; ++j)
                if (std::abs(T_(i, j)) > 1e-7) { piv = j; break; }
            if (piv >= 0) pivot(i, piv);
            // else: redundant row; artificial stays basic at zero and is never priced in
        }
        for (int j = ncols_; j < total; ++j) blocked_[j] = true;

        Vector cost_ext = Vector::Zero(total);
        cost_ext.head(ncols_) = cost;
        price_out(cost_ext, total);
        rc = iterate(total);
        if (rc == 1) return 1;
        if (rc == 2) return 3;
        cost_ = cost;
        return 0;
    }

    double objective() const { return -obj_(ncols_ + nrows_); }

    Vector primal() const {
        Vector x = Vector::Zero(ncols_);
        for (int i = 0; i < nrows_; ++i)
            if (basis_[i] < ncols_) x[basis_[i]] = T_(i, ncols_ + nrows_);
        return x;
    }

    // Reduced cost of artificial column i equals the simplex multiplier y_i,
    // because the artificial has cost 0 in phase 2 and column e_i.
    double multiplier(int row) const { return -obj_(ncols_ + row); }

    // Ray for the unbounded entering column recorded by iterate().
    Vector ray() const {
        Vector d = Vector::Zero(ncols_);
        if (unbounded_col_ < ncols_) d[unbounded_col_] = 1.0;
        for (int i = 0; i < nrows_; ++i)
            if (basis_[i] < ncols_) d[basis_[i]] = -T_(i, unbounded_col_);
        return d;
    }

    long pivots() const { return pivots_; }

  private:
    void price_out(const Vector& cost, int total) {
        obj_.resize(total + 1);
        obj_.head(total) = cost.transpose();
        obj_(total) = 0.0;
        for (int i = 0; i < nrows_; ++i) {
            double cb = cost(basis_[i]);
            if (cb != 0.0) obj_ -= cb * T_.row(i);
        }
    }

    void pivot(int row, int col) {
        T_.row(row) /= T_(row, col);
        for (int i = 0; i < nrows_; ++i) {
            if (i == row) continue;
            double f = T_(i, col);
            if (f != 0.0) T_.row(i) -= f * T_.row(row);
        }
        double f = obj_(col);
        if (f != 0.0) obj_ -= f * T_.row(row);
        basis_[row] = col;
        ++pivots_;
    }

    // 0 = optimal, 1 = unbounded, 2 = iteration limit
    int iterate(int total) {
        const double tol = 1e-9;
        const long max_pivots = 20000 + 200L * (nrows_ + total);
        const long degen_limit = 50L * (nrows_ + 10);
        long degenerate = 0;
        bool bland = false;
        while (true) {
            int enter = -1;
            if (!bland) {
                double best = -tol;
                for (int j = 0; j < total; ++j) {
                    if (blocked_[j]) continue;
                    if (obj_(j) < best) { best = obj_(j); enter = j; }
                }
            } else {
                for (int j = 0; j < total; ++j) {
                    if (blocked_[j]) continue;
                    if (obj_(j) < -tol) { enter = j; break; }
                }
            }
            if (enter < 0) return 0;

            int leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            const int rhs = ncols_ + nrows_;
            for (int i = 0; i < nrows_; ++i) {
                double a = T_(i, enter);
                if (a <= tol) continue;
                double ratio = T_(i, rhs) / a;
                if (leave < 0 || ratio < best_ratio - 1e-12) {
                    best_ratio = ratio;
                    leave = i;
                } else if (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[leave]) {
                    leave = i;  // tie: lowest basis index
                }
            }
            if (leave < 0) { unbounded_col_ = enter; return 1; }
            if (best_ratio <= 1e-12) {
                if (++degenerate > degen_limit) bland = true;
            }
            pivot(leave, enter);
            if (pivots_ > max_pivots) return 2;
        }
    }

    Matrix A_;
    Vector b_;
    Matrix T_;
    Eigen::RowVectorXd obj_;
    std::vector<int> basis_;
    std::vector<bool> blocked_;
    Vector cost_;
    int nrows_ = 0, ncols_ = 0;
    int unbounded_col_ = -1;
    long pivots_ = 0;
};

}  // namespace detail

// Scalar LP over an H-representation polyhedron. Deterministic for fixed input.
// A numeric failure is reported as NumericInstability, never as a wrong Optimal:
// claimed optima are re-verified for primal feasibility and duality gap.
inline LpResult solve_lp(const Vector& c, const Polyhedron& P, Sense sense = Sense::Min,
                         double tol = kDefaultTol) {
    if (c.size() != P.dim())
        throw DimensionMismatch("objective length " + std::to_string(c.size()) +
                                " != coordinate count " + std::to_string(P.dim()));
    const int n = P.dim();
    const int rows = P.rows();
    Vector cmin = (sense == Sense::Min) ? c : Vector(-c);

    // Column layout: flagged coords map to one nonnegative variable, free coords to a
    // split pair (u, w) with x = u - w; then one surplus variable per row.
    std::vector<int> col_of(n), neg_col_of(n, -1);
    int ncols = 0;
    for (int i = 0; i < n; ++i) {
        col_of[i] = ncols++;
        if (!P.coords[i].nonneg) neg_col_of[i] = ncols++;
    }
    const int nstruct = ncols;
    ncols += rows;

    // Row scaling to unit max-abs coefficient keeps the tableau well-ranged.
    Vector scale = Vector::Ones(rows);
    for (int i = 0; i < rows; ++i) {
        double mx = P.M.row(i).cwiseAbs().maxCoeff();
        if (mx > tol) scale[i] = 1.0 / mx;
    }

    Matrix A = Matrix::Zero(rows, ncols);
    Vector b(rows);
    Vector sigma = Vector::Ones(rows);  // row flip applied to reach b >= 0
    for (int i = 0; i < rows; ++i) {
        double s = (P.m[i] * scale[i] < 0.0) ? -1.0 : 1.0;
        sigma[i] = s;
        for (int j = 0; j < n; ++j) {
            double v = P.M(i, j) * scale[i] * s;
            A(i, col_of[j]) = v;
            if (neg_col_of[j] >= 0) A(i, neg_col_of[j]) = -v;
        }
        A(i, nstruct + i) = -s;  // surplus
        b[i] = P.m[i] * scale[i] * s;
    }

    Vector cost = Vector::Zero(ncols);
    for (int j = 0; j < n; ++j) {
        cost[col_of[j]] = cmin[j];
        if (neg_col_of[j] >= 0) cost[neg_col_of[j]] = -cmin[j];
    }

    detail::Simplex sx(std::move(A), std::move(b));
    int rc = sx.run(cost);

    LpResult out;
    if (rc == 2) { out.status = LpStatus::Infeasible; return out; }
    if (rc == 3) { out.status = LpStatus::NumericInstability; return out; }

    auto to_original = [&](const Vector& xhat) {
        Vector x(n);
        for (int j = 0; j < n; ++j) {
            x[j] = xhat[col_of[j]];
            if (neg_col_of[j] >= 0) x[j] -= xhat[neg_col_of[j]];
        }
        return x;
    };

    if (rc == 1) {
        out.status = LpStatus::Unbounded;
        Vector d = to_original(sx.ray());
        double nrm = d.cwiseAbs().maxCoeff();
        if (nrm > 0) d /= nrm;
        out.ray = d;
        return out;
    }

    Vector x = to_original(sx.primal());
    double val = cmin.dot(x);

    // Verification gate: primal feasibility and duality gap against the original data.
    double feas_slack = 0.0;
    if (rows > 0) feas_slack = (P.m - P.M * x).maxCoeff();
    for (int i = 0; i < n; ++i)
        if (P.coords[i].nonneg) feas_slack = std::max(feas_slack, -x[i]);
    double mmax = (rows > 0) ? P.m.cwiseAbs().maxCoeff() : 0.0;
    double xmax = (n > 0) ? x.cwiseAbs().maxCoeff() : 0.0;
    double feas_tol = 1e-6 * (1.0 + mmax + xmax);
    if (feas_slack > feas_tol) {
        out.status = LpStatus::NumericInstability;
        return out;
    }

    Vector duals(rows);
    for (int i = 0; i < rows; ++i) duals[i] = sigma[i] * sx.multiplier(i) * scale[i];
    double dual_val = (rows > 0) ? duals.dot(P.m) : 0.0;
    if (std::abs(dual_val - val) > 1e-6 * (1.0 + std::abs(val))) {
        out.status = LpStatus::NumericInstability;
        return out;
    }
    for (int i = 0; i < rows; ++i)
        if (duals[i] < 0) duals[i] = 0.0;  // clip pivot-tolerance noise

    out.status = LpStatus::Optimal;
    out.x = std::move(x);
    out.value = (sense == Sense::Min) ? val : -val;
    out.duals = std::move(duals);
    return out;
}

// Phase-one emptiness test.
inline bool is_empty(const Polyhedron& P, double tol = kDefaultTol) {
    LpResult r = solve_lp(Vector::Zero(P.dim()), P, Sense::Min, tol);
    return r.status == LpStatus::Infeasible;
}

// Sequentially optimal solve: each later objective is minimized subject to all
// earlier optima fixed within tolerance. Reported duals cover the original rows.
inline LpResult lexmin(const std::vector<Vector>& objectives, const Polyhedron& P,
                       double tol = kDefaultTol) {
    if (objectives.empty()) throw DimensionMismatch("lexmin: need at least one objective");
    Polyhedron Q = P;
    LpResult last;
    for (std::size_t k = 0; k < objectives.size(); ++k) {
        last = solve_lp(objectives[k], Q, Sense::Min, tol);
        if (last.status != LpStatus::Optimal) return last;
        if (k + 1 == objectives.size()) break;
        double fix = last.value + 1e-9 * (1.0 + std::abs(last.value));
        Matrix M(Q.rows() + 1, Q.dim());
        M.topRows(Q.rows()) = Q.M;
        M.row(Q.rows()) = -objectives[k].transpose();
        Vector m(Q.rows() + 1);
        m.head(Q.rows()) = Q.m;
        m[Q.rows()] = -fix;
        Q = Polyhedron::make(Q.coords, std::move(M), std::move(m));
    }
    if (last.status == LpStatus::Optimal && last.duals.size() > P.rows())
        last.duals.conservativeResize(P.rows());
    return last;
}

}  // namespace polyco

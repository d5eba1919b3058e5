#pragma once

#include <vector>

#include "polyco/core.hpp"
#include "polyco/lp.hpp"
#include "polyco/polyhedron.hpp"

namespace polyco {

// LP-based deletion of implied inequalities. A surviving row i is irredundant:
// minimizing its left-hand side subject to all other rows attains a value
// below m_i - tol. The feasible set is unchanged.
inline Polyhedron remove_redundancy(const Polyhedron& P, double tol = kDefaultTol) {
    if (is_empty(P, tol)) throw EmptyPolyhedron("remove_redundancy: infeasible input");
    Polyhedron Q = dedup_rows(P, tol);
    std::vector<bool> alive(Q.rows(), true);
    for (int i = 0; i < Q.rows(); ++i) {
        std::vector<int> others;
        for (int j = 0; j < Q.rows(); ++j)
            if (j != i && alive[j]) others.push_back(j);
        Matrix M(others.size(), Q.dim());
        Vector m(others.size());
        for (std::size_t k = 0; k < others.size(); ++k) {
            M.row(k) = Q.M.row(others[k]);
            m[k] = Q.m[others[k]];
        }
        Polyhedron rest = Polyhedron::make(Q.coords, std::move(M), std::move(m));
        LpResult r = solve_lp(Q.M.row(i).transpose(), rest, Sense::Min, tol);
        if (r.status == LpStatus::Optimal && r.value >= Q.m[i] - tol) alive[i] = false;
        // Unbounded or numerically unclear rows are kept; keeping preserves the set.
    }
    std::vector<int> keep;
    for (int i = 0; i < Q.rows(); ++i)
        if (alive[i]) keep.push_back(i);
    Matrix M(keep.size(), Q.dim());
    Vector m(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        M.row(k) = Q.M.row(keep[k]);
        m[k] = Q.m[keep[k]];
    }
    return Polyhedron::make(Q.coords, std::move(M), std::move(m));
}

}  // namespace polyco

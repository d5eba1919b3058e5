#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "polyco/core.hpp"
#include "polyco/polyhedron.hpp"
#include "polyco/redundancy.hpp"

namespace polyco {

// One Fourier-Motzkin step: exact coordinate projection. An implicit nonneg
// flag on the eliminated coordinate is materialized as an explicit row first.
// Emits at most z + p*q rows (z zero-coefficient, p positive, q negative).
inline Polyhedron fme_eliminate(const Polyhedron& P, const std::string& coord,
                                double tol = kDefaultTol) {
    int e = P.coord_index(coord);
    if (e < 0) throw DimensionMismatch("fme_eliminate: unknown coordinate '" + coord + "'");

    Matrix M = P.M;
    Vector m = P.m;
    if (P.coords[e].nonneg) {
        M.conservativeResize(M.rows() + 1, Eigen::NoChange);
        M.row(M.rows() - 1) = Eigen::RowVectorXd::Zero(P.dim());
        M(M.rows() - 1, e) = 1.0;
        m.conservativeResize(m.size() + 1);
        m[m.size() - 1] = 0.0;
    }

    std::vector<int> pos, neg, zero;
    for (int i = 0; i < M.rows(); ++i) {
        double a = M(i, e);
        if (a > tol) pos.push_back(i);
        else if (a < -tol) neg.push_back(i);
        else zero.push_back(i);
    }

    std::vector<Coord> coords;
    std::vector<int> keep_cols;
    for (int j = 0; j < P.dim(); ++j) {
        if (j == e) continue;
        coords.push_back(P.coords[j]);
        keep_cols.push_back(j);
    }
    const int nout = static_cast<int>(keep_cols.size());
    const std::size_t bound = zero.size() + pos.size() * neg.size();

    Matrix Mo(bound, nout);
    Vector mo(bound);
    int r = 0;
    for (int i : zero) {
        for (int k = 0; k < nout; ++k) Mo(r, k) = M(i, keep_cols[k]);
        mo[r] = m[i];
        ++r;
    }
    for (int ip : pos) {
        for (int in : neg) {
            double ap = M(ip, e);
            double an = -M(in, e);  // > 0
            for (int k = 0; k < nout; ++k)
                Mo(r, k) = an * M(ip, keep_cols[k]) + ap * M(in, keep_cols[k]);
            mo[r] = an * m[ip] + ap * m[in];
            ++r;
        }
    }
    Polyhedron out = Polyhedron::make(std::move(coords), Mo.topRows(r), mo.head(r));
    return dedup_rows(out, tol);
}

// Number of rows a single elimination of column e would touch: (p, q, z).
inline std::array<int, 3> fme_profile(const Polyhedron& P, int e, double tol = kDefaultTol) {
    int p = 0, q = 0, z = 0;
    for (int i = 0; i < P.rows(); ++i) {
        double a = P.M(i, e);
        if (a > tol) ++p;
        else if (a < -tol) ++q;
        else ++z;
    }
    if (P.coords[e].nonneg) ++p;  // materialized bound row
    return {p, q, z};
}

// Exact projection onto `keep`: repeated elimination, greedy smallest p*q fill-in
// first, with redundancy removal interleaved after every step. Coordinate order
// of the survivors is preserved.
inline Polyhedron project(const Polyhedron& P, const std::vector<std::string>& keep,
                          bool redundancy = true, double tol = kDefaultTol) {
    std::set<std::string> keep_set(keep.begin(), keep.end());
    for (const auto& k : keep)
        if (P.coord_index(k) < 0)
            throw DimensionMismatch("project: unknown coordinate '" + k + "'");

    std::vector<Coord> kept_coords;
    for (const auto& c : P.coords)
        if (keep_set.count(c.name)) kept_coords.push_back(c);

    if (is_empty(P, tol)) return Polyhedron::empty(kept_coords);

    Polyhedron Q = P;
    while (Q.dim() > static_cast<int>(kept_coords.size())) {
        int best = -1;
        long best_cost = 0;
        for (int j = 0; j < Q.dim(); ++j) {
            if (keep_set.count(Q.coords[j].name)) continue;
            auto [p, q, z] = fme_profile(Q, j, tol);
            long cost = static_cast<long>(p) * q;
            if (best < 0 || cost < best_cost) { best = j; best_cost = cost; }
        }
        Q = fme_eliminate(Q, Q.coords[best].name, tol);
        if (redundancy && Q.rows() > 1) Q = remove_redundancy(Q, tol);
    }
    return Q;
}

inline Polyhedron project(const Polyhedron& P, const std::set<std::string>& keep,
                          bool redundancy = true, double tol = kDefaultTol) {
    return project(P, std::vector<std::string>(keep.begin(), keep.end()), redundancy, tol);
}

}  // namespace polyco

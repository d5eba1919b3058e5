#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "polyco/core.hpp"

namespace polyco {

struct Coord {
    std::string name;
    std::string unit;
    bool nonneg = true;

    friend bool operator==(const Coord& a, const Coord& b) {
        return a.name == b.name && a.unit == b.unit && a.nonneg == b.nonneg;
    }
};

// H-representation polyhedron { x | M x >= m, x_i >= 0 for flagged i }.
// Immutable value type; all operations below return fresh objects.
struct Polyhedron {
    std::vector<Coord> coords;
    Matrix M;  // rows x |coords|
    Vector m;  // rows

    int dim() const { return static_cast<int>(coords.size()); }
    int rows() const { return static_cast<int>(M.rows()); }

    int coord_index(const std::string& name) const {
        for (int i = 0; i < dim(); ++i)
            if (coords[i].name == name) return i;
        return -1;
    }

    static Polyhedron make(std::vector<Coord> coords, Matrix M, Vector m) {
        if (M.rows() != m.size())
            throw DimensionMismatch("row count of M (" + std::to_string(M.rows()) +
                                    ") != length of m (" + std::to_string(m.size()) + ")");
        if (M.cols() != static_cast<Eigen::Index>(coords.size()))
            throw DimensionMismatch("column count of M (" + std::to_string(M.cols()) +
                                    ") != coordinate count (" + std::to_string(coords.size()) +
                                    ")");
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = i + 1; j < coords.size(); ++j)
                if (coords[i].name == coords[j].name) throw LabelCollision(coords[i].name);
        return Polyhedron{std::move(coords), std::move(M), std::move(m)};
    }

    // Full space over the given coordinates (zero rows).
    static Polyhedron full(std::vector<Coord> coords) {
        int n = static_cast<int>(coords.size());
        return make(std::move(coords), Matrix::Zero(0, n), Vector::Zero(0));
    }

    // Canonical empty set over the given coordinates (0 >= 1).
    static Polyhedron empty(std::vector<Coord> coords) {
        int n = static_cast<int>(coords.size());
        Matrix M = Matrix::Zero(1, n);
        Vector m = Vector::Ones(1);
        return make(std::move(coords), std::move(M), std::move(m));
    }
};

// Recession cone { d | M d >= 0 } intersected with flagged nonnegative directions.
struct Cone {
    std::vector<Coord> coords;
    Matrix M;

    int dim() const { return static_cast<int>(coords.size()); }
    int rows() const { return static_cast<int>(M.rows()); }
};

// Minkowski-Weyl generator description: conv(vertices) + cone(rays).
struct VRep {
    std::vector<Vector> vertices;
    std::vector<Vector> rays;
};

inline bool contains(const Polyhedron& P, const Vector& x, double tol = kDefaultTol) {
    if (x.size() != P.dim())
        throw DimensionMismatch("point dimension " + std::to_string(x.size()) +
                                " != polyhedron dimension " + std::to_string(P.dim()));
    for (int i = 0; i < P.dim(); ++i)
        if (P.coords[i].nonneg && x[i] < -tol) return false;
    if (P.rows() == 0) return true;
    Vector slack = P.M * x - P.m;
    return (slack.array() >= -tol).all();
}

// Feasible set = set product; coords concatenated; block-diagonal rows.
inline Polyhedron product(const Polyhedron& a, const Polyhedron& b) {
    for (const auto& c : b.coords)
        if (a.coord_index(c.name) >= 0) throw LabelCollision(c.name);
    std::vector<Coord> coords = a.coords;
    coords.insert(coords.end(), b.coords.begin(), b.coords.end());
    Matrix M = Matrix::Zero(a.rows() + b.rows(), a.dim() + b.dim());
    M.topLeftCorner(a.rows(), a.dim()) = a.M;
    M.bottomRightCorner(b.rows(), b.dim()) = b.M;
    Vector m(a.rows() + b.rows());
    m.head(a.rows()) = a.m;
    m.tail(b.rows()) = b.m;
    return Polyhedron::make(std::move(coords), std::move(M), std::move(m));
}

// Feasible set = intersection; requires identical coordinate lists.
inline Polyhedron stack(const Polyhedron& a, const Polyhedron& b) {
    if (a.coords.size() != b.coords.size())
        throw DimensionMismatch("stack: coordinate count mismatch");
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (!(a.coords[i] == b.coords[i]))
            throw DimensionMismatch("stack: coordinate mismatch at position " +
                                    std::to_string(i) + " ('" + a.coords[i].name + "' vs '" +
                                    b.coords[i].name + "')");
    Matrix M(a.rows() + b.rows(), a.dim());
    M.topRows(a.rows()) = a.M;
    M.bottomRows(b.rows()) = b.M;
    Vector m(a.rows() + b.rows());
    m.head(a.rows()) = a.m;
    m.tail(b.rows()) = b.m;
    return Polyhedron::make(a.coords, std::move(M), std::move(m));
}

struct SparseRow {
    std::vector<std::pair<int, double>> terms;  // (coordinate index, coefficient)
    double rhs = 0.0;
};

// Each equality appended as two opposing inequality rows.
inline Polyhedron add_equalities(const Polyhedron& P, const std::vector<SparseRow>& eqs) {
    int extra = 2 * static_cast<int>(eqs.size());
    Matrix M(P.rows() + extra, P.dim());
    Vector m(P.rows() + extra);
    M.topRows(P.rows()) = P.M;
    m.head(P.rows()) = P.m;
    int r = P.rows();
    for (const auto& eq : eqs) {
        Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(P.dim());
        for (const auto& [idx, coef] : eq.terms) {
            if (idx < 0 || idx >= P.dim())
                throw DimensionMismatch("add_equalities: row references unknown coordinate index " +
                                        std::to_string(idx));
            row[idx] += coef;
        }
        M.row(r) = row;
        m[r] = eq.rhs;
        M.row(r + 1) = -row;
        m[r + 1] = -eq.rhs;
        r += 2;
    }
    return Polyhedron::make(P.coords, std::move(M), std::move(m));
}

// Scale each row to unit max-abs coefficient. Trivially-true zero rows are dropped;
// contradictory zero rows (0 >= positive) are kept so emptiness stays detectable.
inline Polyhedron normalize_rows(const Polyhedron& P, double tol = kDefaultTol) {
    std::vector<int> keep;
    std::vector<double> scale;
    for (int i = 0; i < P.rows(); ++i) {
        double mx = P.M.row(i).cwiseAbs().maxCoeff();
        if (mx <= tol) {
            if (P.m[i] > tol) {
                keep.push_back(i);
                scale.push_back(1.0);
            }
            continue;
        }
        keep.push_back(i);
        scale.push_back(1.0 / mx);
    }
    Matrix M(keep.size(), P.dim());
    Vector m(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        M.row(k) = P.M.row(keep[k]) * scale[k];
        m[k] = P.m[keep[k]] * scale[k];
    }
    return Polyhedron::make(P.coords, std::move(M), std::move(m));
}

// Collapse duplicate rows after normalization; among rows with equal coefficients the
// tightest right-hand side wins.
inline Polyhedron dedup_rows(const Polyhedron& P, double tol = kDefaultTol) {
    Polyhedron Q = normalize_rows(P, tol);
    std::vector<bool> drop(Q.rows(), false);
    for (int i = 0; i < Q.rows(); ++i) {
        if (drop[i]) continue;
        for (int j = i + 1; j < Q.rows(); ++j) {
            if (drop[j]) continue;
            if ((Q.M.row(i) - Q.M.row(j)).cwiseAbs().maxCoeff() <= tol) {
                if (Q.m[j] > Q.m[i]) Q.m[i] = Q.m[j];
                drop[j] = true;
            }
        }
    }
    std::vector<int> keep;
    for (int i = 0; i < Q.rows(); ++i)
        if (!drop[i]) keep.push_back(i);
    Matrix M(keep.size(), Q.dim());
    Vector m(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        M.row(k) = Q.M.row(keep[k]);
        m[k] = Q.m[keep[k]];
    }
    return Polyhedron::make(Q.coords, std::move(M), std::move(m));
}

// Rewrite flagged domain bounds x_i >= 0 as explicit rows and clear the flags.
inline Polyhedron materialize_nonneg(const Polyhedron& P) {
    std::vector<int> flagged;
    for (int i = 0; i < P.dim(); ++i)
        if (P.coords[i].nonneg) flagged.push_back(i);
    Matrix M(P.rows() + flagged.size(), P.dim());
    Vector m(P.rows() + flagged.size());
    M.topRows(P.rows()) = P.M;
    m.head(P.rows()) = P.m;
    for (std::size_t k = 0; k < flagged.size(); ++k) {
        M.row(P.rows() + k) = Eigen::RowVectorXd::Zero(P.dim());
        M(P.rows() + k, flagged[k]) = 1.0;
        m[P.rows() + k] = 0.0;
    }
    std::vector<Coord> coords = P.coords;
    for (auto& c : coords) c.nonneg = false;
    return Polyhedron::make(std::move(coords), std::move(M), std::move(m));
}

// Reorder coordinates according to `order` (a permutation of coordinate names).
inline Polyhedron reorder_coords(const Polyhedron& P, const std::vector<std::string>& order) {
    if (static_cast<int>(order.size()) != P.dim())
        throw DimensionMismatch("reorder_coords: order size mismatch");
    std::vector<int> perm;
    perm.reserve(order.size());
    for (const auto& name : order) {
        int idx = P.coord_index(name);
        if (idx < 0) throw DimensionMismatch("reorder_coords: unknown coordinate '" + name + "'");
        perm.push_back(idx);
    }
    std::vector<Coord> coords;
    Matrix M(P.rows(), P.dim());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        coords.push_back(P.coords[perm[k]]);
        M.col(k) = P.M.col(perm[k]);
    }
    return Polyhedron::make(std::move(coords), std::move(M), P.m);
}

}  // namespace polyco

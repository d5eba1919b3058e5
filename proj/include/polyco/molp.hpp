#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "polyco/core.hpp"
#include "polyco/ddm.hpp"
#include "polyco/lp.hpp"
#include "polyco/polyhedron.hpp"

namespace polyco {

struct MolpProblem {
    Matrix C;                  // q x n objective matrix
    Polyhedron P;              // feasible set X
    std::vector<Sense> sense;  // per objective; empty means all Min

    int q() const { return static_cast<int>(C.rows()); }
};

// Vertex/ray description of the upper image cl(CX + R^q_+). Vertices are the
// extreme Pareto outcomes; conv(vertices) + cone(rays) is the exact upper image.
struct UpperImage {
    std::vector<Vector> vertices;
    std::vector<Vector> rays;
    double tol = kDefaultMolpTol;
};

// Componentwise-nondominated subset, stable input order.
inline std::vector<Vector> dominance_filter(const std::vector<Vector>& pts,
                                            double tol = kDefaultMolpTol) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            bool le = true, lt = false;
            for (int k = 0; k < pts[i].size(); ++k) {
                if (pts[j][k] > pts[i][k] + tol) { le = false; break; }
                if (pts[j][k] < pts[i][k] - tol) lt = true;
            }
            if (le && lt) { dominated = true; break; }
            if (le && !lt && j < i) { dominated = true; break; }  // duplicate: keep the first
        }
        if (!dominated) out.push_back(pts[i]);
    }
    return out;
}

namespace detail {

inline void sort_vertices_lex(std::vector<Vector>& v) {
    std::sort(v.begin(), v.end(), [](const Vector& a, const Vector& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] < b[i] - 1e-12) return true;
            if (a[i] > b[i] + 1e-12) return false;
        }
        return false;
    });
}

inline void push_unique(std::vector<Vector>& v, const Vector& x, double tol) {
    for (const auto& y : v)
        if ((x - y).cwiseAbs().maxCoeff() <= tol) return;
    v.push_back(x);
}

// Exact dichotomic weighted-sum recursion between the two lexicographic minima.
inline void dichotomy(const Matrix& C, const Polyhedron& P, const Vector& ya, const Vector& yb,
                      std::vector<Vector>& out, double tol, int depth = 0) {
    if (depth > 512) throw NumericFailure("molp dichotomy: recursion depth exceeded");
    Vector w(2);
    w[0] = ya[1] - yb[1];
    w[1] = yb[0] - ya[0];
    if (w[0] <= tol || w[1] <= tol) return;
    w /= w.sum();
    LpResult r = solve_lp(C.transpose() * w, P, Sense::Min);
    if (r.status != LpStatus::Optimal)
        throw NumericFailure("molp dichotomy: supporting LP failed");
    double cut = w.dot(ya);
    if (r.value >= cut - tol) return;  // no vertex strictly between
    Vector y = C * r.x;
    if ((y - ya).cwiseAbs().maxCoeff() <= tol || (y - yb).cwiseAbs().maxCoeff() <= tol) return;
    dichotomy(C, P, ya, y, out, tol, depth + 1);
    push_unique(out, y, tol);
    dichotomy(C, P, y, yb, out, tol, depth + 1);
}

// Benson outer approximation for q >= 3: start from the ideal-point shifted
// orthant, test outer vertices by the distance-to-upper-image LP
// min z s.t. x in X, Cx <= v + z*1, and add the dual supporting cut while any
// vertex lies strictly outside.
inline std::vector<Vector> benson(const Matrix& C, const Polyhedron& P, const Vector& ideal,
                                  double tol) {
    const int q = static_cast<int>(C.rows());
    const int n = static_cast<int>(C.cols());

    std::vector<Coord> ycoords;
    for (int i = 0; i < q; ++i) ycoords.push_back({"y" + std::to_string(i), "", false});
    Matrix W = Matrix::Identity(q, q);
    Vector w = ideal;

    // Extended feasibility system over (x, z) used by the vertex test LP.
    std::vector<Coord> xz = P.coords;
    xz.push_back({"__z", "", false});

    for (int round = 0; round < 1000; ++round) {
        Polyhedron outer = Polyhedron::make(ycoords, W, w);
        VRep vr = enumerate_vertices(outer, q + 1);
        bool cut_added = false;
        for (const auto& v : vr.vertices) {
            // min z  s.t.  M x >= m,  -C x + z*1 >= -v
            Matrix M(P.rows() + q, n + 1);
            M.setZero();
            M.topLeftCorner(P.rows(), n) = P.M;
            M.block(P.rows(), 0, q, n) = -C;
            M.block(P.rows(), n, q, 1) = Vector::Ones(q);
            Vector m(P.rows() + q);
            m.head(P.rows()) = P.m;
            m.tail(q) = -v;
            Vector cz = Vector::Zero(n + 1);
            cz[n] = 1.0;
            Polyhedron ext = Polyhedron::make(xz, std::move(M), std::move(m));
            LpResult r = solve_lp(cz, ext, Sense::Min);
            if (r.status != LpStatus::Optimal)
                throw NumericFailure("benson: vertex test LP failed");
            if (r.value <= tol) continue;
            Vector lam = r.duals.tail(q);  // multipliers of the q outcome rows
            double s = lam.sum();
            if (s <= tol) throw NumericFailure("benson: degenerate supporting weights");
            lam /= s;
            double rhs = lam.dot(v) + r.value / s;
            W.conservativeResize(W.rows() + 1, Eigen::NoChange);
            W.row(W.rows() - 1) = lam.transpose();
            w.conservativeResize(w.size() + 1);
            w[w.size() - 1] = rhs;
            cut_added = true;
        }
        if (!cut_added) {
            std::vector<Vector> verts(vr.vertices.begin(), vr.vertices.end());
            return verts;
        }
    }
    throw NumericFailure("benson: cut loop did not converge");
}

}  // namespace detail

// Exact upper-image computation. Max-sense objectives are negated at ingestion
// and results negated back; the efficient set is unchanged.
inline UpperImage solve_molp(const MolpProblem& prob, double tol = kDefaultMolpTol) {
    const int q = prob.q();
    const int n = prob.P.dim();
    if (q < 1) throw DimensionMismatch("solve_molp: need at least one objective");
    if (prob.C.cols() != n)
        throw DimensionMismatch("solve_molp: objective matrix column count mismatch");

    Matrix C = prob.C;
    std::vector<bool> flipped(q, false);
    for (int i = 0; i < q && i < static_cast<int>(prob.sense.size()); ++i) {
        if (prob.sense[i] == Sense::Max) {
            C.row(i) = -C.row(i);
            flipped[i] = true;
        }
    }

    if (is_empty(prob.P)) throw EmptyFeasible("solve_molp: feasible set is empty");

    // Per-component boundedness; a violation carries the certifying ray. Once all
    // components are bounded below, the upper-image recession cone is exactly the
    // nonnegative orthant, so the rays are the standard basis.
    Vector ideal(q);
    for (int i = 0; i < q; ++i) {
        LpResult r = solve_lp(C.row(i).transpose(), prob.P, Sense::Min);
        if (r.status == LpStatus::Unbounded) throw UnboundedObjective(i, r.ray);
        if (r.status != LpStatus::Optimal)
            throw NumericFailure("solve_molp: component LP failed");
        ideal[i] = r.value;
    }

    UpperImage out;
    out.tol = tol;

    if (q == 1) {
        out.vertices.push_back(ideal);
    } else if (q == 2) {
        std::vector<Vector> objs0 = {C.row(0).transpose(), C.row(1).transpose()};
        std::vector<Vector> objs1 = {C.row(1).transpose(), C.row(0).transpose()};
        LpResult ra = lexmin(objs0, prob.P);
        LpResult rb = lexmin(objs1, prob.P);
        if (ra.status != LpStatus::Optimal || rb.status != LpStatus::Optimal)
            throw NumericFailure("solve_molp: lexicographic endpoint failed");
        Vector ya = C * ra.x;
        Vector yb = C * rb.x;
        out.vertices.push_back(ya);
        if ((ya - yb).cwiseAbs().maxCoeff() > tol) {
            std::vector<Vector> mid;
            detail::dichotomy(C, prob.P, ya, yb, mid, tol);
            for (const auto& v : mid) detail::push_unique(out.vertices, v, tol);
            detail::push_unique(out.vertices, yb, tol);
        }
    } else {
        out.vertices = detail::benson(C, prob.P, ideal, tol);
        out.vertices = dominance_filter(out.vertices, tol);
    }

    for (int i = 0; i < q; ++i) out.rays.push_back(Vector::Unit(q, i));

    for (auto& v : out.vertices)
        for (int i = 0; i < q; ++i)
            if (flipped[i]) v[i] = -v[i];
    for (auto& r : out.rays)
        for (int i = 0; i < q; ++i)
            if (flipped[i]) r[i] = -r[i];

    detail::sort_vertices_lex(out.vertices);
    return out;
}

}  // namespace polyco

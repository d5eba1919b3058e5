#pragma once

#include <algorithm>
#include <vector>

#include "polyco/core.hpp"
#include "polyco/lp.hpp"
#include "polyco/polyhedron.hpp"

namespace polyco {

struct ConeGenerators {
    std::vector<Vector> rays;
    std::vector<Vector> lines;
};

namespace detail {

inline void dd_normalize(Vector& v) {
    double mx = v.cwiseAbs().maxCoeff();
    if (mx > 0) v /= mx;
}

inline bool dd_same_dir(const Vector& a, const Vector& b, double tol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

// Incremental double description for the homogeneous cone { y | A y >= 0 }.
// Maintains extreme rays plus a lineality basis; combinatorial adjacency test.
inline ConeGenerators dd_cone(Matrix A, double tol = 1e-9) {
    const int d = static_cast<int>(A.cols());

    std::vector<Eigen::RowVectorXd> rows;
    for (int i = 0; i < A.rows(); ++i) {
        double mx = A.row(i).cwiseAbs().maxCoeff();
        if (mx <= tol) continue;
        rows.push_back(A.row(i) / mx);
    }

    std::vector<Vector> lines;
    for (int i = 0; i < d; ++i) lines.push_back(Vector::Unit(d, i));
    std::vector<Vector> rays;
    std::vector<Eigen::RowVectorXd> done;

    const double ztol = 1e-8;
    auto zero_set = [&](const Vector& r) {
        std::vector<bool> z(done.size());
        for (std::size_t k = 0; k < done.size(); ++k) z[k] = std::abs(done[k].dot(r)) <= ztol;
        return z;
    };

    for (const auto& a : rows) {
        int piv = -1;
        double best = tol;
        for (std::size_t k = 0; k < lines.size(); ++k) {
            double v = std::abs(a.dot(lines[k]));
            if (v > best) { best = v; piv = static_cast<int>(k); }
        }
        if (piv >= 0) {
            Vector lp = lines[piv] / a.dot(lines[piv]);
            std::vector<Vector> nl;
            for (std::size_t k = 0; k < lines.size(); ++k) {
                if (static_cast<int>(k) == piv) continue;
                Vector l = lines[k] - a.dot(lines[k]) * lp;
                dd_normalize(l);
                if (l.cwiseAbs().maxCoeff() > tol) nl.push_back(l);
            }
            for (auto& r : rays) {
                r -= a.dot(r) * lp;
                dd_normalize(r);
            }
            dd_normalize(lp);
            rays.push_back(lp);
            lines = std::move(nl);
        } else {
            std::vector<int> pos, neg, zer;
            std::vector<double> val(rays.size());
            for (std::size_t k = 0; k < rays.size(); ++k) {
                val[k] = a.dot(rays[k]);
                if (val[k] > ztol) pos.push_back(static_cast<int>(k));
                else if (val[k] < -ztol) neg.push_back(static_cast<int>(k));
                else zer.push_back(static_cast<int>(k));
            }
            if (!neg.empty()) {
                std::vector<std::vector<bool>> zs(rays.size());
                for (std::size_t k = 0; k < rays.size(); ++k) zs[k] = zero_set(rays[k]);
                auto adjacent = [&](int p, int n) {
                    std::vector<bool> common(done.size());
                    for (std::size_t k = 0; k < done.size(); ++k) common[k] = zs[p][k] && zs[n][k];
                    for (std::size_t r3 = 0; r3 < rays.size(); ++r3) {
                        if (static_cast<int>(r3) == p || static_cast<int>(r3) == n) continue;
                        bool super = true;
                        for (std::size_t k = 0; k < done.size(); ++k)
                            if (common[k] && !zs[r3][k]) { super = false; break; }
                        if (super) return false;
                    }
                    return true;
                };
                std::vector<Vector> next;
                for (int k : pos) next.push_back(rays[k]);
                for (int k : zer) next.push_back(rays[k]);
                for (int p : pos) {
                    for (int n : neg) {
                        if (!adjacent(p, n)) continue;
                        Vector w = val[p] * rays[n] - val[n] * rays[p];
                        dd_normalize(w);
                        if (w.cwiseAbs().maxCoeff() <= tol) continue;
                        bool dup = false;
                        for (const auto& r : next)
                            if (dd_same_dir(r, w, 1e-7)) { dup = true; break; }
                        if (!dup) next.push_back(w);
                    }
                }
                rays = std::move(next);
            }
        }
        done.push_back(a);
    }
    return {std::move(rays), std::move(lines)};
}

}  // namespace detail

// Generator rays of a recession cone, lineality split into opposite ray pairs.
inline std::vector<Vector> cone_generator_rays(const Cone& C, double tol = kDefaultTol) {
    int extra = 0;
    for (const auto& c : C.coords)
        if (c.nonneg) ++extra;
    Matrix A(C.rows() + extra, C.dim());
    A.topRows(C.rows()) = C.M;
    int r = C.rows();
    for (int i = 0; i < C.dim(); ++i) {
        if (!C.coords[i].nonneg) continue;
        A.row(r) = Eigen::RowVectorXd::Zero(C.dim());
        A(r, i) = 1.0;
        ++r;
    }
    auto gen = detail::dd_cone(A, tol > 1e-9 ? 1e-9 : tol);
    std::vector<Vector> out = gen.rays;
    for (const auto& l : gen.lines) {
        out.push_back(l);
        out.push_back(-l);
    }
    return out;
}

inline bool cone_contains(const Cone& C, const Vector& d, double tol = kDefaultTol) {
    for (int i = 0; i < C.dim(); ++i)
        if (C.coords[i].nonneg && d[i] < -tol) return false;
    if (C.rows() == 0) return true;
    return ((C.M * d).array() >= -tol).all();
}

// Recession cone of a nonempty H-representation polyhedron: same matrix, zero
// offsets, nonneg flags copied.
inline Cone recession_cone(const Polyhedron& P, double tol = kDefaultTol) {
    if (is_empty(P, tol)) throw EmptyPolyhedron("recession_cone: empty polyhedron");
    return Cone{P.coords, P.M};
}

// Exact Minkowski-Weyl decomposition conv(vertices) + cone(rays) by incremental
// double description on the homogenization. Desk-scale oracle: dimension capped.
inline VRep enumerate_vertices(const Polyhedron& P, int dim_cap = 8, double tol = kDefaultTol) {
    if (P.dim() > dim_cap) throw DimensionCap(P.dim(), dim_cap);
    const int n = P.dim();
    const int d = n + 1;

    int nflags = 0;
    for (const auto& c : P.coords)
        if (c.nonneg) ++nflags;

    Matrix A(1 + P.rows() + nflags, d);
    A.row(0) = Eigen::RowVectorXd::Zero(d);
    A(0, n) = 1.0;  // homogenization coordinate first: t >= 0
    for (int i = 0; i < P.rows(); ++i) {
        A.block(1 + i, 0, 1, n) = P.M.row(i);
        A(1 + i, n) = -P.m[i];
    }
    int r = 1 + P.rows();
    for (int i = 0; i < n; ++i) {
        if (!P.coords[i].nonneg) continue;
        A.row(r) = Eigen::RowVectorXd::Zero(d);
        A(r, i) = 1.0;
        ++r;
    }

    auto gen = detail::dd_cone(A, 1e-9);

    VRep out;
    const double ttol = 1e-9;
    for (const auto& g : gen.rays) {
        double t = g[n];
        if (t > ttol) {
            out.vertices.push_back(g.head(n) / t);
        } else {
            Vector dir = g.head(n);
            if (dir.cwiseAbs().maxCoeff() > tol) {
                detail::dd_normalize(dir);
                out.rays.push_back(dir);
            }
        }
    }
    for (const auto& l : gen.lines) {
        Vector dir = l.head(n);  // lines have t == 0 once t >= 0 is processed
        if (dir.cwiseAbs().maxCoeff() > tol) {
            detail::dd_normalize(dir);
            out.rays.push_back(dir);
            out.rays.push_back(-dir);
        }
    }
    if (out.vertices.empty()) throw EmptyPolyhedron("enumerate_vertices: empty polyhedron");

    auto lex_less = [](const Vector& a, const Vector& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] < b[i] - 1e-12) return true;
            if (a[i] > b[i] + 1e-12) return false;
        }
        return false;
    };
    auto dedup = [&](std::vector<Vector>& v, double eps) {
        std::sort(v.begin(), v.end(), lex_less);
        std::vector<Vector> u;
        for (const auto& x : v) {
            bool dup = false;
            for (const auto& y : u)
                if ((x - y).cwiseAbs().maxCoeff() <= eps) { dup = true; break; }
            if (!dup) u.push_back(x);
        }
        v = std::move(u);
    };
    double vscale = 0.0;
    for (const auto& v : out.vertices) vscale = std::max(vscale, v.cwiseAbs().maxCoeff());
    dedup(out.vertices, 1e-7 * (1.0 + vscale));
    dedup(out.rays, 1e-7);
    return out;
}

}  // namespace polyco

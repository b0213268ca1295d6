#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "linprog.hpp"
#include "matrix.hpp"
#include "types.hpp"

namespace latvert {

// Sublattice of Z^n given by an n x m basis matrix of full column rank,
// optionally remembered together with a defining matrix A with
// ker(A) cap Z^n equal to the lattice.
struct Lattice {
    int n = 0;
    int m = 0;
    IntMatrix basis;
    std::optional<IntMatrix> defining;
    std::vector<Vec> rows64;  // rows of basis in 64-bit working range
    bool pointed = true;      // lattice meets N^n only in 0
};

namespace detail {

inline RatVec to_ratvec(const Vec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline int rational_rank(const std::vector<Vec>& rows, int width) {
    std::vector<RatVec> a;
    for (const auto& r : rows) a.push_back(to_ratvec(r));
    int rank = 0;
    for (int col = 0; col < width && rank < static_cast<int>(a.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(a.size()); ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int i = rank + 1; i < static_cast<int>(a.size()); ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (int j = col; j < width; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Unique solution of a square rational system, when it exists.
inline std::optional<RatVec> solve_square(std::vector<RatVec> a, RatVec b) {
    int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline Coord rat_floor(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int q = num / den, rem = num % den;
    if (rem != 0 && num < 0) --q;
    return to_coord(q);
}

inline Coord rat_ceil(const Rat& r) { return -rat_floor(-r); }

}  // namespace detail

inline Lattice lattice_from_basis(IntMatrix b) {
    Lattice lat;
    lat.n = b.rows;
    lat.m = b.cols;
    if (lat.n <= 0) throw InvalidInput("lattice basis needs at least one row");
    if (rank(b) != lat.m)
        throw InvalidInput("lattice basis columns are linearly dependent");
    lat.basis = std::move(b);
    lat.rows64.resize(lat.n);
    for (int i = 0; i < lat.n; ++i) {
        lat.rows64[i].resize(lat.m);
        for (int j = 0; j < lat.m; ++j) lat.rows64[i][j] = to_coord(lat.basis.at(i, j));
    }
    // Pointed iff {l : B l >= 0, (B l)_i >= 1} is infeasible for every i.
    lat.pointed = true;
    for (int i = 0; i < lat.n && lat.pointed; ++i) {
        std::vector<LinConstraint> sys;
        for (int r = 0; r < lat.n; ++r)
            sys.push_back({detail::to_ratvec(lat.rows64[r]), Rel::ge, Rat(0)});
        sys.push_back({detail::to_ratvec(lat.rows64[i]), Rel::ge, Rat(1)});
        if (lp_feasible(sys, lat.m).feasible) lat.pointed = false;
    }
    return lat;
}

inline Lattice lattice_from_matrix(const IntMatrix& a) {
    if (a.rows <= 0 || a.cols <= 0)
        throw InvalidInput("defining matrix must be nonempty");
    Lattice lat = lattice_from_basis(kernel_basis(a));
    lat.defining = a;
    return lat;
}

inline bool is_pointed(const Lattice& lat) { return lat.pointed; }

namespace detail {

// Integer points of {z in R^m : C z <= d}; the caller guarantees
// boundedness. Empty result when the polyhedron misses Z^m.
inline std::vector<Vec> scan_bounded_polyhedron(const std::vector<Vec>& c_rows,
                                                const Vec& d, int m,
                                                const Budget& budget) {
    int k = static_cast<int>(c_rows.size());
    if (m == 0) {
        for (int i = 0; i < k; ++i)
            if (d[i] < 0) return {};
        return {Vec{}};
    }
    // Rational vertices from all m-subsets of rows give an exact box.
    std::vector<RatVec> verts;
    std::vector<int> idx(m);
    auto feasible = [&](const RatVec& z) {
        for (int i = 0; i < k; ++i) {
            Rat s = 0;
            for (int j = 0; j < m; ++j)
                if (c_rows[i][j] != 0) s += Rat(c_rows[i][j]) * z[j];
            if (s > Rat(d[i])) return false;
        }
        return true;
    };
    std::vector<int> comb(m);
    for (int i = 0; i < m; ++i) comb[i] = i;
    if (k >= m) {
        for (;;) {
            std::vector<RatVec> rows;
            RatVec rhs;
            for (int t = 0; t < m; ++t) {
                rows.push_back(to_ratvec(c_rows[comb[t]]));
                rhs.push_back(Rat(d[comb[t]]));
            }
            auto sol = solve_square(rows, rhs);
            if (sol && feasible(*sol)) verts.push_back(*sol);
            int t = m - 1;
            while (t >= 0 && comb[t] == k - m + t) --t;
            if (t < 0) break;
            ++comb[t];
            for (int s = t + 1; s < m; ++s) comb[s] = comb[s - 1] + 1;
        }
    }
    if (verts.empty()) {
        // Bounded and nonempty implies a vertex, so the region is empty.
        return {};
    }
    Vec lo(m), hi(m);
    for (int j = 0; j < m; ++j) {
        Rat mn = verts[0][j], mx = verts[0][j];
        for (const auto& v : verts) {
            if (v[j] < mn) mn = v[j];
            if (v[j] > mx) mx = v[j];
        }
        lo[j] = rat_ceil(mn);
        hi[j] = rat_floor(mx);
        if (lo[j] > hi[j]) return {};
    }
    std::uint64_t count = 1;
    for (int j = 0; j < m; ++j) {
        std::uint64_t w = static_cast<std::uint64_t>(hi[j] - lo[j] + 1);
        if (count > budget.max_enum_points / w + 1) count = budget.max_enum_points + 1;
        else count *= w;
        if (count > budget.max_enum_points)
            throw BudgetExceeded("polyhedron scan exceeds budget of " +
                                 std::to_string(budget.max_enum_points) + " candidates");
    }
    std::vector<Vec> pts;
    Vec z = lo;
    for (;;) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            ok = dot128(c_rows[i], z) <= static_cast<__int128>(d[i]);
        if (ok) pts.push_back(z);
        int j = 0;
        while (j < m && z[j] == hi[j]) { z[j] = lo[j]; ++j; }
        if (j == m) break;
        ++z[j];
    }
    return pts;
}

// Unboundedness witness directions for {z : C z <= 0}.
inline bool recession_cone_trivial(const std::vector<Vec>& c_rows, int m) {
    if (m == 0) return true;
    for (int j = 0; j < m; ++j)
        for (int sign : {1, -1}) {
            std::vector<LinConstraint> sys;
            for (const auto& r : c_rows) sys.push_back({to_ratvec(r), Rel::le, Rat(0)});
            RatVec e(m, Rat(0));
            e[j] = Rat(sign);
            sys.push_back({e, Rel::ge, Rat(1)});
            if (lp_feasible(sys, m).feasible) return false;
        }
    return true;
}

// Flags marking which of the (distinct) points are hull vertices.
inline std::vector<char> hull_vertex_flags(const std::vector<Vec>& pts, int m) {
    std::vector<char> flags(pts.size(), 0);
    if (pts.empty()) return flags;
    if (m == 0 || pts.size() == 1) {
        flags.assign(pts.size(), 1);
        return flags;
    }
    std::unordered_set<Vec, VecHash> set(pts.begin(), pts.end());
    // Midpoint pruning: p with p + d and p - d both present is not extreme.
    std::vector<Vec> dirs;
    Vec d(m, -1);
    for (;;) {
        if (!is_zero(d) && lex_less(neg(d), d)) dirs.push_back(d);
        int j = 0;
        while (j < m && d[j] == 1) { d[j] = -1; ++j; }
        if (j == m) break;
        ++d[j];
    }
    std::vector<int> survivors;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool pruned = false;
        for (const auto& dir : dirs) {
            if (set.count(add(pts[i], dir)) && set.count(sub(pts[i], dir))) {
                pruned = true;
                break;
            }
        }
        if (!pruned) survivors.push_back(static_cast<int>(i));
    }
    // conv(survivors) = conv(pts), so the exact test may ignore pruned points.
    for (int i : survivors) {
        std::vector<Vec> others;
        for (int j : survivors)
            if (j != i) others.push_back(pts[j]);
        if (!in_convex_hull(pts[i], others)) flags[i] = 1;
    }
    return flags;
}

}  // namespace detail

// Fiber of u: all v in N^n with u - v in the lattice, with its polytope
// vertices. Enumeration runs in basis coordinates over {z : B z <= u}.
struct Fiber {
    Vec base;
    std::vector<Vec> points;
    std::vector<Vec> vertices;
};

namespace detail {

inline Vec q_to_fiber_point(const Lattice& lat, const Vec& u, const Vec& z) {
    Vec v(lat.n);
    for (int i = 0; i < lat.n; ++i)
        v[i] = u[i] - static_cast<Coord>(dot128(lat.rows64[i], z));
    return v;
}

inline std::vector<Vec> fiber_zpoints(const Lattice& lat, const Vec& u,
                                      const Budget& budget) {
    if (static_cast<int>(u.size()) != lat.n)
        throw DimensionMismatch("fiber: point length != ambient dimension");
    if (!lat.pointed)
        throw UnboundedFiber("fiber enumeration needs a pointed lattice");
    Vec d = u;
    return scan_bounded_polyhedron(lat.rows64, d, lat.m, budget);
}

}  // namespace detail

inline Fiber fiber(const Lattice& lat, const Vec& u, const Budget& budget = {}) {
    for (Coord c : u)
        if (c < 0) throw InvalidInput("fiber base point must be nonnegative");
    Fiber f;
    f.base = u;
    auto zpts = detail::fiber_zpoints(lat, u, budget);
    auto flags = detail::hull_vertex_flags(zpts, lat.m);
    for (std::size_t i = 0; i < zpts.size(); ++i) {
        Vec v = detail::q_to_fiber_point(lat, u, zpts[i]);
        f.points.push_back(v);
        if (flags[i]) f.vertices.push_back(v);
    }
    std::sort(f.points.begin(), f.points.end(), lex_less);
    std::sort(f.vertices.begin(), f.vertices.end(), lex_less);
    return f;
}

inline bool is_fiber_vertex(const Lattice& lat, const Vec& u, const Budget& budget = {}) {
    for (Coord c : u)
        if (c < 0) throw InvalidInput("fiber base point must be nonnegative");
    auto zpts = detail::fiber_zpoints(lat, u, budget);
    std::vector<Vec> others;
    Vec zero(lat.m, 0);
    for (const auto& z : zpts)
        if (z != zero) others.push_back(z);
    return !in_convex_hull(zero, others);
}

// Integer-point sample of Q^keep_u = {z : (B z)_i <= u_i, i in keep} with
// the vertices of its integer hull.
struct QPolyhedronSample {
    Vec u;
    std::vector<int> kept_rows;
    std::vector<Vec> lattice_points;
    std::vector<Vec> hull_vertices;
};

namespace detail {

inline void check_keep(const Lattice& lat, const std::vector<int>& keep) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= lat.n)
            throw InvalidInput("kept row index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw InvalidInput("kept rows must be strictly increasing");
    }
}

inline std::vector<Vec> kept_rows64(const Lattice& lat, const std::vector<int>& keep) {
    std::vector<Vec> rows;
    for (int i : keep) rows.push_back(lat.rows64[i]);
    return rows;
}

inline Vec kept_rhs(const Vec& u, const std::vector<int>& keep) {
    Vec d;
    for (int i : keep) d.push_back(u[i]);
    return d;
}

}  // namespace detail

inline QPolyhedronSample r_polyhedron(const Lattice& lat, const Vec& u,
                                      const std::vector<int>& keep,
                                      const Budget& budget = {}) {
    if (static_cast<int>(u.size()) != lat.n)
        throw DimensionMismatch("r_polyhedron: point length != ambient dimension");
    detail::check_keep(lat, keep);
    auto rows = detail::kept_rows64(lat, keep);
    if (detail::rational_rank(rows, lat.m) < lat.m)
        throw UnboundedPolyhedron("kept rows leave a lineality space");
    if (!detail::recession_cone_trivial(rows, lat.m))
        throw UnboundedPolyhedron("Q-polyhedron is unbounded for the kept rows");
    QPolyhedronSample s;
    s.u = u;
    s.kept_rows = keep;
    s.lattice_points = detail::scan_bounded_polyhedron(rows, detail::kept_rhs(u, keep),
                                                       lat.m, budget);
    std::sort(s.lattice_points.begin(), s.lattice_points.end(), lex_less);
    auto flags = detail::hull_vertex_flags(s.lattice_points, lat.m);
    for (std::size_t i = 0; i < s.lattice_points.size(); ++i)
        if (flags[i]) s.hull_vertices.push_back(s.lattice_points[i]);
    return s;
}

namespace detail {

// Exact origin-vertex test on a bounded Q-polyhedron.
inline bool origin_vertex_bounded(const std::vector<Vec>& rows, const Vec& d, int m,
                                  const Budget& budget) {
    auto pts = scan_bounded_polyhedron(rows, d, m, budget);
    Vec zero(m, 0);
    std::vector<Vec> others;
    for (const auto& z : pts)
        if (z != zero) others.push_back(z);
    // Prune before the hull membership test; extremes always survive.
    if (others.size() > 64) {
        std::unordered_set<Vec, VecHash> set(others.begin(), others.end());
        std::vector<Vec> kept;
        for (const auto& p : others) {
            bool pruned = false;
            for (int j = 0; j < m && !pruned; ++j) {
                Vec e(m, 0);
                e[j] = 1;
                pruned = set.count(add(p, e)) && set.count(sub(p, e));
            }
            if (!pruned) kept.push_back(p);
        }
        others = std::move(kept);
    }
    return !in_convex_hull(zero, others);
}

// Origin-vertex test that tolerates unbounded polyhedra: growing-box
// certificate search proves "not a vertex"; nullopt when inconclusive.
inline std::optional<bool> origin_vertex_status(const Lattice& lat, const Vec& u,
                                                const std::vector<int>& keep,
                                                const Budget& budget) {
    auto rows = kept_rows64(lat, keep);
    Vec d = kept_rhs(u, keep);
    if (rational_rank(rows, lat.m) < lat.m) return false;  // lineality through 0
    if (recession_cone_trivial(rows, lat.m))
        return origin_vertex_bounded(rows, d, lat.m, budget);
    Vec zero(lat.m, 0);
    for (Coord box = 4; box <= budget.hull_box; box *= 2) {
        auto boxed = rows;
        Vec boxed_d = d;
        for (int j = 0; j < lat.m; ++j) {
            Vec e(lat.m, 0);
            e[j] = 1;
            boxed.push_back(e);
            boxed_d.push_back(box);
            boxed.push_back(neg(e));
            boxed_d.push_back(box);
        }
        auto pts = scan_bounded_polyhedron(boxed, boxed_d, lat.m, budget);
        std::vector<Vec> others;
        for (const auto& z : pts)
            if (z != zero) others.push_back(z);
        std::unordered_set<Vec, VecHash> set(others.begin(), others.end());
        std::vector<Vec> kept;
        for (const auto& p : others) {
            bool pruned = false;
            for (int j = 0; j < lat.m && !pruned; ++j) {
                Vec e(lat.m, 0);
                e[j] = 1;
                pruned = set.count(add(p, e)) && set.count(sub(p, e));
            }
            if (!pruned) kept.push_back(p);
        }
        if (in_convex_hull(zero, kept)) return false;
    }
    return std::nullopt;
}

}  // namespace detail

// Critical test: the origin is a hull vertex for u but stops being one
// after bumping any kept coordinate of u.
inline bool is_critical(const Lattice& lat, const Vec& u, const std::vector<int>& keep,
                        const Budget& budget = {}) {
    if (static_cast<int>(u.size()) != lat.n)
        throw DimensionMismatch("is_critical: point length != ambient dimension");
    detail::check_keep(lat, keep);
    auto rows = detail::kept_rows64(lat, keep);
    if (detail::rational_rank(rows, lat.m) < lat.m)
        throw UnboundedPolyhedron("kept rows leave a lineality space");
    if (!detail::recession_cone_trivial(rows, lat.m))
        throw UnboundedPolyhedron("Q-polyhedron is unbounded for the kept rows");
    if (!detail::origin_vertex_bounded(rows, detail::kept_rhs(u, keep), lat.m, budget))
        return false;
    for (int i : keep) {
        Vec bumped = u;
        ++bumped[i];
        if (detail::origin_vertex_bounded(rows, detail::kept_rhs(bumped, keep), lat.m,
                                          budget))
            return false;
    }
    return true;
}

// Image of the lattice under deletion of the coordinates in sigma.
// The image basis is the kept rows of B; dropping rank is an error.
inline Lattice project(const Lattice& lat, const std::vector<int>& sigma) {
    std::vector<bool> drop(lat.n, false);
    for (int i : sigma) {
        if (i < 0 || i >= lat.n) throw InvalidInput("projection index out of range");
        drop[i] = true;
    }
    int kept = 0;
    for (int i = 0; i < lat.n; ++i)
        if (!drop[i]) ++kept;
    if (kept == 0) throw InvalidInput("projection drops every coordinate");
    IntMatrix b(kept, lat.m);
    int r = 0;
    for (int i = 0; i < lat.n; ++i) {
        if (drop[i]) continue;
        for (int j = 0; j < lat.m; ++j) b.at(r, j) = lat.basis.at(i, j);
        ++r;
    }
    if (rank(b) != lat.m)
        throw DimensionDrop("projection does not preserve the lattice dimension");
    return lattice_from_basis(std::move(b));
}

}  // namespace latvert

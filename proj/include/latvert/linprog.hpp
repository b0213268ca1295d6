#pragma once

#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "types.hpp"

namespace latvert {

enum class Rel { le, ge, eq };

struct LinConstraint {
    RatVec coeffs;
    Rel rel = Rel::le;
    Rat rhs = 0;
};

struct LpResult {
    bool feasible = false;
    RatVec witness;  // one satisfying point when feasible
};

namespace detail {

// Phase-1 simplex on  A x = b, x >= 0  with exact rational pivots and
// Bland's rule. Returns the basic feasible point when one exists.
class Phase1Simplex {
public:
    Phase1Simplex(std::vector<RatVec> rows, RatVec rhs)
        : m_(static_cast<int>(rows.size())),
          n_(m_ == 0 ? 0 : static_cast<int>(rows[0].size())) {
        for (int i = 0; i < m_; ++i)
            if (rhs[i] < 0) {
                for (auto& v : rows[i]) v = -v;
                rhs[i] = -rhs[i];
            }
        tab_.assign(m_, RatVec(n_ + m_ + 1, Rat(0)));
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) tab_[i][j] = rows[i][j];
            tab_[i][n_ + i] = 1;
            tab_[i][n_ + m_] = rhs[i];
            basis_[i] = n_ + i;
        }
        // Reduced cost row for minimizing the artificial sum.
        cost_.assign(n_ + m_ + 1, Rat(0));
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j <= n_ + m_; ++j) cost_[j] -= tab_[i][j];
        for (int i = 0; i < m_; ++i) cost_[n_ + i] += 1;
    }

    bool solve(RatVec* point_out) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n_ + m_; ++j)
                if (cost_[j] < 0) { enter = j; break; }
            if (enter < 0) break;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rat ratio = tab_[i][n_ + m_] / tab_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) break;  // unbounded below cannot happen in phase 1
            pivot(leave, enter);
        }
        Rat w = 0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= n_) w += tab_[i][n_ + m_];
        if (w != 0) return false;
        if (point_out) {
            point_out->assign(n_, Rat(0));
            for (int i = 0; i < m_; ++i)
                if (basis_[i] < n_) (*point_out)[basis_[i]] = tab_[i][n_ + m_];
        }
        return true;
    }

private:
    void pivot(int r, int c) {
        Rat piv = tab_[r][c];
        for (auto& v : tab_[r]) v /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == r || tab_[i][c] == 0) continue;
            Rat f = tab_[i][c];
            for (int j = 0; j <= n_ + m_; ++j) tab_[i][j] -= f * tab_[r][j];
        }
        if (cost_[c] != 0) {
            Rat f = cost_[c];
            for (int j = 0; j <= n_ + m_; ++j) cost_[j] -= f * tab_[r][j];
        }
        basis_[r] = c;
    }

    int m_, n_;
    std::vector<RatVec> tab_;
    RatVec cost_;
    std::vector<int> basis_;
};

}  // namespace detail

// Exact feasibility of a system of linear constraints over free variables.
inline LpResult lp_feasible(const std::vector<LinConstraint>& cons, int nvars) {
    int slacks = 0;
    for (const auto& c : cons) {
        if (static_cast<int>(c.coeffs.size()) != nvars)
            throw DimensionMismatch("lp_feasible: constraint width");
        if (c.rel != Rel::eq) ++slacks;
    }
    // Free variables split as x = u - v with u, v >= 0.
    int ncols = 2 * nvars + slacks;
    std::vector<RatVec> rows;
    RatVec rhs;
    int snext = 2 * nvars;
    for (const auto& c : cons) {
        RatVec row(ncols, Rat(0));
        for (int j = 0; j < nvars; ++j) {
            row[j] = c.coeffs[j];
            row[nvars + j] = -c.coeffs[j];
        }
        if (c.rel == Rel::le) row[snext++] = 1;
        if (c.rel == Rel::ge) row[snext++] = -1;
        rows.push_back(std::move(row));
        rhs.push_back(c.rhs);
    }
    detail::Phase1Simplex sx(std::move(rows), std::move(rhs));
    RatVec point;
    LpResult res;
    res.feasible = sx.solve(&point);
    if (res.feasible) {
        res.witness.assign(nvars, Rat(0));
        for (int j = 0; j < nvars; ++j) res.witness[j] = point[j] - point[nvars + j];
    }
    return res;
}

// Is p a convex combination of pts? Exact; pts may repeat.
inline bool in_convex_hull(const Vec& p, const std::vector<Vec>& pts) {
    if (pts.empty()) return false;
    int dim = static_cast<int>(p.size());
    int k = static_cast<int>(pts.size());
    std::vector<RatVec> rows(dim + 1, RatVec(k, Rat(0)));
    RatVec rhs(dim + 1, Rat(0));
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < dim; ++i) rows[i][j] = Rat(pts[j][i]);
        rows[dim][j] = 1;
    }
    for (int i = 0; i < dim; ++i) rhs[i] = Rat(p[i]);
    rhs[dim] = 1;
    detail::Phase1Simplex sx(std::move(rows), std::move(rhs));
    return sx.solve(nullptr);
}

// Scale a rational direction to its primitive integer representative.
inline Vec primitive_direction(const RatVec& v) {
    Int l = 1;
    for (const auto& r : v)
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(r));
    std::vector<Int> scaled(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = boost::multiprecision::numerator(v[i]) *
                    (l / boost::multiprecision::denominator(v[i]));
        g = boost::multiprecision::gcd(g, scaled[i]);
    }
    if (g == 0) return Vec(v.size(), 0);
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_coord(scaled[i] / g);
    return out;
}

inline Vec primitive_direction(const Vec& v) {
    Coord g = 0;
    for (Coord c : v) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) return Vec(v.size(), 0);
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

// Facet-defining subset of {w : g . w <= 0 for all g}. The cone must be
// full-dimensional; survivors are exactly the inequalities whose removal
// strictly enlarges the cone, certified by feasibility witnesses.
inline std::vector<Vec> irredundant_inequalities(const std::vector<RatVec>& halfspaces) {
    if (halfspaces.empty()) return {};
    int n = static_cast<int>(halfspaces[0].size());
    std::vector<Vec> normals;
    for (const auto& h : halfspaces) {
        if (static_cast<int>(h.size()) != n)
            throw DimensionMismatch("irredundant_inequalities: width");
        Vec p = primitive_direction(h);
        if (!is_zero(p)) normals.push_back(std::move(p));
    }
    std::sort(normals.begin(), normals.end(), lex_less);
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    if (normals.empty()) return {};

    auto to_rat = [](const Vec& v) {
        RatVec r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
        return r;
    };
    {
        std::vector<LinConstraint> interior;
        for (const auto& g : normals)
            interior.push_back({to_rat(g), Rel::le, Rat(-1)});
        if (!lp_feasible(interior, n).feasible)
            throw DegenerateCone("inequality system has no full-dimensional cone");
    }
    std::vector<bool> kept(normals.size(), true);
    for (std::size_t i = 0; i < normals.size(); ++i) {
        std::vector<LinConstraint> sys;
        for (std::size_t j = 0; j < normals.size(); ++j) {
            if (j == i || !kept[j]) continue;
            sys.push_back({to_rat(normals[j]), Rel::le, Rat(0)});
        }
        sys.push_back({to_rat(normals[i]), Rel::ge, Rat(1)});
        kept[i] = lp_feasible(sys, n).feasible;
    }
    std::vector<Vec> out;
    for (std::size_t i = 0; i < normals.size(); ++i)
        if (kept[i]) out.push_back(normals[i]);
    return out;
}

}  // namespace latvert

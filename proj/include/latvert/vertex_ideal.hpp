#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "graver.hpp"
#include "lattice.hpp"
#include "linprog.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "types.hpp"

namespace latvert {

namespace detail {

// Unique rational solution of sum_i x_i * cols[i] = target for linearly
// independent columns (consistency is the caller's guarantee).
inline RatVec solve_dependence(const std::vector<RatVec>& cols, const RatVec& target) {
    int m = static_cast<int>(target.size());
    int k = static_cast<int>(cols.size());
    std::vector<RatVec> a(m, RatVec(k + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = cols[j][i];
        a[i][k] = target[i];
    }
    int row = 0;
    std::vector<int> pivot_of_col(k, -1);
    for (int col = 0; col < k && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        for (int i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (int j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    RatVec x(k, Rat(0));
    for (int col = 0; col < k; ++col)
        if (pivot_of_col[col] >= 0)
            x[col] = a[pivot_of_col[col]][k] / a[pivot_of_col[col]][col];
    return x;
}

inline RatVec graver_coordinates(const Lattice& lat, const Vec& g) {
    auto y = solve_integer(lat.basis, to_int_vec(g));
    if (!y) throw Error("basis element has no lattice coordinates");
    RatVec r(y->size());
    for (std::size_t i = 0; i < y->size(); ++i) r[i] = Rat((*y)[i]);
    return r;
}

// Depth-first search over index-increasing subsets of the list whose prefix
// stays linearly independent; each dependent extension is a minimal linear
// dependence. Emits those whose coefficients are all strictly positive.
// prune(partial_max) returning true abandons the subtree; emit receives the
// member indices, primitive positive coefficients, and the componentwise max
// of the members' positive parts. Generic rational-arithmetic walk; the
// dispatcher below prefers the fixed-width integer walk when value bounds
// allow it.
template <class EmitFn, class PruneFn>
void for_each_positive_circuit_rational(const Lattice& lat, const std::vector<Vec>& graver,
                                        EmitFn&& emit, PruneFn&& prune,
                                        const Budget& budget = {}) {
    int nelem = static_cast<int>(graver.size());
    std::vector<RatVec> coords(nelem);
    for (int i = 0; i < nelem; ++i) coords[i] = graver_coordinates(lat, graver[i]);
    std::uint64_t nodes = 0;
    std::vector<int> chosen;
    std::vector<RatVec> echelon;  // reduced rows spanning the chosen coords
    std::vector<int> pivots;
    Vec partial(lat.n, 0);
    auto reduce = [&](RatVec v) {
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            Rat f = v[pivots[r]] / echelon[r][pivots[r]];
            for (int j = 0; j < lat.m; ++j) v[j] -= f * echelon[r][j];
        }
        return v;
    };
    auto dfs = [&](auto&& self, int start, const Vec& pmax) -> void {
        for (int j = start; j < nelem; ++j) {
            if (++nodes > budget.max_circuit_nodes)
                throw BudgetExceeded("positive circuit search exceeds node budget");
            Vec next = pmax;
            Vec pp = pos_part(graver[j]);
            for (int i = 0; i < lat.n; ++i) next[i] = std::max(next[i], pp[i]);
            if (prune(next)) continue;
            RatVec r = reduce(coords[j]);
            bool zero = true;
            for (const auto& c : r)
                if (c != 0) { zero = false; break; }
            if (!zero) {
                if (static_cast<int>(chosen.size()) + 1 > lat.m) continue;
                int piv = 0;
                while (r[piv] == 0) ++piv;
                chosen.push_back(j);
                echelon.push_back(std::move(r));
                pivots.push_back(piv);
                self(self, j + 1, next);
                chosen.pop_back();
                echelon.pop_back();
                pivots.pop_back();
            } else if (!chosen.empty()) {
                std::vector<RatVec> cols;
                for (int idx : chosen) cols.push_back(coords[idx]);
                RatVec mu = solve_dependence(cols, coords[j]);
                bool ok = true;
                for (const auto& c : mu)
                    if (!(c < 0)) { ok = false; break; }
                if (!ok) continue;
                // Zero combination: sum_i (-mu_i) g_chosen[i] + 1 * g_j = 0.
                std::vector<Int> lambda;
                Int denom_lcm = 1;
                for (const auto& c : mu) {
                    Int d = boost::multiprecision::denominator(Rat(-c));
                    denom_lcm = boost::multiprecision::lcm(denom_lcm, d);
                }
                for (const auto& c : mu) {
                    Rat scaled = Rat(-c) * Rat(denom_lcm);
                    lambda.push_back(boost::multiprecision::numerator(scaled));
                }
                lambda.push_back(denom_lcm);
                Int g = 0;
                for (const auto& l : lambda) g = boost::multiprecision::gcd(g, l);
                if (g > 1)
                    for (auto& l : lambda) l /= g;
                std::vector<int> members = chosen;
                members.push_back(j);
                emit(members, lambda, next);
            }
        }
    };
    dfs(dfs, 0, partial);
}

using Wide = __int128;

inline Int int_from_wide(Wide v) {
    bool neg = v < 0;
    unsigned __int128 u =
        neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Int out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? -out : out;
}

inline Wide gcd_wide(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Fraction-free determinant of a small square matrix; destructive on its copy.
inline Wide small_det(std::vector<std::vector<Wide>> a) {
    int k = static_cast<int>(a.size());
    Wide prev = 1;
    int sign = 1;
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r < k; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) { std::swap(a[piv], a[c]); sign = -sign; }
        for (int r = c + 1; r < k; ++r) {
            for (int cc = c + 1; cc < k; ++cc)
                a[r][cc] = (a[c][c] * a[r][cc] - a[r][c] * a[c][cc]) / prev;
            a[r][c] = 0;
        }
        prev = a[c][c];
    }
    return sign < 0 ? -a[k - 1][k - 1] : a[k - 1][k - 1];
}

// Same contract as the rational walk, in fixed-width arithmetic. Requires
// m <= 4 and |lattice coordinates| <= 8192 so every fraction-free value
// (a minor of a (m+1) x m coordinate matrix) and every intermediate product
// of two such minors fits in 128 bits. Extra pruning beyond the caller's:
// a coordinate touched with only one sign so far is dead once no later
// element carries the opposite sign, and no circuit with three or more
// members contains an element together with its negation.
template <class EmitFn, class PruneFn>
void for_each_positive_circuit_fixed(const std::vector<Vec>& graver,
                                     const std::vector<std::vector<Coord>>& coords,
                                     int nvars, int rank, EmitFn&& emit, PruneFn&& prune,
                                     const Budget& budget) {
    const int nelem = static_cast<int>(graver.size());
    const bool masks_on = nvars <= 64;
    std::vector<std::uint64_t> pos_mask(nelem, 0), neg_mask(nelem, 0);
    std::vector<std::uint64_t> pos_avail(nelem + 1, 0), neg_avail(nelem + 1, 0);
    if (masks_on) {
        for (int i = 0; i < nelem; ++i)
            for (int c = 0; c < nvars; ++c) {
                if (graver[i][c] > 0) pos_mask[i] |= std::uint64_t{1} << c;
                if (graver[i][c] < 0) neg_mask[i] |= std::uint64_t{1} << c;
            }
        for (int i = nelem - 1; i >= 0; --i) {
            pos_avail[i] = pos_avail[i + 1] | pos_mask[i];
            neg_avail[i] = neg_avail[i + 1] | neg_mask[i];
        }
    }
    std::vector<int> pair_of(nelem, -1);
    {
        std::unordered_map<Vec, int, VecHash> index;
        for (int i = 0; i < nelem; ++i) index.emplace(graver[i], i);
        for (int i = 0; i < nelem; ++i) {
            Vec neg = graver[i];
            for (auto& c : neg) c = -c;
            auto it = index.find(neg);
            if (it != index.end()) pair_of[i] = it->second;
        }
    }
    std::uint64_t nodes = 0;
    std::vector<int> chosen;
    std::vector<char> in_chosen(nelem, 0);
    std::vector<std::vector<Wide>> rows;  // fraction-free echelon of the chosen coords
    std::vector<int> pivcol;
    std::vector<Wide> pivval;
    auto dfs = [&](auto&& self, int start, const Vec& pmax, std::uint64_t pp,
                   std::uint64_t pn) -> void {
        const int depth = static_cast<int>(chosen.size());
        for (int j = start; j < nelem; ++j) {
            if (++nodes > budget.max_circuit_nodes)
                throw BudgetExceeded("positive circuit search exceeds node budget");
            if (masks_on) {
                if ((pp & ~pn & ~neg_avail[j]) != 0) return;
                if ((pn & ~pp & ~pos_avail[j]) != 0) return;
            }
            if (depth >= 2 && pair_of[j] >= 0 && in_chosen[pair_of[j]]) continue;
            Vec next = pmax;
            for (int c = 0; c < nvars; ++c)
                if (graver[j][c] > next[c]) next[c] = graver[j][c];
            if (prune(next)) continue;
            std::vector<Wide> v(rank);
            for (int s = 0; s < rank; ++s) v[s] = coords[j][s];
            Wide prev = 1;
            for (int t = 0; t < depth; ++t) {
                Wide f = v[pivcol[t]];
                for (int s = 0; s < rank; ++s)
                    v[s] = (pivval[t] * v[s] - f * rows[t][s]) / prev;
                prev = pivval[t];
            }
            bool vzero = true;
            for (int s = 0; s < rank; ++s)
                if (v[s] != 0) { vzero = false; break; }
            if (!vzero) {
                if (depth + 1 > rank) continue;
                int pc = 0;
                while (v[pc] == 0) ++pc;
                chosen.push_back(j);
                in_chosen[j] = 1;
                pivval.push_back(v[pc]);
                pivcol.push_back(pc);
                rows.push_back(std::move(v));
                self(self, j + 1, next, pp | pos_mask[j], pn | neg_mask[j]);
                rows.pop_back();
                pivcol.pop_back();
                pivval.pop_back();
                in_chosen[j] = 0;
                chosen.pop_back();
            } else if (depth > 0) {
                if (masks_on && (pp | pos_mask[j]) != (pn | neg_mask[j])) continue;
                // Unique dependence on the independent prefix, solved on the
                // pivot columns; positive circuit iff every ratio det_t/det
                // is negative.
                std::vector<std::vector<Wide>> a(depth, std::vector<Wide>(depth));
                std::vector<Wide> b(depth);
                for (int s = 0; s < depth; ++s) {
                    for (int t = 0; t < depth; ++t) a[s][t] = coords[chosen[t]][pivcol[s]];
                    b[s] = coords[j][pivcol[s]];
                }
                Wide det = small_det(a);
                bool ok = det != 0;
                std::vector<Wide> lam(depth + 1, 0);
                for (int t = 0; ok && t < depth; ++t) {
                    auto at = a;
                    for (int s = 0; s < depth; ++s) at[s][t] = b[s];
                    Wide dt = small_det(at);
                    if (dt == 0 || (dt > 0) == (det > 0)) { ok = false; break; }
                    lam[t] = -dt;
                }
                if (!ok) continue;
                lam[depth] = det;
                if (det < 0)
                    for (auto& l : lam) l = -l;
                Wide g = 0;
                for (const auto& l : lam) g = gcd_wide(g, l);
                std::vector<Int> lambda;
                lambda.reserve(depth + 1);
                for (const auto& l : lam) lambda.push_back(int_from_wide(l / g));
                std::vector<int> members = chosen;
                members.push_back(j);
                emit(members, lambda, next);
            }
        }
    };
    Vec partial(nvars, 0);
    dfs(dfs, 0, partial, 0, 0);
}

constexpr Coord kCircuitFixedCoordLimit = 8192;

// Positive-circuit walk: fixed-width integer arithmetic when the lattice
// coordinates of every element are small enough to make it exact, otherwise
// the rational walk.
template <class EmitFn, class PruneFn>
void for_each_positive_circuit(const Lattice& lat, const std::vector<Vec>& graver,
                               EmitFn&& emit, PruneFn&& prune, const Budget& budget = {}) {
    bool fixed_ok = lat.m <= 4;
    std::vector<std::vector<Coord>> coords;
    if (fixed_ok) {
        coords.reserve(graver.size());
        for (const auto& g : graver) {
            auto y = solve_integer(lat.basis, to_int_vec(g));
            if (!y) throw Error("basis element has no lattice coordinates");
            std::vector<Coord> row(y->size());
            for (std::size_t i = 0; i < y->size(); ++i) {
                const Int& c = (*y)[i];
                if (c > kCircuitFixedCoordLimit || c < -kCircuitFixedCoordLimit) {
                    fixed_ok = false;
                    break;
                }
                row[i] = static_cast<Coord>(c);
            }
            if (!fixed_ok) break;
            coords.push_back(std::move(row));
        }
    }
    if (fixed_ok)
        for_each_positive_circuit_fixed(graver, coords, lat.n, lat.m,
                                        std::forward<EmitFn>(emit),
                                        std::forward<PruneFn>(prune), budget);
    else
        for_each_positive_circuit_rational(lat, graver, std::forward<EmitFn>(emit),
                                           std::forward<PruneFn>(prune), budget);
}

}  // namespace detail

// Minimal positive linear dependence among basis elements: the member
// indices, the primitive positive coefficients, and the componentwise max
// of the members' positive parts (a generator of the vertex ideal).
struct PositiveCircuit {
    std::vector<int> members;
    std::vector<Int> lambda;
    Vec generator;
};

inline std::vector<PositiveCircuit> positive_circuits(const Lattice& lat,
                                                      const std::vector<Vec>& graver,
                                                      const Budget& budget = {}) {
    std::vector<PositiveCircuit> out;
    detail::for_each_positive_circuit(
        lat, graver,
        [&](const std::vector<int>& members, const std::vector<Int>& lambda,
            const Vec& gen) { out.push_back(PositiveCircuit{members, lambda, gen}); },
        [](const Vec&) { return false; }, budget);
    return out;
}

// Vertex ideal from positive circuits: generated by the positive-part
// maxima over all positive circuits of the conformal basis. Subtrees whose
// running generator is already divisible by a found generator are pruned.
inline MonomialIdeal vertex_ideal_circuits(const Lattice& lat, const Budget& budget = {}) {
    auto graver = graver_basis(lat, budget);
    // Two-member circuits are exactly the pairs {g, -g}, so their generators
    // |g| can be placed in the found list up front; the subtree prune then
    // cuts every branch that can only produce a multiple of one of them.
    std::vector<Vec> found;
    found.reserve(graver.size());
    for (const auto& g : graver) found.push_back(abs_vec(g));
    found = minimalize(std::move(found));
    auto divisible = [&](const Vec& v) {
        for (const auto& h : found)
            if (leq(h, v)) return true;
        return false;
    };
    detail::for_each_positive_circuit(
        lat, graver,
        [&](const std::vector<int>&, const std::vector<Int>&, const Vec& gen) {
            if (!divisible(gen)) found.push_back(gen);
        },
        divisible, budget);
    return monomial_ideal(lat.n, std::move(found));
}

// Independent reference: a monomial lies in the vertex ideal exactly when
// its exponent fails to be a vertex of its own fiber. Scans the box
// [0, box]^n with one polytope test per point; correct as an ideal whenever
// every minimal generator fits in the box.
inline MonomialIdeal vertex_ideal_box_oracle(const Lattice& lat, Coord box,
                                             const Budget& budget = {}) {
    if (box < 0) throw InvalidInput("oracle box must be nonnegative");
    std::vector<Vec> nonvertex;
    Vec u(lat.n, 0);
    for (;;) {
        if (!is_fiber_vertex(lat, u, budget)) nonvertex.push_back(u);
        int j = 0;
        while (j < lat.n && u[j] == box) { u[j] = 0; ++j; }
        if (j == lat.n) break;
        ++u[j];
    }
    return monomial_ideal(lat.n, std::move(nonvertex));
}

// Product ideal: generated by x^(g+ + g-) over the conformal basis.
inline MonomialIdeal product_ideal(const Lattice& lat, const Budget& budget = {}) {
    auto graver = graver_basis(lat, budget);
    std::vector<Vec> gens;
    for (const auto& g : graver) gens.push_back(abs_vec(g));
    return monomial_ideal(lat.n, std::move(gens));
}

// Radical of the vertex ideal, straight from the row matroid of the basis:
// the intersection of the primes on the independent row m-subsets.
inline MonomialIdeal matroid_radical(const Lattice& lat) {
    std::vector<int> comb(lat.m);
    for (int i = 0; i < lat.m; ++i) comb[i] = i;
    if (lat.n < lat.m) throw Error("basis rows cannot span with n < m");
    MonomialIdeal acc;
    bool first = true;
    for (;;) {
        std::vector<Vec> rows;
        for (int i : comb) rows.push_back(lat.rows64[i]);
        if (detail::rational_rank(rows, lat.m) == lat.m) {
            std::vector<Vec> gens;
            for (int i : comb) {
                Vec e(lat.n, 0);
                e[i] = 1;
                gens.push_back(std::move(e));
            }
            MonomialIdeal prime = monomial_ideal(lat.n, std::move(gens));
            acc = first ? prime : intersect(acc, prime);
            first = false;
        }
        int t = lat.m - 1;
        while (t >= 0 && comb[t] == lat.n - lat.m + t) --t;
        if (t < 0) break;
        ++comb[t];
        for (int s = t + 1; s < lat.m; ++s) comb[s] = comb[s - 1] + 1;
    }
    if (first) throw Error("no independent row subset found");
    return acc;
}

namespace detail {

inline Vec restrict_to(const Vec& u, const std::vector<int>& keep) {
    Vec r;
    for (int i : keep) r.push_back(u[i]);
    return r;
}

// Exact origin-vertex decision for the kept-row polyhedron: bounded cases
// by enumeration, unbounded ones by certificate search and then by the
// circuit method on the projected lattice.
inline bool origin_vertex_exact(const Lattice& lat, const Vec& u,
                                const std::vector<int>& keep, const Budget& budget,
                                std::map<std::vector<int>, MonomialIdeal>& cache) {
    auto status = origin_vertex_status(lat, u, keep, budget);
    if (status) return *status;
    auto it = cache.find(keep);
    if (it == cache.end()) {
        std::vector<int> sigma = complement_set(lat.n, keep);
        MonomialIdeal v = vertex_ideal_circuits(project(lat, sigma), budget);
        it = cache.emplace(keep, std::move(v)).first;
    }
    return is_standard(it->second, restrict_to(u, keep));
}

}  // namespace detail

// Checks that (x^u, tau) is a standard pair of the vertex ideal: the origin
// must be a hull vertex for the rows outside tau, and must stop being one
// when any further row is dropped (with its coordinate of u zeroed).
inline bool verify_standard_pair(const Lattice& lat, const Vec& u,
                                 const std::vector<int>& tau, const Budget& budget = {}) {
    if (static_cast<int>(u.size()) != lat.n)
        throw DimensionMismatch("standard pair root length != ambient dimension");
    std::vector<bool> in_tau(lat.n, false);
    for (int i : tau) {
        if (i < 0 || i >= lat.n) throw InvalidInput("face index out of range");
        in_tau[i] = true;
    }
    for (int i = 0; i < lat.n; ++i)
        if (in_tau[i] && u[i] != 0) return false;
    std::vector<int> keep = detail::complement_set(lat.n, tau);
    std::map<std::vector<int>, MonomialIdeal> cache;
    if (!detail::origin_vertex_exact(lat, u, keep, budget, cache)) return false;
    for (int drop : keep) {
        std::vector<int> smaller;
        for (int i : keep)
            if (i != drop) smaller.push_back(i);
        // With no rows left the polyhedron is all of R^m, which has no
        // vertex, so the "stops being a vertex" condition holds.
        if (smaller.empty()) continue;
        Vec zeroed = u;
        zeroed[drop] = 0;
        if (detail::origin_vertex_exact(lat, zeroed, smaller, budget, cache)) return false;
    }
    return true;
}

// Codimension of a monomial ideal: smallest minimal-prime size.
inline std::size_t codimension(const MonomialIdeal& ideal) {
    std::size_t c = ideal.nvars + 1;
    for (const auto& p : minimal_primes(ideal)) c = std::min(c, p.size());
    return c;
}

// True when every associated prime has codimension at most min(n, 2^m - 1),
// equivalently dimension at least max(0, n - (2^m - 1)), for a lattice of
// dimension m.
inline bool dimension_bounds_report(const MonomialIdeal& ideal, int lattice_dim) {
    if (lattice_dim < 0) throw InvalidInput("lattice dimension must be nonnegative");
    std::size_t cap = static_cast<std::size_t>(ideal.nvars);
    if (lattice_dim < 20)
        cap = std::min<std::size_t>(cap, (std::size_t{1} << lattice_dim) - 1);
    for (const auto& p : associated_primes(ideal))
        if (p.size() > cap) return false;
    return true;
}

// Decides whether the columns of `a` indexed by `tau` positively span a face
// of the cone over all columns. First the index set is saturated to
// F = {j : a_j in cone(a_i : i in tau)}, then a supporting functional with
// contact set exactly F is sought; both steps are exact LP feasibility.
inline bool spans_cone_face(const IntMatrix& a, const std::vector<int>& tau) {
    int d = a.rows, n = a.cols;
    std::vector<Vec> cols(n, Vec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) cols[j][i] = to_coord(a.at(i, j));
    std::vector<int> sat;
    for (int j = 0; j < n; ++j) {
        bool member;
        if (std::find(tau.begin(), tau.end(), j) != tau.end()) {
            member = true;
        } else if (tau.empty()) {
            member = is_zero(cols[j]);
        } else {
            // Feasibility of  sum_{i in tau} lambda_i a_i = a_j, lambda >= 0.
            std::vector<LinConstraint> cons;
            for (int r = 0; r < d; ++r) {
                LinConstraint c;
                for (int t : tau) c.coeffs.push_back(Rat(cols[t][r]));
                c.rel = Rel::eq;
                c.rhs = Rat(cols[j][r]);
                cons.push_back(std::move(c));
            }
            for (std::size_t k = 0; k < tau.size(); ++k) {
                LinConstraint c;
                c.coeffs.assign(tau.size(), Rat(0));
                c.coeffs[k] = 1;
                c.rel = Rel::ge;
                c.rhs = 0;
                cons.push_back(std::move(c));
            }
            member = lp_feasible(cons, static_cast<int>(tau.size())).feasible;
        }
        if (member) sat.push_back(j);
    }
    // Supporting functional c with c.a_j = 0 on the saturation, <= -1 off it.
    std::vector<LinConstraint> cons;
    std::vector<char> in_sat(n, 0);
    for (int j : sat) in_sat[j] = 1;
    for (int j = 0; j < n; ++j) {
        LinConstraint c;
        for (int r = 0; r < d; ++r) c.coeffs.push_back(Rat(cols[j][r]));
        c.rel = in_sat[j] ? Rel::eq : Rel::le;
        c.rhs = in_sat[j] ? Rat(0) : Rat(-1);
        cons.push_back(std::move(c));
    }
    return lp_feasible(cons, d).feasible;
}

// Counts, per value b in [b_from, b_to], of the degree-b monomials under a
// single-row grading that are standard for the given vertex ideal.
inline std::vector<std::uint64_t> hilbert_vertex_counts(const Lattice& lat,
                                                        const MonomialIdeal& vertex,
                                                        Coord b_from, Coord b_to,
                                                        const Budget& budget = {}) {
    if (!lat.defining || lat.defining->rows != 1)
        throw InvalidInput("degree counts need a single-row defining matrix");
    if (!lat.pointed)
        throw UnboundedFiber("degree counts need a pointed lattice");
    if (b_from > b_to) throw InvalidInput("empty degree range");
    std::vector<std::uint64_t> counts;
    for (Coord b = b_from; b <= b_to; ++b) {
        auto u0 = solve_integer(*lat.defining, {Int(b)});
        if (!u0) {
            counts.push_back(0);
            continue;
        }
        Vec base = to_vec(*u0);
        auto zpts = detail::scan_bounded_polyhedron(lat.rows64, base, lat.m, budget);
        std::uint64_t c = 0;
        for (const auto& z : zpts) {
            Vec v = detail::q_to_fiber_point(lat, base, z);
            if (is_standard(vertex, v)) ++c;
        }
        counts.push_back(c);
    }
    return counts;
}

}  // namespace latvert

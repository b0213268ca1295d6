#pragma once

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "types.hpp"

namespace latvert {

namespace detail {

constexpr Coord kGraverCoordLimit = Coord{1} << 40;

inline void guard_graver_range(const Vec& v) {
    for (Coord c : v)
        if (c >= kGraverCoordLimit || c <= -kGraverCoordLimit)
            throw ValueOutOfRange("completion produced coordinates beyond 2^40");
}

// Subtract conformally-smaller set members until none fits.
inline Vec conformal_normal_form(Vec s, const std::vector<Vec>& g) {
    bool reduced = true;
    while (reduced && !is_zero(s)) {
        reduced = false;
        for (const auto& h : g) {
            if (conformal_leq(h, s)) {
                s = sub(s, h);
                reduced = true;
                break;
            }
        }
    }
    return s;
}

// Keep only elements with no distinct conformally-smaller element present.
inline std::vector<Vec> conformal_minimalize(std::vector<Vec> g) {
    std::sort(g.begin(), g.end(), norm_lex_less);
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Vec> kept;
    for (const auto& v : g) {
        bool reducible = false;
        for (const auto& h : kept) {
            if (h != v && conformal_leq(h, v)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) kept.push_back(v);
    }
    return kept;
}

}  // namespace detail

// All nonzero lattice vectors minimal in the conformal (sign-compatible,
// coordinatewise) order. Symmetric under negation. Completion over pairwise
// sums starting from the signed basis vectors.
inline std::vector<Vec> graver_basis(const Lattice& lat, const Budget& budget = {}) {
    std::vector<Vec> g;
    std::unordered_set<Vec, VecHash> present;
    std::deque<std::pair<int, int>> queue;
    auto push_element = [&](const Vec& v) {
        if (present.count(v)) return;
        if (g.size() >= budget.max_graver)
            throw BudgetExceeded("completion exceeds budget of " +
                                 std::to_string(budget.max_graver) + " vectors");
        int id = static_cast<int>(g.size());
        g.push_back(v);
        present.insert(v);
        for (int j = 0; j < id; ++j) queue.emplace_back(id, j);
    };
    for (int j = 0; j < lat.m; ++j) {
        Vec col(lat.n);
        for (int i = 0; i < lat.n; ++i) col[i] = lat.rows64[i][j];
        push_element(col);
        push_element(neg(col));
    }
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        Vec s = add(g[i], g[j]);
        if (is_zero(s)) continue;
        detail::guard_graver_range(s);
        s = detail::conformal_normal_form(std::move(s), g);
        if (is_zero(s)) continue;
        push_element(s);
        push_element(neg(s));
    }
    return detail::conformal_minimalize(std::move(g));
}

// Independent cross-check: within the box |v_i| <= box, the conformally
// minimal nonzero lattice vectors are exactly the basis elements there,
// because any reducer of a boxed vector is itself boxed. Enumerates the
// box directly instead of completing sums.
inline std::vector<Vec> graver_in_box_oracle(const Lattice& lat, Coord box,
                                             const Budget& budget = {}) {
    std::vector<Vec> rows;
    Vec d;
    for (int i = 0; i < lat.n; ++i) {
        rows.push_back(lat.rows64[i]);
        d.push_back(box);
        rows.push_back(neg(lat.rows64[i]));
        d.push_back(box);
    }
    auto zpts = detail::scan_bounded_polyhedron(rows, d, lat.m, budget);
    std::vector<Vec> candidates;
    for (const auto& z : zpts) {
        Vec v(lat.n);
        for (int i = 0; i < lat.n; ++i)
            v[i] = static_cast<Coord>(dot128(lat.rows64[i], z));
        if (!is_zero(v)) candidates.push_back(v);
    }
    return detail::conformal_minimalize(std::move(candidates));
}

// Brute-force Hilbert basis of the monoid L ∩ R_rho within a coordinate box:
// enumerates the boxed orthant slice of the lattice and keeps every nonzero
// element that is not a sum of two nonzero enumerated elements. `rho` holds
// one sign (+1 or -1) per coordinate selecting the closed orthant.
inline std::vector<Vec> orthant_hilbert_basis_oracle(const Lattice& lat,
                                                     const std::vector<int>& rho,
                                                     Coord box,
                                                     const Budget& budget = {}) {
    if (static_cast<int>(rho.size()) != lat.n)
        throw DimensionMismatch("sign pattern size must match ambient dimension");
    for (int s : rho)
        if (s != 1 && s != -1) throw InvalidInput("sign pattern entries must be +1 or -1");
    std::vector<Vec> rows;
    Vec d;
    for (int i = 0; i < lat.n; ++i) {
        // rho_i * (Bz)_i >= 0  and  rho_i * (Bz)_i <= box.
        Vec r = lat.rows64[i];
        if (rho[i] < 0) r = neg(r);
        rows.push_back(neg(r));
        d.push_back(0);
        rows.push_back(r);
        d.push_back(box);
    }
    auto zpts = detail::scan_bounded_polyhedron(rows, d, lat.m, budget);
    std::vector<Vec> members;
    std::unordered_set<Vec, VecHash> seen;
    for (const auto& z : zpts) {
        Vec v(lat.n);
        for (int i = 0; i < lat.n; ++i)
            v[i] = static_cast<Coord>(dot128(lat.rows64[i], z));
        if (is_zero(v)) continue;
        members.push_back(v);
        seen.insert(v);
    }
    std::vector<Vec> out;
    for (const auto& v : members) {
        bool reducible = false;
        for (const auto& a : members) {
            if (a == v) continue;
            Vec b = sub(v, a);
            if (!is_zero(b) && seen.count(b)) { reducible = true; break; }
        }
        if (!reducible) out.push_back(v);
    }
    std::sort(out.begin(), out.end(), norm_lex_less);
    return out;
}

// Elements of the set that are nonnegative; for a basis of all conformally
// minimal vectors this is the Hilbert basis of the lattice's nonnegative part.
inline std::vector<Vec> nonnegative_part(const std::vector<Vec>& g) {
    std::vector<Vec> out;
    for (const auto& v : g) {
        bool nonneg = true;
        for (Coord c : v)
            if (c < 0) { nonneg = false; break; }
        if (nonneg && !is_zero(v)) out.push_back(v);
    }
    return out;
}

}  // namespace latvert

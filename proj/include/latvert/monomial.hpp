#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "errors.hpp"
#include "types.hpp"

namespace latvert {

// Monomial ideal in nvars variables, kept as its unique minimal generating
// set (sorted). No generators = zero ideal; the single generator 0 = unit.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Vec> gens;

    bool is_zero_ideal() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && is_zero(gens[0]); }
};

inline std::vector<Vec> minimalize(std::vector<Vec> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Vec& a, const Vec& b) { return total_degree(a) < total_degree(b); });
    std::vector<Vec> kept;
    for (const auto& g : gens) {
        bool divisible = false;
        for (const auto& h : kept)
            if (leq(h, g)) { divisible = true; break; }
        if (!divisible) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end(), grlex_less);
    return kept;
}

inline MonomialIdeal monomial_ideal(int nvars, std::vector<Vec> gens) {
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != nvars)
            throw DimensionMismatch("generator length != variable count");
        for (Coord c : g)
            if (c < 0) throw InvalidInput("monomial exponents must be nonnegative");
    }
    return MonomialIdeal{nvars, minimalize(std::move(gens))};
}

inline bool contains(const MonomialIdeal& ideal, const Vec& v) {
    for (const auto& g : ideal.gens)
        if (leq(g, v)) return true;
    return false;
}

inline bool is_standard(const MonomialIdeal& ideal, const Vec& v) {
    return !contains(ideal, v);
}

inline bool equal(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars == b.nvars && a.gens == b.gens;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars != b.nvars) throw DimensionMismatch("intersect: variable counts differ");
    if (a.is_zero_ideal() || b.is_zero_ideal()) return MonomialIdeal{a.nvars, {}};
    std::vector<Vec> gens;
    for (const auto& g : a.gens)
        for (const auto& h : b.gens) {
            Vec l(a.nvars);
            for (int i = 0; i < a.nvars; ++i) l[i] = std::max(g[i], h[i]);
            gens.push_back(std::move(l));
        }
    return MonomialIdeal{a.nvars, minimalize(std::move(gens))};
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars != b.nvars) throw DimensionMismatch("sum: variable counts differ");
    std::vector<Vec> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return MonomialIdeal{a.nvars, minimalize(std::move(gens))};
}

inline MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Vec> gens;
    for (const auto& g : ideal.gens) {
        Vec s(ideal.nvars, 0);
        for (int i = 0; i < ideal.nvars; ++i) s[i] = g[i] > 0 ? 1 : 0;
        gens.push_back(std::move(s));
    }
    return MonomialIdeal{ideal.nvars, minimalize(std::move(gens))};
}

// Localization at the variables in tau (inverting them), written in the
// same ambient ring: tau-coordinates of every generator drop to zero.
inline MonomialIdeal localize_in_ambient(const MonomialIdeal& ideal,
                                         const std::vector<int>& tau) {
    std::vector<bool> inv(ideal.nvars, false);
    for (int i : tau) {
        if (i < 0 || i >= ideal.nvars) throw InvalidInput("localization index out of range");
        inv[i] = true;
    }
    std::vector<Vec> gens;
    for (const auto& g : ideal.gens) {
        Vec h = g;
        for (int i = 0; i < ideal.nvars; ++i)
            if (inv[i]) h[i] = 0;
        gens.push_back(std::move(h));
    }
    return MonomialIdeal{ideal.nvars, minimalize(std::move(gens))};
}

// Localization that also drops the inverted variables, shrinking the
// ambient ring to the remaining coordinates (in their original order).
inline MonomialIdeal localize(const MonomialIdeal& ideal, const std::vector<int>& tau) {
    MonomialIdeal amb = localize_in_ambient(ideal, tau);
    std::vector<bool> inv(ideal.nvars, false);
    for (int i : tau) inv[i] = true;
    std::vector<Vec> gens;
    for (const auto& g : amb.gens) {
        Vec h;
        for (int i = 0; i < ideal.nvars; ++i)
            if (!inv[i]) h.push_back(g[i]);
        gens.push_back(std::move(h));
    }
    int kept = 0;
    for (int i = 0; i < ideal.nvars; ++i)
        if (!inv[i]) ++kept;
    return MonomialIdeal{kept, minimalize(std::move(gens))};
}

inline Coord max_degree(const MonomialIdeal& ideal, int var) {
    Coord d = 0;
    for (const auto& g : ideal.gens) d = std::max(d, g[var]);
    return d;
}

// Admissible pair (x^u, tau) maximal under orbit inclusion: supp(u) avoids
// tau, u lies outside the tau-localization, and zeroing any free coordinate
// i lands u inside the (tau + i)-localization.
struct StandardPair {
    Vec u;
    std::vector<int> tau;

    bool operator==(const StandardPair& o) const { return u == o.u && tau == o.tau; }
    bool operator<(const StandardPair& o) const {
        if (tau != o.tau) return tau < o.tau;
        return lex_less(u, o.u);
    }
};

namespace detail {

inline std::vector<int> complement_set(int nvars, const std::vector<int>& tau) {
    std::vector<bool> in(nvars, false);
    for (int i : tau) in[i] = true;
    std::vector<int> out;
    for (int i = 0; i < nvars; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

inline void standard_pairs_for_face(const MonomialIdeal& ideal,
                                    const std::vector<int>& tau,
                                    std::vector<StandardPair>& out) {
    MonomialIdeal local = localize_in_ambient(ideal, tau);
    if (local.is_unit()) return;
    std::vector<int> bar = complement_set(ideal.nvars, tau);
    // Every free variable must appear in some localized generator, and the
    // pair root is bounded strictly below the per-variable maximal degree.
    std::vector<Coord> bound(bar.size());
    for (std::size_t t = 0; t < bar.size(); ++t) {
        bound[t] = max_degree(local, bar[t]);
        if (bound[t] == 0) return;
    }
    std::vector<MonomialIdeal> local_plus(bar.size());
    for (std::size_t t = 0; t < bar.size(); ++t) {
        std::vector<int> tau_i = tau;
        tau_i.push_back(bar[t]);
        std::sort(tau_i.begin(), tau_i.end());
        local_plus[t] = localize_in_ambient(ideal, tau_i);
    }
    Vec u(ideal.nvars, 0);
    auto dfs = [&](auto&& self, std::size_t t) -> void {
        if (contains(local, u)) return;  // extensions only grow coordinates
        if (t == bar.size()) {
            for (std::size_t s = 0; s < bar.size(); ++s) {
                Vec drop = u;
                drop[bar[s]] = 0;
                if (!contains(local_plus[s], drop)) return;
            }
            out.push_back(StandardPair{u, tau});
            return;
        }
        for (Coord c = 0; c < bound[t]; ++c) {
            u[bar[t]] = c;
            self(self, t + 1);
        }
        u[bar[t]] = 0;
    };
    dfs(dfs, 0);
}

}  // namespace detail

inline std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal) {
    if (ideal.nvars > 24)
        throw BudgetExceeded("standard pair search over 2^nvars faces needs nvars <= 24");
    std::vector<StandardPair> out;
    if (ideal.is_zero_ideal()) {
        std::vector<int> all;
        for (int i = 0; i < ideal.nvars; ++i) all.push_back(i);
        out.push_back(StandardPair{Vec(ideal.nvars, 0), all});
        return out;
    }
    for (std::uint32_t mask = 0; mask < (1u << ideal.nvars); ++mask) {
        std::vector<int> tau;
        for (int i = 0; i < ideal.nvars; ++i)
            if (mask & (1u << i)) tau.push_back(i);
        detail::standard_pairs_for_face(ideal, tau, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Associated primes, each given by its variable set (the complement of a
// standard pair face).
inline std::vector<std::vector<int>> associated_primes(const MonomialIdeal& ideal) {
    std::set<std::vector<int>> primes;
    for (const auto& sp : standard_pairs(ideal))
        primes.insert(detail::complement_set(ideal.nvars, sp.tau));
    return {primes.begin(), primes.end()};
}

// Irreducible decomposition: components come from standard pairs whose
// root is maximal in the localization (bumping any free coordinate lands
// inside), then redundant components are dropped.
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
    if (ideal.is_zero_ideal())
        throw InvalidInput("the zero ideal has no irreducible monomial decomposition");
    if (ideal.is_unit()) return {};
    std::vector<MonomialIdeal> comps;
    for (const auto& sp : standard_pairs(ideal)) {
        MonomialIdeal local = localize_in_ambient(ideal, sp.tau);
        std::vector<int> bar = detail::complement_set(ideal.nvars, sp.tau);
        bool critical = true;
        for (int i : bar) {
            Vec bumped = sp.u;
            ++bumped[i];
            if (!contains(local, bumped)) { critical = false; break; }
        }
        if (!critical) continue;
        std::vector<Vec> gens;
        for (int i : bar) {
            Vec g(ideal.nvars, 0);
            g[i] = sp.u[i] + 1;
            gens.push_back(std::move(g));
        }
        comps.push_back(monomial_ideal(ideal.nvars, std::move(gens)));
    }
    // Dedupe, then drop components whose removal keeps the intersection.
    std::sort(comps.begin(), comps.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens < b.gens; });
    comps.erase(std::unique(comps.begin(), comps.end(),
                            [](const MonomialIdeal& a, const MonomialIdeal& b) {
                                return a.gens == b.gens;
                            }),
                comps.end());
    auto intersect_all = [&](const std::vector<MonomialIdeal>& parts, int skip) {
        MonomialIdeal acc;
        bool first = true;
        for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
            if (i == skip) continue;
            acc = first ? parts[i] : intersect(acc, parts[i]);
            first = false;
        }
        if (first) return monomial_ideal(ideal.nvars, {Vec(ideal.nvars, 0)});
        return acc;
    };
    if (!equal(intersect_all(comps, -1), ideal))
        throw Error("irreducible components fail to intersect to the ideal");
    for (int i = static_cast<int>(comps.size()) - 1; i >= 0; --i) {
        if (comps.size() == 1) break;
        if (equal(intersect_all(comps, i), ideal)) comps.erase(comps.begin() + i);
    }
    return comps;
}

namespace detail {

inline void minimal_transversals_rec(const std::vector<std::vector<int>>& supports,
                                     std::size_t next, std::vector<int>& chosen,
                                     std::set<std::vector<int>>& out) {
    // Find the first support not hit by the current choice.
    auto hit = [&](const std::vector<int>& s) {
        for (int v : s)
            if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) return true;
        return false;
    };
    std::size_t miss = next;
    while (miss < supports.size() && hit(supports[miss])) ++miss;
    if (miss == supports.size()) {
        // Minimality: every chosen variable must be the sole hitter somewhere.
        for (int v : chosen) {
            bool needed = false;
            for (const auto& s : supports) {
                bool others = false;
                bool has_v = false;
                for (int w : s) {
                    if (w == v) has_v = true;
                    else if (std::find(chosen.begin(), chosen.end(), w) != chosen.end())
                        others = true;
                }
                if (has_v && !others) { needed = true; break; }
            }
            if (!needed) return;
        }
        std::vector<int> t = chosen;
        std::sort(t.begin(), t.end());
        out.insert(t);
        return;
    }
    for (int v : supports[miss]) {
        chosen.push_back(v);
        minimal_transversals_rec(supports, miss + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace detail

// Minimal primes as minimal hitting sets of the generator supports.
inline std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& ideal) {
    if (ideal.is_zero_ideal() || ideal.is_unit())
        throw InvalidInput("minimal primes need a proper nonzero monomial ideal");
    std::vector<std::vector<int>> supports;
    for (const auto& g : ideal.gens) {
        std::vector<int> s;
        for (int i = 0; i < ideal.nvars; ++i)
            if (g[i] > 0) s.push_back(i);
        supports.push_back(std::move(s));
    }
    std::set<std::vector<int>> out;
    std::vector<int> chosen;
    detail::minimal_transversals_rec(supports, 0, chosen, out);
    return {out.begin(), out.end()};
}

// Intersection of the localizations at the minimal primes of smallest
// codimension, written in the ambient ring.
inline MonomialIdeal top_dimensional_part(const MonomialIdeal& ideal) {
    auto primes = minimal_primes(ideal);
    std::size_t codim = ideal.nvars + 1;
    for (const auto& p : primes) codim = std::min(codim, p.size());
    MonomialIdeal acc;
    bool first = true;
    for (const auto& p : primes) {
        if (p.size() != codim) continue;
        MonomialIdeal part = localize_in_ambient(ideal, detail::complement_set(ideal.nvars, p));
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

}  // namespace latvert

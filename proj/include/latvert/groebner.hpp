#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "errors.hpp"
#include "graver.hpp"
#include "lattice.hpp"
#include "linprog.hpp"
#include "monomial.hpp"
#include "types.hpp"

namespace latvert {

// Oriented binomial x^lead - x^trail with lead - trail in the lattice.
struct MarkedVector {
    Vec lead;
    Vec trail;
};

struct ReducedGB {
    Vec weight;
    std::vector<MarkedVector> elements;  // sorted by lead
    bool generic = false;                // no weight ties among the elements
};

namespace detail {

// Larger side first under (weight, then degree-lex) comparison.
inline bool weight_grlex_greater(const Vec& a, const Vec& b, const Vec& w) {
    __int128 wa = dot128(w, a), wb = dot128(w, b);
    if (wa != wb) return wa > wb;
    return grlex_less(b, a);
}

inline void validate_weight(const Vec& w, const std::vector<Vec>& graver_plus) {
    for (const auto& h : graver_plus)
        if (dot128(w, h) <= 0)
            throw NonPositiveWeight(
                "weight is not positive on the nonnegative conformal basis elements");
}

inline Vec normal_form(Vec v, const std::vector<MarkedVector>& gb, const Budget& budget) {
    std::uint64_t steps = 0;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (const auto& e : gb) {
            if (leq(e.lead, v)) {
                v = add(sub(v, e.lead), e.trail);
                reduced = true;
                if (++steps > budget.max_enum_points)
                    throw BudgetExceeded("normal form reduction exceeds step budget");
                break;
            }
        }
    }
    return v;
}

}  // namespace detail

// Reduced Groebner basis for the order "weight, ties by degree-lex", read
// off the conformal basis: orient every element, minimalize the leads, and
// reduce the trails to normal form.
inline ReducedGB reduced_gb(const Lattice& lat, const std::vector<Vec>& graver,
                            const Vec& weight, const Budget& budget = {}) {
    if (static_cast<int>(weight.size()) != lat.n)
        throw DimensionMismatch("weight length != ambient dimension");
    detail::validate_weight(weight, nonnegative_part(graver));
    std::vector<MarkedVector> oriented;
    for (const auto& g : graver) {
        Vec p = pos_part(g), q = neg_part(g);
        if (detail::weight_grlex_greater(p, q, weight))
            oriented.push_back(MarkedVector{p, q});
        else
            oriented.push_back(MarkedVector{q, p});
    }
    std::vector<Vec> leads;
    for (const auto& e : oriented) leads.push_back(e.lead);
    leads = minimalize(std::move(leads));
    ReducedGB gb;
    gb.weight = weight;
    gb.generic = true;
    for (const auto& v : leads) {
        const MarkedVector* src = nullptr;
        for (const auto& e : oriented)
            if (e.lead == v) { src = &e; break; }
        if (!src) throw Error("minimal lead lost its source element");
        Vec tail = detail::normal_form(src->trail, oriented, budget);
        if (dot128(weight, v) == dot128(weight, tail)) gb.generic = false;
        gb.elements.push_back(MarkedVector{v, tail});
    }
    std::sort(gb.elements.begin(), gb.elements.end(),
              [](const MarkedVector& a, const MarkedVector& b) {
                  return lex_less(a.lead, b.lead);
              });
    return gb;
}

inline ReducedGB reduced_gb(const Lattice& lat, const Vec& weight,
                            const Budget& budget = {}) {
    return reduced_gb(lat, graver_basis(lat, budget), weight, budget);
}

inline MonomialIdeal initial_ideal(const Lattice& lat, const ReducedGB& gb) {
    std::vector<Vec> leads;
    for (const auto& e : gb.elements) leads.push_back(e.lead);
    return monomial_ideal(lat.n, std::move(leads));
}

// Facets of the closed cone of weights sharing this initial ideal, in the
// "normal . weight <= 0" orientation (normals are trail - lead vectors).
inline std::vector<Vec> groebner_cone_facets(const ReducedGB& gb) {
    std::vector<RatVec> normals;
    for (const auto& e : gb.elements) {
        Vec g = sub(e.trail, e.lead);
        RatVec row(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) row[i] = Rat(g[i]);
        normals.push_back(std::move(row));
    }
    return irredundant_inequalities(normals);
}

struct FanCone {
    ReducedGB gb;
    MonomialIdeal initial;
    std::vector<Vec> facets;
};

namespace detail {

inline bool weight_in_region(const Vec& w, const std::vector<Vec>& graver_plus) {
    for (const auto& h : graver_plus)
        if (dot128(w, h) <= 0) return false;
    return true;
}

inline bool point_in_cone_closure(const RatVec& r, const ReducedGB& gb) {
    for (const auto& e : gb.elements) {
        Rat s = 0;
        Vec d = sub(e.lead, e.trail);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (d[i] != 0) s += r[i] * Rat(d[i]);
        if (s < 0) return false;
    }
    return true;
}

// Relative-interior point of a facet of the cone, kept strictly inside the
// valid-weight region; nullopt when the facet lies on the region boundary.
inline std::optional<RatVec> facet_interior_weight(const std::vector<Vec>& facets,
                                                   std::size_t which,
                                                   const std::vector<Vec>& graver_plus,
                                                   int n) {
    std::vector<LinConstraint> sys;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        RatVec row(n);
        for (int j = 0; j < n; ++j) row[j] = Rat(facets[i][j]);
        if (i == which)
            sys.push_back({row, Rel::eq, Rat(0)});
        else
            sys.push_back({row, Rel::le, Rat(-1)});
    }
    for (const auto& h : graver_plus) {
        RatVec row(n);
        for (int j = 0; j < n; ++j) row[j] = Rat(h[j]);
        sys.push_back({row, Rel::ge, Rat(1)});
    }
    auto res = lp_feasible(sys, n);
    if (!res.feasible) return std::nullopt;
    return res.witness;
}

}  // namespace detail

// All maximal Groebner cones whose interior meets the valid-weight region,
// found by breadth-first facet flips from the all-ones weight.
inline std::vector<FanCone> groebner_fan(const Lattice& lat, const Budget& budget = {}) {
    auto graver = graver_basis(lat, budget);
    auto graver_plus = nonnegative_part(graver);
    std::vector<FanCone> cones;
    std::set<std::vector<Vec>> seen;
    std::deque<Vec> queue;
    queue.push_back(Vec(lat.n, 1));
    while (!queue.empty()) {
        Vec w = queue.front();
        queue.pop_front();
        ReducedGB gb = reduced_gb(lat, graver, w, budget);
        MonomialIdeal init = initial_ideal(lat, gb);
        if (seen.count(init.gens)) continue;
        seen.insert(init.gens);
        if (cones.size() >= budget.max_cones)
            throw BudgetExceeded("fan traversal exceeds budget of " +
                                 std::to_string(budget.max_cones) + " cones");
        FanCone cone;
        cone.gb = std::move(gb);
        cone.initial = std::move(init);
        cone.facets = groebner_cone_facets(cone.gb);
        for (std::size_t f = 0; f < cone.facets.size(); ++f) {
            auto r = detail::facet_interior_weight(cone.facets, f, graver_plus, lat.n);
            if (!r) continue;  // region-boundary facet
            bool flipped = false;
            Rat eps(1);
            for (int attempt = 0; attempt < 80 && !flipped; ++attempt, eps /= 2) {
                RatVec cand(lat.n);
                for (int j = 0; j < lat.n; ++j)
                    cand[j] = (*r)[j] + eps * Rat(cone.facets[f][j]);
                Vec wprime = primitive_direction(cand);
                if (!detail::weight_in_region(wprime, graver_plus)) continue;
                ReducedGB gb2 = reduced_gb(lat, graver, wprime, budget);
                if (!detail::point_in_cone_closure(*r, gb2)) continue;
                MonomialIdeal init2 = initial_ideal(lat, gb2);
                if (init2.gens == cone.initial.gens) continue;
                flipped = true;
                if (!seen.count(init2.gens)) queue.push_back(wprime);
            }
            if (!flipped)
                throw Error("facet flip failed to reach a neighboring cone");
        }
        cones.push_back(std::move(cone));
    }
    return cones;
}

// Vertex ideal as the intersection of the initial ideals over the fan.
inline MonomialIdeal vertex_ideal_intersection(const Lattice& lat,
                                               const Budget& budget = {}) {
    auto cones = groebner_fan(lat, budget);
    MonomialIdeal acc;
    bool first = true;
    for (const auto& c : cones) {
        acc = first ? c.initial : intersect(acc, c.initial);
        first = false;
    }
    if (first) throw Error("fan traversal produced no cones");
    return acc;
}

}  // namespace latvert

#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "monomial.hpp"
#include "types.hpp"
#include "vertex_ideal.hpp"

namespace latvert {
namespace cases {

// A self-checking reproduction of one worked example: runs the pipeline and
// diffs every computed value against the embedded expected value.
struct CaseReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& label) {
        lines.push_back(std::string(ok ? "ok: " : "MISMATCH: ") + label);
        if (!ok) pass = false;
    }
    void note(const std::string& s) { lines.push_back(s); }
};

namespace detail {

inline IntMatrix make_matrix(int r, int c, std::initializer_list<long long> vals) {
    IntMatrix m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
    return m;
}

inline MonomialIdeal expect_ideal(int nvars, std::vector<Vec> gens) {
    return monomial_ideal(nvars, std::move(gens));
}

inline bool ideal_divides_into(const MonomialIdeal& small, const MonomialIdeal& big) {
    for (const auto& g : small.gens)
        if (!contains(big, g)) return false;
    return true;
}

}  // namespace detail

inline CaseReport case_ex_123(const Budget& budget) {
    CaseReport rep{"ex-123"};
    Lattice lat = lattice_from_matrix(detail::make_matrix(1, 3, {1, 2, 3}));
    MonomialIdeal expected_v =
        detail::expect_ideal(3, {{1, 1, 1}, {2, 1, 0}, {3, 0, 1}, {0, 3, 2}});

    MonomialIdeal vc = vertex_ideal_circuits(lat, budget);
    rep.check(equal(vc, expected_v), "circuit method gives " + ideal_pretty(expected_v));
    MonomialIdeal vi = vertex_ideal_intersection(lat, budget);
    rep.check(equal(vi, expected_v), "initial-ideal intersection gives the same ideal");

    std::vector<std::vector<int>> expected_ass = {{0, 1}, {0, 2}, {1, 2}};
    rep.check(associated_primes(vc) == expected_ass,
              "associated primes are <a,b>, <a,c>, <b,c>");

    // Group the irreducible components by radical and compare the primary
    // decomposition <a^3,ab,b^3> ∩ <a^2,ac,c^2> ∩ <b,c>.
    auto comps = irreducible_decomposition(vc);
    std::map<std::vector<int>, MonomialIdeal> groups;
    for (const auto& comp : comps) {
        std::vector<int> key;
        for (const auto& g : radical(comp).gens)
            for (int i = 0; i < comp.nvars; ++i)
                if (g[i] > 0) key.push_back(i);
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        auto it = groups.find(key);
        if (it == groups.end())
            groups.emplace(key, comp);
        else
            it->second = intersect(it->second, comp);
    }
    std::map<std::vector<int>, MonomialIdeal> expected_groups;
    expected_groups.emplace(std::vector<int>{0, 1},
                            detail::expect_ideal(3, {{3, 0, 0}, {1, 1, 0}, {0, 3, 0}}));
    expected_groups.emplace(std::vector<int>{0, 2},
                            detail::expect_ideal(3, {{2, 0, 0}, {1, 0, 1}, {0, 0, 2}}));
    expected_groups.emplace(std::vector<int>{1, 2},
                            detail::expect_ideal(3, {{0, 1, 0}, {0, 0, 1}}));
    bool groups_ok = groups.size() == expected_groups.size();
    if (groups_ok)
        for (const auto& [key, ideal] : expected_groups) {
            auto it = groups.find(key);
            if (it == groups.end() || !equal(it->second, ideal)) groups_ok = false;
        }
    rep.check(groups_ok,
              "irreducible components regroup to <a^3,ab,b^3> ∩ <a^2,ac,c^2> ∩ <b,c>");
    MonomialIdeal reassembled = comps.empty() ? vc : comps[0];
    for (std::size_t i = 1; i < comps.size(); ++i)
        reassembled = intersect(reassembled, comps[i]);
    rep.check(equal(reassembled, vc), "intersecting all components reproduces the ideal");

    ReducedGB gb = reduced_gb(lat, Vec{100, 10, 1}, budget);
    MonomialIdeal init = initial_ideal(lat, gb);
    MonomialIdeal expected_init =
        detail::expect_ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}});
    rep.check(equal(init, expected_init),
              "initial ideal at weight (100,10,1) is <a^2, ab, ac, b^3>");
    std::vector<std::vector<int>> expected_init_ass = {{0, 1}, {0, 1, 2}};
    rep.check(associated_primes(init) == expected_init_ass,
              "its associated primes are <a,b> and <a,b,c>");
    auto pairs = standard_pairs(init);
    std::vector<StandardPair> expected_pairs = {
        {{0, 0, 0}, {2}}, {{0, 1, 0}, {2}}, {{0, 2, 0}, {2}}, {{1, 0, 0}, {}}};
    std::sort(pairs.begin(), pairs.end());
    std::sort(expected_pairs.begin(), expected_pairs.end());
    rep.check(pairs == expected_pairs,
              "its standard pairs are (1,{c}), (b,{c}), (b^2,{c}), (a,{})");
    return rep;
}

inline CaseReport case_ex_345(const Budget& budget) {
    CaseReport rep{"ex-345"};
    Lattice lat = lattice_from_matrix(detail::make_matrix(1, 3, {3, 4, 5}));
    MonomialIdeal expected_p = detail::expect_ideal(
        3, {{1, 2, 1}, {2, 1, 2}, {3, 1, 1}, {4, 3, 0}, {5, 0, 3}, {0, 5, 4}});
    MonomialIdeal expected_v = detail::expect_ideal(
        3, {{1, 2, 1}, {2, 1, 1}, {4, 3, 0}, {5, 0, 3}, {0, 5, 4}});
    MonomialIdeal p = product_ideal(lat, budget);
    MonomialIdeal v = vertex_ideal_circuits(lat, budget);
    rep.check(equal(p, expected_p), "product ideal is " + ideal_pretty(expected_p));
    rep.check(equal(v, expected_v), "vertex ideal is " + ideal_pretty(expected_v));
    rep.check(detail::ideal_divides_into(p, v) && !equal(p, v),
              "product ideal is strictly contained in the vertex ideal");
    return rep;
}

inline CaseReport case_ex_4_3(const Budget& budget) {
    CaseReport rep{"ex-4.3"};
    Lattice lat = lattice_from_basis(
        detail::make_matrix(3, 3, {1, 4, 3, -2, 0, 5, -1, 1, -9}));
    MonomialIdeal expected_p = detail::expect_ideal(
        3, {{1, 2, 1},  {4, 0, 1},  {5, 2, 0},   {0, 8, 5},   {1, 1, 12}, {0, 3, 11},
            {0, 19, 1}, {1, 21, 0}, {4, 19, 0},  {1, 0, 26},  {3, 0, 25}, {0, 2, 27},
            {0, 1, 38}, {49, 1, 0}, {0, 0, 103}, {0, 103, 0}, {103, 0, 0}});
    MonomialIdeal p = product_ideal(lat, budget);
    MonomialIdeal v = vertex_ideal_circuits(lat, budget);
    rep.check(equal(p, expected_p), "product ideal has the 17 expected generators");
    // Every fiber point of (0,0,3) away from the z-axis has a positive first
    // or second coordinate, and the z-axis fiber points are (0,0,3+103k), so
    // (0,0,3) is a vertex of its fiber: c^3 lies outside the vertex ideal,
    // and the two ideals coincide here.
    rep.check(!contains(v, Vec{0, 0, 3}), "c^3 is not in the vertex ideal");
    rep.check(equal(v, expected_p), "vertex ideal equals the product ideal");
    rep.check(detail::ideal_divides_into(p, v),
              "product ideal is contained in the vertex ideal");
    rep.check(equal(top_dimensional_part(p), p), "top-dimensional part of P equals P");
    rep.check(equal(top_dimensional_part(v), v), "top-dimensional part of V equals V");
    return rep;
}

inline CaseReport case_ex_3_12(const Budget& budget) {
    CaseReport rep{"ex-3.12"};
    IntMatrix b =
        detail::make_matrix(4, 3, {-4, -3, -3, -6, 9, -2, 9, -6, -2, -2, -2, 3});
    Lattice lat = lattice_from_basis(b);
    rep.check(same_lattice(b, kernel_basis(detail::make_matrix(1, 4, {15, 247, 248, 345}))),
              "basis spans the kernel lattice of [15 247 248 345]");
    Vec u = {9, 7, 7, 1};
    std::vector<int> all_rows = {0, 1, 2, 3};
    auto sample = r_polyhedron(lat, u, all_rows, budget);
    std::vector<Vec> expected_vertices = {{0, 0, -3}, {0, 0, 0},  {0, 1, 1},
                                          {1, 0, 1},  {1, 1, -2}, {23, 23, 31}};
    rep.check(sample.hull_vertices == expected_vertices,
              "hull of the constraint polyhedron has exactly the 6 expected vertices");
    for (const auto& vtx : sample.hull_vertices) rep.note("vertex " + vector_string(vtx));
    // (3,3,1) lies on the hull edge from (1,1,-2) towards (23,23,31): it is
    // the midpoint of (1,1,-2) and (5,5,4), so a lattice point but no vertex.
    bool has_331 = std::find(sample.lattice_points.begin(), sample.lattice_points.end(),
                             Vec{3, 3, 1}) != sample.lattice_points.end();
    bool has_554 = std::find(sample.lattice_points.begin(), sample.lattice_points.end(),
                             Vec{5, 5, 4}) != sample.lattice_points.end();
    rep.check(has_331 && has_554,
              "(3,3,1) and (5,5,4) are lattice points of the polyhedron");
    for (int drop = 0; drop < 4; ++drop) {
        std::vector<int> keep;
        for (int i = 0; i < 4; ++i)
            if (i != drop) keep.push_back(i);
        std::map<std::vector<int>, MonomialIdeal> cache;
        bool still = latvert::detail::origin_vertex_exact(lat, u, keep, budget, cache);
        rep.check(!still, "origin stops being a vertex when row " + std::to_string(drop + 1) +
                              " is dropped");
    }
    rep.check(is_critical(lat, u, all_rows, budget), "the right-hand side is critical");
    rep.check(verify_standard_pair(lat, u, {}, budget),
              "(x^u, {}) is a standard pair of the vertex ideal");
    return rep;
}

inline CaseReport case_thm_3_13(const Budget& budget) {
    CaseReport rep{"thm-3.13"};
    Lattice lat = lattice_from_matrix(detail::make_matrix(1, 4, {15, 247, 248, 345}));
    ReducedGB gb = reduced_gb(lat, Vec{111, 0, 342, 1}, budget);
    std::vector<std::pair<Vec, Vec>> expected = {
        {{23, 0, 0, 0}, {0, 0, 0, 1}},    {{10, 0, 0, 1}, {0, 1, 1, 0}},
        {{4, 0, 0, 12}, {0, 16, 1, 0}},   {{3, 0, 0, 55}, {0, 76, 1, 0}},
        {{2, 0, 0, 161}, {0, 225, 0, 0}}, {{1, 0, 0, 204}, {0, 285, 0, 0}},
        {{0, 0, 0, 247}, {0, 345, 0, 0}}, {{7, 0, 1, 9}, {0, 14, 0, 0}},
        {{1, 0, 1, 20}, {0, 29, 0, 0}},   {{0, 0, 1, 63}, {0, 89, 0, 0}},
        {{0, 0, 2, 8}, {3, 13, 0, 0}},    {{0, 0, 4, 5}, {0, 11, 0, 0}},
        {{0, 0, 5, 4}, {10, 10, 0, 0}},   {{3, 0, 6, 2}, {0, 9, 0, 0}},
        {{16, 0, 7, 0}, {0, 8, 0, 0}},    {{0, 0, 7, 1}, {7, 8, 0, 0}},
        {{0, 0, 8, 0}, {17, 7, 0, 0}},    {{13, 1, 1, 0}, {0, 0, 0, 2}},
        {{3, 2, 2, 0}, {0, 0, 0, 3}},     {{0, 3, 3, 0}, {7, 0, 0, 4}},
        {{20, 9, 0, 0}, {0, 0, 6, 3}},    {{13, 12, 0, 0}, {0, 0, 3, 7}},
        {{6, 15, 0, 0}, {0, 0, 0, 11}},   {{2, 31, 1, 0}, {0, 0, 0, 23}},
        {{5, 44, 0, 0}, {0, 0, 1, 31}},   {{0, 47, 2, 0}, {2, 0, 0, 35}},
        {{1, 60, 0, 0}, {0, 0, 0, 43}},   {{0, 136, 1, 0}, {2, 0, 0, 98}}};
    std::vector<std::pair<Vec, Vec>> got;
    for (const auto& e : gb.elements) got.emplace_back(e.lead, e.trail);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    rep.check(got.size() == 28, "reduced basis has 28 elements");
    rep.check(got == expected, "reduced basis matches the 28 expected marked binomials");
    rep.check(gb.generic, "the weight (111,0,342,1) is generic");
    auto facets = groebner_cone_facets(gb);
    std::vector<Vec> expected_facets = {{0, 345, 0, -247},
                                        {-20, -9, 6, 3},
                                        {2, -136, -1, 98},
                                        {-3, 76, 1, -55},
                                        {7, -3, -3, 4}};
    std::sort(facets.begin(), facets.end(), lex_less);
    std::sort(expected_facets.begin(), expected_facets.end(), lex_less);
    rep.check(facets == expected_facets, "cone has exactly the 5 expected facets");
    for (const auto& f : facets) rep.note("facet " + vector_string(f));
    return rep;
}

inline CaseReport case_ex_6facet(const Budget& budget) {
    CaseReport rep{"ex-6facet"};
    Lattice lat = lattice_from_matrix(detail::make_matrix(
        4, 7, {1, 1, 1, 1, 1, 1, 1, 2, 8, 9, 7, 10, 6, 5, 8, 7, 4, 8, 7, 2, 2,
               5, 9, 4, 2, 9, 8, 3}));
    ReducedGB gb = reduced_gb(lat, Vec{252, 197, 0, 0, 153, 0, 0}, budget);
    auto facets = groebner_cone_facets(gb);
    rep.note("reduced basis size " + std::to_string(gb.elements.size()));
    rep.check(facets.size() == 6, "cone at weight (252,197,0,0,153,0,0) has 6 facets");
    for (const auto& f : facets) rep.note("facet " + vector_string(f));
    return rep;
}

inline CaseReport case_segre_3(const Budget& budget) {
    CaseReport rep{"segre-3"};
    Lattice lat = lattice_from_matrix(detail::make_matrix(
        5, 6, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0,
               0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}));
    rep.check(lat.m == 2, "kernel lattice has dimension 2");
    MonomialIdeal p = product_ideal(lat, budget);
    MonomialIdeal v = vertex_ideal_circuits(lat, budget);
    MonomialIdeal rad = matroid_radical(lat);
    rep.check(equal(p, v), "product ideal equals vertex ideal");
    rep.check(equal(v, rad), "vertex ideal equals the matroid radical");
    rep.check(equal(radical(v), v), "the common ideal is squarefree");

    int independent_pairs = 0;
    for (int i = 0; i < lat.n; ++i)
        for (int j = i + 1; j < lat.n; ++j)
            if (latvert::detail::rational_rank({lat.rows64[i], lat.rows64[j]}, lat.m) == 2)
                ++independent_pairs;
    rep.check(independent_pairs == 12, "matroid complex has 12 facets");

    auto fan = groebner_fan(lat, budget);
    rep.note("distinct full-dimensional cones: " + std::to_string(fan.size()));
    rep.check(fan.size() >= 6, "at least 6 distinct initial ideals found");
    bool all_squarefree = true;
    MonomialIdeal meet = fan.empty() ? v : fan[0].initial;
    for (std::size_t i = 0; i < fan.size(); ++i) {
        if (!equal(radical(fan[i].initial), fan[i].initial)) all_squarefree = false;
        if (i) meet = intersect(meet, fan[i].initial);
    }
    rep.check(all_squarefree, "every initial ideal is squarefree");
    rep.check(equal(meet, v), "intersection of all initial ideals equals the vertex ideal");
    return rep;
}

inline CaseReport case_periodicity_123(const Budget& budget) {
    CaseReport rep{"periodicity-123"};
    Lattice lat = lattice_from_matrix(detail::make_matrix(1, 3, {1, 2, 3}));
    MonomialIdeal v = vertex_ideal_circuits(lat, budget);
    auto counts = hilbert_vertex_counts(lat, v, 0, 60, budget);
    std::string row;
    for (std::size_t i = 0; i < counts.size(); ++i)
        row += (i ? " " : "") + std::to_string(counts[i]);
    rep.note("vertex counts for degrees 0..60: " + row);
    int prefix = -1;
    for (int start = 0; start + 6 < static_cast<int>(counts.size()); ++start) {
        bool periodic = true;
        for (int b = start; b + 6 < static_cast<int>(counts.size()); ++b)
            if (counts[b] != counts[b + 6]) { periodic = false; break; }
        if (periodic) { prefix = start; break; }
    }
    rep.check(prefix >= 0 && prefix <= 48,
              "counts become periodic with period 6 after degree " +
                  std::to_string(prefix < 0 ? -1 : prefix));
    return rep;
}

inline const std::map<std::string, CaseReport (*)(const Budget&)>& case_registry() {
    static const std::map<std::string, CaseReport (*)(const Budget&)> reg = {
        {"ex-123", &case_ex_123},   {"ex-345", &case_ex_345},
        {"ex-4.3", &case_ex_4_3},   {"ex-3.12", &case_ex_3_12},
        {"thm-3.13", &case_thm_3_13}, {"ex-6facet", &case_ex_6facet},
        {"segre-3", &case_segre_3}, {"periodicity-123", &case_periodicity_123}};
    return reg;
}

inline CaseReport run_case(const std::string& name, const Budget& budget = {}) {
    const auto& reg = case_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw InvalidInput("unknown reproduction case '" + name + "'");
    return it->second(budget);
}

}  // namespace cases
}  // namespace latvert

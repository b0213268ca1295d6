#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "latvert/groebner.hpp"
#include "latvert/vertex_ideal.hpp"

using namespace latvert;

namespace {

IntMatrix make(int r, int c, std::initializer_list<long long> vals) {
    IntMatrix m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
    return m;
}

}  // namespace

TEST_CASE("reduced basis of the diagonal line") {
    auto lat = lattice_from_basis(make(2, 1, {1, -1}));
    auto gb = reduced_gb(lat, Vec{2, 1});
    REQUIRE(gb.elements.size() == 1);
    REQUIRE(gb.elements[0].lead == Vec{1, 0});
    REQUIRE(gb.elements[0].trail == Vec{0, 1});
    REQUIRE(gb.generic);
    REQUIRE(equal(initial_ideal(lat, gb), monomial_ideal(2, {Vec{1, 0}})));
    auto facets = groebner_cone_facets(gb);
    REQUIRE(facets == std::vector<Vec>{Vec{-1, 1}});
    // The weight itself sits strictly inside its cone.
    REQUIRE(dot128(facets[0], gb.weight) < 0);
}

TEST_CASE("reduced basis of the knapsack kernel at a lex-like weight") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto gb = reduced_gb(lat, Vec{100, 10, 1});
    REQUIRE(gb.generic);
    REQUIRE(gb.elements.size() == 4);
    std::vector<MarkedVector> expected = {
        MarkedVector{Vec{0, 3, 0}, Vec{0, 0, 2}},
        MarkedVector{Vec{1, 0, 1}, Vec{0, 2, 0}},
        MarkedVector{Vec{1, 1, 0}, Vec{0, 0, 1}},
        MarkedVector{Vec{2, 0, 0}, Vec{0, 1, 0}}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        REQUIRE(gb.elements[i].lead == expected[i].lead);
        REQUIRE(gb.elements[i].trail == expected[i].trail);
    }
    REQUIRE(equal(initial_ideal(lat, gb),
                  monomial_ideal(3, {Vec{2, 0, 0}, Vec{1, 1, 0}, Vec{1, 0, 1},
                                     Vec{0, 3, 0}})));
    auto facets = groebner_cone_facets(gb);
    std::vector<Vec> expected_facets = {Vec{-1, 2, -1}, Vec{0, -3, 2}};
    std::sort(facets.begin(), facets.end());
    std::sort(expected_facets.begin(), expected_facets.end());
    REQUIRE(facets == expected_facets);
}

TEST_CASE("basis elements are lattice vectors with coprime sides") {
    std::mt19937 rng(2024);
    for (const auto& row : {std::vector<long long>{1, 2, 3},
                            std::vector<long long>{3, 4, 5}}) {
        IntMatrix a(1, static_cast<int>(row.size()));
        for (int j = 0; j < a.cols; ++j) a.at(0, j) = Int(row[j]);
        auto lat = lattice_from_matrix(a);
        auto graver = graver_basis(lat);
        std::set<Vec> gset(graver.begin(), graver.end());
        for (int trial = 0; trial < 12; ++trial) {
            Vec w(lat.n);
            for (auto& x : w) x = 1 + static_cast<Coord>(rng() % 40);
            auto gb = reduced_gb(lat, graver, w);
            for (const auto& e : gb.elements) {
                Vec diff = sub(e.lead, e.trail);
                // Sits in the conformal basis, so in particular in the lattice.
                REQUIRE(gset.count(diff) == 1);
                for (int i = 0; i < lat.n; ++i)
                    REQUIRE((e.lead[i] == 0 || e.trail[i] == 0));
                // Lead strictly beats trail in the chosen order.
                REQUIRE(detail::weight_grlex_greater(e.lead, e.trail, w));
                // Trail is a standard monomial of the initial ideal.
                REQUIRE(is_standard(initial_ideal(lat, gb), e.trail));
            }
        }
    }
}

TEST_CASE("each graded slice has exactly one standard monomial") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto gb = reduced_gb(lat, Vec{100, 10, 1});
    auto init = initial_ideal(lat, gb);
    for (Coord b = 0; b <= 12; ++b) {
        std::size_t standard = 0;
        Vec best;
        bool have_best = false;
        for (Coord x = 0; x <= b; ++x)
            for (Coord y = 0; 2 * y <= b - x; ++y) {
                Coord rem = b - x - 2 * y;
                if (rem % 3 != 0) continue;
                Vec v{x, y, rem / 3};
                if (is_standard(init, v)) ++standard;
                if (!have_best || detail::weight_grlex_greater(best, v, gb.weight)) {
                    best = v;
                    have_best = true;
                }
            }
        REQUIRE(standard == 1);
        // The unique standard monomial is the order-minimal fiber point.
        REQUIRE(is_standard(init, best));
    }
}

TEST_CASE("normal form is idempotent and degree preserving") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto gb = reduced_gb(lat, Vec{100, 10, 1});
    auto init = initial_ideal(lat, gb);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Vec v{static_cast<Coord>(rng() % 6), static_cast<Coord>(rng() % 6),
              static_cast<Coord>(rng() % 6)};
        Vec nf = detail::normal_form(v, gb.elements, Budget{});
        REQUIRE(is_standard(init, nf));
        REQUIRE(detail::normal_form(nf, gb.elements, Budget{}) == nf);
        REQUIRE(v[0] + 2 * v[1] + 3 * v[2] == nf[0] + 2 * nf[1] + 3 * nf[2]);
        // Same fiber: the difference is a lattice member.
        REQUIRE(solve_integer(lat.basis, to_int_vec(sub(v, nf))).has_value());
    }
}

TEST_CASE("weights outside the admissible region are rejected") {
    auto ray = lattice_from_basis(make(2, 1, {1, 1}));
    REQUIRE_THROWS_AS(reduced_gb(ray, Vec{1, -2}), NonPositiveWeight);
    REQUIRE_THROWS_AS(reduced_gb(ray, Vec{1}), DimensionMismatch);
    auto full = lattice_from_basis(make(2, 2, {1, 1, -1, 2}));
    REQUIRE_THROWS_AS(reduced_gb(full, Vec{1, -1}), NonPositiveWeight);
    REQUIRE(reduced_gb(full, Vec{2, 1}).elements.size() == 2);
}

TEST_CASE("cone facets separate the weight from neighboring cones") {
    auto lat = lattice_from_matrix(make(1, 3, {3, 4, 5}));
    auto graver = graver_basis(lat);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Vec w(3);
        for (auto& x : w) x = 1 + static_cast<Coord>(rng() % 30);
        auto gb = reduced_gb(lat, graver, w);
        auto facets = groebner_cone_facets(gb);
        REQUIRE(!facets.empty());
        for (const auto& f : facets) REQUIRE(dot128(f, w) <= 0);
        if (gb.generic)
            for (const auto& f : facets) REQUIRE(dot128(f, w) < 0);
        // Facet normals come from the element directions themselves.
        std::set<Vec> directions;
        for (const auto& e : gb.elements)
            directions.insert(primitive_direction(sub(e.trail, e.lead)));
        for (const auto& f : facets) REQUIRE(directions.count(f) == 1);
    }
}

TEST_CASE("fan of the diagonal line has two opposite cones") {
    auto lat = lattice_from_basis(make(2, 1, {1, -1}));
    auto fan = groebner_fan(lat);
    REQUIRE(fan.size() == 2);
    std::set<std::vector<Vec>> initials;
    for (const auto& c : fan) initials.insert(c.initial.gens);
    REQUIRE(initials.count({Vec{1, 0}}) == 1);
    REQUIRE(initials.count({Vec{0, 1}}) == 1);
}

TEST_CASE("fan sizes of the worked kernels") {
    REQUIRE(groebner_fan(lattice_from_matrix(make(1, 3, {1, 2, 3}))).size() == 6);
    REQUIRE(groebner_fan(lattice_from_matrix(make(1, 3, {3, 4, 5}))).size() == 10);
}

TEST_CASE("fan cones have distinct initial ideals and valid facet data") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto fan = groebner_fan(lat);
    std::set<std::vector<Vec>> initials;
    for (const auto& c : fan) {
        REQUIRE(initials.insert(c.initial.gens).second);
        REQUIRE(!c.facets.empty());
        REQUIRE(equal(initial_ideal(lat, c.gb), c.initial));
        for (const auto& f : c.facets) REQUIRE(dot128(f, c.gb.weight) <= 0);
    }
}

TEST_CASE("every admissible weight lands in some fan cone") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto graver = graver_basis(lat);
    auto fan = groebner_fan(lat);
    std::set<std::vector<Vec>> initials;
    for (const auto& c : fan) initials.insert(c.initial.gens);
    std::mt19937 rng(314);
    for (int trial = 0; trial < 40; ++trial) {
        Vec w(3);
        for (auto& x : w) x = 1 + static_cast<Coord>(rng() % 60);
        auto gb = reduced_gb(lat, graver, w);
        REQUIRE(initials.count(initial_ideal(lat, gb).gens) == 1);
    }
}

TEST_CASE("intersecting the fan initials reproduces the vertex ideal") {
    for (const auto& basis : {kernel_basis(make(1, 3, {1, 2, 3})),
                              kernel_basis(make(1, 3, {3, 4, 5})),
                              make(2, 1, {1, -1}), make(2, 2, {1, 1, -1, 2})}) {
        auto lat = lattice_from_basis(basis);
        REQUIRE(equal(vertex_ideal_intersection(lat), vertex_ideal_circuits(lat)));
    }
}

TEST_CASE("initial ideals refine the vertex ideal memberwise") {
    // The vertex ideal is the intersection, so each initial ideal contains it.
    auto lat = lattice_from_matrix(make(1, 3, {3, 4, 5}));
    auto v = vertex_ideal_circuits(lat);
    for (const auto& c : groebner_fan(lat))
        for (const auto& g : v.gens) REQUIRE(contains(c.initial, g));
}

TEST_CASE("fan traversal respects the cone budget") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    Budget tiny;
    tiny.max_cones = 2;
    REQUIRE_THROWS_AS(groebner_fan(lat, tiny), BudgetExceeded);
}

TEST_CASE("normal form reduction respects the step budget") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto gb = reduced_gb(lat, Vec{100, 10, 1});
    Budget tiny;
    tiny.max_enum_points = 1;
    REQUIRE_THROWS_AS(detail::normal_form(Vec{5, 5, 5}, gb.elements, tiny),
                      BudgetExceeded);
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "latvert/graver.hpp"
#include "latvert/linprog.hpp"
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

bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
    for (const auto& g : a.gens)
        if (!contains(b, g)) return false;
    return true;
}

// Independent membership test: the exponent is a fiber non-vertex exactly
// when some nonzero nonnegative combination of conformal basis elements
// whose positive parts fit under it sums to zero.
bool lp_membership(const Lattice& lat, const std::vector<Vec>& graver, const Vec& u) {
    std::vector<const Vec*> members;
    for (const auto& g : graver) {
        bool fits = true;
        for (int i = 0; i < lat.n; ++i)
            if (g[i] > 0 && g[i] > u[i]) { fits = false; break; }
        if (fits) members.push_back(&g);
    }
    if (members.empty()) return false;
    int k = static_cast<int>(members.size());
    std::vector<LinConstraint> cons;
    for (int i = 0; i < lat.n; ++i) {
        LinConstraint c;
        c.coeffs.assign(k, Rat(0));
        for (int j = 0; j < k; ++j) c.coeffs[j] = Rat((*members[j])[i]);
        c.rel = Rel::eq;
        c.rhs = 0;
        cons.push_back(c);
    }
    LinConstraint sum1;
    sum1.coeffs.assign(k, Rat(1));
    sum1.rel = Rel::eq;
    sum1.rhs = 1;
    cons.push_back(sum1);
    for (int j = 0; j < k; ++j) {
        LinConstraint nn;
        nn.coeffs.assign(k, Rat(0));
        nn.coeffs[j] = 1;
        nn.rel = Rel::ge;
        nn.rhs = 0;
        cons.push_back(nn);
    }
    return lp_feasible(cons, k).feasible;
}

void check_lp_agreement(const Lattice& lat, Coord box) {
    auto graver = graver_basis(lat);
    auto v = vertex_ideal_circuits(lat);
    Vec u(lat.n, 0);
    for (;;) {
        REQUIRE(contains(v, u) == lp_membership(lat, graver, u));
        int j = 0;
        while (j < lat.n && u[j] == box) { u[j] = 0; ++j; }
        if (j == lat.n) break;
        ++u[j];
    }
}

}  // namespace

TEST_CASE("positive circuits of the diagonal line") {
    auto lat = lattice_from_basis(make(2, 1, {1, -1}));
    auto g = graver_basis(lat);
    auto pcs = positive_circuits(lat, g);
    REQUIRE(pcs.size() == 1);
    REQUIRE(pcs[0].members.size() == 2);
    REQUIRE(pcs[0].lambda == std::vector<Int>({Int(1), Int(1)}));
    REQUIRE(pcs[0].generator == Vec{1, 1});
}

TEST_CASE("every emitted circuit is a primitive positive dependence") {
    for (const auto& row : {std::vector<long long>{1, 2, 3},
                            std::vector<long long>{3, 4, 5}}) {
        IntMatrix a(1, static_cast<int>(row.size()));
        for (int j = 0; j < a.cols; ++j) a.at(0, j) = Int(row[j]);
        auto lat = lattice_from_matrix(a);
        auto g = graver_basis(lat);
        for (const auto& pc : positive_circuits(lat, g)) {
            REQUIRE(pc.members.size() >= 2);
            REQUIRE(pc.members.size() == pc.lambda.size());
            std::vector<Int> total(lat.n, Int(0));
            Int common = 0;
            Vec expected_gen(lat.n, 0);
            for (std::size_t t = 0; t < pc.members.size(); ++t) {
                REQUIRE(pc.lambda[t] > 0);
                common = boost::multiprecision::gcd(common, pc.lambda[t]);
                const Vec& member = g[pc.members[t]];
                for (int i = 0; i < lat.n; ++i) {
                    total[i] += pc.lambda[t] * member[i];
                    expected_gen[i] = std::max(expected_gen[i],
                                               member[i] > 0 ? member[i] : 0);
                }
            }
            for (const auto& c : total) REQUIRE(c == 0);
            REQUIRE(common == 1);
            REQUIRE(pc.generator == expected_gen);
            // Minimality: members are linearly independent after dropping one.
            std::vector<int> sorted_members = pc.members;
            std::sort(sorted_members.begin(), sorted_members.end());
            REQUIRE(std::adjacent_find(sorted_members.begin(), sorted_members.end()) ==
                    sorted_members.end());
        }
    }
}

TEST_CASE("knapsack circuit counts") {
    auto lat = lattice_from_matrix(make(1, 3, {3, 4, 5}));
    auto pcs = positive_circuits(lat, graver_basis(lat));
    std::size_t pairs = 0, triples = 0;
    for (const auto& pc : pcs) {
        if (pc.members.size() == 2) ++pairs;
        if (pc.members.size() == 3) ++triples;
    }
    REQUIRE(pcs.size() == 77);
    REQUIRE(pairs == 7);
    REQUIRE(triples == 70);
}

TEST_CASE("fixed-width and rational circuit walks agree") {
    for (const auto& row : {std::vector<long long>{1, 2, 3},
                            std::vector<long long>{3, 4, 5}}) {
        IntMatrix a(1, static_cast<int>(row.size()));
        for (int j = 0; j < a.cols; ++j) a.at(0, j) = Int(row[j]);
        auto lat = lattice_from_matrix(a);
        auto g = graver_basis(lat);
        std::set<std::vector<int>> fast, slow;
        detail::for_each_positive_circuit(
            lat, g,
            [&](const std::vector<int>& members, const std::vector<Int>&, const Vec&) {
                std::vector<int> key = members;
                std::sort(key.begin(), key.end());
                fast.insert(key);
            },
            [](const Vec&) { return false; }, Budget{});
        detail::for_each_positive_circuit_rational(
            lat, g,
            [&](const std::vector<int>& members, const std::vector<Int>&, const Vec&) {
                std::vector<int> key = members;
                std::sort(key.begin(), key.end());
                slow.insert(key);
            },
            [](const Vec&) { return false; }, Budget{});
        REQUIRE(fast == slow);
    }
}

TEST_CASE("vertex ideal generators for the small knapsacks") {
    auto v123 = vertex_ideal_circuits(lattice_from_matrix(make(1, 3, {1, 2, 3})));
    REQUIRE(equal(v123, monomial_ideal(3, {Vec{1, 1, 1}, Vec{2, 1, 0}, Vec{3, 0, 1},
                                           Vec{0, 3, 2}})));
    auto v345 = vertex_ideal_circuits(lattice_from_matrix(make(1, 3, {3, 4, 5})));
    REQUIRE(equal(v345, monomial_ideal(3, {Vec{1, 2, 1}, Vec{2, 1, 1}, Vec{4, 3, 0},
                                           Vec{5, 0, 3}, Vec{0, 5, 4}})));
}

TEST_CASE("boxed fiber-vertex oracle agrees with the circuit method") {
    struct Probe { std::vector<long long> row; Coord box; };
    for (const auto& probe : {Probe{{1, 1}, 5}, Probe{{1, 2, 3}, 8}, Probe{{3, 4, 5}, 8}}) {
        IntMatrix a(1, static_cast<int>(probe.row.size()));
        for (int j = 0; j < a.cols; ++j) a.at(0, j) = Int(probe.row[j]);
        auto lat = lattice_from_matrix(a);
        REQUIRE(equal(vertex_ideal_circuits(lat), vertex_ideal_box_oracle(lat, probe.box)));
    }
}

TEST_CASE("dependence-based membership agrees on pointed lattices") {
    check_lp_agreement(lattice_from_matrix(make(1, 3, {1, 2, 3})), 6);
    check_lp_agreement(lattice_from_matrix(make(1, 3, {3, 4, 5})), 6);
}

TEST_CASE("dependence-based membership agrees on a full-rank lattice") {
    auto lat = lattice_from_basis(make(2, 2, {1, 1, -1, 2}));
    REQUIRE(!lat.pointed);
    check_lp_agreement(lat, 5);
    REQUIRE(equal(vertex_ideal_circuits(lat),
                  monomial_ideal(2, {Vec{1, 1}, Vec{3, 0}, Vec{0, 3}})));
}

TEST_CASE("product ideal sits inside the vertex ideal") {
    for (const auto& basis : {make(2, 1, {1, -1}), kernel_basis(make(1, 3, {1, 2, 3})),
                              kernel_basis(make(1, 3, {3, 4, 5})),
                              make(2, 2, {1, 1, -1, 2})}) {
        auto lat = lattice_from_basis(basis);
        auto p = product_ideal(lat);
        auto v = vertex_ideal_circuits(lat);
        REQUIRE(ideal_subset(p, v));
    }
}

TEST_CASE("full-rank plane lattices have equal product and vertex ideals") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> entry(-3, 3);
    int done = 0;
    while (done < 15) {
        IntMatrix b(2, 2);
        for (auto& e : b.a) e = Int(entry(rng));
        if (rank(b) != 2) continue;
        ++done;
        auto lat = lattice_from_basis(b);
        REQUIRE(equal(product_ideal(lat), vertex_ideal_circuits(lat)));
    }
}

TEST_CASE("support radical matches the radical of the vertex ideal") {
    auto l123 = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto rad = matroid_radical(l123);
    REQUIRE(equal(rad, monomial_ideal(3, {Vec{0, 1, 1}, Vec{1, 0, 1}, Vec{1, 1, 0}})));
    REQUIRE(equal(rad, radical(vertex_ideal_circuits(l123))));
    auto l345 = lattice_from_matrix(make(1, 3, {3, 4, 5}));
    REQUIRE(equal(matroid_radical(l345), radical(vertex_ideal_circuits(l345))));
    auto even = lattice_from_basis(make(1, 1, {2}));
    REQUIRE(equal(matroid_radical(even), monomial_ideal(1, {Vec{1}})));
    REQUIRE(equal(vertex_ideal_circuits(even), monomial_ideal(1, {Vec{2}})));
}

TEST_CASE("standard pair verification against the fiber geometry") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto v = vertex_ideal_circuits(lat);
    for (const auto& sp : standard_pairs(v))
        REQUIRE(verify_standard_pair(lat, sp.u, sp.tau));
    // Monomials inside the ideal are never pair roots.
    REQUIRE(!verify_standard_pair(lat, Vec{1, 1, 1}, {}));
    // (1, {a,b}) is not maximal: it is covered by larger behavior.
    REQUIRE(!verify_standard_pair(lat, Vec{0, 0, 0}, {0, 1}));
    // Roots must avoid the face coordinates.
    REQUIRE(!verify_standard_pair(lat, Vec{0, 1, 0}, {1}));
    REQUIRE_THROWS_AS(verify_standard_pair(lat, Vec{0, 0, 0}, {3}), InvalidInput);
    REQUIRE_THROWS_AS(verify_standard_pair(lat, Vec{0, 0}, {}), DimensionMismatch);
}

TEST_CASE("pair verification rejects non-pairs adjacent to real ones") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto v = vertex_ideal_circuits(lat);
    auto pairs = standard_pairs(v);
    std::set<StandardPair> pair_set(pairs.begin(), pairs.end());
    // Bump each root by one in each free coordinate; the result is a pair
    // iff the combinatorial list says so.
    for (const auto& sp : pairs) {
        std::vector<bool> in_tau(3, false);
        for (int i : sp.tau) in_tau[i] = true;
        for (int i = 0; i < 3; ++i) {
            if (in_tau[i]) continue;
            Vec bumped = sp.u;
            ++bumped[i];
            bool expect = pair_set.count(StandardPair{bumped, sp.tau}) == 1;
            REQUIRE(verify_standard_pair(lat, bumped, sp.tau) == expect);
        }
    }
}

TEST_CASE("localizing the vertex ideal matches the projected lattice") {
    auto lat = lattice_from_matrix(make(1, 3, {3, 4, 5}));
    auto v = vertex_ideal_circuits(lat);
    for (int drop = 0; drop < 3; ++drop) {
        auto proj = project(lat, {drop});
        REQUIRE(equal(localize(v, {drop}), vertex_ideal_circuits(proj)));
    }
    auto l123 = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto v123 = vertex_ideal_circuits(l123);
    for (int drop = 0; drop < 3; ++drop)
        REQUIRE(equal(localize(v123, {drop}),
                      vertex_ideal_circuits(project(l123, {drop}))));
}

TEST_CASE("codimension of a vertex ideal respects the rank bound") {
    std::mt19937 rng(88);
    std::uniform_int_distribution<int> entry(-3, 3);
    int done = 0;
    while (done < 12) {
        int n = 2 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % 2);
        if (m > n) continue;
        IntMatrix b(n, m);
        for (auto& e : b.a) e = Int(entry(rng));
        if (rank(b) != m) continue;
        ++done;
        auto lat = lattice_from_basis(b);
        auto v = vertex_ideal_circuits(lat);
        if (v.is_zero_ideal()) continue;
        std::size_t bound = std::min<std::size_t>(lat.n, (1u << lat.m) - 1);
        REQUIRE(codimension(v) <= bound);
    }
}

TEST_CASE("associated primes stay within the rank-based codimension cap") {
    auto l123 = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    REQUIRE(dimension_bounds_report(vertex_ideal_circuits(l123), l123.m));
    // A rank-3 lattice in four coordinates can carry codimension-3 primes
    // (cap 2^3 - 1 = 7 covers even the full maximal ideal).
    auto wide = lattice_from_matrix(make(1, 4, {1, 2, 3, 4}));
    REQUIRE(wide.m == 3);
    REQUIRE(dimension_bounds_report(vertex_ideal_circuits(wide), wide.m));
    auto diag = lattice_from_basis(make(2, 1, {1, -1}));
    REQUIRE(dimension_bounds_report(vertex_ideal_circuits(diag), diag.m));
    // Pretending the knapsack ideal came from a rank-1 lattice must fail:
    // its primes have two variables each, above the cap 2^1 - 1 = 1.
    REQUIRE(!dimension_bounds_report(vertex_ideal_circuits(l123), 1));
    REQUIRE_THROWS_AS(dimension_bounds_report(vertex_ideal_circuits(l123), -1),
                      InvalidInput);
}

TEST_CASE("face spanning in the quadrant cone") {
    auto a = make(2, 3, {1, 0, 1, 0, 1, 1});
    REQUIRE(spans_cone_face(a, {}));
    REQUIRE(spans_cone_face(a, {0}));
    REQUIRE(spans_cone_face(a, {1}));
    REQUIRE(!spans_cone_face(a, {2}));
    REQUIRE(spans_cone_face(a, {0, 1}));
    REQUIRE(!spans_cone_face(a, {0, 2}));
    REQUIRE(!spans_cone_face(a, {1, 2}));
    REQUIRE(spans_cone_face(a, {0, 1, 2}));
}

TEST_CASE("face spanning on a one-row matrix") {
    auto a = make(1, 3, {1, 2, 3});
    REQUIRE(spans_cone_face(a, {}));
    REQUIRE(spans_cone_face(a, {0}));
    REQUIRE(spans_cone_face(a, {1}));
    REQUIRE(spans_cone_face(a, {0, 1, 2}));
}

TEST_CASE("degree-indexed vertex counts") {
    auto l11 = lattice_from_matrix(make(1, 2, {1, 1}));
    auto v11 = vertex_ideal_circuits(l11);
    REQUIRE(hilbert_vertex_counts(l11, v11, 0, 5) ==
            std::vector<std::uint64_t>({1, 2, 2, 2, 2, 2}));
    auto l123 = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto v123 = vertex_ideal_circuits(l123);
    REQUIRE(hilbert_vertex_counts(l123, v123, 0, 10) ==
            std::vector<std::uint64_t>({1, 1, 2, 3, 3, 4, 3, 4, 4, 4, 4}));
}

TEST_CASE("degree-indexed counts equal fiber vertex counts") {
    auto lat = lattice_from_matrix(make(1, 3, {1, 2, 3}));
    auto v = vertex_ideal_circuits(lat);
    auto counts = hilbert_vertex_counts(lat, v, 0, 8);
    for (Coord b = 0; b <= 8; ++b) {
        auto f = fiber(lat, Vec{b, 0, 0});
        REQUIRE(counts[static_cast<std::size_t>(b)] == f.vertices.size());
    }
}

TEST_CASE("degree-indexed counts validate their inputs") {
    auto l11 = lattice_from_matrix(make(1, 2, {1, 1}));
    auto v11 = vertex_ideal_circuits(l11);
    REQUIRE_THROWS_AS(hilbert_vertex_counts(l11, v11, 3, 1), InvalidInput);
    auto from_basis = lattice_from_basis(make(2, 1, {1, -1}));
    REQUIRE_THROWS_AS(hilbert_vertex_counts(from_basis, v11, 0, 2), InvalidInput);
    auto full = lattice_from_basis(make(2, 2, {1, 1, -1, 2}));
    // Re-derive a defining matrix? A full-rank lattice is never pointed.
    REQUIRE(!full.pointed);
}

TEST_CASE("box oracle validates its box") {
    auto lat = lattice_from_matrix(make(1, 2, {1, 1}));
    REQUIRE_THROWS_AS(vertex_ideal_box_oracle(lat, -1), InvalidInput);
    REQUIRE(equal(vertex_ideal_box_oracle(lat, 0), monomial_ideal(2, {})));
}

TEST_CASE("circuit search respects the node budget") {
    auto lat = lattice_from_matrix(make(1, 3, {3, 4, 5}));
    Budget tiny;
    tiny.max_circuit_nodes = 3;
    REQUIRE_THROWS_AS(vertex_ideal_circuits(lat, tiny), BudgetExceeded);
}

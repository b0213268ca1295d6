#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latvert {

// Arbitrary-precision scalars for matrix algebra and linear programming.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;

// Lattice vectors, fiber points and monomial exponents are desk-scale
// integers; they stay in 64-bit with range guards at the boundaries.
using Coord = std::int64_t;
using Vec = std::vector<Coord>;

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Coord c) { return c == 0; });
}

inline Vec neg(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// v = v+ - v- with disjoint supports.
inline Vec pos_part(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] > 0 ? v[i] : 0;
    return r;
}

inline Vec neg_part(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] < 0 ? -v[i] : 0;
    return r;
}

inline Vec abs_vec(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] < 0 ? -v[i] : v[i];
    return r;
}

inline Coord norm1(const Vec& v) {
    Coord s = 0;
    for (Coord c : v) s += c < 0 ? -c : c;
    return s;
}

inline Coord total_degree(const Vec& v) {
    Coord s = 0;
    for (Coord c : v) s += c;
    return s;
}

// u <= v coordinatewise; for monomials this is divisibility x^u | x^v.
inline bool leq(const Vec& u, const Vec& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

// Conformal order: u sits in the same closed orthant as v and |u| <= |v|.
inline bool conformal_leq(const Vec& u, const Vec& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0 && (v[i] < u[i])) return false;
        if (u[i] < 0 && (v[i] > u[i])) return false;
    }
    return true;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Graded lexicographic: total degree first, then lex.
inline bool grlex_less(const Vec& a, const Vec& b) {
    Coord da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return lex_less(a, b);
}

// Canonical order for lattice vectors: 1-norm first, then lex.
inline bool norm_lex_less(const Vec& a, const Vec& b) {
    Coord na = norm1(a), nb = norm1(b);
    if (na != nb) return na < nb;
    return lex_less(a, b);
}

inline Rat rat_dot(const RatVec& w, const Vec& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s += w[i] * Rat(v[i]);
    return s;
}

inline Rat rat_dot(const RatVec& w, const RatVec& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
    return s;
}

// Exact dot product of small vectors, accumulated wide.
inline __int128 dot128(const Vec& a, const Vec& b) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<__int128>(a[i]) * static_cast<__int128>(b[i]);
    return s;
}

struct VecHash {
    std::size_t operator()(const Vec& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Coord c : v) {
            h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Enumeration and completion caps. Exceeding one raises BudgetExceeded;
// results are never silently truncated.
struct Budget {
    std::uint64_t max_enum_points = 10'000'000;    // candidate points per box scan
    std::uint64_t max_graver = 1'000'000;          // completion element cap
    std::uint64_t max_cones = 100'000;             // Groebner fan cone cap
    std::uint64_t max_circuit_nodes = 2'000'000'000;  // subset-search node cap
    Coord hull_box = 64;                           // certificate search radius, unbounded case
};

}  // namespace latvert

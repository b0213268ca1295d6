#pragma once

#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "types.hpp"

namespace latvert {

// Dense integer matrix with arbitrary-precision entries, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {
        if (r < 0 || c < 0) throw InvalidInput("matrix dimensions must be nonnegative");
    }

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rws) {
        int r = static_cast<int>(rws.size());
        int c = r == 0 ? 0 : static_cast<int>(rws[0].size());
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rws[i].size()) != c)
                throw InvalidInput("ragged matrix rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rws[i][j];
        }
        return m;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

namespace detail {

inline void swap_cols(IntMatrix& m, int c1, int c2) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, c1), m.at(i, c2));
}

// col(c1) <- p*col(c1) + q*col(c2), col(c2) <- r*col(c1) + s*col(c2),
// applied simultaneously; caller guarantees p*s - q*r = +-1.
inline void combine_cols(IntMatrix& m, int c1, int c2,
                         const Int& p, const Int& q, const Int& r, const Int& s) {
    for (int i = 0; i < m.rows; ++i) {
        Int v1 = m.at(i, c1), v2 = m.at(i, c2);
        m.at(i, c1) = p * v1 + q * v2;
        m.at(i, c2) = r * v1 + s * v2;
    }
}

inline Int floor_div(const Int& num, const Int& den) {
    Int q = num / den, r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

}  // namespace detail

struct HnfResult {
    IntMatrix h;           // h = m * u, column-style Hermite form
    IntMatrix u;           // unimodular transform
    std::vector<int> pivot_rows;  // row of the pivot in each pivot column
};

// Column-style Hermite normal form: pivot columns first with positive
// pivots, entries left of a pivot reduced to [0, pivot), zero columns last.
inline HnfResult column_hnf(const IntMatrix& m_in) {
    HnfResult res;
    res.h = m_in;
    res.u = IntMatrix::identity(m_in.cols);
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    int p = 0;
    for (int i = 0; i < h.rows && p < h.cols; ++i) {
        // Clear row i to the right of column p with unimodular column ops.
        for (int j = p + 1; j < h.cols; ++j) {
            if (h.at(i, j) == 0) continue;
            if (h.at(i, p) == 0) {
                detail::swap_cols(h, p, j);
                detail::swap_cols(u, p, j);
                continue;
            }
            Int x, y;
            Int g = boost::multiprecision::gcd(h.at(i, p), h.at(i, j));
            // Extended gcd on the pair of leading entries.
            {
                Int a = h.at(i, p), b = h.at(i, j);
                Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
                while (b != 0) {
                    Int q = a / b;
                    Int t = a - q * b; a = b; b = t;
                    t = x0 - q * x1; x0 = x1; x1 = t;
                    t = y0 - q * y1; y0 = y1; y1 = t;
                }
                if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
                g = a; x = x0; y = y0;
            }
            Int ap = h.at(i, p) / g, aj = h.at(i, j) / g;
            // det [[x, -aj], [y, ap]] = x*ap + y*aj = 1.
            detail::combine_cols(h, p, j, x, y, -aj, ap);
            detail::combine_cols(u, p, j, x, y, -aj, ap);
        }
        if (h.at(i, p) == 0) continue;
        if (h.at(i, p) < 0) {
            for (int r = 0; r < h.rows; ++r) h.at(r, p) = -h.at(r, p);
            for (int r = 0; r < u.rows; ++r) u.at(r, p) = -u.at(r, p);
        }
        // Reduce columns left of p against the new pivot.
        for (int j = 0; j < p; ++j) {
            Int q = detail::floor_div(h.at(i, j), h.at(i, p));
            if (q == 0) continue;
            for (int r = 0; r < h.rows; ++r) h.at(r, j) -= q * h.at(r, p);
            for (int r = 0; r < u.rows; ++r) u.at(r, j) -= q * u.at(r, p);
        }
        res.pivot_rows.push_back(i);
        ++p;
    }
    return res;
}

inline int rank(const IntMatrix& m) {
    return static_cast<int>(column_hnf(m).pivot_rows.size());
}

// Basis of ker(A) cap Z^n as the columns of an n x (n - rank A) matrix,
// canonicalized by a second Hermite pass. The integer kernel is saturated
// by construction.
inline IntMatrix kernel_basis(const IntMatrix& a) {
    HnfResult hr = column_hnf(a);
    int r = static_cast<int>(hr.pivot_rows.size());
    int k = a.cols - r;
    IntMatrix ker(a.cols, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < a.cols; ++i) ker.at(i, j) = hr.u.at(i, r + j);
    return column_hnf(ker).h;
}

// Solve m * x = rhs over the integers; returns empty when no solution.
inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& m,
                                                     const std::vector<Int>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows)
        throw DimensionMismatch("solve_integer: rhs length");
    HnfResult hr = column_hnf(m);
    std::vector<Int> y(m.cols, Int(0));
    std::vector<Int> resid = rhs;
    int np = static_cast<int>(hr.pivot_rows.size());
    for (int c = 0; c < np; ++c) {
        int pr = hr.pivot_rows[c];
        // Rows above this pivot must already be cleared.
        const Int& piv = hr.h.at(pr, c);
        if (resid[pr] % piv != 0) return std::nullopt;
        y[c] = resid[pr] / piv;
        if (y[c] != 0)
            for (int i = 0; i < m.rows; ++i) resid[i] -= y[c] * hr.h.at(i, c);
    }
    for (int i = 0; i < m.rows; ++i)
        if (resid[i] != 0) return std::nullopt;
    std::vector<Int> x(m.cols, Int(0));
    for (int i = 0; i < m.cols; ++i) {
        Int s = 0;
        for (int c = 0; c < m.cols; ++c)
            if (y[c] != 0) s += hr.u.at(i, c) * y[c];
        x[i] = s;
    }
    return x;
}

inline bool in_integer_span(const IntMatrix& basis, const std::vector<Int>& v) {
    return solve_integer(basis, v).has_value();
}

// Equality of integer column spans.
inline bool same_lattice(const IntMatrix& b1, const IntMatrix& b2) {
    if (b1.rows != b2.rows) return false;
    for (int j = 0; j < b2.cols; ++j) {
        std::vector<Int> v(b2.rows);
        for (int i = 0; i < b2.rows; ++i) v[i] = b2.at(i, j);
        if (!in_integer_span(b1, v)) return false;
    }
    for (int j = 0; j < b1.cols; ++j) {
        std::vector<Int> v(b1.rows);
        for (int i = 0; i < b1.rows; ++i) v[i] = b1.at(i, j);
        if (!in_integer_span(b2, v)) return false;
    }
    return true;
}

// ---- text format: first line "R C", then R rows of C integers ----

inline IntMatrix read_matrix(std::istream& in) {
    long long r, c;
    if (!(in >> r >> c)) throw InvalidInput("matrix header: expected 'R C'");
    if (r < 0 || c < 0 || r > 4096 || c > 4096)
        throw InvalidInput("matrix dimensions out of range");
    IntMatrix m(static_cast<int>(r), static_cast<int>(c));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            std::string tok;
            if (!(in >> tok)) throw InvalidInput("matrix body: too few entries");
            try {
                m.at(i, j) = Int(tok);
            } catch (...) {
                throw InvalidInput("matrix body: bad integer '" + tok + "'");
            }
        }
    return m;
}

inline IntMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    IntMatrix m = read_matrix(in);
    std::string extra;
    if (in >> extra) throw InvalidInput("matrix body: trailing content '" + extra + "'");
    return m;
}

inline void write_matrix(std::ostream& out, const IntMatrix& m) {
    out << m.rows << ' ' << m.cols << '\n';
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
}

// Inline form "[1 2 3; 4 5 6]" used by the CLI.
inline IntMatrix parse_inline_matrix(const std::string& text) {
    std::string body = text;
    auto l = body.find('[');
    auto r = body.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw InvalidInput("inline matrix must be bracketed, e.g. \"[1 2 3]\"");
    body = body.substr(l + 1, r - l - 1);
    std::vector<std::vector<Int>> rows;
    std::string rowtext;
    std::istringstream stream(body);
    while (std::getline(stream, rowtext, ';')) {
        std::vector<Int> row;
        std::istringstream rs(rowtext);
        std::string tok;
        while (rs >> tok) {
            try {
                row.emplace_back(tok);
            } catch (...) {
                throw InvalidInput("inline matrix: bad integer '" + tok + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidInput("inline matrix: no entries");
    return IntMatrix::from_rows(rows);
}

inline Coord to_coord(const Int& v) {
    if (v > std::numeric_limits<Coord>::max() / 4 || v < std::numeric_limits<Coord>::min() / 4)
        throw ValueOutOfRange("integer entry exceeds 64-bit working range");
    return static_cast<Coord>(v);
}

inline Vec to_vec(const std::vector<Int>& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_coord(v[i]);
    return r;
}

inline std::vector<Int> to_int_vec(const Vec& v) {
    std::vector<Int> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

}  // namespace latvert

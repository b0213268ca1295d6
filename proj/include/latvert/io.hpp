#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "types.hpp"

namespace latvert {

// Variable display names: single letters a..z when they suffice, x1..xn beyond.
inline std::string var_name(int i, int nvars) {
    if (nvars <= 26) return std::string(1, static_cast<char>('a' + i));
    return "x" + std::to_string(i + 1);
}

inline std::string monomial_string(const Vec& u, int nvars) {
    std::string s;
    for (int i = 0; i < nvars; ++i) {
        if (u[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(i, nvars);
        if (u[i] > 1) s += "^" + std::to_string(u[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string vector_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline std::string exponent_line(const Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::string ideal_pretty(const MonomialIdeal& ideal) {
    if (ideal.gens.empty()) return "<0>";
    std::string s = "<";
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
        if (i) s += ", ";
        s += monomial_string(ideal.gens[i], ideal.nvars);
    }
    return s + ">";
}

// One generator per line as space-separated exponents.
inline std::vector<std::string> ideal_lines(const MonomialIdeal& ideal) {
    std::vector<std::string> out;
    for (const auto& g : ideal.gens) out.push_back(exponent_line(g));
    return out;
}

inline std::string prime_pretty(const std::vector<int>& vars, int nvars) {
    std::string s = "<";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ", ";
        s += var_name(vars[i], nvars);
    }
    return s + ">";
}

inline std::string standard_pair_pretty(const StandardPair& p, int nvars) {
    std::string s = "(" + monomial_string(p.u, nvars) + ", {";
    for (std::size_t i = 0; i < p.tau.size(); ++i) {
        if (i) s += ",";
        s += var_name(p.tau[i], nvars);
    }
    return s + "})";
}

inline std::string binomial_pretty(const MarkedVector& mv, int nvars) {
    return monomial_string(mv.lead, nvars) + " - " + monomial_string(mv.trail, nvars);
}

// Parses a weight such as "3,1/2,0" or "[3 1/2 0]" into the primitive
// integer vector pointing the same direction.
inline Vec parse_weight(const std::string& text, int nvars) {
    std::string cleaned;
    for (char c : text) {
        if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')')
            cleaned += ' ';
        else
            cleaned += c;
    }
    std::istringstream in(cleaned);
    RatVec w;
    std::string tok;
    while (in >> tok) {
        try {
            w.push_back(Rat(tok));
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse weight entry '" + tok + "'");
        }
    }
    if (static_cast<int>(w.size()) != nvars)
        throw InvalidInput("weight has " + std::to_string(w.size()) + " entries, expected " +
                           std::to_string(nvars));
    bool any = false;
    for (const auto& r : w)
        if (r != 0) any = true;
    if (!any) throw InvalidInput("weight must be nonzero");
    return primitive_direction(w);
}

// A matrix argument is either an inline "[r1; r2; ...]" literal or a file path.
inline IntMatrix load_matrix_arg(const std::string& arg) {
    std::string trimmed = arg;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    if (!trimmed.empty() && trimmed.front() == '[') return parse_inline_matrix(trimmed);
    std::ifstream in(arg);
    if (!in) throw InvalidInput("cannot open matrix file '" + arg + "'");
    return read_matrix(in);
}

}  // namespace latvert

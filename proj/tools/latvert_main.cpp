// latvert: exact computations on sublattices of Z^n — Graver bases, vertex
// and product ideals, standard pairs, decompositions, initial ideals,
// Groebner cones and fans, and self-checking reproductions of the bundled
// worked examples.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "latvert/cases.hpp"
#include "latvert/errors.hpp"
#include "latvert/groebner.hpp"
#include "latvert/io.hpp"
#include "latvert/lattice.hpp"
#include "latvert/monomial.hpp"
#include "latvert/types.hpp"
#include "latvert/vertex_ideal.hpp"

namespace {

using nlohmann::json;
using namespace latvert;

struct CommonOpts {
    std::string matrix;
    std::string basis;
    bool as_json = false;
    std::int64_t budget = 0;
    Coord box = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_lattice = true) {
    if (needs_lattice) {
        auto* m = cmd->add_option("--matrix", opts.matrix,
                                  "defining matrix A (inline [..] or file); the lattice "
                                  "is ker(A) over the integers");
        auto* b = cmd->add_option("--lattice-basis", opts.basis,
                                  "basis matrix B (inline [..] or file); columns "
                                  "generate the lattice");
        m->excludes(b);
        b->excludes(m);
    }
    cmd->add_flag("--json", opts.as_json, "emit JSON instead of text");
    cmd->add_option("--budget", opts.budget,
                    "cap on enumeration points, completion elements and fan cones "
                    "(defaults 1e7 / 1e6 / 1e5)");
    cmd->add_option("--box", opts.box,
                    "coordinate box for oracle enumeration and unbounded-vertex "
                    "certificate search (default 8 / 64)");
}

Budget make_budget(const CommonOpts& opts) {
    Budget b;
    if (opts.budget > 0) {
        b.max_enum_points = static_cast<std::uint64_t>(opts.budget);
        b.max_graver = static_cast<std::uint64_t>(opts.budget);
        b.max_cones = static_cast<std::uint64_t>(opts.budget);
        b.max_circuit_nodes = static_cast<std::uint64_t>(opts.budget);
    }
    if (opts.box > 0) b.hull_box = opts.box;
    return b;
}

Lattice load_lattice(const CommonOpts& opts) {
    if (!opts.matrix.empty()) return lattice_from_matrix(load_matrix_arg(opts.matrix));
    if (!opts.basis.empty()) return lattice_from_basis(load_matrix_arg(opts.basis));
    throw InvalidInput("provide exactly one of --matrix or --lattice-basis");
}

json vec_json(const Vec& v) {
    json arr = json::array();
    for (Coord c : v) arr.push_back(c);
    return arr;
}

json gens_json(const std::vector<Vec>& gens) {
    json arr = json::array();
    for (const auto& g : gens) arr.push_back(vec_json(g));
    return arr;
}

void emit_ideal(const MonomialIdeal& ideal, const CommonOpts& opts,
                const std::string& command) {
    if (opts.as_json) {
        json out = {{"command", command},
                    {"nvars", ideal.nvars},
                    {"generators", gens_json(ideal.gens)},
                    {"pretty", ideal_pretty(ideal)}};
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const auto& line : ideal_lines(ideal)) std::cout << line << "\n";
}

bool ideal_contained_in(const MonomialIdeal& small, const MonomialIdeal& big) {
    for (const auto& g : small.gens)
        if (!contains(big, g)) return false;
    return true;
}

// All maximal minors of b share one absolute value (and at least one is
// nonzero); integer determinants via rational elimination.
bool is_unimodular_basis(const IntMatrix& b) {
    int n = b.rows, m = b.cols;
    std::vector<int> comb(m);
    for (int i = 0; i < m; ++i) comb[i] = i;
    Rat common = 0;
    bool any = false;
    while (true) {
        std::vector<RatVec> sq(m, RatVec(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sq[i][j] = Rat(b.at(comb[i], j));
        Rat det = 1;
        for (int c = 0; c < m; ++c) {
            int piv = -1;
            for (int r = c; r < m; ++r)
                if (sq[r][c] != 0) { piv = r; break; }
            if (piv < 0) { det = 0; break; }
            if (piv != c) { std::swap(sq[piv], sq[c]); det = -det; }
            det *= sq[c][c];
            for (int r = c + 1; r < m; ++r) {
                Rat f = sq[r][c] / sq[c][c];
                for (int j = c; j < m; ++j) sq[r][j] -= f * sq[c][j];
            }
        }
        if (det < 0) det = -det;
        if (det != 0) {
            if (!any) { common = det; any = true; }
            else if (det != common) return false;
        }
        int t = m - 1;
        while (t >= 0 && comb[t] == n - m + t) --t;
        if (t < 0) break;
        ++comb[t];
        for (int s = t + 1; s < m; ++s) comb[s] = comb[s - 1] + 1;
    }
    return any;
}

int run_check(const Lattice& lat, const std::string& property, const Budget& budget,
              const CommonOpts& opts) {
    bool ok = false;
    if (property == "pl-subset-vl") {
        ok = ideal_contained_in(product_ideal(lat, budget), vertex_ideal_circuits(lat, budget));
    } else if (property == "rad-equal") {
        MonomialIdeal rp = radical(product_ideal(lat, budget));
        MonomialIdeal rv = radical(vertex_ideal_circuits(lat, budget));
        MonomialIdeal mr = matroid_radical(lat);
        ok = equal(rp, rv) && equal(rv, mr);
    } else if (property == "top-equal") {
        if (lat.m != 2) throw InvalidInput("top-equal is a law for dimension-2 lattices");
        ok = equal(top_dimensional_part(product_ideal(lat, budget)),
                   top_dimensional_part(vertex_ideal_circuits(lat, budget)));
    } else if (property == "dim2-equal") {
        if (lat.m != 2 || lat.n != 2)
            throw InvalidInput("dim2-equal is a law for rank-2 sublattices of Z^2");
        ok = equal(product_ideal(lat, budget), vertex_ideal_circuits(lat, budget));
    } else if (property == "unimodular-equal") {
        if (!is_unimodular_basis(lat.basis))
            throw InvalidInput("lattice basis is not unimodular");
        MonomialIdeal p = product_ideal(lat, budget);
        MonomialIdeal v = vertex_ideal_circuits(lat, budget);
        ok = equal(p, v) && equal(v, matroid_radical(lat));
    } else if (property == "codim2-embedded") {
        if (!lat.defining)
            throw InvalidInput("codim2-embedded needs --matrix input (the column cone)");
        if (lat.m != 2) throw InvalidInput("codim2-embedded is a law for codimension 2");
        MonomialIdeal v = vertex_ideal_circuits(lat, budget);
        auto ass = associated_primes(v);
        auto mins = minimal_primes(v);
        ok = true;
        std::vector<int> all_vars;
        for (int i = 0; i < lat.n; ++i) all_vars.push_back(i);
        for (const auto& prime : ass) {
            if (prime == all_vars) { ok = false; break; }
            if (std::find(mins.begin(), mins.end(), prime) != mins.end()) continue;
            std::vector<int> tau;
            for (int i = 0; i < lat.n; ++i)
                if (std::find(prime.begin(), prime.end(), i) == prime.end())
                    tau.push_back(i);
            if (spans_cone_face(*lat.defining, tau)) { ok = false; break; }
        }
    } else {
        throw InvalidInput("unknown property '" + property + "'");
    }
    if (opts.as_json) {
        json out = {{"command", "check"}, {"property", property}, {"ok", ok}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "property " << property << ": " << (ok ? "ok" : "violated") << "\n";
    }
    return ok ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"exact vertex-ideal and Groebner-fan computations for integer lattices"};
    app.require_subcommand(1);

    CommonOpts graver_o;
    auto* cmd_graver = app.add_subcommand("graver", "Graver basis of the lattice");
    add_common(cmd_graver, graver_o);

    CommonOpts vi_o;
    std::string vi_method = "circuits";
    auto* cmd_vi = app.add_subcommand("vertex-ideal",
                                      "monomial ideal whose standard monomials are the "
                                      "fiber vertices");
    add_common(cmd_vi, vi_o);
    cmd_vi->add_option("--method", vi_method, "circuits | intersection | oracle")
        ->check(CLI::IsMember({"circuits", "intersection", "oracle"}));

    CommonOpts pi_o;
    auto* cmd_pi = app.add_subcommand("product-ideal",
                                      "ideal generated by x^{g+} x^{g-} over Graver "
                                      "elements g");
    add_common(cmd_pi, pi_o);

    CommonOpts rad_o;
    std::string rad_via = "matroid";
    auto* cmd_rad = app.add_subcommand("radical", "radical of the vertex ideal");
    add_common(cmd_rad, rad_o);
    cmd_rad->add_option("--via", rad_via, "matroid | supports")
        ->check(CLI::IsMember({"matroid", "supports"}));

    CommonOpts sp_o;
    std::string sp_weight;
    auto* cmd_sp = app.add_subcommand("std-pairs",
                                      "standard pairs of the vertex ideal (or of an "
                                      "initial ideal when --weight is given)");
    add_common(cmd_sp, sp_o);
    cmd_sp->add_option("--weight", sp_weight, "weight vector (rationals allowed)");

    CommonOpts irr_o;
    auto* cmd_irr = app.add_subcommand("irr-decomp",
                                       "irreducible decomposition of the vertex ideal");
    add_common(cmd_irr, irr_o);

    CommonOpts ass_o;
    auto* cmd_ass = app.add_subcommand("assoc-primes",
                                       "associated primes of the vertex ideal");
    add_common(cmd_ass, ass_o);

    CommonOpts top_o;
    std::string top_of = "vertex";
    auto* cmd_top = app.add_subcommand("top",
                                       "intersection of the top-dimensional primary "
                                       "components");
    add_common(cmd_top, top_o);
    cmd_top->add_option("--of", top_of, "vertex | product")
        ->check(CLI::IsMember({"vertex", "product"}));

    CommonOpts init_o;
    std::string init_weight;
    auto* cmd_init = app.add_subcommand("initial", "initial ideal at a weight vector");
    add_common(cmd_init, init_o);
    cmd_init->add_option("--weight", init_weight, "weight vector (rationals allowed)")
        ->required();

    CommonOpts cone_o;
    std::string cone_weight;
    bool count_facets = false;
    auto* cmd_cone = app.add_subcommand("cone", "Groebner cone of a weight vector");
    add_common(cmd_cone, cone_o);
    cmd_cone->add_option("--weight", cone_weight, "weight vector (rationals allowed)")
        ->required();
    cmd_cone->add_flag("--count-facets", count_facets, "print only the facet count");

    CommonOpts fan_o;
    std::int64_t max_cones = 0;
    auto* cmd_fan = app.add_subcommand("fan", "all distinct initial ideals by cone "
                                              "traversal");
    add_common(cmd_fan, fan_o);
    cmd_fan->add_option("--max-cones", max_cones, "cap on enumerated cones");

    CommonOpts hc_o;
    std::int64_t hc_from = 0, hc_to = 0;
    auto* cmd_hc = app.add_subcommand("hilbert-counts",
                                      "number of fiber vertices per degree for a "
                                      "single-row defining matrix");
    add_common(cmd_hc, hc_o);
    cmd_hc->add_option("--from", hc_from, "first degree");
    cmd_hc->add_option("--to", hc_to, "last degree")->required();

    CommonOpts chk_o;
    std::string chk_property;
    auto* cmd_chk = app.add_subcommand("check", "verify a structural law on a lattice");
    add_common(cmd_chk, chk_o);
    cmd_chk->add_option("--property", chk_property,
                        "pl-subset-vl | rad-equal | top-equal | dim2-equal | "
                        "unimodular-equal | codim2-embedded")
        ->required();

    CommonOpts rep_o;
    std::string rep_name;
    auto* cmd_rep = app.add_subcommand("reproduce",
                                       "run a bundled worked example and diff against "
                                       "its expected values");
    add_common(cmd_rep, rep_o, /*needs_lattice=*/false);
    cmd_rep->add_option("name", rep_name, "example id, e.g. ex-123 or thm-3.13")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (cmd_graver->parsed()) {
        Budget budget = make_budget(graver_o);
        Lattice lat = load_lattice(graver_o);
        auto g = graver_basis(lat, budget);
        if (graver_o.as_json) {
            json out = {{"command", "graver"}, {"n", lat.n}, {"m", lat.m},
                        {"vectors", gens_json(g)}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& v : g) std::cout << exponent_line(v) << "\n";
        }
        return 0;
    }

    if (cmd_vi->parsed()) {
        Budget budget = make_budget(vi_o);
        Lattice lat = load_lattice(vi_o);
        MonomialIdeal v;
        if (vi_method == "circuits") {
            v = vertex_ideal_circuits(lat, budget);
        } else if (vi_method == "intersection") {
            v = vertex_ideal_intersection(lat, budget);
        } else {
            Coord box = vi_o.box > 0 ? vi_o.box : 8;
            v = vertex_ideal_box_oracle(lat, box, budget);
        }
        emit_ideal(v, vi_o, "vertex-ideal");
        return 0;
    }

    if (cmd_pi->parsed()) {
        Budget budget = make_budget(pi_o);
        Lattice lat = load_lattice(pi_o);
        emit_ideal(product_ideal(lat, budget), pi_o, "product-ideal");
        return 0;
    }

    if (cmd_rad->parsed()) {
        Budget budget = make_budget(rad_o);
        Lattice lat = load_lattice(rad_o);
        MonomialIdeal r = rad_via == "matroid"
                              ? matroid_radical(lat)
                              : radical(vertex_ideal_circuits(lat, budget));
        emit_ideal(r, rad_o, "radical");
        return 0;
    }

    if (cmd_sp->parsed()) {
        Budget budget = make_budget(sp_o);
        Lattice lat = load_lattice(sp_o);
        MonomialIdeal ideal;
        if (sp_weight.empty()) {
            ideal = vertex_ideal_circuits(lat, budget);
        } else {
            ReducedGB gb = reduced_gb(lat, parse_weight(sp_weight, lat.n), budget);
            ideal = initial_ideal(lat, gb);
        }
        auto pairs = standard_pairs(ideal);
        if (sp_o.as_json) {
            json arr = json::array();
            for (const auto& p : pairs) {
                json face = json::array();
                for (int i : p.tau) face.push_back(i);
                arr.push_back({{"root", vec_json(p.u)}, {"face", face}});
            }
            json out = {{"command", "std-pairs"}, {"nvars", ideal.nvars}, {"pairs", arr}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& p : pairs)
                std::cout << standard_pair_pretty(p, ideal.nvars) << "\n";
        }
        return 0;
    }

    if (cmd_irr->parsed()) {
        Budget budget = make_budget(irr_o);
        Lattice lat = load_lattice(irr_o);
        auto comps = irreducible_decomposition(vertex_ideal_circuits(lat, budget));
        if (irr_o.as_json) {
            json arr = json::array();
            for (const auto& c : comps) arr.push_back(gens_json(c.gens));
            json out = {{"command", "irr-decomp"}, {"nvars", lat.n},
                        {"components", arr}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& c : comps) std::cout << ideal_pretty(c) << "\n";
        }
        return 0;
    }

    if (cmd_ass->parsed()) {
        Budget budget = make_budget(ass_o);
        Lattice lat = load_lattice(ass_o);
        auto primes = associated_primes(vertex_ideal_circuits(lat, budget));
        if (ass_o.as_json) {
            json arr = json::array();
            for (const auto& p : primes) {
                json one = json::array();
                for (int i : p) one.push_back(i);
                arr.push_back(one);
            }
            json out = {{"command", "assoc-primes"}, {"nvars", lat.n}, {"primes", arr}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& p : primes) std::cout << prime_pretty(p, lat.n) << "\n";
        }
        return 0;
    }

    if (cmd_top->parsed()) {
        Budget budget = make_budget(top_o);
        Lattice lat = load_lattice(top_o);
        MonomialIdeal base = top_of == "vertex" ? vertex_ideal_circuits(lat, budget)
                                                : product_ideal(lat, budget);
        emit_ideal(top_dimensional_part(base), top_o, "top");
        return 0;
    }

    if (cmd_init->parsed()) {
        Budget budget = make_budget(init_o);
        Lattice lat = load_lattice(init_o);
        ReducedGB gb = reduced_gb(lat, parse_weight(init_weight, lat.n), budget);
        MonomialIdeal ideal = initial_ideal(lat, gb);
        if (init_o.as_json) {
            json out = {{"command", "initial"},
                        {"nvars", ideal.nvars},
                        {"generators", gens_json(ideal.gens)},
                        {"pretty", ideal_pretty(ideal)},
                        {"generic", gb.generic}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& line : ideal_lines(ideal)) std::cout << line << "\n";
            std::cout << "generic: " << (gb.generic ? "true" : "false") << "\n";
        }
        return 0;
    }

    if (cmd_cone->parsed()) {
        Budget budget = make_budget(cone_o);
        Lattice lat = load_lattice(cone_o);
        ReducedGB gb = reduced_gb(lat, parse_weight(cone_weight, lat.n), budget);
        auto facets = groebner_cone_facets(gb);
        if (cone_o.as_json) {
            json out = {{"command", "cone"}, {"facets", gens_json(facets)},
                        {"count", facets.size()}};
            std::cout << out.dump(2) << "\n";
        } else if (count_facets) {
            std::cout << "facets: " << facets.size() << "\n";
        } else {
            for (const auto& f : facets) std::cout << exponent_line(f) << "\n";
        }
        return 0;
    }

    if (cmd_fan->parsed()) {
        Budget budget = make_budget(fan_o);
        if (max_cones > 0) budget.max_cones = static_cast<std::uint64_t>(max_cones);
        Lattice lat = load_lattice(fan_o);
        auto fan = groebner_fan(lat, budget);
        std::sort(fan.begin(), fan.end(), [](const FanCone& a, const FanCone& b) {
            return a.initial.gens < b.initial.gens;
        });
        if (fan_o.as_json) {
            json arr = json::array();
            for (const auto& cone : fan)
                arr.push_back({{"initial", gens_json(cone.initial.gens)},
                               {"facets", gens_json(cone.facets)}});
            json out = {{"command", "fan"}, {"count", fan.size()}, {"cones", arr}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "cones: " << fan.size() << "\n";
            for (const auto& cone : fan)
                std::cout << "initial " << ideal_pretty(cone.initial) << " facets "
                          << cone.facets.size() << "\n";
        }
        return 0;
    }

    if (cmd_hc->parsed()) {
        Budget budget = make_budget(hc_o);
        Lattice lat = load_lattice(hc_o);
        MonomialIdeal v = vertex_ideal_circuits(lat, budget);
        auto counts = hilbert_vertex_counts(lat, v, hc_from, hc_to, budget);
        if (hc_o.as_json) {
            json arr = json::array();
            for (auto c : counts) arr.push_back(c);
            json out = {{"command", "hilbert-counts"}, {"from", hc_from},
                        {"to", hc_to}, {"counts", arr}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < counts.size(); ++i)
                std::cout << hc_from + static_cast<Coord>(i) << " " << counts[i] << "\n";
        }
        return 0;
    }

    if (cmd_chk->parsed()) {
        Budget budget = make_budget(chk_o);
        Lattice lat = load_lattice(chk_o);
        return run_check(lat, chk_property, budget, chk_o);
    }

    if (cmd_rep->parsed()) {
        Budget budget = make_budget(rep_o);
        auto report = cases::run_case(rep_name, budget);
        if (rep_o.as_json) {
            json out = {{"command", "reproduce"}, {"name", report.name},
                        {"pass", report.pass}, {"lines", report.lines}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& line : report.lines) std::cout << line << "\n";
            std::cout << (report.pass ? "PASS " : "FAIL ") << report.name << "\n";
        }
        return report.pass ? 0 : 1;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const latvert::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const latvert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

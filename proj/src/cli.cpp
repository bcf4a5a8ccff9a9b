#include "hermitian/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hermitian/agcode.hpp"
#include "hermitian/distance.hpp"
#include "hermitian/min_distance.hpp"
#include "hermitian/multiplicity.hpp"
#include "hermitian/orderbound.hpp"
#include "hermitian/rrspace.hpp"
#include "hermitian/verify.hpp"
#include "hermitian/witness.hpp"

namespace hermitian {

namespace {

using nlohmann::json;

json extended(ExtendedInt v) { return v.is_infinite() ? json("inf") : json(v.value()); }

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json cell_json(const CellReport& c) {
    return json{{"A", c.A},
                {"B", c.B},
                {"dualDim", c.dual_dimension},
                {"regime", to_string(c.tag.regime)},
                {"case", to_string(c.tag.case_label)},
                {"dFormula", optional_json(c.park)},
                {"dBound", c.bound ? extended(*c.bound) : json(nullptr)},
                {"dBrute", optional_json(c.brute)},
                {"witnessWeight", optional_json(c.witness_weight)},
                {"detail", c.detail}};
}

json grid_json(const GridSummary& g) {
    return json{{"checked", g.checked}, {"mismatches", g.mismatches}, {"details", g.details}};
}

int default_workers() {
    if (const char* w = std::getenv("HERMCODE_WORKERS")) {
        const int v = std::atoi(w);
        if (v > 0) return v;
    }
    return 1;
}

std::string csv_row(const Matrix& m, int r) {
    std::string s;
    for (int c = 0; c < m.cols(); ++c) {
        if (c) s += ',';
        s += std::to_string(m.at(r, c).index);
    }
    return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hermitian two-point codes: distances, bounds and certificates", "hermcode"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Print elapsed time to stderr");

    int q = 0;
    auto add_q = [&](CLI::App* sub) { sub->add_option("--q", q, "Field parameter (prime power)")->required(); };

    // table
    auto* table = app.add_subcommand("table", "Distance table as CSV, rows m and columns n");
    add_q(table);
    int m_min = 81, m_max = 90, n_min = 0, n_max = 9;
    bool park_grid = false, hk_grid = false;
    table->add_option("--m-min", m_min);
    table->add_option("--m-max", m_max);
    table->add_option("--n-min", n_min);
    table->add_option("--n-max", n_max);
    auto* pg = table->add_flag("--park-grid", park_grid, "d(C(m,n)^perp) from the closed forms (default)");
    table->add_flag("--hk-grid", hk_grid, "d(C(m,n)) from the primal formulas")->excludes(pg);

    // verify
    auto* verify = app.add_subcommand("verify", "Sweep formula, order bound, oracle and witnesses; JSON summary");
    add_q(verify);
    int k_max = 0, A_max = 12, B_max = 12, workers = default_workers();
    bool witness_all = false, mult_only = false, with_hk = false;
    verify->add_option("--k-max", k_max, "Largest dimension for the exhaustive oracle (0 = default)");
    verify->add_option("--A-max", A_max);
    verify->add_option("--B-max", B_max);
    verify->add_option("--workers", workers)->check(CLI::PositiveNumber);
    verify->add_flag("--witness-all", witness_all, "Certify witnesses on every in-scope cell");
    verify->add_flag("--mult-only", mult_only, "Only the multiplicity and segment grids");
    verify->add_flag("--hk", with_hk, "Also check the primal formulas against the oracle");

    // mult
    auto* mult = app.add_subcommand("mult", "Multiplicity at (2g-2+a, b)");
    add_q(mult);
    int a = 0, b = 0;
    std::string point = "pinf";
    bool oracle = false, csv = false;
    mult->add_option("--a", a, "Shifted P_inf coefficient")->required();
    mult->add_option("--b", b, "P0 coefficient")->required();
    mult->add_option("--point", point)->check(CLI::IsMember({"pinf", "p0"}));
    mult->add_flag("--oracle", oracle, "Include the definition oracle (small q only)");
    mult->add_flag("--csv", csv, "CSV instead of JSON");

    // bound
    auto* bound = app.add_subcommand("bound", "Order bound with an optimal path");
    add_q(bound);
    int A = 0, B = 0;
    std::string terminal;
    bound->add_option("--A", A)->required();
    bound->add_option("--B", B)->required();
    bound->add_option("--terminal", terminal, "rank or degree (default by q)")->check(CLI::IsMember({"rank", "degree"}));

    // distance
    auto* distance = app.add_subcommand("distance", "Closed-form distance of C(A,B)^perp, or of C(m,n) with --m/--n");
    add_q(distance);
    std::optional<int> dA, dB, hm, hn;
    std::vector<int> hk_pair;
    bool brute = false;
    distance->add_option("--A", dA);
    distance->add_option("--B", dB);
    distance->add_option("--m", hm, "Primal parameter m");
    distance->add_option("--n", hn, "Primal parameter n");
    distance->add_option("--hk", hk_pair, "Same as --m M --n N")->expected(2);
    distance->add_flag("--brute", brute, "Add the exhaustive oracle (and the order bound for C(A,B)^perp)");
    distance->add_option("--k-max", k_max);

    // witness
    auto* witness = app.add_subcommand("witness", "Support of a minimum-weight dual word");
    add_q(witness);
    witness->add_option("--A", A)->required();
    witness->add_option("--B", B)->required();

    // exports
    auto* points = app.add_subcommand("points", "Rational points as CSV index,x,y");
    add_q(points);
    auto* basis = app.add_subcommand("basis", "Monomial basis of L(A P_inf + B P0) as JSON");
    add_q(basis);
    basis->add_option("--A", A)->required();
    basis->add_option("--B", B)->required();
    auto* matrix = app.add_subcommand("matrix", "Generator (or dual) matrix as CSV of element indices");
    add_q(matrix);
    bool dual = false;
    matrix->add_option("--A", A)->required();
    matrix->add_option("--B", B)->required();
    matrix->add_flag("--dual", dual);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = exit_ok;
    try {
        if (*table) {
            const bool hk = hk_grid;
            if (!factor_prime_power(q).p) throw std::invalid_argument("q must be a prime power");
            out << "m\\n";
            for (int nn = n_min; nn <= n_max; ++nn) out << ',' << nn;
            out << '\n';
            for (int m = m_min; m <= m_max; ++m) {
                out << m;
                for (int nn = n_min; nn <= n_max; ++nn) {
                    std::optional<int> d;
                    if (hk) {
                        if (nn >= 0 && nn <= q) d = hk_distance(q, m, nn);
                    } else {
                        d = park_distance(q, m, nn).d;
                    }
                    out << ',' << (d ? std::to_string(*d) : "-");
                }
                out << '\n';
            }
        } else if (*verify) {
            if (q > 4) throw std::invalid_argument("verify supports q <= 4");
            const Curve curve(q);
            const int lo = -2 * q, hi = 3 * (q + 1);
            json rep{{"command", "verify"}, {"q", q}};
            const GridSummary mg = verify_multiplicity_grid(q, lo, hi, true);
            const GridSummary sg = verify_segment_grid(q, lo, hi);
            const GridSummary cg = verify_case_consistency(q, 0, 4 * (q + 1));
            rep["multiplicity"] = grid_json(mg);
            rep["segments"] = grid_json(sg);
            rep["caseConsistency"] = grid_json(cg);
            int mismatches = mg.mismatches + sg.mismatches + cg.mismatches;
            if (!mult_only) {
                DistanceSweepOptions opts;
                opts.A_max = A_max;
                opts.B_max = B_max;
                opts.k_max = k_max;
                opts.workers = workers;
                opts.witness_all = witness_all;
                const DistanceSweepSummary s = verify_distance_sweep(curve, opts);
                json mism = json::array(), oos = json::array(), unv = json::array();
                for (const auto& c : s.mismatches) mism.push_back(cell_json(c));
                for (const auto& c : s.unverified) unv.push_back(cell_json(c));
                for (const auto& c : s.out_of_scope_cells) oos.push_back(cell_json(c));
                rep["distance"] = json{{"cells", s.cells},
                                       {"fullSpace", s.full_space},
                                       {"outOfScope", s.out_of_scope},
                                       {"bruteChecked", s.brute_checked},
                                       {"witnessChecked", s.witness_checked},
                                       {"cacheHits", s.cache_hits},
                                       {"mismatches", mism},
                                       {"unverified", unv},
                                       {"outOfScopeCells", oos}};
                mismatches += static_cast<int>(s.mismatches.size());
            }
            if (with_hk) {
                const int km = k_max > 0 ? k_max : default_k_max(q * q);
                const HKSweepSummary h = verify_hk_sweep(curve, -q, q * q * q + q * q, km, workers);
                rep["hk"] = json{{"inRange", h.in_range},
                                 {"checked", h.checked},
                                 {"skipped", h.skipped},
                                 {"mismatches", h.mismatches},
                                 {"details", h.details}};
                mismatches += h.mismatches;
            }
            rep["totalMismatches"] = mismatches;
            out << rep.dump(2) << '\n';
            if (mismatches > 0) code = exit_mismatch;
        } else if (*mult) {
            const Place at = point == "pinf" ? Place::Pinf : Place::P0;
            const int K = q * q - q - 2;
            if (!factor_prime_power(q).p) throw std::invalid_argument("q must be a prime power");
            const int closed = mult_closed(q, a, b, at);
            const int lattice = mult_lattice_count(q, a, b, at);
            const int thm = mult_thm32(q, a, b, at);
            std::optional<int> orc;
            if (oracle) orc = mult_definition_oracle(q, K + a, b, at);
            if (csv) {
                out << "q,A,B,point,closed,lattice,oracle\n"
                    << q << ',' << K + a << ',' << b << ',' << point << ',' << closed << ',' << lattice << ','
                    << (orc ? std::to_string(*orc) : "") << '\n';
            } else {
                json rep{{"q", q},         {"a", a},        {"b", b},      {"A", K + a},
                         {"B", b},         {"point", point}, {"closed", closed}, {"lattice", lattice},
                         {"thm32", thm},   {"oracle", optional_json(orc)}};
                out << rep.dump(2) << '\n';
            }
            if (closed != lattice || closed != thm || (orc && *orc != closed)) code = exit_mismatch;
        } else if (*bound) {
            const Curve curve(q);
            const TerminalMode mode = terminal.empty()     ? default_terminal_mode(q)
                                      : terminal == "rank" ? TerminalMode::Rank
                                                           : TerminalMode::Degree;
            const BoundResult r = order_bound(curve, A, B, mode);
            json path = json::array();
            for (const auto& st : r.path) path.push_back(json::array({st.A, st.B, to_string(st.edge), extended(st.mult)}));
            json rep{{"q", q},
                     {"A", A},
                     {"B", B},
                     {"bound", extended(r.bound)},
                     {"terminal", json::array({r.terminal_A, r.terminal_B})},
                     {"terminalMode", mode == TerminalMode::Rank ? "rank" : "degree"},
                     {"path", path}};
            out << rep.dump(2) << '\n';
        } else if (*distance) {
            if (hk_pair.size() == 2) {
                hm = hk_pair[0];
                hn = hk_pair[1];
            }
            if (hm || hn) {
                if (!hm || !hn) throw std::invalid_argument("--m and --n go together");
                if (dA || dB) throw std::invalid_argument("--A/--B and --m/--n are separate parameterizations");
                if (!factor_prime_power(q).p) throw std::invalid_argument("q must be a prime power");
                const HKParams h = hk_params(q, *hm, *hn);
                json cases = json::array();
                for (const auto& mt : hk_matches(q, *hm, *hn)) cases.push_back(json{{"label", mt.label}, {"d", mt.d}});
                json rep{{"q", q},       {"m", *hm},     {"n", *hn},         {"a", h.a},          {"b", h.b},
                         {"rho", h.rho}, {"cases", cases}, {"d", optional_json(hk_distance(q, *hm, *hn))}};
                if (brute) {
                    const Curve curve(q);
                    const CodeMatrix cm = build_code(curve, *hm, *hn);
                    const int rk = code_rank(curve.field(), cm.generator);
                    rep["k"] = rk;
                    rep["dBrute"] = nullptr;
                    if (rk > 0) {
                        MinDistanceOptions mo;
                        mo.k_max = k_max;
                        mo.workers = default_workers();
                        try {
                            rep["dBrute"] = min_distance_exhaustive(curve.field(), cm.generator, mo).distance;
                        } catch (const OracleInfeasible& e) {
                            err << e.what() << '\n';
                        }
                    }
                }
                out << rep.dump(2) << '\n';
            } else {
                if (!dA || !dB) throw std::invalid_argument("distance needs --A and --B (or --m and --n)");
                if (!factor_prime_power(q).p) throw std::invalid_argument("q must be a prime power");
                const ParkResult r = park_distance(q, *dA, *dB);
                json rep{{"q", q},
                         {"A", *dA},
                         {"B", *dB},
                         {"d", optional_json(r.d)},
                         {"regime", to_string(r.tag.regime)},
                         {"case", to_string(r.tag.case_label)}};
                if (!r.tag.note.empty()) rep["note"] = r.tag.note;
                if (brute) {
                    const Curve curve(q);
                    const CodeMatrix cm = build_code(curve, *dA, *dB);
                    const int rk = code_rank(curve.field(), cm.generator);
                    rep["k"] = rk;
                    rep["dualDim"] = curve.length() - rk;
                    rep["dFormula"] = optional_json(r.d);
                    if (rk < curve.length()) {
                        rep["dBound"] = extended(order_bound(curve, *dA, *dB, default_terminal_mode(q)).bound);
                        MinDistanceOptions mo;
                        mo.k_max = k_max;
                        mo.workers = default_workers();
                        try {
                            const Matrix dualm = dual_basis(curve.field(), cm.generator);
                            rep["dBrute"] = min_distance_exhaustive(curve.field(), dualm, mo).distance;
                        } catch (const OracleInfeasible& e) {
                            rep["dBrute"] = nullptr;
                            err << e.what() << '\n';
                        }
                    }
                }
                out << rep.dump(2) << '\n';
            }
        } else if (*witness) {
            const Curve curve(q);
            json rep{{"q", q}, {"A", A}, {"B", B}};
            try {
                const WitnessSupport w = build_witness_support(curve, A, B);
                const Certificate c = certify_support(curve, A, B, w.support);
                rep["d"] = w.d;
                rep["recipe"] = w.recipe;
                rep["support"] = w.support;
                rep["certified"] = c.certified;
                rep["wordWeight"] = c.certified ? json(c.word_weight) : json(nullptr);
                if (!c.certified || c.word_weight != w.d) code = exit_mismatch;
            } catch (const WitnessError& e) {
                rep["d"] = optional_json(park_distance(q, A, B).d);
                rep["certified"] = false;
                rep["error"] = e.what();
                code = exit_mismatch;
            }
            out << rep.dump(2) << '\n';
        } else if (*points) {
            const Curve curve(q);
            out << "index,x,y\n";
            int idx = 0;
            for (const Point& p : curve.points()) {
                if (p.infinity)
                    out << idx++ << ",-1,-1\n";
                else
                    out << idx++ << ',' << int(p.x.index) << ',' << int(p.y.index) << '\n';
            }
        } else if (*basis) {
            if (!factor_prime_power(q).p) throw std::invalid_argument("q must be a prime power");
            json arr = json::array();
            for (Monomial mo : monomial_basis(q, A, B))
                arr.push_back(json{{"i", mo.i},
                                   {"j", mo.j},
                                   {"poleOrderPinf", pole_order_pinf(q, mo)},
                                   {"poleOrderP0", -valuation_p0(q, mo)}});
            out << arr.dump(2) << '\n';
        } else if (*matrix) {
            const Curve curve(q);
            const CodeMatrix cm = build_code(curve, A, B);
            const Matrix m = dual ? dual_basis(curve.field(), cm.generator) : cm.generator;
            for (int r = 0; r < m.rows(); ++r) out << csv_row(m, r) << '\n';
        }
    } catch (const OracleInfeasible& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    if (timing) {
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        err << "elapsed_ms " << ms << '\n';
    }
    return code;
}

}  // namespace hermitian

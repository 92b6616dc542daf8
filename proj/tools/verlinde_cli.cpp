#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verlinde/arith.hpp"
#include "verlinde/io.hpp"
#include "verlinde/pairs.hpp"
#include "verlinde/verlinde.hpp"

namespace {

using namespace verlinde;

std::vector<long long> parse_ll_list(const std::string& s, size_t expected,
                                     const char* what) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    if (out.size() != expected)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(expected) +
                                    " comma-separated integers");
    return out;
}

MukaiVector parse_vector(const std::string& s, const char* what) {
    auto v = parse_ll_list(s, 3, what);
    return {v[0], v[1], v[2]};
}

NsClass parse_class(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    if (out.size() != 3)
        throw std::invalid_argument("--class: expected three rationals u,v,h");
    return {out[0], out[1], out[2]};
}

std::string default_format() {
    const char* env = std::getenv("VERLINDE_FORMAT");
    if (env) {
        std::string f(env);
        if (f == "json" || f == "csv" || f == "table") return f;
    }
    return "json";
}

void emit_table(const DecompositionTable& t, const std::string& format) {
    if (format == "csv")
        std::cout << table_to_csv(t);
    else if (format == "table")
        std::cout << table_to_text(t);
    else
        std::cout << to_json(t).dump(2) << "\n";
}

struct SuiteStats {
    long long checked = 0;
    long long failed = 0;

    void expect(bool ok) {
        ++checked;
        if (!ok) ++failed;
    }
};

void run_duality_suite(SuiteStats& st, std::mt19937_64& rng, int count) {
    for (int i = 0; i < count; ++i) {
        PairVW p = random_orthogonal_pair(rng);
        st.expect(duality_check(p.v, p.w).ok());
        st.expect(theta_pullback_consistent(p.v, p.w));
        auto rep = check_assumptions(p.v, p.w);
        st.expect(rep.pairing_identity && rep.t_identity);
    }
}

void run_twist_suite(SuiteStats& st, std::mt19937_64& rng, int count) {
    std::uniform_int_distribution<long long> ell(-5, 5);
    for (int i = 0; i < count; ++i) {
        PairVW p = random_degree0_pair(rng);
        st.expect(twist_invariance_check(p.v, p.w, ell(rng)));
    }
}

void run_bookkeeping_suite(SuiteStats& st, long long max_sum) {
    for (const PairVW& p : degree0_pairs(max_sum)) {
        DecompositionTable t = multiplicity_from_traces(p.v, p.w);
        st.expect(t.total_rank == verlinde_number(t.d_v, t.d_w));
        for (long long d : divisors(t.delta))
            st.expect(trace_from_decomposition(t, d) == trace(p.v, p.w, d));
        DecompositionTable m = decompose_minus(p.v, p.w);
        st.expect(m.total_rank == t.total_rank);
    }
}

void run_appendix_suite(SuiteStats& st, std::mt19937_64& rng, long long max_d) {
    for (long long d = 1; d <= max_d; ++d)
        for (long long a = -8; a <= 8; ++a)
            for (long long b = -8; b <= 8; ++b)
                for (long long c = -8; c <= 8; ++c) {
                    CongruenceInstance in{a, b, c, d};
                    if (!in.square_congruence() || !in.counting_hypothesis()) continue;
                    st.expect(count_torsion_solutions_per_coordinate(in) == d);
                }
    std::uniform_int_distribution<long long> coef(-50, 50);
    int found = 0;
    while (found < 200) {
        CongruenceInstance in{coef(rng), coef(rng), coef(rng), 1};
        Int D = Int(in.b) * in.b - Int(in.a) * in.c;
        if (D == 0) continue;
        auto divs = divisors(static_cast<long long>(abs(D)));
        std::uniform_int_distribution<size_t> pick(0, divs.size() - 1);
        in.d = divs[pick(rng)];
        if (in.d > 10000 || !in.coprime_hypothesis()) continue;
        auto [m, n] = solve_congruence_pair(in);
        bool ok = std::gcd(m, n) == 1 && (in.c * m - in.b * n) % in.d == 0 &&
                  (in.b * m - in.a * n) % in.d == 0;
        st.expect(ok);
        ++found;
    }
}

int run_verify(const std::string& suite, long long max_d, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    SuiteStats st;
    if (suite == "duality" || suite == "all") run_duality_suite(st, rng, 200);
    if (suite == "twist" || suite == "all") run_twist_suite(st, rng, 100);
    if (suite == "bookkeeping" || suite == "all") run_bookkeeping_suite(st, 48);
    if (suite == "appendix" || suite == "all") run_appendix_suite(st, rng, max_d);
    std::cout << "suite " << suite << ": " << st.checked << " identities checked, "
              << st.failed << " failed\n";
    return st.failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for Verlinde bundles on abelian surfaces"};
    app.require_subcommand(0, 1);
    std::string format = default_format();
    app.add_option("--format", format, "Output format: json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    std::string v_str, w_str, variant = "full", matrix_str, class_str;
    std::string suite = "all";
    long long delta_order = 1, oa = 0, ob = 0, oc = 0, od = 1, omega = 1;
    long long max_d = 12;
    unsigned long long seed = 7;

    auto* dec = app.add_subcommand("decompose", "Decomposition table for a pair");
    dec->add_option("--v", v_str, "Mukai vector r,k,chi")->required();
    dec->add_option("--w", w_str, "Mukai vector r,k,chi")->required();
    dec->add_option("--variant", variant, "full, plus or minus")
        ->check(CLI::IsMember({"full", "plus", "minus"}));

    auto* tr = app.add_subcommand("trace", "Torsion trace value");
    tr->add_option("--v", v_str, "Mukai vector r,k,chi")->required();
    tr->add_option("--w", w_str, "Mukai vector r,k,chi")->required();
    tr->add_option("--delta", delta_order, "Exact order of the torsion element")
        ->required();

    auto* trp = app.add_subcommand("triple", "Slope triple data for a pair");
    trp->add_option("--v", v_str, "Mukai vector r,k,chi")->required();
    trp->add_option("--w", w_str, "Mukai vector r,k,chi")->required();

    auto* pb = app.add_subcommand("pullback", "Isogeny pullback matrix");
    pb->add_option("--matrix", matrix_str, "2x2 integer matrix a,b,c,d")->required();
    pb->add_option("--class", class_str, "Optional class u,v,h to transport");

    auto* orc = app.add_subcommand("oracle", "Brute-force oracles");
    orc->require_subcommand(1);
    auto* cs = orc->add_subcommand("charsum", "Character sum vs Jordan symbol");
    cs->add_option("--a", oa)->required();
    cs->add_option("--b", ob)->required();
    cs->add_option("--omega", omega)->required();
    cs->add_option("--delta", delta_order)->required();
    auto* a2 = orc->add_subcommand("lemma-a2", "Torsion solution count");
    a2->add_option("--a", oa)->required();
    a2->add_option("--b", ob)->required();
    a2->add_option("--c", oc)->required();
    a2->add_option("--d", od)->required();
    auto* a1 = orc->add_subcommand("lemma-a1", "Congruence pair solver");
    a1->add_option("--a", oa)->required();
    a1->add_option("--b", ob)->required();
    a1->add_option("--c", oc)->required();
    a1->add_option("--d", od)->required();

    auto* ver = app.add_subcommand("verify", "Identity verification suites");
    ver->add_option("--suite", suite, "duality, twist, bookkeeping, appendix or all")
        ->check(CLI::IsMember({"duality", "twist", "bookkeeping", "appendix", "all"}));
    ver->add_option("--max-d", max_d, "Appendix sweep bound");
    ver->add_option("--seed", seed, "Random seed");

    for (CLI::App* sc : {dec, tr, trp, pb, orc, cs, a2, a1, ver}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 3;
    }

    try {
        if (dec->parsed()) {
            MukaiVector v = parse_vector(v_str, "--v");
            MukaiVector w = parse_vector(w_str, "--w");
            Variant which = variant == "plus"    ? Variant::plus
                            : variant == "minus" ? Variant::minus
                                                 : Variant::full;
            emit_table(decompose_variant(v, w, which), format);
            return 0;
        }
        if (tr->parsed()) {
            std::cout << to_decimal(trace(parse_vector(v_str, "--v"),
                                          parse_vector(w_str, "--w"), delta_order))
                      << "\n";
            return 0;
        }
        if (trp->parsed()) {
            MukaiVector v = parse_vector(v_str, "--v");
            MukaiVector w = parse_vector(w_str, "--w");
            Triple P = slope_triple(v, w);
            json j;
            j["slope"] = to_json(P);
            j["delta"] = delta(v, w);
            j["det"] = rat_to_string(det_triple(P));
            j["rank"] = to_decimal(rank_triple(P));
            j["euler"] = to_decimal(euler_triple(P));
            j["admissible"] = is_admissible(P);
            j["inverse"] = to_json(invert_triple(P));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (pb->parsed()) {
            auto m = parse_ll_list(matrix_str, 4, "--matrix");
            IsogenyMatrix M{m[0], m[1], m[2], m[3]};
            Mat3 R = pullback_matrix(M);
            json j;
            json rows = json::array();
            for (int i = 0; i < 3; ++i) {
                json row = json::array();
                for (int k = 0; k < 3; ++k) row.push_back(rat_to_string(R[i][k]));
                rows.push_back(row);
            }
            j["matrix"] = rows;
            j["det"] = to_decimal(M.det());
            if (M.det() != 0) j["degree"] = to_decimal(isogeny_degree(M));
            if (!class_str.empty())
                j["class_image"] = to_json(mat3_apply(R, parse_class(class_str)));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (cs->parsed()) {
            Int got = character_sum(oa, ob, omega, delta_order);
            Int predicted = detail::exact_int(
                Rat(pow_int(Int(delta_order), 4)) *
                    jordan_symbol(Int(oa * ob / omega), delta_order),
                "charsum");
            json j;
            j["sum"] = to_decimal(got);
            j["jordan_prediction"] = to_decimal(predicted);
            j["match"] = got == predicted;
            std::cout << j.dump(2) << "\n";
            return got == predicted ? 0 : 2;
        }
        if (a2->parsed()) {
            CongruenceInstance in{oa, ob, oc, od};
            json j;
            j["count"] = to_decimal(count_torsion_solutions(in));
            j["expected"] = to_decimal(pow_int(Int(od), 4));
            bool ok = verify_torsion_count(in);
            j["match"] = ok;
            std::cout << j.dump(2) << "\n";
            return ok ? 0 : 2;
        }
        if (a1->parsed()) {
            auto [m, n] = solve_congruence_pair({oa, ob, oc, od});
            json j;
            j["m"] = m;
            j["n"] = n;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (ver->parsed()) return run_verify(suite, max_d, seed);
        std::cerr << app.help();
        return 3;
    } catch (const ConjectureViolation& e) {
        std::cerr << "conjecture violation: " << e.what() << "\n";
        return 2;
    } catch (const IdentityViolation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

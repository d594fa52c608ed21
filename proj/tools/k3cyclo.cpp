#include "k3cyclo/report_json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace k3cyclo;
using nlohmann::json;

namespace {

int g_exit = 0;
bool g_pretty = false;

void emit(json j) {
    j["schema"] = kSchema;
    if (g_pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("K3CYCLO_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return kDefaultSeed;
}

FactoredCharPoly parse_factored(const std::string& expr) {
    ParsedPoly p = parse_poly_expr(expr);
    if (!std::holds_alternative<FactoredCharPoly>(p))
        throw std::domain_error(
            "this command needs a factored expression (cyc/salem/(x-1)/(x+1) products); "
            "integer factorization of raw polynomials is out of scope");
    return std::get<FactoredCharPoly>(p);
}

IntPolynomial parse_single_factor(const std::string& expr) {
    ParsedPoly p = parse_poly_expr(expr);
    if (std::holds_alternative<IntPolynomial>(p)) return std::get<IntPolynomial>(p);
    return std::get<FactoredCharPoly>(p).expand();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision procedures for cyclotomic characteristic polynomials of K3 automorphisms"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed();
    app.add_flag("--pretty", g_pretty, "indented JSON output");
    app.add_option("--seed", seed, "seed for the equal-degree splitting RNG");

    // cyclo
    std::uint64_t cyclo_m = 0;
    auto* c_cyclo = app.add_subcommand("cyclo", "print the m-th cyclotomic polynomial");
    c_cyclo->add_option("m", cyclo_m, "index m >= 1")->required();

    // phi-values
    std::uint64_t pv_m = 0;
    auto* c_pv = app.add_subcommand("phi-values", "closed form of (Phi_m(1), Phi_m(-1))");
    c_pv->add_option("m", pv_m, "index m >= 3")->required();

    // c1
    std::string c1_expr;
    auto* c_c1 = app.add_subcommand("c1", "condition (C 1) squareness report");
    c_c1->add_option("expr", c1_expr, "polynomial expression")->required();

    // pi
    std::string pi_f, pi_g, pi_ctx;
    auto* c_pi = app.add_subcommand("pi", "the prime set Pi_{f,g} with certificates");
    c_pi->add_option("f", pi_f, "first factor")->required();
    c_pi->add_option("g", pi_g, "second factor")->required();
    c_pi->add_option("--ctx", pi_ctx, "ambient F fixing n+, n-, D0 (default: f*g)");

    // gf
    std::string gf_expr;
    auto* c_gf = app.add_subcommand("gf", "obstruction group G_F of a factored polynomial");
    c_gf->add_option("expr", gf_expr, "factored expression")->required();

    // realizable
    std::uint64_t re_m = 0;
    unsigned re_r = 1;
    bool re_trivial = false;
    auto* c_re = app.add_subcommand("realizable", "decide realizability of C = Phi_m^r");
    c_re->add_option("--m", re_m, "cyclotomic index")->required();
    c_re->add_option("--r", re_r, "exponent r >= 1");
    c_re->add_flag("--trivial-picard", re_trivial,
                   "decide the trivial-Picard-action question only (the n_X question)");

    // tables
    auto* c_tab = app.add_subcommand("tables", "the sets A, B, C and the (m, r) characterization");

    // salem
    std::string salem_arg;
    double salem_eps = 1e-8;
    auto* c_sal = app.add_subcommand("salem", "Salem verification of salem(n) or a raw polynomial");
    c_sal->add_option("input", salem_arg, "family index n, or a polynomial expression")->required();
    c_sal->add_option("--epsilon", salem_eps, "unit-circle tolerance (default 1e-8)");

    // verify-60
    auto* c_v60 = app.add_subcommand("verify-60", "the five-step Phi_60 impossibility certificate");

    // pairs
    auto* c_pairs = app.add_subcommand("pairs", "(n_X, m_X) logic over A union B");

    // mt-pairs
    auto* c_mt = app.add_subcommand("mt-pairs", "all admissible (m_X, t_X) pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*c_cyclo) {
            IntPolynomial p = cyclotomic(cyclo_m);
            json coeffs = json::array();
            for (const auto& c : p.coeffs()) coeffs.push_back(json_int(c));
            emit(json{{"m", cyclo_m},
                      {"degree", p.deg()},
                      {"poly", to_string(p)},
                      {"coeffs", coeffs}});
        } else if (*c_pv) {
            auto [v1, vm1] = phi_values(pv_m);
            const char* kind = v1 == 2 ? "power_of_two"
                               : v1 > 1 ? "odd_prime_power"
                               : vm1 > 1 ? "twice_odd_prime_power"
                                         : "other";
            emit(json{{"m", pv_m},
                      {"phi_at_1", json_int(v1)},
                      {"phi_at_minus_1", json_int(vm1)},
                      {"case", kind}});
        } else if (*c_c1) {
            ParsedPoly p = parse_poly_expr(c1_expr);
            C1Report r = std::holds_alternative<FactoredCharPoly>(p)
                             ? condition_c1(std::get<FactoredCharPoly>(p))
                             : condition_c1(std::get<IntPolynomial>(p));
            json j = to_json(r);
            j["input"] = render(p);
            emit(j);
        } else if (*c_pi) {
            IntPolynomial f = parse_single_factor(pi_f);
            IntPolynomial g = parse_single_factor(pi_g);
            FactoredCharPoly ctx =
                pi_ctx.empty() ? parse_factored(pi_f + "*" + pi_g) : parse_factored(pi_ctx);
            D0Context d0{ctx.n_plus, ctx.n_minus, ctx.d0()};
            auto certs = pi_set(f, g, d0, SymmetryRequirement::PlusOrMinus, seed);
            json arr = json::array();
            for (const auto& c : certs) arr.push_back(to_json(c));
            emit(json{{"f", pi_f}, {"g", pi_g}, {"empty", certs.empty()}, {"primes", arr}});
        } else if (*c_gf) {
            FactoredCharPoly f = parse_factored(gf_expr);
            json j = to_json(g_f(f, seed));
            j["input"] = render(f);
            emit(j);
        } else if (*c_re) {
            RealizabilityReport rep =
                re_trivial ? prop2_trivial_picard(re_m, re_r) : prop1(re_m, re_r, seed);
            emit(to_json(rep));
        } else if (*c_tab) {
            emit(to_json(tables()));
        } else if (*c_sal) {
            IntPolynomial p;
            bool all_digits = !salem_arg.empty() &&
                              salem_arg.find_first_not_of("0123456789") == std::string::npos;
            if (all_digits)
                p = salem_family(std::strtoull(salem_arg.c_str(), nullptr, 10));
            else
                p = parse_single_factor(salem_arg);
            json j = to_json(verify_salem(p, salem_eps));
            j["input"] = to_string(p);
            emit(j);
        } else if (*c_v60) {
            json j = to_json(lemma602_verify(seed));
            j["scan"] = to_json(prop601_scan(seed));
            emit(j);
        } else if (*c_pairs) {
            ClassTable t = tables();
            json arr = json::array();
            for (const auto& list : {t.A, t.B}) {
                for (auto m : list) {
                    PairLogic pl = pair_logic(m);
                    DetConstraint dc = det_constraint(m);
                    json row{{"m", m},
                             {"set", pl.in_A ? "A" : "B"},
                             {"n_X", m},
                             {"m_X", pl.m_x},
                             {"T_X", dc.kind == DetConstraint::Kind::UnimodularOnly
                                         ? json("unimodular")
                                         : json{{"p_primary", json_int(dc.p)}}}};
                    arr.push_back(row);
                }
            }
            emit(json{{"pairs", arr},
                      {"notes",
                       json::array(
                           {"n_X = 7: the unique surface with rank(T_X) = 6 has disc(S_X) = 7",
                            "m_X = 14 with n_X < 14 exists; that surface has disc(S_X) = 7*13^2"})}});
        } else if (*c_mt) {
            json arr = json::array();
            for (const auto& [m, t] : mt_pairs()) arr.push_back(json::array({m, t}));
            emit(json{{"pairs", arr}});
        }
    } catch (const internal_error& e) {
        json j{{"schema", kSchema}, {"error", e.what()}, {"kind", "internal"}};
        std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json j{{"schema", kSchema}, {"error", e.what()}, {"kind", "usage"}};
        std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n";
        return 1;
    }
    return g_exit;
}

#include "k3cyclo/report_json.hpp"

#include <cinttypes>
#include <cstdio>

namespace k3cyclo {

using nlohmann::json;

json json_int(const Int& v) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

std::string symmetry_name(SymmetryClass s) {
    switch (s) {
        case SymmetryClass::Plus: return "PLUS";
        case SymmetryClass::Minus: return "MINUS";
        case SymmetryClass::None: return "NONE";
    }
    return "?";
}

json to_json(const FpPolynomial& p) {
    json coeffs = json::array();
    for (auto c : p.coeffs()) coeffs.push_back(c);
    return json{{"p", json_int(Int(p.modulus()))}, {"coeffs", coeffs}};
}

json to_json(const PiCertificate& c) {
    json j{{"p", c.p.str()},
           {"witness", to_json(c.witness)},
           {"witness_symmetry", symmetry_name(c.witness_symmetry)}};
    if (c.d0_check) {
        j["d0_check"] = *c.d0_check;
        j["d0_trace"] = c.d0_trace;
    }
    return j;
}

json to_json(const C1Report& r) {
    return json{{"holds", r.holds},
                {"F_at_1", r.at_1.str()},
                {"F_at_minus_1", r.at_minus1.str()},
                {"signed_product", r.signed_product.str()}};
}

json to_json(const ObstructionGroup& g) {
    json comps = json::array();
    for (const auto& comp : g.components) {
        json names = json::array();
        for (auto i : comp) names.push_back(g.factors[i].name);
        comps.push_back(names);
    }
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json{{"between", {g.factors[e.a].name, g.factors[e.b].name}},
                             {"certificate", to_json(e.certificate)}});
    json skipped = json::array();
    for (const auto& [a, b] : g.skipped_pairs)
        skipped.push_back(json::array({g.factors[a].name, g.factors[b].name}));
    return json{{"rank", g.rank}, {"components", comps}, {"edges", edges},
                {"skipped_pairs", skipped}};
}

json to_json(const RealizabilityReport& r) {
    json conds = json::array();
    for (const auto& c : r.conditions)
        conds.push_back(json{{"name", c.name}, {"holds", c.holds}, {"witness", c.witness}});
    json j{{"m", r.m},
           {"r", r.r},
           {"verdict", r.yes ? "YES" : "NO"},
           {"conditions", conds}};
    if (r.route) j["route"] = to_string(*r.route);
    if (r.complement) j["complement"] = render(*r.complement);
    if (r.certificates) j["certificates"] = to_json(*r.certificates);
    if (r.c1) j["c1"] = to_json(*r.c1);
    j["unimodular_T"] = r.unimodular_t;
    j["unique_surface"] = r.unique_surface;
    return j;
}

json to_json(const ClassTable& t) {
    json charac = json::object();
    for (const auto& [r, row] : t.characterization) charac[std::to_string(r)] = row;
    json published = json::object();
    for (const auto& [r, row] : t.published) published[std::to_string(r)] = row;
    return json{{"A", t.A},
                {"B", t.B},
                {"C", t.C},
                {"characterization", charac},
                {"published_characterization", published},
                {"flags", t.flags}};
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

json to_json(const SalemReport& r) {
    json primes = json::array();
    for (const auto& [p, degs] : r.irreducibility.primes)
        primes.push_back(json{{"p", p}, {"factor_degrees", degs}});
    json roots = json::array();
    for (const auto& z : r.profile.roots)
        roots.push_back(json{{"re", fmt_double(z.real())}, {"im", fmt_double(z.imag())}});
    return json{{"verdict", to_string(r.verdict)},
                {"symmetry", symmetry_name(r.symmetry)},
                {"profile",
                 json{{"outside", r.profile.outside},
                      {"inside", r.profile.inside},
                      {"on_circle", r.profile.on_circle},
                      {"real_outside_positive", r.profile.real_outside_positive},
                      {"epsilon", fmt_double(r.profile.epsilon)},
                      {"lambda", fmt_double(r.profile.lambda)},
                      {"roots", roots}}},
                {"irreducibility",
                 json{{"certified", r.irreducibility.certified}, {"primes", primes}}},
                {"reason", r.reason}};
}

json to_json(const SalemCycloGf& r) {
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back(to_json(c));
    return json{{"rank", r.rank},
                {"certificates", certs},
                {"resultant", r.resultant_value.str()}};
}

json to_json(const Lemma602Report& r) {
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back(json{{"index", s.index}, {"name", s.name}, {"value", s.value},
                             {"pass", s.pass}});
    json facs = json::array();
    for (const auto& f : r.mod5_factors) facs.push_back(to_json(f));
    return json{{"steps", steps},
                {"resultant", r.resultant_value.str()},
                {"mod5_factors", facs},
                {"w2_q2", json{{"at_2", r.w2_q2_at_2}, {"at_5", r.w2_q2_at_5},
                               {"at_REAL", r.w2_q2_at_real}}},
                {"contradiction", r.contradiction}};
}

json to_json(const Prop601Report& r) {
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(json{{"complement", c.complement},
                                                       {"reason", c.reason}});
    return json{{"total", r.total},
                {"rejected_splitting_mod8", r.rejected_splitting},
                {"rejected_c1", r.rejected_c1},
                {"rejected_lemma", r.rejected_lemma},
                {"exhaustive", r.exhaustive},
                {"cases", cases}};
}

} // namespace k3cyclo

#include "pmaya/json_io.hpp"

namespace pmaya {

namespace {

std::string rat_str(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class rat_parse(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

std::vector<long> longs_from_json(const Json& j) {
    std::vector<long> out;
    for (const auto& v : j) out.push_back(v.get<long>());
    return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return rat_str(s.rat());
    Json j;
    j["a"] = rat_str(s.rat());
    j["b"] = rat_str(s.surd_part());
    j["m"] = s.radicand();
    return j;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(mpq_class(j.get<long>()));
    if (j.is_string()) return Scalar(rat_parse(j.get<std::string>()));
    return Scalar(rat_parse(j.at("a").get<std::string>()),
                  rat_parse(j.at("b").get<std::string>()), j.at("m").get<long>());
}

Json scalar_to_json_compact(const Scalar& s) {
    if (s.is_integer() && s.rat().get_num().fits_slong_p())
        return mpz_get_si(s.rat().get_num().get_mpz_t());
    return scalar_to_json(s);
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(scalar_to_json(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    std::vector<Scalar> cs;
    for (const auto& v : j) cs.push_back(scalar_from_json(v));
    return Poly(std::move(cs));
}

Json ratfunc_to_json(const RatFunc& r) {
    Json j;
    j["num"] = poly_to_json(r.num());
    j["den"] = poly_to_json(r.den());
    return j;
}

RatFunc ratfunc_from_json(const Json& j) {
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json maya_to_json(const MayaDiagram& m) {
    Json j;
    j["minus"] = m.minus();
    j["plus"] = m.plus();
    return j;
}

MayaDiagram maya_from_json(const Json& j) {
    return MayaDiagram::from_frobenius(longs_from_json(j.at("minus")),
                                       longs_from_json(j.at("plus")));
}

Json kblocks_to_json(const KBlockCoordinates& kb) {
    Json j;
    j["k"] = kb.k;
    j["blocks"] = kb.blocks;
    return j;
}

KBlockCoordinates kblocks_from_json(const Json& j) {
    KBlockCoordinates kb;
    kb.k = j.at("k").get<long>();
    for (const auto& b : j.at("blocks")) kb.blocks.push_back(longs_from_json(b));
    kb.validate();
    return kb;
}

Json tau_to_json(const TauFunction& t) {
    Json j;
    j["diagram"] = maya_to_json(t.diagram);
    j["poly"] = poly_to_json(t.poly);
    j["degree"] = t.degree();
    return j;
}

TauFunction tau_from_json(const Json& j) {
    TauFunction t;
    t.diagram = maya_from_json(j.at("diagram"));
    t.poly = poly_from_json(j.at("poly"));
    if (t.poly.degree() != j.at("degree").get<long>())
        throw std::invalid_argument("tau: stored degree does not match polynomial");
    return t;
}

Json cycle_spec_to_json(const CycleSpec& spec) {
    Json j;
    j["kblocks"] = kblocks_to_json(spec.kblocks);
    j["perm"] = spec.perm;
    return j;
}

CycleSpec cycle_spec_from_json(const Json& j) {
    CycleSpec spec;
    spec.kblocks = kblocks_from_json(j.at("kblocks"));
    spec.perm = longs_from_json(j.at("perm"));
    spec.validate();
    return spec;
}

Json chain_to_json(const ChainSolution& sol) {
    Json j;
    j["k"] = sol.k;
    j["delta"] = scalar_to_json_compact(sol.delta);
    j["perm"] = sol.perm;
    j["flip_seq"] = sol.flip_sites;
    j["sigmas"] = sol.sigmas;
    Json as = Json::array();
    for (const auto& a : sol.as) as.push_back(scalar_to_json_compact(a));
    j["as"] = std::move(as);
    Json taus = Json::array();
    for (const auto& t : sol.taus) taus.push_back(tau_to_json(t));
    j["taus"] = std::move(taus);
    Json ws = Json::array();
    for (const auto& w : sol.ws) ws.push_back(ratfunc_to_json(w));
    j["ws"] = std::move(ws);
    return j;
}

ChainSolution chain_from_json(const Json& j) {
    ChainSolution sol;
    sol.k = j.at("k").get<long>();
    sol.delta = scalar_from_json(j.at("delta"));
    sol.perm = longs_from_json(j.at("perm"));
    sol.flip_sites = longs_from_json(j.at("flip_seq"));
    for (const auto& v : j.at("sigmas")) sol.sigmas.push_back(v.get<int>());
    for (const auto& v : j.at("as")) sol.as.push_back(scalar_from_json(v));
    for (const auto& v : j.at("taus")) {
        TauFunction t = tau_from_json(v);
        sol.diagrams.push_back(t.diagram);
        sol.taus.push_back(std::move(t));
    }
    for (const auto& v : j.at("ws")) sol.ws.push_back(ratfunc_from_json(v));
    return sol;
}

Json ny_to_json(const NYSolution& ny) {
    Json j;
    j["p"] = ny.p;
    j["delta"] = scalar_to_json_compact(ny.delta);
    Json alphas = Json::array();
    for (const auto& a : ny.alphas) alphas.push_back(scalar_to_json(a));
    j["alphas"] = std::move(alphas);
    Json fs = Json::array();
    for (const auto& f : ny.Fs) fs.push_back(ratfunc_to_json(f));
    j["fs"] = std::move(fs);
    return j;
}

NYSolution ny_from_json(const Json& j) {
    NYSolution ny;
    ny.p = j.at("p").get<long>();
    ny.delta = scalar_from_json(j.at("delta"));
    for (const auto& v : j.at("alphas")) ny.alphas.push_back(scalar_from_json(v));
    for (const auto& v : j.at("fs")) ny.Fs.push_back(ratfunc_from_json(v));
    return ny;
}

Json p4_to_json(const P4Solution& sol, const CycleSpec& source) {
    Json j;
    j["y"] = ratfunc_to_json(sol.y);
    Json params;
    params["a"] = scalar_to_json(sol.a);
    params["b"] = scalar_to_json(sol.b);
    j["params"] = std::move(params);
    j["source_spec"] = cycle_spec_to_json(source);
    return j;
}

P4Solution p4_from_json(const Json& j) {
    P4Solution sol;
    sol.y = ratfunc_from_json(j.at("y"));
    sol.a = scalar_from_json(j.at("params").at("a"));
    sol.b = scalar_from_json(j.at("params").at("b"));
    return sol;
}

Json p5_to_json(const P5Solution& sol, const CycleSpec& source) {
    Json j;
    j["y"] = ratfunc_to_json(sol.y);
    Json params;
    params["a"] = scalar_to_json(sol.a);
    params["b"] = scalar_to_json(sol.b);
    params["c"] = scalar_to_json(sol.c);
    params["d"] = scalar_to_json(sol.d);
    j["params"] = std::move(params);
    j["source_spec"] = cycle_spec_to_json(source);
    return j;
}

P5Solution p5_from_json(const Json& j) {
    P5Solution sol;
    sol.y = ratfunc_from_json(j.at("y"));
    const Json& p = j.at("params");
    sol.a = scalar_from_json(p.at("a"));
    sol.b = scalar_from_json(p.at("b"));
    sol.c = scalar_from_json(p.at("c"));
    sol.d = scalar_from_json(p.at("d"));
    return sol;
}

Json solve_document(const CycleSpec& spec) {
    ChainSolution chain = build_cycle(spec);
    NYSolution ny = to_noumi_yamada(chain);
    Json doc;
    doc["spec"] = cycle_spec_to_json(spec);
    doc["chain"] = chain_to_json(chain);
    doc["ny"] = ny_to_json(ny);
    if (chain.p() == 3) doc["p4"] = p4_to_json(to_p4(ny), spec);
    if (chain.p() == 4) {
        try {
            doc["p5"] = p5_to_json(to_p5(ny), spec);
        } catch (const std::domain_error&) {
            // y degenerates to 0 or 1, or fails the parity reduction: the
            // scalar form does not exist for this cycle.
        }
    }
    return doc;
}

bool verify_document(const Json& doc) {
    ChainSolution chain = chain_from_json(doc.at("chain"));
    if (!verify_chain(chain).all_ok()) return false;
    NYSolution ny = ny_from_json(doc.at("ny"));
    if (!verify_ny(ny).all_ok()) return false;
    if (doc.contains("p4") && !verify_p4(p4_from_json(doc.at("p4")))) return false;
    if (doc.contains("p5")) {
        try {
            if (!verify_p5(p5_from_json(doc.at("p5")))) return false;
        } catch (const std::domain_error&) {
            return false;
        }
    }
    return true;
}

}  // namespace pmaya

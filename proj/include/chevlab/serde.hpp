#pragma once

// JSON serialization: ring descriptors, elements, Lie vectors, group-element
// words, nets, and star certificates.  Everything round-trips; certificates
// revalidate on load.  Schemas carry a version tag.

#include "chevlab/chevalley.hpp"
#include "chevlab/group.hpp"
#include "chevlab/presets.hpp"
#include "chevlab/starcond.hpp"

#include <json.hpp>

namespace chevlab {

using Json = nlohmann::json;

// ------------------------------------------------------------------- rings

inline Json ring_to_json(const Ring& r) {
    switch (r.kind()) {
        case RingKind::Integer: return Json{{"kind", "int"}};
        case RingKind::Modular: {
            if (r.modulus() <= Int(1) << 52)
                return Json{{"kind", "mod"}, {"n", r.modulus().convert_to<std::int64_t>()}};
            return Json{{"kind", "mod"}, {"n", r.modulus().str()}};
        }
        case RingKind::Poly:
            return Json{{"kind", "poly"}, {"base", ring_to_json(r.base())}, {"vars", r.vars()}};
        case RingKind::Dual: return Json{{"kind", "dual"}, {"base", ring_to_json(r.base())}};
    }
    throw Error("bad ring");
}

inline Ring ring_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "int") return Ring::integers();
    if (kind == "mod") {
        const auto& n = j.at("n");
        if (n.is_string()) return Ring::modular(Int(n.get<std::string>()));
        return Ring::modular(Int(n.get<std::int64_t>()));
    }
    if (kind == "poly")
        return Ring::poly_over(ring_from_json(j.at("base")), j.at("vars").get<std::vector<std::string>>());
    if (kind == "dual") return Ring::dual_over(ring_from_json(j.at("base")));
    throw Error("unknown ring kind " + kind);
}

/// "int", "mod:4", "dual:mod:4", "poly:<base>:v1,v2"
inline Ring parse_ring_spec(const std::string& spec) {
    if (spec == "int") return Ring::integers();
    if (spec.rfind("mod:", 0) == 0) return Ring::modular(Int(spec.substr(4)));
    if (spec.rfind("dual:", 0) == 0) return Ring::dual_over(parse_ring_spec(spec.substr(5)));
    if (spec.rfind("poly:", 0) == 0) {
        std::string rest = spec.substr(5);
        auto cut = rest.rfind(':');
        if (cut == std::string::npos) throw Error("poly spec needs poly:<base>:<vars>");
        Ring base = parse_ring_spec(rest.substr(0, cut));
        std::vector<std::string> vars;
        std::string vs = rest.substr(cut + 1);
        std::size_t pos = 0;
        while (pos <= vs.size()) {
            auto comma = vs.find(',', pos);
            if (comma == std::string::npos) {
                vars.push_back(vs.substr(pos));
                break;
            }
            vars.push_back(vs.substr(pos, comma - pos));
            pos = comma + 1;
        }
        return Ring::poly_over(base, vars);
    }
    throw Error("cannot parse ring spec " + spec);
}

// ---------------------------------------------------------------- elements

inline Json element_to_json(const RingElement& x) {
    switch (x.ring().kind()) {
        case RingKind::Integer:
        case RingKind::Modular: return Json(x.as_int().str());
        case RingKind::Dual:
            return Json{{"a", element_to_json(x.as_dual().a)}, {"b", element_to_json(x.as_dual().b)}};
        case RingKind::Poly: {
            Json terms = Json::array();
            for (const auto& [e, c] : x.as_poly().terms)
                terms.push_back(Json{{"e", e}, {"c", element_to_json(c)}});
            return terms;
        }
    }
    throw Error("bad ring");
}

inline RingElement element_from_json(const Ring& r, const Json& j) {
    switch (r.kind()) {
        case RingKind::Integer:
        case RingKind::Modular: return r.from_int(Int(j.get<std::string>()));
        case RingKind::Dual:
            return RingElement::make_dual(r, element_from_json(r.base(), j.at("a")),
                                          element_from_json(r.base(), j.at("b")));
        case RingKind::Poly: {
            std::map<ExpVec, RingElement> terms;
            for (const auto& t : j)
                terms.emplace(t.at("e").get<ExpVec>(), element_from_json(r.base(), t.at("c")));
            return RingElement::make_poly(r, std::move(terms));
        }
    }
    throw Error("bad ring");
}

// ------------------------------------------------------------- root things

inline Json coords_to_json(const Coords& c) { return Json(c); }

inline int root_from_json(const RootSystem& sys, const Json& j) {
    int idx = sys.index_of(j.get<Coords>());
    if (idx < 0) throw Error("coordinates are not a root of " + sys.label);
    return idx;
}

inline Json subsystem_to_json(const Subsystem& sub) {
    Json gens = Json::array();
    for (int g : sub.generators)
        gens.push_back(coords_to_json(sub.parent->roots[static_cast<std::size_t>(g)]));
    return Json{{"system", sub.parent->label}, {"subsystem_simple_roots", gens}};
}

inline Subsystem subsystem_from_json(const Json& j) {
    auto sys = get_system(j.at("system").get<std::string>());
    std::vector<int> gens;
    for (const auto& g : j.at("subsystem_simple_roots")) gens.push_back(root_from_json(*sys, g));
    return subsystem_closure(sys, gens);
}

// -------------------------------------------------------------- LieVectors

inline Json lievector_to_json(const LieVector& v) {
    Json coeffs = Json::array();
    const RootSystem& sys = *v.algebra()->sys;
    for (const auto& [root, c] : v.e_terms())
        coeffs.push_back(Json{{"root", coords_to_json(sys.roots[static_cast<std::size_t>(root)])},
                              {"c", element_to_json(c)}});
    for (const auto& [i, c] : v.h_terms())
        coeffs.push_back(Json{{"h", i + 1}, {"c", element_to_json(c)}});
    return Json{{"ring", ring_to_json(v.ring())}, {"coeffs", coeffs}};
}

inline LieVector lievector_from_json(const Algebra& alg, const Json& j) {
    Ring r = ring_from_json(j.at("ring"));
    LieVector v(&alg, r);
    for (const auto& t : j.at("coeffs")) {
        RingElement c = element_from_json(r, t.at("c"));
        if (t.contains("root")) v.add_e(root_from_json(*alg.sys, t.at("root")), c);
        else v.add_h(t.at("h").get<int>() - 1, c);
    }
    return v;
}

// ----------------------------------------------------------- group elements

inline Json group_to_json(const GroupElement& g, bool emit_matrix = false) {
    const RootSystem& sys = *g.algebra()->sys;
    Json word = Json::array();
    for (const auto& l : g.word())
        word.push_back(Json::array({"root", coords_to_json(sys.roots[static_cast<std::size_t>(l.root)]),
                                    element_to_json(l.xi)}));
    Json out{{"system", sys.label}, {"ring", ring_to_json(g.ring())}, {"word", word}};
    if (emit_matrix) {
        Json m = Json::array();
        for (int i = 0; i < g.matrix().size(); ++i) {
            Json row = Json::array();
            for (int jj = 0; jj < g.matrix().size(); ++jj)
                row.push_back(element_to_json(g.matrix().at(i, jj)));
            m.push_back(row);
        }
        out["matrix"] = m;
    }
    return out;
}

inline GroupElement group_from_json(const Algebra& alg, const Json& j) {
    Ring r = ring_from_json(j.at("ring"));
    std::vector<WordLetter> word;
    for (const auto& l : j.at("word"))
        word.push_back({root_from_json(*alg.sys, l.at(1)), element_from_json(r, l.at(2))});
    return word_element(alg, r, word);
}

// ---------------------------------------------------------------------- nets

inline Json net_to_json(const Net& net) {
    Json orbits = Json::array();
    const RootSystem& sys = *net.sys;
    for (std::size_t k = 0; k < net.orbits.orbits.size(); ++k) {
        int rep = net.orbits.orbits[k].front();
        Json gens = Json::array();
        for (const auto& g : net.per_orbit[k].generators()) gens.push_back(element_to_json(g));
        orbits.push_back(Json{{"representative", coords_to_json(sys.roots[static_cast<std::size_t>(rep)])},
                              {"ideal", Json{{"gens", gens}}}});
    }
    Json out = subsystem_to_json(net.delta);
    out["schema"] = "chevlab.net/1";
    out["ring"] = ring_to_json(net.ring);
    out["orbits"] = orbits;
    return out;
}

inline Net net_from_json(const Json& j) {
    Subsystem delta = subsystem_from_json(j);
    Ring ring = ring_from_json(j.at("ring"));
    auto orbits = weyl_orbits(delta);
    std::map<int, Ideal> assign;
    for (const auto& o : j.at("orbits")) {
        int rep = root_from_json(*delta.parent, o.at("representative"));
        if (delta.contains(rep)) continue;
        std::vector<RingElement> gens;
        for (const auto& g : o.at("ideal").at("gens")) gens.push_back(element_from_json(ring, g));
        assign.emplace(orbits.orbit_of[static_cast<std::size_t>(rep)], Ideal(ring, gens));
    }
    return net_from_orbit_ideals(delta, ring, assign);
}

// --------------------------------------------------------- star certificates

inline constexpr const char* kStarSchema = "chevlab.star/1";

inline Json star_outcome_to_json(const Subsystem& delta, const StarOutcome& outcome) {
    const RootSystem& sys = *delta.parent;
    Json out = subsystem_to_json(delta);
    out["schema"] = kStarSchema;
    if (!outcome.ok()) {
        out["status"] = "fail";
        out["gamma"] = coords_to_json(sys.roots[static_cast<std::size_t>(outcome.counterexample)]);
        return out;
    }
    out["status"] = "ok";
    Json orbits = Json::array();
    auto root_json = [&](int r) { return coords_to_json(sys.roots[static_cast<std::size_t>(r)]); };
    for (const auto& oc : outcome.certificate->orbits) {
        Json witnesses = Json::array();
        for (const auto& w : oc.witnesses)
            witnesses.push_back(Json{{"g1", root_json(w.gamma1)},
                                     {"g2", root_json(w.gamma2)},
                                     {"beta", root_json(w.beta)}});
        Json members = Json::array();
        for (const auto& [gamma, word] : oc.members) {
            Json wj = Json::array();
            for (int refl : word) wj.push_back(root_json(refl));
            members.push_back(Json{{"gamma", root_json(gamma)}, {"word", wj}});
        }
        orbits.push_back(Json{{"representative", root_json(oc.representative)},
                              {"pair", Json::array({root_json(oc.a1), root_json(oc.a2)})},
                              {"witnesses", witnesses},
                              {"members", members}});
    }
    out["orbits"] = orbits;
    return out;
}

inline StarOutcome star_outcome_from_json(const Subsystem& delta, const Json& j) {
    if (j.at("schema").get<std::string>() != kStarSchema)
        throw Error("unsupported certificate schema");
    const RootSystem& sys = *delta.parent;
    StarOutcome out;
    if (j.at("status").get<std::string>() == "fail") {
        out.counterexample = root_from_json(sys, j.at("gamma"));
        return out;
    }
    StarCertificate cert;
    cert.system = j.at("system").get<std::string>();
    for (const auto& g : j.at("subsystem_simple_roots"))
        cert.delta_generators.push_back(root_from_json(sys, g));
    for (const auto& o : j.at("orbits")) {
        OrbitCertificate oc;
        oc.representative = root_from_json(sys, o.at("representative"));
        oc.a1 = root_from_json(sys, o.at("pair").at(0));
        oc.a2 = root_from_json(sys, o.at("pair").at(1));
        for (const auto& w : o.at("witnesses"))
            oc.witnesses.push_back({root_from_json(sys, w.at("g1")), root_from_json(sys, w.at("g2")),
                                    root_from_json(sys, w.at("beta"))});
        for (const auto& m : o.at("members")) {
            std::vector<int> word;
            for (const auto& r : m.at("word")) word.push_back(root_from_json(sys, r));
            oc.members.emplace_back(root_from_json(sys, m.at("gamma")), std::move(word));
        }
        cert.orbits.push_back(std::move(oc));
    }
    out.certificate = std::move(cert);
    return out;
}

}  // namespace chevlab

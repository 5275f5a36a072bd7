// chevlab: exact root-system / Chevalley-group laboratory.
//
// Subcommands: roots, star, net, group, tandem, suite.  Everything is
// deterministic given flags and seed; JSON goes where --json points.
// CHEVLAB_THREADS caps the verification-sweep parallelism.

#include "chevlab/acceptance.hpp"
#include "chevlab/sampling.hpp"
#include "chevlab/serde.hpp"
#include "chevlab/tandems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace chevlab;

namespace {

void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path);
    out << j.dump(2) << "\n";
}

Subsystem load_subsystem(const std::string& system, const std::string& subsystem) {
    if (!subsystem.empty() && subsystem.find(':') != std::string::npos)
        return resolve_preset(subsystem).subsystem;
    if (!subsystem.empty() && subsystem.size() > 5 &&
        subsystem.substr(subsystem.size() - 5) == ".json") {
        std::ifstream in(subsystem);
        if (!in) throw Error("cannot open " + subsystem);
        Json j;
        in >> j;
        return subsystem_from_json(j);
    }
    if (!subsystem.empty()) return resolve_preset(system + ":" + subsystem).subsystem;
    throw Error("no subsystem given");
}

int cmd_roots(const std::string& system, const std::string& subsystem, const std::string& json_path) {
    auto sys = get_system(system);
    Json out{{"system", sys->label},
             {"rank", sys->rank},
             {"root_count", sys->count()},
             {"highest_root", coords_to_json(sys->roots[static_cast<std::size_t>(sys->highest)])}};
    Json simples = Json::array();
    for (int s : sys->simple) simples.push_back(coords_to_json(sys->roots[static_cast<std::size_t>(s)]));
    out["simple_roots"] = simples;
    std::cout << system << ": " << sys->count() << " roots, rank " << sys->rank << "\n";
    if (!subsystem.empty()) {
        Subsystem sub = load_subsystem(system, subsystem);
        out["subsystem"] = subsystem_to_json(sub);
        out["subsystem"]["root_count"] = sub.count();
        out["subsystem"]["type"] = classify_subsystem(sub);
        out["subsystem"]["symmetric"] = sub.symmetric;
        out["subsystem"]["closed"] = sub.closed;
        out["subsystem"]["perp_size"] = static_cast<int>(perp(sub).size());
        auto orbits = weyl_orbits(sub);
        Json osizes = Json::array();
        for (const auto& orb : orbits.orbits)
            osizes.push_back(Json{{"size", orb.size()},
                                  {"in_delta", sub.contains(orb.front())},
                                  {"representative",
                                   coords_to_json(sub.parent->roots[static_cast<std::size_t>(orb.front())])}});
        out["subsystem"]["orbits"] = osizes;
        std::cout << "  subsystem " << classify_subsystem(sub) << ": " << sub.count()
                  << " roots, " << orbits.orbits.size() << " Weyl orbits, perp size "
                  << perp(sub).size() << "\n";
    }
    if (!json_path.empty()) write_json(json_path, out);
    return 0;
}

int cmd_star_check(const std::string& preset, const std::string& json_path) {
    auto pre = resolve_preset(preset);
    auto outcome = check_star(pre.subsystem);
    Json j = star_outcome_to_json(pre.subsystem, outcome);
    if (!json_path.empty()) {
        write_json(json_path, j);
        // reload and revalidate before reporting success
        std::ifstream in(json_path);
        Json back;
        in >> back;
        auto loaded = star_outcome_from_json(pre.subsystem, back);
        if (loaded.ok() != outcome.ok()) throw Error("certificate did not survive the round trip");
        if (loaded.ok() && !validate_certificate(pre.subsystem, *loaded.certificate))
            throw Error("reloaded certificate failed validation");
    }
    if (outcome.ok()) {
        std::cout << preset << ": PASS, certificate with " << outcome.certificate->orbits.size()
                  << " orbit entries\n";
        return 0;
    }
    std::cout << preset << ": FAIL, no admissible pair for gamma = "
              << j["gamma"].dump() << "\n";
    return 1;
}

int cmd_star_validate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    in >> j;
    Subsystem sub = subsystem_from_json(j);
    auto outcome = star_outcome_from_json(sub, j);
    if (!outcome.ok()) {
        std::cout << path << ": counterexample certificate (nothing to validate)\n";
        return 1;
    }
    bool ok = validate_certificate(sub, *outcome.certificate);
    std::cout << path << ": " << (ok ? "valid" : "INVALID") << "\n";
    return ok ? 0 : 1;
}

Net net_from_cli(const std::string& system, const std::string& subsystem, const std::string& ring_spec,
                 const std::string& ideals_json) {
    Subsystem sub = load_subsystem(system, subsystem);
    Ring ring = parse_ring_spec(ring_spec);
    auto orbits = weyl_orbits(sub);
    Json ideals = Json::parse(ideals_json);
    std::map<int, Ideal> assign;
    std::size_t next = 0;
    for (std::size_t k = 0; k < orbits.orbits.size(); ++k) {
        if (sub.contains(orbits.orbits[k].front())) continue;
        if (next >= ideals.size()) throw Error("fewer ideals than non-Delta orbits");
        std::vector<RingElement> gens;
        for (const auto& g : ideals[next]) gens.push_back(element_from_json(ring, g));
        assign.emplace(static_cast<int>(k), Ideal(ring, gens));
        ++next;
    }
    if (next != ideals.size()) throw Error("more ideals than non-Delta orbits");
    return net_from_orbit_ideals(sub, ring, assign);
}

int cmd_net_validate(const std::string& system, const std::string& subsystem,
                     const std::string& ring_spec, const std::string& ideals,
                     const std::string& json_path) {
    try {
        Net net = net_from_cli(system, subsystem, ring_spec, ideals);
        std::cout << "net: valid (" << net.orbits.orbits.size() << " orbits over "
                  << net.ring.describe() << ")\n";
        if (!json_path.empty()) write_json(json_path, net_to_json(net));
        return 0;
    } catch (const NetViolation& v) {
        std::cout << "net: INVALID, " << v.pairs.size() << " closure violations\n";
        return 1;
    }
}

int cmd_net_level(const std::string& system, const std::string& subsystem,
                  const std::string& ring_spec, const std::string& ideals,
                  const std::string& json_path) {
    Net net = net_from_cli(system, subsystem, ring_spec, ideals);
    auto alg = Algebra::build(net.sys);
    LevelReport rep = level_of_S(*alg, net);
    Json orbits = Json::array();
    for (const auto& o : rep.orbits) {
        Json elems = Json::array();
        for (const auto& e : o.level_elements) elems.push_back(element_to_json(e));
        orbits.push_back(Json{
            {"representative", coords_to_json(net.sys->roots[static_cast<std::size_t>(o.representative)])},
            {"in_delta", o.in_delta},
            {"level", elems},
            {"matches_sigma", o.matches_sigma}});
    }
    Json out{{"schema", "chevlab.level/1"},
             {"ring", ring_to_json(net.ring)},
             {"exact", rep.exact},
             {"equals_net", rep.equals_net},
             {"orbits", orbits}};
    std::cout << "level of S(sigma): " << (rep.equals_net ? "equals sigma" : "DIFFERS") << " ("
              << rep.orbits.size() << " orbits, exact)\n";
    if (!json_path.empty()) write_json(json_path, out);
    return rep.equals_net ? 0 : 1;
}

int cmd_group_element(const std::string& system, const std::string& ring_spec,
                      const std::string& root_coords, const std::string& xi,
                      const std::string& word_path, bool emit_matrix,
                      const std::string& reduce_gens, const std::string& json_path) {
    auto alg = Algebra::build(get_system(system));
    Ring ring = parse_ring_spec(ring_spec);
    GroupElement g = identity_element(*alg, ring);
    if (!word_path.empty()) {
        std::ifstream in(word_path);
        if (!in) throw Error("cannot open " + word_path);
        Json j;
        in >> j;
        g = group_from_json(*alg, j);
    } else if (!root_coords.empty()) {
        int root = root_from_json(*alg->sys, Json::parse(root_coords));
        // structured element payloads (dual, polynomial) arrive as JSON text
        Json xi_json = (!xi.empty() && (xi[0] == '{' || xi[0] == '[')) ? Json::parse(xi) : Json(xi);
        g = root_element(*alg, ring, root, element_from_json(ring, xi_json));
    } else {
        throw Error("need --root or --word");
    }
    Json out = group_to_json(g, emit_matrix);
    if (!reduce_gens.empty()) {
        std::vector<RingElement> gens;
        for (const auto& e : Json::parse(reduce_gens)) gens.push_back(element_from_json(ring, e));
        Ideal I(ring, gens);
        GroupElement r = reduce_element(g, I);
        out["reduced"] = group_to_json(r, emit_matrix);
        out["in_congruence_subgroup"] = r.is_identity();
    }
    std::cout << out.dump(2) << "\n";
    if (!json_path.empty()) write_json(json_path, out);
    return 0;
}

int cmd_tandem_verify(const std::string& system, const std::string& ring_spec, int samples,
                      std::uint64_t seed, const std::string& json_path) {
    auto alg = Algebra::build(get_system(system));
    Ring ring = parse_ring_spec(ring_spec);
    Sampler s(seed);
    auto pool = sample_pool(ring);
    const auto& sys = *alg->sys;

    long action_total = 0, action_fail = 0;
    long parab_total = 0, parab_fail = 0;
    long oneparam_total = 0, oneparam_fail = 0;
    for (int trial = 0; trial < samples; ++trial) {
        GroupElement h = s.group_element(*alg, ring, pool, 1 + s.index(5));
        Tandem t = make_tandem(*alg, h, static_cast<int>(s.index(static_cast<std::size_t>(sys.count()))),
                               s.pick(pool));
        for (int beta = 0; beta < sys.count(); ++beta) {
            ++action_total;
            if (!verify_tandem_action(t, beta)) ++action_fail;
        }
        auto [a1, a2] = s.orthogonal_pair(sys);
        BitandemFamily b = special_bitandem(t, a1, a2);
        for (const auto& tv : ring.is_finite() ? enumerate_elements(ring) : sample_pool(ring)) {
            ++parab_total;
            if (!in_parabolic(b.group_at(tv), a1, a2)) ++parab_fail;
        }
        int root = static_cast<int>(s.index(static_cast<std::size_t>(sys.count())));
        RingElement u = s.pick(pool), v = s.pick(pool);
        ++oneparam_total;
        if (root_element(*alg, ring, root, u) * root_element(*alg, ring, root, v) !=
            root_element(*alg, ring, root, u + v))
            ++oneparam_fail;
    }
    Json out{{"schema", "chevlab.tandem-verify/1"},
             {"system", system},
             {"ring", ring_to_json(ring)},
             {"rng", "mt19937_64"},
             {"seed", seed},
             {"samples", samples},
             {"checks",
              Json{{"tandem_action", Json{{"total", action_total}, {"failures", action_fail}}},
                   {"special_bitandem_parabolic",
                    Json{{"total", parab_total}, {"failures", parab_fail}}},
                   {"one_parameter_law",
                    Json{{"total", oneparam_total}, {"failures", oneparam_fail}}}}}};
    bool ok = action_fail == 0 && parab_fail == 0 && oneparam_fail == 0;
    out["all_passed"] = ok;
    std::cout << out.dump(2) << "\n";
    if (!json_path.empty()) write_json(json_path, out);
    return ok ? 0 : 1;
}

int cmd_tandem_extract(const std::string& system, const std::string& subsystem,
                       const std::string& ring_spec, std::uint64_t seed,
                       const std::string& gamma_coords, const std::string& json_path) {
    Subsystem sub = load_subsystem(system, subsystem);
    auto alg = Algebra::build(sub.parent);
    Ring ring = parse_ring_spec(ring_spec);
    const auto& sys = *sub.parent;
    Sampler s(seed);
    auto pool = sample_pool(ring);

    int want_gamma = gamma_coords.empty() ? -1 : root_from_json(sys, Json::parse(gamma_coords));

    for (int trial = 0; trial < 500; ++trial) {
        GroupElement h = s.group_element(*alg, ring, pool, s.index(4));
        Tandem t = make_tandem(*alg, h, static_cast<int>(s.index(static_cast<std::size_t>(sys.count()))),
                               s.pick(pool));
        for (int gamma = 0; gamma < sys.count(); ++gamma) {
            if (want_gamma >= 0 && gamma != want_gamma) continue;
            if (sub.contains(gamma) || t.l.e_coeff(gamma).is_zero()) continue;
            for (int a : sub.members)
                for (int b : sub.members) {
                    if (sys.pairing(a, b) != 0) continue;
                    if (sys.pairing(gamma, a) != -1 || sys.pairing(gamma, b) != -1) continue;
                    if (!is_admissible(sub, a, b).admissible) continue;
                    auto wit = extract_witness(t, gamma, a, b);
                    int target = sys.sum(sys.sum(gamma, a), b);
                    Json out{{"schema", "chevlab.extract/1"},
                             {"ring", ring_to_json(ring)},
                             {"seed", seed},
                             {"trial", trial},
                             {"gamma", coords_to_json(sys.roots[static_cast<std::size_t>(gamma)])},
                             {"pair", Json::array({coords_to_json(sys.roots[static_cast<std::size_t>(a)]),
                                                   coords_to_json(sys.roots[static_cast<std::size_t>(b)])})},
                             {"input_tandem", group_to_json(t.g)},
                             {"case", wit.case_used},
                             {"found", wit.found}};
                    if (wit.found) {
                        out["t"] = element_to_json(wit.t);
                        out["witness_group"] = group_to_json(wit.tandem->g);
                        out["witness_lie"] = lievector_to_json(wit.tandem->l);
                        out["target_root"] = coords_to_json(sys.roots[static_cast<std::size_t>(target)]);
                        out["target_coefficient"] = element_to_json(wit.tandem->l.e_coeff(target));
                    }
                    std::cout << out.dump(2) << "\n";
                    if (!json_path.empty()) write_json(json_path, out);
                    return wit.found ? 0 : 2;  // 2: honest NoWitness
                }
        }
    }
    std::cout << "no extraction configuration found in 500 seeded trials\n";
    return 1;
}

int cmd_suite(const std::string& profile, std::uint64_t seed, const std::string& json_path) {
    auto report = run_acceptance(profile, seed, &std::cout);
    std::cout << (report.all_passed ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
    if (!json_path.empty()) write_json(json_path, acceptance_report_to_json(report));
    return report.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chevlab: exact Chevalley-group and root-system laboratory"};
    app.require_subcommand(1);

    std::string system = "D4", subsystem, ring_spec = "mod:3", json_path;
    std::uint64_t seed = 20260810;

    auto* roots = app.add_subcommand("roots", "build a root system, inspect a subsystem");
    roots->add_option("--system", system, "A<n>, D<n>, E6, E7, E8")->required();
    roots->add_option("--subsystem", subsystem, "preset label or JSON file");
    roots->add_option("--json", json_path, "write a JSON summary");

    auto* star = app.add_subcommand("star", "condition-(*) checking");
    std::string preset, cert_path;
    auto* star_check = star->add_subcommand("check", "decide (*) for a preset");
    star_check->add_option("preset", preset, "e.g. E7:A7, D4:4A1")->required();
    star_check->add_option("--json", json_path, "write the certificate");
    auto* star_validate = star->add_subcommand("validate", "revalidate a stored certificate");
    star_validate->add_option("cert", cert_path, "certificate JSON path")->required();

    auto* net = app.add_subcommand("net", "nets of ideals");
    std::string ideals = "[]";
    auto* net_validate = net->add_subcommand("validate", "check the closure conditions");
    net_validate->add_option("--system", system)->required();
    net_validate->add_option("--subsystem", subsystem)->required();
    net_validate->add_option("--ring", ring_spec)->required();
    net_validate->add_option("--ideals", ideals, "JSON: per non-Delta orbit, generator list");
    net_validate->add_option("--json", json_path);
    auto* net_level = net->add_subcommand("level", "exact level of S(sigma)");
    net_level->add_option("--system", system)->required();
    net_level->add_option("--subsystem", subsystem)->required();
    net_level->add_option("--ring", ring_spec)->required();
    net_level->add_option("--ideals", ideals);
    net_level->add_option("--json", json_path);

    auto* group = app.add_subcommand("group", "adjoint group elements");
    std::string root_coords, xi = "1", word_path, reduce_gens;
    bool emit_matrix = false;
    auto* group_element_cmd = group->add_subcommand("element", "build and print an element");
    group_element_cmd->add_option("--system", system)->required();
    group_element_cmd->add_option("--ring", ring_spec)->required();
    group_element_cmd->add_option("--root", root_coords, "root coordinates, JSON array");
    group_element_cmd->add_option("--xi", xi, "parameter");
    group_element_cmd->add_option("--word", word_path, "JSON file with a word");
    group_element_cmd->add_flag("--emit-matrix", emit_matrix, "include the full matrix");
    group_element_cmd->add_option("--reduce-ideal", reduce_gens, "generators; also reduce mod I");
    group_element_cmd->add_option("--json", json_path);

    auto* tandem = app.add_subcommand("tandem", "tandem identity sweeps and extraction");
    int samples = 200;
    std::string gamma_coords;
    auto* tandem_verify = tandem->add_subcommand("verify", "seeded identity checks");
    tandem_verify->add_option("--system", system);
    tandem_verify->add_option("--ring", ring_spec);
    tandem_verify->add_option("--samples", samples);
    tandem_verify->add_option("--seed", seed);
    tandem_verify->add_option("--json", json_path);
    auto* tandem_extract = tandem->add_subcommand("extract", "run the extraction procedure");
    tandem_extract->add_option("--system", system);
    tandem_extract->add_option("--subsystem", subsystem)->required();
    tandem_extract->add_option("--ring", ring_spec);
    tandem_extract->add_option("--seed", seed);
    tandem_extract->add_option("--gamma", gamma_coords, "target root coordinates");
    tandem_extract->add_option("--json", json_path);

    auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
    std::string profile = "quick";
    suite->add_option("--profile", profile, "quick or full");
    suite->add_option("--seed", seed);
    suite->add_option("--json", json_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (roots->parsed()) return cmd_roots(system, subsystem, json_path);
        if (star->parsed()) {
            if (star_check->parsed()) return cmd_star_check(preset, json_path);
            if (star_validate->parsed()) return cmd_star_validate(cert_path);
        }
        if (net->parsed()) {
            if (net_validate->parsed())
                return cmd_net_validate(system, subsystem, ring_spec, ideals, json_path);
            if (net_level->parsed())
                return cmd_net_level(system, subsystem, ring_spec, ideals, json_path);
        }
        if (group->parsed() && group_element_cmd->parsed())
            return cmd_group_element(system, ring_spec, root_coords, xi, word_path, emit_matrix,
                                     reduce_gens, json_path);
        if (tandem->parsed()) {
            if (tandem_verify->parsed())
                return cmd_tandem_verify(system, ring_spec, samples, seed, json_path);
            if (tandem_extract->parsed())
                return cmd_tandem_extract(system, subsystem, ring_spec, seed, gamma_coords, json_path);
        }
        if (suite->parsed()) return cmd_suite(profile, seed, json_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "no subcommand\n";
    return 1;
}

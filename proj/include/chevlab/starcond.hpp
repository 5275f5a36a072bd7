#pragma once

// The combinatorial condition (*): for every root gamma outside Delta there
// is an admissible orthogonal pair a1,a2 in Delta with <a1,gamma> =
// <a2,gamma> = -1, where admissible means that every two distinct roots of
// Sigma_{a1,a2} \ Delta are separated by some beta in Delta with functional
// value 0.  The checker searches orbit representatives only and transports
// certificates along recorded Delta-reflection words; validation replays
// every inequality from scratch.

#include "chevlab/chevalley.hpp"
#include "chevlab/rootsys.hpp"

#include <optional>

namespace chevlab {

/// Roots with functional value 2 for an orthogonal pair.
inline std::vector<int> sigma_set(const RootSystem& sys, int a1, int a2) {
    if (sys.pairing(a1, a2) != 0) throw NotOrthogonal("sigma_set needs an orthogonal pair");
    std::vector<int> out;
    for (int g = 0; g < sys.count(); ++g)
        if (pair_functional(sys, a1, a2, g) == 2) out.push_back(g);
    return out;
}

struct SeparationWitness {
    int gamma1, gamma2;  // distinct roots of Sigma \ Delta
    int beta;            // beta in Delta, functional 0, <beta,g1> != <beta,g2>
};

struct AdmissibleResult {
    bool admissible = false;
    std::vector<SeparationWitness> witnesses;  // one per unordered pair
    std::pair<int, int> failing_pair{-1, -1};
};

/// Tests admissibility of an orthogonal pair from Delta; records one
/// separating beta per unordered pair of outside Sigma-roots.
inline AdmissibleResult is_admissible(const Subsystem& delta, int a1, int a2) {
    const RootSystem& sys = *delta.parent;
    if (!delta.contains(a1) || !delta.contains(a2))
        throw NotInDelta("admissible pair must lie in Delta");
    if (sys.pairing(a1, a2) != 0) throw NotOrthogonal("admissible pair must be orthogonal");
    AdmissibleResult res;
    std::vector<int> outside;
    for (int g : sigma_set(sys, a1, a2))
        if (!delta.contains(g)) outside.push_back(g);
    for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = i + 1; j < outside.size(); ++j) {
            int found = -1;
            for (int beta : delta.members) {
                if (pair_functional(sys, a1, a2, beta) != 0) continue;
                if (sys.pairing(beta, outside[i]) != sys.pairing(beta, outside[j])) {
                    found = beta;
                    break;
                }
            }
            if (found < 0) {
                res.failing_pair = {outside[i], outside[j]};
                return res;
            }
            res.witnesses.push_back({outside[i], outside[j], found});
        }
    res.admissible = true;
    return res;
}

struct OrbitCertificate {
    int representative;
    int a1, a2;                                // admissible pair for the representative
    std::vector<SeparationWitness> witnesses;  // for the representative's pair
    std::vector<std::pair<int, std::vector<int>>> members;  // (gamma, reflection word)
};

struct StarCertificate {
    std::string system;
    std::vector<int> delta_generators;  // root indices in the parent
    std::vector<OrbitCertificate> orbits;
};

struct StarOutcome {
    std::optional<StarCertificate> certificate;
    int counterexample = -1;  // first gamma with no admissible pair
    bool ok() const { return certificate.has_value(); }
};

/// Decides condition (*) for (Phi, Delta).
inline StarOutcome check_star(const Subsystem& delta) {
    const RootSystem& sys = *delta.parent;
    OrbitPartition orbits = weyl_orbits(delta);

    StarOutcome out;
    StarCertificate cert;
    cert.system = sys.label;
    cert.delta_generators = delta.generators;

    // admissibility is a property of the pair alone; memoize across gammas
    std::map<std::pair<int, int>, AdmissibleResult> cache;
    auto pair_admissible = [&](int a, int b) -> const AdmissibleResult& {
        auto key = std::minmax(a, b);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, is_admissible(delta, key.first, key.second)).first;
        return it->second;
    };

    for (const auto& orbit : orbits.orbits) {
        int rep = orbit.front();
        if (delta.contains(rep)) continue;
        OrbitCertificate oc;
        oc.representative = rep;
        oc.a1 = oc.a2 = -1;
        // lexicographic over Delta's root list; first admissible pair wins
        for (std::size_t i = 0; i < delta.members.size() && oc.a1 < 0; ++i)
            for (std::size_t j = i + 1; j < delta.members.size() && oc.a1 < 0; ++j) {
                int a = delta.members[i], b = delta.members[j];
                if (sys.pairing(a, b) != 0) continue;
                if (sys.pairing(a, rep) != -1 || sys.pairing(b, rep) != -1) continue;
                const AdmissibleResult& res = pair_admissible(a, b);
                if (res.admissible) {
                    oc.a1 = a;
                    oc.a2 = b;
                    oc.witnesses = res.witnesses;
                }
            }
        if (oc.a1 < 0) {
            out.counterexample = rep;
            return out;
        }
        for (int g : orbit)
            if (g != rep) oc.members.emplace_back(g, orbits.word_from_rep(g));
        cert.orbits.push_back(std::move(oc));
    }
    out.certificate = std::move(cert);
    return out;
}

/// Replays every inequality in a certificate.  Transported entries are
/// rebuilt from their reflection words, never from cached orbit data.
inline bool validate_certificate(const Subsystem& delta, const StarCertificate& cert) {
    const RootSystem& sys = *delta.parent;
    if (cert.system != sys.label) return false;

    std::vector<char> seen(static_cast<std::size_t>(sys.count()), 0);
    auto check_gamma = [&](int gamma, int a1, int a2,
                           const std::vector<SeparationWitness>& wit) -> bool {
        if (delta.contains(gamma)) return false;
        if (!delta.contains(a1) || !delta.contains(a2)) return false;
        if (sys.pairing(a1, a2) != 0) return false;
        if (sys.pairing(a1, gamma) != -1 || sys.pairing(a2, gamma) != -1) return false;
        // witnesses must cover every unordered pair of outside Sigma roots
        std::vector<int> outside;
        for (int g : sigma_set(sys, a1, a2))
            if (!delta.contains(g)) outside.push_back(g);
        std::map<std::pair<int, int>, int> table;
        for (const auto& w : wit) {
            if (pair_functional(sys, a1, a2, w.beta) != 0) return false;
            if (!delta.contains(w.beta)) return false;
            if (sys.pairing(w.beta, w.gamma1) == sys.pairing(w.beta, w.gamma2)) return false;
            table[std::minmax(w.gamma1, w.gamma2)] = w.beta;
        }
        for (std::size_t i = 0; i < outside.size(); ++i)
            for (std::size_t j = i + 1; j < outside.size(); ++j)
                if (!table.count(std::minmax(outside[i], outside[j]))) return false;
        return true;
    };

    for (const auto& oc : cert.orbits) {
        if (!check_gamma(oc.representative, oc.a1, oc.a2, oc.witnesses)) return false;
        seen[static_cast<std::size_t>(oc.representative)] = 1;
        for (const auto& [gamma, word] : oc.members) {
            int g = oc.representative, a1 = oc.a1, a2 = oc.a2;
            std::vector<SeparationWitness> wit = oc.witnesses;
            for (int refl : word) {
                if (!delta.contains(refl)) return false;
                g = sys.reflect(g, refl);
                a1 = sys.reflect(a1, refl);
                a2 = sys.reflect(a2, refl);
                for (auto& w : wit) {
                    w.gamma1 = sys.reflect(w.gamma1, refl);
                    w.gamma2 = sys.reflect(w.gamma2, refl);
                    w.beta = sys.reflect(w.beta, refl);
                }
            }
            if (g != gamma) return false;
            if (!check_gamma(gamma, a1, a2, wit)) return false;
            seen[static_cast<std::size_t>(gamma)] = 1;
        }
    }
    // coverage: every root outside Delta is certified
    for (int g = 0; g < sys.count(); ++g)
        if (!delta.contains(g) && !seen[static_cast<std::size_t>(g)]) return false;
    return true;
}

/// The Sigma roots paired with their net ideals (generators of U' data).
inline std::vector<std::pair<int, Ideal>> u_prime_generators(const Net& net, int a1, int a2) {
    const RootSystem& sys = *net.sys;
    std::vector<std::pair<int, Ideal>> out;
    for (int g : sigma_set(sys, a1, a2)) out.emplace_back(g, net.sigma(g));
    return out;
}

}  // namespace chevlab

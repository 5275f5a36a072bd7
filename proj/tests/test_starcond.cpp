#include <catch2/catch_amalgamated.hpp>

#include "chevlab/presets.hpp"
#include "chevlab/starcond.hpp"

#include <random>
#include <set>

using namespace chevlab;

TEST_CASE("sigma set for a D4 pair", "[starcond]") {
    auto d4 = get_system("D4");
    int a1 = d4->index_of({2, -2, 0, 0});
    int a2 = d4->index_of({2, 2, 0, 0});
    auto sigma = sigma_set(*d4, a1, a2);
    std::set<Coords> got;
    for (int g : sigma) got.insert(d4->roots[static_cast<std::size_t>(g)]);
    std::set<Coords> expect = {{2, -2, 0, 0}, {2, 2, 0, 0}, {2, 0, -2, 0},
                               {2, 0, 2, 0},  {2, 0, 0, -2}, {2, 0, 0, 2}};
    CHECK(got == expect);
    // a1, a2 always belong; -a1 never does
    CHECK(std::count(sigma.begin(), sigma.end(), a1) == 1);
    CHECK(std::count(sigma.begin(), sigma.end(), d4->neg[static_cast<std::size_t>(a1)]) == 0);
    CHECK_THROWS_AS(sigma_set(*d4, a1, d4->index_of({0, 2, -2, 0})), NotOrthogonal);
}

TEST_CASE("admissibility: the paper's E7/A7 pair", "[starcond]") {
    auto pre = resolve_preset("E7:A7");
    auto e7 = pre.system;
    int a1 = e7->index_of({0, 0, 0, -2, 2, 0, 0, 0});
    int a2 = e7->index_of({0, 0, -2, 0, 0, 2, 0, 0});
    REQUIRE(a1 >= 0);
    REQUIRE(a2 >= 0);
    REQUIRE(pre.subsystem.contains(a1));
    REQUIRE(pre.subsystem.contains(a2));
    auto res = is_admissible(pre.subsystem, a1, a2);
    CHECK(res.admissible);
    // the paper's gamma = eps_2 lies in Sigma and pairs -1 with both
    int gamma = e7->index_of({1, 1, 1, 1, -1, -1, -1, -1});
    REQUIRE(gamma >= 0);
    CHECK(e7->pairing(gamma, a1) == -1);
    CHECK(e7->pairing(gamma, a2) == -1);
}

TEST_CASE("admissibility in D4/4A1 and the vacuous case", "[starcond]") {
    auto pre = resolve_preset("D4:4A1");
    // every orthogonal pair from the 4A1 is admissible
    for (int a : pre.subsystem.members)
        for (int b : pre.subsystem.members) {
            if (a >= b || pre.system->pairing(a, b) != 0) continue;
            CHECK(is_admissible(pre.subsystem, a, b).admissible);
        }

    // Delta = Phi: Sigma \ Delta is empty, admissibility is vacuous
    auto d4 = get_system("D4");
    auto full = subsystem_closure(d4, std::vector<int>(d4->simple.begin(), d4->simple.end()));
    int a1 = d4->index_of({2, -2, 0, 0});
    int a2 = d4->index_of({0, 0, 2, -2});
    auto res = is_admissible(full, a1, a2);
    CHECK(res.admissible);
    CHECK(res.witnesses.empty());

    CHECK_THROWS_AS(is_admissible(pre.subsystem, pre.subsystem.members[0],
                                  d4->index_of({2, 0, -2, 0})),
                    NotInDelta);
}

TEST_CASE("check_star finds certificates where the table says so", "[starcond]") {
    for (const std::string label : {"D4:4A1", "E7:A7", "E6:A5+A1"}) {
        auto pre = resolve_preset(label);
        auto outcome = check_star(pre.subsystem);
        REQUIRE(outcome.ok());
        CHECK(validate_certificate(pre.subsystem, *outcome.certificate));
    }
}

TEST_CASE("check_star counterexamples", "[starcond]") {
    auto a2 = resolve_preset("A2:A1");
    auto o1 = check_star(a2.subsystem);
    CHECK_FALSE(o1.ok());
    CHECK(o1.counterexample >= 0);

    auto a3 = resolve_preset("A3:2A1");
    auto o2 = check_star(a3.subsystem);
    CHECK_FALSE(o2.ok());
    CHECK(o2.counterexample >= 0);
}

// For these three embeddings no outside root has an admissible pair: the
// sets Sigma \ Delta mix an integer-type root with spinor-type roots that no
// functional-zero root of Delta separates.  Verified independently by a
// brute-force coordinate search; kept as regression facts.
TEST_CASE("embeddings where the separation condition fails", "[starcond]") {
    for (const std::string label : {"E6:D5", "E7:E6", "E8:A1+A7"}) {
        auto pre = resolve_preset(label);
        auto outcome = check_star(pre.subsystem);
        INFO(label);
        CHECK_FALSE(outcome.ok());
        REQUIRE(outcome.counterexample >= 0);
        // the reported gamma really has no admissible pair
        const auto& sys = *pre.system;
        int gamma = outcome.counterexample;
        for (int a : pre.subsystem.members)
            for (int b : pre.subsystem.members) {
                if (a >= b || sys.pairing(a, b) != 0) continue;
                if (sys.pairing(a, gamma) != -1 || sys.pairing(b, gamma) != -1) continue;
                CHECK_FALSE(is_admissible(pre.subsystem, a, b).admissible);
            }
    }
}

TEST_CASE("certificates survive tampering checks", "[starcond]") {
    auto pre = resolve_preset("D4:4A1");
    auto outcome = check_star(pre.subsystem);
    REQUIRE(outcome.ok());
    StarCertificate cert = *outcome.certificate;
    REQUIRE(!cert.orbits.empty());

    StarCertificate bad = cert;
    bad.orbits[0].a1 = pre.system->neg[static_cast<std::size_t>(bad.orbits[0].a1)];
    CHECK_FALSE(validate_certificate(pre.subsystem, bad));

    StarCertificate bad2 = cert;
    bad2.orbits[0].members.pop_back();
    CHECK_FALSE(validate_certificate(pre.subsystem, bad2));

    if (!cert.orbits[0].witnesses.empty()) {
        StarCertificate bad3 = cert;
        bad3.orbits[0].witnesses[0].beta =
            pre.system->neg[static_cast<std::size_t>(bad3.orbits[0].witnesses[0].beta)];
        // negating beta flips both pairings, so move it off Delta instead
        bad3.orbits[0].witnesses[0].beta = cert.orbits[0].representative;
        CHECK_FALSE(validate_certificate(pre.subsystem, bad3));
    }
}

TEST_CASE("admissible pairs transport along W(Delta)", "[starcond]") {
    auto pre = resolve_preset("D4:4A1");
    const auto& sys = *pre.system;
    auto outcome = check_star(pre.subsystem);
    REQUIRE(outcome.ok());
    std::mt19937_64 rng(41);
    for (const auto& oc : outcome.certificate->orbits) {
        int a1 = oc.a1, a2 = oc.a2;
        for (int t = 0; t < 10; ++t) {
            int refl = pre.subsystem.members[rng() % pre.subsystem.members.size()];
            a1 = sys.reflect(a1, refl);
            a2 = sys.reflect(a2, refl);
            CHECK(is_admissible(pre.subsystem, a1, a2).admissible);
        }
    }
}

TEST_CASE("functional values stay in range on every pair", "[starcond]") {
    for (const std::string label : {"A3", "D4", "E6"}) {
        auto sys = get_system(label);
        for (int a = 0; a < sys->count(); ++a)
            for (int b = 0; b < sys->count(); ++b) {
                if (sys->pairing(a, b) != 0) continue;
                for (int g = 0; g < sys->count(); ++g) {
                    int w = pair_functional(*sys, a, b, g);
                    CHECK(w >= -2);
                    CHECK(w <= 2);
                }
            }
    }
}

TEST_CASE("U' generator data from a net", "[starcond]") {
    auto pre = resolve_preset("D4:4A1");
    Ring f2 = Ring::modular(2);
    Net zero = uniform_net(pre.subsystem, f2, Ideal::zero(f2));
    int a1 = pre.system->index_of({2, -2, 0, 0});
    int a2 = pre.system->index_of({2, 2, 0, 0});
    auto gens = u_prime_generators(zero, a1, a2);
    REQUIRE(gens.size() == 6);
    int unit_count = 0, zero_count = 0;
    for (const auto& [root, ideal] : gens) {
        if (pre.subsystem.contains(root)) {
            CHECK(ideal_contains(ideal, f2.one()));
            ++unit_count;
        } else {
            CHECK(ideal.is_zero_ideal());
            ++zero_count;
        }
    }
    CHECK(unit_count == 2);
    CHECK(zero_count == 4);

    Net unit = uniform_net(pre.subsystem, f2, Ideal::unit(f2));
    for (const auto& [root, ideal] : u_prime_generators(unit, a1, a2))
        CHECK(ideal_contains(ideal, f2.one()));
}

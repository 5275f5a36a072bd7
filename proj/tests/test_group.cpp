#include <catch2/catch_amalgamated.hpp>

#include "chevlab/group.hpp"
#include "chevlab/presets.hpp"

#include <random>

using namespace chevlab;

namespace {

std::shared_ptr<const Algebra> d4_algebra() {
    static auto alg = Algebra::build(get_system("D4"));
    return alg;
}

}  // namespace

TEST_CASE("root element basics", "[group]") {
    auto alg = d4_algebra();
    Ring z = Ring::integers();
    for (int a = 0; a < alg->sys->count(); ++a) {
        CHECK(root_element(*alg, z, a, z.zero()).is_identity());
        GroupElement x = root_element(*alg, z, a, z.from_int(3));
        CHECK(act(x, alg->e(z, a)) == alg->e(z, a));
        // x_a(xi) e_{-a} = e_{-a} + xi h_a - xi^2 e_a
        int na = alg->sys->neg[static_cast<std::size_t>(a)];
        LieVector expect = alg->e(z, na) + alg->h_of_root(z, a).scaled(z.from_int(3)) +
                           alg->e(z, a).scaled(z.from_int(-9));
        CHECK(act(x, alg->e(z, na)) == expect);
        // x_a(1) h_a = h_a - 2 e_a
        GroupElement x1 = root_element(*alg, z, a, z.one());
        CHECK(act(x1, alg->h_of_root(z, a)) ==
              alg->h_of_root(z, a) + alg->e(z, a).scaled(z.from_int(-2)));
    }
}

TEST_CASE("one-parameter law over Z/4", "[group]") {
    auto alg = d4_algebra();
    Ring r = Ring::modular(4);
    auto elems = enumerate_elements(r);
    for (int a = 0; a < alg->sys->count(); ++a)
        for (const auto& xi : elems)
            for (const auto& zeta : elems)
                CHECK(root_element(*alg, r, a, xi) * root_element(*alg, r, a, zeta) ==
                      root_element(*alg, r, a, xi + zeta));
}

TEST_CASE("action is multiplicative", "[group]") {
    auto alg = d4_algebra();
    Ring r = Ring::modular(5);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        std::vector<WordLetter> w1, w2;
        for (int i = 0; i < 3; ++i) {
            w1.push_back({static_cast<int>(rng() % 24), r.from_int(static_cast<long>(rng() % 5))});
            w2.push_back({static_cast<int>(rng() % 24), r.from_int(static_cast<long>(rng() % 5))});
        }
        GroupElement g = word_element(*alg, r, w1), h = word_element(*alg, r, w2);
        LieVector v(alg.get(), r);
        for (int i = 0; i < 5; ++i) v.add_e(static_cast<int>(rng() % 24), r.from_int(static_cast<long>(rng() % 5)));
        v.add_h(static_cast<int>(rng() % 4), r.one());
        CHECK(act(identity_element(*alg, r), v) == v);
        CHECK(act(g * h, v) == act(g, act(h, v)));
        CHECK(act(g * g.inverse(), v) == v);
        CHECK((g * g.inverse()).is_identity());
    }
}

TEST_CASE("weyl lift permutes root spaces with signs", "[group]") {
    auto alg = d4_algebra();
    Ring z = Ring::integers();
    const auto& sys = *alg->sys;
    for (int a : {0, 5, 11}) {
        GroupElement w = weyl_lift(*alg, z, a);
        for (int b = 0; b < sys.count(); ++b) {
            LieVector img = act(w, alg->e(z, b));
            REQUIRE(img.h_terms().empty());
            REQUIRE(img.e_terms().size() == 1);
            auto [root, c] = *img.e_terms().begin();
            CHECK(root == sys.reflect(b, a));
            CHECK((c == z.one() || c == -z.one()));
        }
        for (int j = 0; j < sys.rank; ++j) {
            LieVector img = act(w, alg->h(z, j));
            CHECK(img == alg->h_of_root(z, sys.reflect(sys.simple[static_cast<std::size_t>(j)], a)));
        }
        // w^2 acts diagonally by signs on root spaces
        GroupElement w2 = w * w;
        for (int b = 0; b < sys.count(); ++b) {
            LieVector img = act(w2, alg->e(z, b));
            REQUIRE(img.e_terms().size() == 1);
            auto [root, c] = *img.e_terms().begin();
            CHECK(root == b);
            CHECK((c == z.one() || c == -z.one()));
        }
    }
}

TEST_CASE("Chevalley commutator relations over F3", "[group]") {
    auto alg = d4_algebra();
    Ring r = Ring::modular(3);
    const auto& sys = *alg->sys;
    auto elems = enumerate_elements(r);
    for (int a = 0; a < sys.count(); ++a)
        for (int b = 0; b < sys.count(); ++b) {
            if (a == b || sys.neg[static_cast<std::size_t>(a)] == b) continue;
            int p = sys.pairing(a, b);
            for (const auto& xi : elems)
                for (const auto& zeta : elems) {
                    GroupElement xa = root_element(*alg, r, a, xi);
                    GroupElement xb = root_element(*alg, r, b, zeta);
                    GroupElement comm = xa * xb * xa.inverse() * xb.inverse();
                    if (p == 0 && sys.sum(a, b) < 0) {
                        CHECK(comm.is_identity());
                    } else if (p == -1) {
                        GroupElement expect = root_element(
                            *alg, r, sys.sum(a, b), r.from_int(alg->N(a, b)) * xi * zeta);
                        CHECK(comm == expect);
                    }
                }
        }
}

TEST_CASE("U' is abelian and P normalizes it", "[group]") {
    auto alg = d4_algebra();
    Ring r = Ring::modular(3);
    const auto& sys = *alg->sys;
    int a1 = sys.index_of({2, -2, 0, 0});
    int a2 = sys.index_of({2, 2, 0, 0});
    std::vector<int> sigma_roots;
    for (int g = 0; g < sys.count(); ++g)
        if (pair_functional(sys, a1, a2, g) == 2) sigma_roots.push_back(g);
    REQUIRE(sigma_roots.size() == 6);

    auto elems = enumerate_elements(r);
    for (int ga : sigma_roots)
        for (int gb : sigma_roots)
            for (const auto& xi : elems)
                for (const auto& zeta : elems) {
                    GroupElement x = root_element(*alg, r, ga, xi);
                    GroupElement y = root_element(*alg, r, gb, zeta);
                    CHECK(x * y == y * x);
                }

    // conjugation by x_beta(1), functional value 0, lands back in U'
    for (int beta = 0; beta < sys.count(); ++beta) {
        if (pair_functional(sys, a1, a2, beta) != 0) continue;
        GroupElement xb = root_element(*alg, r, beta, r.one());
        for (int ga : sigma_roots) {
            GroupElement conj = root_element(*alg, r, ga, r.one()).conjugated_by(xb);
            GroupElement expect = root_element(*alg, r, ga, r.one());
            int s = sys.sum(beta, ga);
            if (s >= 0)
                expect = expect * root_element(*alg, r, s, r.from_int(alg->N(beta, ga)));
            CHECK(conj == expect);
            CHECK(pair_functional(sys, a1, a2, s >= 0 ? s : ga) == 2);
        }
    }
}

TEST_CASE("reduction homomorphism and congruence subgroup", "[group]") {
    auto alg = d4_algebra();
    Ring z4 = Ring::modular(4);
    Ideal two(z4, {z4.from_int(2)});
    int a = 3;
    CHECK(in_congruence_subgroup(root_element(*alg, z4, a, z4.from_int(2)), two));
    CHECK_FALSE(in_congruence_subgroup(root_element(*alg, z4, a, z4.one()), two));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        std::vector<WordLetter> w1, w2;
        for (int i = 0; i < 3; ++i) {
            w1.push_back({static_cast<int>(rng() % 24), z4.from_int(static_cast<long>(rng() % 4))});
            w2.push_back({static_cast<int>(rng() % 24), z4.from_int(static_cast<long>(rng() % 4))});
        }
        GroupElement g = word_element(*alg, z4, w1), h = word_element(*alg, z4, w2);
        CHECK(reduce_element(g * h, two) == reduce_element(g, two) * reduce_element(h, two));
    }
}

TEST_CASE("S(sigma) membership", "[group]") {
    auto pre = resolve_preset("D4:4A1");
    auto alg = d4_algebra();
    Ring f2 = Ring::modular(2);
    Net zero = uniform_net(pre.subsystem, f2, Ideal::zero(f2));

    CHECK(in_S_sigma(identity_element(*alg, f2), zero));
    for (int b : pre.subsystem.members)
        CHECK(in_S_sigma(root_element(*alg, f2, b, f2.one()), zero));
    int gamma = -1;
    for (int g = 0; g < pre.system->count(); ++g)
        if (!pre.subsystem.contains(g)) { gamma = g; break; }
    CHECK_FALSE(in_S_sigma(root_element(*alg, f2, gamma, f2.one()), zero));
}

TEST_CASE("S(sigma) membership over the integers", "[group]") {
    auto pre = resolve_preset("D4:4A1");
    auto alg = d4_algebra();
    Ring z = Ring::integers();
    Net net = uniform_net(pre.subsystem, z, Ideal(z, {z.from_int(2)}));

    int gamma = -1;
    for (int g = 0; g < pre.system->count(); ++g)
        if (!pre.subsystem.contains(g)) { gamma = g; break; }
    REQUIRE(gamma >= 0);
    CHECK(in_S_sigma(root_element(*alg, z, gamma, z.from_int(2)), net));
    CHECK(in_S_sigma(root_element(*alg, z, gamma, z.from_int(-4)), net));
    CHECK_FALSE(in_S_sigma(root_element(*alg, z, gamma, z.one()), net));
    CHECK_FALSE(in_S_sigma(root_element(*alg, z, gamma, z.from_int(3)), net));
    for (int b : pre.subsystem.members)
        CHECK(in_S_sigma(root_element(*alg, z, b, z.from_int(5)), net));
}

TEST_CASE("parabolic membership", "[group]") {
    auto alg = d4_algebra();
    Ring f3 = Ring::modular(3);
    const auto& sys = *alg->sys;
    int a1 = sys.index_of({2, -2, 0, 0});
    int a2 = sys.index_of({2, 2, 0, 0});
    for (int g = 0; g < sys.count(); ++g) {
        int w = pair_functional(sys, a1, a2, g);
        GroupElement x = root_element(*alg, f3, g, f3.one());
        if (w >= 0) CHECK(in_parabolic(x, a1, a2));
        if (w == -2) CHECK_FALSE(in_parabolic(x, a1, a2));
        if (w == 0) CHECK(in_parabolic(weyl_lift(*alg, f3, g), a1, a2));
    }
    CHECK_THROWS_AS(in_parabolic(identity_element(*alg, f3), a1, sys.index_of({0, 2, -2, 0})),
                    NotOrthogonal);
}

TEST_CASE("level of S(sigma) equals sigma for D4/4A1 over Z/4", "[group]") {
    auto pre = resolve_preset("D4:4A1");
    auto alg = d4_algebra();
    Ring z4 = Ring::modular(4);
    Net net = uniform_net(pre.subsystem, z4, Ideal(z4, {z4.from_int(2)}));
    LevelReport rep = level_of_S(*alg, net);
    CHECK(rep.exact);
    CHECK(rep.equals_net);
    for (const auto& orb : rep.orbits) {
        if (orb.in_delta) CHECK(orb.level_elements.size() == 4);
        else CHECK(orb.level_elements.size() == 2);  // {0, 2}
    }
}

TEST_CASE("reduction witness over Z/4", "[group]") {
    auto pre = resolve_preset("D4:4A1");
    auto alg = d4_algebra();
    const auto& sys = *alg->sys;
    Ring z4 = Ring::modular(4);
    Ideal I(z4, {z4.from_int(2)});

    // gamma = e1 - e3; pair with <gamma,a1> = 1, <gamma,a2> = -1
    int gamma = sys.index_of({2, 0, -2, 0});
    int a1 = sys.index_of({2, -2, 0, 0});
    int a2 = sys.index_of({0, 0, 2, -2});
    REQUIRE(sys.pairing(gamma, a1) == 1);
    REQUIRE(sys.pairing(gamma, a2) == -1);
    REQUIRE(sys.pairing(a1, a2) == 0);

    GroupElement h = root_element(*alg, z4, gamma, z4.one());
    auto wit = reduction_witness(*alg, h, gamma, a1, a2, I);
    CHECK((wit.sign == 1 || wit.sign == -1));
    CHECK(wit.xi_bar == Ring::modular(2).one());

    // an I-congruent tail does not change the reduction
    int other = sys.index_of({0, 2, 0, -2});
    GroupElement h2 = h * root_element(*alg, z4, other, z4.from_int(2));
    auto wit2 = reduction_witness(*alg, h2, gamma, a1, a2, I);
    CHECK(wit2.sign == wit.sign);

    // xi = 0: g2 reduces to the identity
    GroupElement h0 = root_element(*alg, z4, gamma, z4.from_int(2));
    auto wit0 = reduction_witness(*alg, h0, gamma, a1, a2, I);
    CHECK(wit0.reduced.is_identity());

    CHECK_THROWS_AS(reduction_witness(*alg, h, gamma, a2, a1, I), PairNotAdmissible);
}

TEST_CASE("generated matrices have unit determinant", "[group]") {
    auto alg = d4_algebra();
    Ring z = Ring::integers();
    std::mt19937_64 rng(23);
    for (int t = 0; t < 5; ++t) {
        std::vector<WordLetter> w;
        for (int i = 0; i < 4; ++i)
            w.push_back({static_cast<int>(rng() % 24), z.from_int(static_cast<long>(rng() % 3) - 1)});
        CHECK(lifted_determinant(word_element(*alg, z, w).matrix()) == 1);
    }
    Ring z4 = Ring::modular(4);
    GroupElement g = word_element(*alg, z4, {{2, z4.from_int(3)}, {7, z4.from_int(2)}});
    CHECK(lifted_determinant(g.matrix()) % 4 == 1);
}

#include <catch2/catch_amalgamated.hpp>

#include "chevlab/presets.hpp"
#include "chevlab/rootsys.hpp"

#include <random>
#include <set>

using namespace chevlab;

TEST_CASE("root counts", "[rootsys]") {
    CHECK(get_system("A2")->count() == 6);
    CHECK(get_system("A3")->count() == 12);
    CHECK(get_system("D4")->count() == 24);
    CHECK(get_system("D6")->count() == 60);
    CHECK(get_system("E6")->count() == 72);
    CHECK(get_system("E7")->count() == 126);
    CHECK(get_system("E8")->count() == 240);
}

namespace {

void check_diagram(const std::string& label, const std::vector<std::pair<int, int>>& edges) {
    auto sys = get_system(label);
    int r = sys->rank;
    std::set<std::pair<int, int>> eset(edges.begin(), edges.end());
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            int p = sys->pairing(sys->simple[static_cast<std::size_t>(i - 1)],
                                 sys->simple[static_cast<std::size_t>(j - 1)]);
            if (i == j) {
                CHECK(p == 2);
            } else {
                bool edge = eset.count({i, j}) || eset.count({j, i});
                CHECK(p == (edge ? -1 : 0));
            }
        }
}

}  // namespace

TEST_CASE("simple roots follow the Bourbaki diagrams", "[rootsys]") {
    check_diagram("A3", {{1, 2}, {2, 3}});
    check_diagram("D4", {{1, 2}, {2, 3}, {2, 4}});
    check_diagram("D6", {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
    check_diagram("E6", {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}});
    check_diagram("E7", {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}});
    check_diagram("E8", {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}});
}

TEST_CASE("highest roots", "[rootsys]") {
    auto e7 = get_system("E7");
    CHECK(e7->roots[static_cast<std::size_t>(e7->highest)] == Coords{2, -2, 0, 0, 0, 0, 0, 0});
    auto e8 = get_system("E8");
    CHECK(e8->roots[static_cast<std::size_t>(e8->highest)] == Coords{0, 0, 0, 0, 0, 0, 2, 2});
    auto e6 = get_system("E6");
    CHECK(e6->roots[static_cast<std::size_t>(e6->highest)] == Coords{1, 1, 1, 1, 1, -1, -1, 1});
    auto d4 = get_system("D4");
    CHECK(d4->roots[static_cast<std::size_t>(d4->highest)] == Coords{2, 2, 0, 0});
}

TEST_CASE("sum law: a+b is a root iff the pairing is -1", "[rootsys]") {
    for (const std::string label : {"A2", "A3", "D4"}) {
        auto sys = get_system(label);
        for (int i = 0; i < sys->count(); ++i)
            for (int j = 0; j < sys->count(); ++j) {
                if (i == j || sys->neg[static_cast<std::size_t>(i)] == j) continue;
                CHECK((sys->sum(i, j) >= 0) == (sys->pairing(i, j) == -1));
            }
    }
    std::mt19937_64 rng(7);
    for (const std::string label : {"E7", "E8"}) {
        auto sys = get_system(label);
        for (int t = 0; t < 10000; ++t) {
            int i = static_cast<int>(rng() % static_cast<unsigned>(sys->count()));
            int j = static_cast<int>(rng() % static_cast<unsigned>(sys->count()));
            if (i == j || sys->neg[static_cast<std::size_t>(i)] == j) continue;
            CHECK((sys->sum(i, j) >= 0) == (sys->pairing(i, j) == -1));
        }
    }
}

TEST_CASE("reflection basics", "[rootsys]") {
    auto d4 = get_system("D4");
    for (int a = 0; a < d4->count(); ++a) {
        CHECK(d4->reflect(a, a) == d4->neg[static_cast<std::size_t>(a)]);
        for (int g = 0; g < d4->count(); ++g) {
            if (d4->pairing(g, a) == 0) CHECK(d4->reflect(g, a) == g);
            // involution and inner-product preservation
            CHECK(d4->reflect(d4->reflect(g, a), a) == g);
            for (int h = 0; h < d4->count(); ++h)
                if ((g + h) % 5 == 0)  // thinned grid to keep this quick
                    CHECK(d4->pairing(d4->reflect(g, a), d4->reflect(h, a)) == d4->pairing(g, h));
        }
    }
    // s_{e1-e2}(e1+e3) = e2+e3
    int g = d4->index_of({2, 0, 2, 0});
    int a = d4->index_of({2, -2, 0, 0});
    REQUIRE(g >= 0);
    REQUIRE(a >= 0);
    CHECK(d4->reflect(g, a) == d4->index_of({0, 2, 2, 0}));
}

TEST_CASE("subsystem closure", "[rootsys]") {
    auto d4 = get_system("D4");
    auto sub = subsystem_from_coords(d4, {{2, -2, 0, 0}, {2, 2, 0, 0}, {0, 0, 2, -2}, {0, 0, 2, 2}});
    CHECK(sub.count() == 8);
    CHECK(sub.symmetric);
    CHECK(sub.closed);

    auto a7 = resolve_preset("E7:A7");
    CHECK(a7.subsystem.count() == 56);

    auto empty = subsystem_closure(d4, {});
    CHECK(empty.count() == 0);

    CHECK_THROWS_AS(subsystem_from_coords(d4, {{2, 0, 0, 0}}), GeneratorsNotInSystem);
}

TEST_CASE("perp computations", "[rootsys]") {
    auto d4 = get_system("D4");
    auto delta = resolve_preset("D4:4A1").subsystem;
    CHECK(perp(delta).empty());

    auto a3 = get_system("A3");
    auto one = subsystem_from_coords(a3, {{2, -2, 0, 0}});
    auto p = perp(one);
    std::set<Coords> got;
    for (int i : p) got.insert(a3->roots[static_cast<std::size_t>(i)]);
    CHECK(got == std::set<Coords>{{0, 0, 2, -2}, {0, 0, -2, 2}});

    auto full = subsystem_closure(d4, std::vector<int>(d4->simple.begin(), d4->simple.end()));
    CHECK(full.count() == 24);
    CHECK(perp(full).empty());
}

TEST_CASE("Weyl orbit partition for D4/4A1", "[rootsys]") {
    auto pre = resolve_preset("D4:4A1");
    auto orbits = weyl_orbits(pre.subsystem);
    int non_delta = 0;
    for (const auto& orb : orbits.orbits) {
        bool inside = pre.subsystem.contains(orb.front());
        for (int r : orb) CHECK(pre.subsystem.contains(r) == inside);
        if (!inside) {
            ++non_delta;
            CHECK(orb.size() == 16);
        } else {
            CHECK(orb.size() == 2);
        }
    }
    CHECK(non_delta == 1);

    // stability under every Delta reflection
    const auto& sys = *pre.system;
    for (int a : pre.subsystem.members)
        for (int g = 0; g < sys.count(); ++g)
            CHECK(orbits.orbit_of[static_cast<std::size_t>(sys.reflect(g, a))] ==
                  orbits.orbit_of[static_cast<std::size_t>(g)]);

    // transport words reach each member from its representative
    for (int g = 0; g < sys.count(); ++g) {
        int cur = orbits.representative(g);
        for (int a : orbits.word_from_rep(g)) cur = sys.reflect(cur, a);
        CHECK(cur == g);
    }
}

TEST_CASE("Weyl orbits for E7/A7 and E8/A8", "[rootsys]") {
    auto a7 = resolve_preset("E7:A7");
    auto o7 = weyl_orbits(a7.subsystem);
    std::vector<std::size_t> outside;
    for (std::size_t k = 0; k < o7.orbits.size(); ++k)
        if (!a7.subsystem.contains(o7.orbits[k].front())) outside.push_back(k);
    REQUIRE(outside.size() == 1);
    CHECK(o7.orbits[outside[0]].size() == 70);

    auto a8 = resolve_preset("E8:A8");
    auto o8 = weyl_orbits(a8.subsystem);
    outside.clear();
    for (std::size_t k = 0; k < o8.orbits.size(); ++k)
        if (!a8.subsystem.contains(o8.orbits[k].front())) outside.push_back(k);
    REQUIRE(outside.size() == 2);
    CHECK(o8.orbits[outside[0]].size() == 84);
    CHECK(o8.orbits[outside[1]].size() == 84);
    // the two orbits are opposite each other
    const auto& sys = *a8.system;
    for (int r : o8.orbits[outside[0]]) {
        CHECK(o8.orbit_of[static_cast<std::size_t>(sys.neg[static_cast<std::size_t>(r)])] ==
              static_cast<int>(outside[1]));
    }
}

TEST_CASE("nA1 subsystems give orthogonal pairs against every outside root", "[rootsys]") {
    for (const std::string label : {"D4:4A1", "E7:7A1", "E8:8A1"}) {
        auto pre = resolve_preset(label);
        const auto& sys = *pre.system;
        for (int g = 0; g < sys.count(); ++g) {
            if (pre.subsystem.contains(g)) continue;
            bool found = false;
            for (int a : pre.subsystem.members)
                for (int b : pre.subsystem.members) {
                    if (sys.pairing(a, b) != 0) continue;
                    if (sys.pairing(a, g) == -1 && sys.pairing(b, g) == -1) found = true;
                }
            CHECK(found);
        }
    }
}

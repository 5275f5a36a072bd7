#include <catch2/catch_amalgamated.hpp>

#include "chevlab/presets.hpp"

using namespace chevlab;

TEST_CASE("every preset resolves to the advertised type", "[presets]") {
    const std::map<std::string, std::string> expected = {
        {"E7:A7", "A7"},        {"E6:A5+A1", "A5+A1"},   {"E8:A8", "A8"},
        {"E6:D5", "D5"},        {"E7:E6", "E6"},         {"E7:A5+A2", "A5+A2"},
        {"E7:2A3+A1", "2A3+A1"}, {"E8:A1+A7", "A7+A1"},  {"E8:D5+A3", "D5+A3"},
        {"E8:2A4", "2A4"},      {"E8:4A2", "4A2"},       {"E6:3A2", "3A2"},
        {"E8:E6+A2", "E6+A2"},  {"E7:D6+A1", "D6+A1"},   {"E8:D8", "D8"},
        {"E8:E7+A1", "E7+A1"},  {"E7:D4+3A1", "D4+3A1"}, {"E8:D6+2A1", "D6+2A1"},
        {"E8:2D4", "2D4"},      {"E7:7A1", "7A1"},       {"E8:8A1", "8A1"},
        {"D4:4A1", "4A1"},      {"D6:6A1", "6A1"},       {"D8:8A1", "8A1"},
        {"A2:A1", "A1"},        {"A3:2A1", "2A1"},
    };
    for (const auto& [label, type] : expected) {
        INFO(label);
        auto pre = resolve_preset(label);
        CHECK(classify_subsystem(pre.subsystem) == type);
        CHECK(pre.generators.size() ==
              static_cast<std::size_t>(z_rank([&] {
                  IntMat rows;
                  for (int g : pre.generators) {
                      IntVec v(pre.system->dim);
                      for (int k = 0; k < pre.system->dim; ++k)
                          v[static_cast<std::size_t>(k)] = pre.system->roots[static_cast<std::size_t>(g)][k];
                      rows.push_back(std::move(v));
                  }
                  return rows;
              }())));
    }
}

TEST_CASE("parenthesized items use the stated generators", "[presets]") {
    auto e7 = get_system("E7");
    auto a7 = resolve_preset("E7:A7");
    std::vector<int> expect = {e7->neg[static_cast<std::size_t>(e7->highest)]};
    for (int i : {1, 3, 4, 5, 6, 7}) expect.push_back(e7->simple[static_cast<std::size_t>(i - 1)]);
    CHECK(a7.generators == expect);

    auto e8 = get_system("E8");
    auto a8 = resolve_preset("E8:A8");
    std::vector<int> expect8;
    for (int i : {1, 3, 4, 5, 6, 7, 8}) expect8.push_back(e8->simple[static_cast<std::size_t>(i - 1)]);
    expect8.push_back(e8->neg[static_cast<std::size_t>(e8->highest)]);
    CHECK(a8.generators == expect8);

    // D4: the spec's explicit 4A1 generators
    auto d4 = resolve_preset("D4:4A1");
    std::vector<Coords> coords;
    for (int g : d4.generators) coords.push_back(d4.system->roots[static_cast<std::size_t>(g)]);
    CHECK(coords == std::vector<Coords>{{2, -2, 0, 0}, {2, 2, 0, 0}, {0, 0, 2, -2}, {0, 0, 2, 2}});
}

TEST_CASE("preset root counts", "[presets]") {
    CHECK(resolve_preset("E7:A7").subsystem.count() == 56);
    CHECK(resolve_preset("E8:A8").subsystem.count() == 72);
    CHECK(resolve_preset("E6:D5").subsystem.count() == 40);
    CHECK(resolve_preset("E7:E6").subsystem.count() == 72);
    CHECK(resolve_preset("E8:D8").subsystem.count() == 112);
    CHECK(resolve_preset("E8:E7+A1").subsystem.count() == 128);
    CHECK(resolve_preset("E7:7A1").subsystem.count() == 14);
    CHECK(resolve_preset("E8:8A1").subsystem.count() == 16);
    CHECK(resolve_preset("D4:4A1").subsystem.count() == 8);
    CHECK(resolve_preset("D6:6A1").subsystem.count() == 12);
    CHECK(resolve_preset("E8:4A2").subsystem.count() == 24);
}

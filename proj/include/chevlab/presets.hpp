#pragma once

// Named subsystem presets.  Items that the source realization pins down by
// simple roots and the lowest root are written exactly that way; the rest are
// produced by extended-Dynkin-diagram steps: append the lowest root of one
// irreducible component, then drop a node.  Every preset is classified and
// checked in tests, so a wrong recipe cannot survive.

#include "chevlab/rootsys.hpp"

#include <mutex>

namespace chevlab {

struct PresetStep {
    enum Kind { Simple, Lowest, ExtendAt, DropAt } kind;
    int arg = 0;  // Simple: Bourbaki number; ExtendAt/DropAt: current list index
};

struct PresetRecipe {
    std::vector<PresetStep> steps;
};

namespace detail {

inline PresetStep S(int i) { return {PresetStep::Simple, i}; }
inline PresetStep L() { return {PresetStep::Lowest, 0}; }
inline PresetStep X(int i) { return {PresetStep::ExtendAt, i}; }
inline PresetStep D(int i) { return {PresetStep::DropAt, i}; }

inline const std::map<std::string, PresetRecipe>& preset_table() {
    static const std::map<std::string, PresetRecipe> table = {
        {"E7:A7", {{L(), S(1), S(3), S(4), S(5), S(6), S(7)}}},
        {"E6:A5+A1", {{L(), S(1), S(3), S(4), S(5), S(6)}}},
        {"E8:A8", {{S(1), S(3), S(4), S(5), S(6), S(7), S(8), L()}}},
        {"E6:D5", {{S(1), S(2), S(3), S(4), S(5)}}},
        {"E7:E6", {{S(1), S(2), S(3), S(4), S(5), S(6)}}},
        {"E7:A5+A2", {{L(), S(1), S(2), S(4), S(5), S(6), S(7)}}},
        {"E7:2A3+A1", {{L(), S(1), S(2), S(3), S(5), S(6), S(7)}}},
        {"E8:A1+A7", {{L(), S(1), S(2), S(4), S(5), S(6), S(7), S(8)}}},
        {"E8:D5+A3", {{S(1), S(2), S(3), S(4), S(5), S(7), S(8), L()}}},
        {"E8:2A4", {{S(1), S(2), S(3), S(4), S(6), S(7), S(8), L()}}},
        {"E8:4A2", {{S(1), S(2), S(3), S(4), S(5), S(6), S(8), L(), X(0), D(3)}}},
        {"E6:3A2", {{S(1), S(2), S(3), S(4), S(5), S(6), L(), D(3)}}},
        {"E8:E6+A2", {{S(1), S(2), S(3), S(4), S(5), S(6), S(8), L()}}},
        {"E7:D6+A1", {{S(1), S(2), S(3), S(4), S(5), S(6), S(7), L(), D(5)}}},
        {"E8:D8", {{S(1), S(2), S(3), S(4), S(5), S(6), S(7), S(8), L(), D(0)}}},
        {"E8:E7+A1", {{S(1), S(2), S(3), S(4), S(5), S(6), S(7), S(8), L(), D(7)}}},
        {"E7:D4+3A1",
         {{S(1), S(2), S(3), S(4), S(5), S(6), S(7), L(), D(5), X(0), D(0)}}},
        {"E8:D6+2A1",
         {{S(1), S(2), S(3), S(4), S(5), S(6), S(7), S(8), L(), D(7), X(0), D(5)}}},
        {"E8:2D4",
         {{S(1), S(2), S(3), S(4), S(5), S(6), S(7), S(8), L(), D(0), X(0), D(4)}}},
        {"E7:7A1",
         {{S(1), S(2), S(3), S(4), S(5), S(6), S(7), L(), D(5), X(0), D(0), X(0), D(2)}}},
        {"E8:8A1",
         {{S(1), S(2), S(3), S(4), S(5), S(6), S(7), S(8), L(), D(0), X(0), D(4), X(0), D(2),
           X(3), D(4)}}},
        // negative controls
        {"A2:A1", {{S(1)}}},
        {"A3:2A1", {{S(1), S(3)}}},
    };
    return table;
}

}  // namespace detail

/// Cached root-system construction.
inline std::shared_ptr<const RootSystem> get_system(const std::string& label) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it != cache.end()) return it->second;
    auto sys = RootSystem::build(label);
    cache[label] = sys;
    return sys;
}

inline std::vector<std::string> preset_labels() {
    std::vector<std::string> out;
    for (const auto& [k, v] : detail::preset_table()) out.push_back(k);
    // the 2mA1 <= D2m family, instantiated where the acceptance table needs it
    out.push_back("D4:4A1");
    out.push_back("D6:6A1");
    out.push_back("D8:8A1");
    return out;
}

struct ResolvedPreset {
    std::shared_ptr<const RootSystem> system;
    std::vector<int> generators;  // ordered generator root indices
    Subsystem subsystem;
};

/// Resolves "PARENT:NAME" into a subsystem of the parent.
inline ResolvedPreset resolve_preset(const std::string& label) {
    auto colon = label.find(':');
    if (colon == std::string::npos) throw Error("preset must look like E7:A7");
    std::string parent = label.substr(0, colon);
    std::string name = label.substr(colon + 1);
    auto sys = get_system(parent);

    std::vector<int> gens;

    // D_{2m} : 2m A1, the orthogonal pairs e_{2i-1} -+ e_{2i}
    if (parent.size() >= 2 && parent[0] == 'D' && name == std::to_string(sys->rank) + "A1") {
        if (sys->rank % 2 != 0) throw Error("the nA1 preset needs D_{2m}");
        for (int i = 0; i + 1 < sys->rank; i += 2) {
            gens.push_back(sys->index_of(detail::unit_diff(sys->dim, i, i + 1)));
            gens.push_back(sys->index_of(detail::unit_sum(sys->dim, i, i + 1)));
        }
    } else {
        auto it = detail::preset_table().find(label);
        if (it == detail::preset_table().end()) throw Error("unknown preset " + label);
        for (const auto& step : it->second.steps) {
            switch (step.kind) {
                case PresetStep::Simple:
                    gens.push_back(sys->simple[static_cast<std::size_t>(step.arg - 1)]);
                    break;
                case PresetStep::Lowest:
                    gens.push_back(sys->neg[static_cast<std::size_t>(sys->highest)]);
                    break;
                case PresetStep::ExtendAt: {
                    auto comps = pairing_components(*sys, gens);
                    int anchor = gens[static_cast<std::size_t>(step.arg)];
                    const std::vector<int>* comp = nullptr;
                    for (const auto& c : comps)
                        if (std::find(c.begin(), c.end(), anchor) != c.end()) comp = &c;
                    if (!comp) throw Error("extend anchor not found");
                    int theta = component_highest_root(sys, *comp);
                    gens.push_back(sys->neg[static_cast<std::size_t>(theta)]);
                    break;
                }
                case PresetStep::DropAt:
                    gens.erase(gens.begin() + step.arg);
                    break;
            }
        }
    }

    // a preset's generators must form a simple system
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            int p = sys->pairing(gens[i], gens[j]);
            if (p != 0 && p != -1) throw Error("preset generators are not a simple system: " + label);
        }

    ResolvedPreset out;
    out.system = sys;
    out.generators = gens;
    out.subsystem = subsystem_closure(sys, gens);
    return out;
}

}  // namespace chevlab

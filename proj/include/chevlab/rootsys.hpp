#pragma once

// Simply-laced root systems in explicit integer coordinates.
//
// All coordinates are doubled relative to the usual realizations so the
// E-series half-integer vectors become integers; the pairing function
// renormalizes (dot/4).  E7 uses the A7-adapted realization: permutations of
// (1,-1,0^6) together with the vectors with four +1/2 and four -1/2, with
// Bourbaki numbering assigned along the extended diagram so that
// (-delta, eps1, eps3..eps7) is the A7 chain e_i - e_j.  E6 and E8 use the
// Bourbaki R^8 realizations.

#include "chevlab/common.hpp"
#include "chevlab/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace chevlab {

using Coords = std::vector<int>;

class RootSystem {
public:
    std::string label;
    int rank = 0;
    int dim = 0;                     // ambient coordinates
    std::vector<Coords> roots;       // doubled, lexicographically sorted
    std::vector<int> simple;         // Bourbaki-numbered simple root indices
    int highest = -1;                // index of the highest root
    std::vector<int> neg;            // index of -root
    std::vector<std::vector<int>> simple_coords;  // root = sum c_i * simple_i

    int count() const { return static_cast<int>(roots.size()); }

    int index_of(const Coords& c) const {
        auto it = index_.find(c);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const Coords& c) const { return index_.count(c) > 0; }

    // normalized inner product: <a,b> in {-2,...,2} for roots
    int pairing(int a, int b) const { return pair_[static_cast<std::size_t>(a) * roots.size() + b]; }

    // index of a+b, or -1 when the sum is not a root
    int sum(int a, int b) const { return sum_[static_cast<std::size_t>(a) * roots.size() + b]; }

    int reflect(int gamma, int alpha) const {
        return refl_[static_cast<std::size_t>(alpha) * roots.size() + gamma];
    }

    int height(int r) const {
        return std::accumulate(simple_coords[r].begin(), simple_coords[r].end(), 0);
    }

    static std::shared_ptr<const RootSystem> build(const std::string& label);

private:
    std::map<Coords, int> index_;
    std::vector<int8_t> pair_;
    std::vector<int16_t> sum_;
    std::vector<int16_t> refl_;

    void finish(std::vector<Coords> simples);
};

namespace detail {

inline int dot(const Coords& a, const Coords& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Coords add(const Coords& a, const Coords& b) {
    Coords c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline Coords negate(const Coords& a) {
    Coords c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

inline Coords unit_diff(int dim, int i, int j) {  // 2(e_i - e_j)
    Coords c(dim, 0);
    c[i] = 2;
    c[j] = -2;
    return c;
}

inline Coords unit_sum(int dim, int i, int j) {  // 2(e_i + e_j)
    Coords c(dim, 0);
    c[i] = 2;
    c[j] = 2;
    return c;
}

}  // namespace detail

inline void RootSystem::finish(std::vector<Coords> simples) {
    std::sort(roots.begin(), roots.end());
    for (int i = 0; i < count(); ++i) index_[roots[i]] = i;
    for (const auto& s : simples) {
        int idx = index_of(s);
        if (idx < 0) throw Error(label + ": simple root missing from realization");
        simple.push_back(idx);
    }
    rank = static_cast<int>(simples.size());

    std::size_t n = roots.size();
    pair_.assign(n * n, 0);
    sum_.assign(n * n, -1);
    refl_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (detail::dot(roots[i], roots[i]) != 8)
            throw Error(label + ": squared length is not 2");
        for (std::size_t j = 0; j < n; ++j) {
            int d = detail::dot(roots[i], roots[j]);
            if (d % 4 != 0 || d < -8 || d > 8) throw Error(label + ": bad pairing");
            pair_[i * n + j] = static_cast<int8_t>(d / 4);
            int s = index_of(detail::add(roots[i], roots[j]));
            sum_[i * n + j] = static_cast<int16_t>(s);
        }
    }
    neg.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        int m = index_of(detail::negate(roots[i]));
        if (m < 0) throw Error(label + ": not closed under negation");
        neg[i] = m;
    }
    // s_alpha(gamma) = gamma - <gamma,alpha> alpha
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t g = 0; g < n; ++g) {
            Coords c = roots[g];
            int p = pair_[g * n + a];
            for (int k = 0; k < dim; ++k) c[k] -= p * roots[a][k];
            int idx = index_of(c);
            if (idx < 0) throw Error(label + ": reflection left the system");
            refl_[a * n + g] = static_cast<int16_t>(idx);
        }

    // integer coordinates of every root over the simple basis
    IntMat srows;
    for (int s : simple) {
        IntVec r(dim);
        for (int k = 0; k < dim; ++k) r[static_cast<std::size_t>(k)] = roots[s][k];
        srows.push_back(std::move(r));
    }
    simple_coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVec t(dim);
        for (int k = 0; k < dim; ++k) t[static_cast<std::size_t>(k)] = roots[i][k];
        auto x = solve_combination(srows, t);
        if (!x) throw Error(label + ": root outside simple-root span");
        std::vector<int> c;
        for (const auto& q : *x) {
            if (boost::multiprecision::denominator(q) != 1)
                throw Error(label + ": non-integral simple coordinates");
            c.push_back(boost::multiprecision::numerator(q).convert_to<int>());
        }
        simple_coords[i] = std::move(c);
    }

    // the unique dominant root
    for (int i = 0; i < count(); ++i) {
        bool dom = true;
        for (int s : simple)
            if (pairing(i, s) < 0) dom = false;
        if (dom) {
            if (highest >= 0) throw Error(label + ": dominant root not unique");
            highest = i;
        }
    }
    if (highest < 0) throw Error(label + ": no dominant root");
}

inline std::shared_ptr<const RootSystem> RootSystem::build(const std::string& label) {
    auto sys = std::make_shared<RootSystem>();
    sys->label = label;
    if (label.size() < 2) throw Error("bad system label " + label);
    char family = label[0];
    int n = std::stoi(label.substr(1));
    std::vector<Coords> simples;

    if (family == 'A' && n >= 1) {
        sys->dim = n + 1;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (i != j) sys->roots.push_back(detail::unit_diff(sys->dim, i, j));
        for (int i = 0; i < n; ++i) simples.push_back(detail::unit_diff(sys->dim, i, i + 1));
    } else if (family == 'D' && n >= 3) {
        sys->dim = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto d = detail::unit_diff(n, i, j);
                auto s = detail::unit_sum(n, i, j);
                sys->roots.push_back(d);
                sys->roots.push_back(detail::negate(d));
                sys->roots.push_back(s);
                sys->roots.push_back(detail::negate(s));
            }
        for (int i = 0; i + 1 < n; ++i) simples.push_back(detail::unit_diff(n, i, i + 1));
        simples.push_back(detail::unit_sum(n, n - 2, n - 1));
    } else if (label == "E6") {
        sys->dim = 8;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                auto d = detail::unit_diff(8, i, j);
                auto s = detail::unit_sum(8, i, j);
                sys->roots.push_back(d);
                sys->roots.push_back(detail::negate(d));
                sys->roots.push_back(s);
                sys->roots.push_back(detail::negate(s));
            }
        for (int t : {1, -1})
            for (int mask = 0; mask < 32; ++mask) {
                int negs = __builtin_popcount(mask);
                if ((t == 1 && negs % 2 != 0) || (t == -1 && negs % 2 != 1)) continue;
                Coords c(8);
                for (int i = 0; i < 5; ++i) c[i] = (mask >> i) & 1 ? -1 : 1;
                c[5] = -t;
                c[6] = -t;
                c[7] = t;
                sys->roots.push_back(c);
            }
        simples = {
            {1, -1, -1, -1, -1, -1, -1, 1},
            {2, 2, 0, 0, 0, 0, 0, 0},
            {-2, 2, 0, 0, 0, 0, 0, 0},
            {0, -2, 2, 0, 0, 0, 0, 0},
            {0, 0, -2, 2, 0, 0, 0, 0},
            {0, 0, 0, -2, 2, 0, 0, 0},
        };
    } else if (label == "E7") {
        sys->dim = 8;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (i != j) sys->roots.push_back(detail::unit_diff(8, i, j));
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) != 4) continue;
            Coords c(8);
            for (int i = 0; i < 8; ++i) c[i] = (mask >> i) & 1 ? 1 : -1;
            sys->roots.push_back(c);
        }
        simples = {
            {0, -2, 2, 0, 0, 0, 0, 0},       // e3 - e2
            {1, 1, 1, 1, -1, -1, -1, -1},
            {0, 0, -2, 2, 0, 0, 0, 0},       // e4 - e3
            {0, 0, 0, -2, 2, 0, 0, 0},
            {0, 0, 0, 0, -2, 2, 0, 0},
            {0, 0, 0, 0, 0, -2, 2, 0},
            {0, 0, 0, 0, 0, 0, -2, 2},
        };
    } else if (label == "E8") {
        sys->dim = 8;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                auto d = detail::unit_diff(8, i, j);
                auto s = detail::unit_sum(8, i, j);
                sys->roots.push_back(d);
                sys->roots.push_back(detail::negate(d));
                sys->roots.push_back(s);
                sys->roots.push_back(detail::negate(s));
            }
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) % 2 != 0) continue;
            Coords c(8);
            for (int i = 0; i < 8; ++i) c[i] = (mask >> i) & 1 ? -1 : 1;
            sys->roots.push_back(c);
        }
        simples = {
            {1, -1, -1, -1, -1, -1, -1, 1},
            {2, 2, 0, 0, 0, 0, 0, 0},
            {-2, 2, 0, 0, 0, 0, 0, 0},
            {0, -2, 2, 0, 0, 0, 0, 0},
            {0, 0, -2, 2, 0, 0, 0, 0},
            {0, 0, 0, -2, 2, 0, 0, 0},
            {0, 0, 0, 0, -2, 2, 0, 0},
            {0, 0, 0, 0, 0, -2, 2, 0},
        };
    } else {
        throw Error("unsupported root system " + label);
    }

    sys->finish(std::move(simples));
    return sys;
}

// --------------------------------------------------------------- subsystems

class Subsystem {
public:
    std::shared_ptr<const RootSystem> parent;
    std::vector<int> generators;   // root indices, the given simple system
    std::vector<int> members;      // sorted indices of the closure
    std::vector<char> mask;        // membership over parent roots
    bool symmetric = false;
    bool closed = false;

    bool contains(int root) const { return mask[static_cast<std::size_t>(root)] != 0; }
    int count() const { return static_cast<int>(members.size()); }
};

/// Z-span closure: all parent roots in the integer span of the generators.
inline Subsystem subsystem_closure(std::shared_ptr<const RootSystem> sys,
                                   const std::vector<int>& generator_indices) {
    Subsystem sub;
    sub.parent = sys;
    sub.generators = generator_indices;
    IntMat rows;
    for (int g : generator_indices) {
        if (g < 0 || g >= sys->count()) throw GeneratorsNotInSystem("generator index out of range");
        IntVec r(sys->dim);
        for (int k = 0; k < sys->dim; ++k) r[static_cast<std::size_t>(k)] = sys->roots[g][k];
        rows.push_back(std::move(r));
    }
    auto ech = z_echelon(rows);
    sub.mask.assign(sys->roots.size(), 0);
    for (int i = 0; i < sys->count(); ++i) {
        IntVec v(sys->dim);
        for (int k = 0; k < sys->dim; ++k) v[static_cast<std::size_t>(k)] = sys->roots[i][k];
        if (z_member(ech, v)) {
            sub.mask[static_cast<std::size_t>(i)] = 1;
            sub.members.push_back(i);
        }
    }
    sub.symmetric = true;
    sub.closed = true;
    for (int m : sub.members) {
        if (!sub.contains(sys->neg[m])) sub.symmetric = false;
        for (int m2 : sub.members) {
            int s = sys->sum(m, m2);
            if (s >= 0 && !sub.contains(s)) sub.closed = false;
        }
    }
    return sub;
}

inline Subsystem subsystem_from_coords(std::shared_ptr<const RootSystem> sys,
                                       const std::vector<Coords>& gens) {
    std::vector<int> idx;
    for (const auto& c : gens) {
        int i = sys->index_of(c);
        if (i < 0) throw GeneratorsNotInSystem("generator is not a root of " + sys->label);
        idx.push_back(i);
    }
    return subsystem_closure(sys, idx);
}

/// All roots of the parent orthogonal to every root of Delta.
inline std::vector<int> perp(const Subsystem& delta) {
    const RootSystem& sys = *delta.parent;
    std::vector<int> out;
    for (int i = 0; i < sys.count(); ++i) {
        bool ortho = true;
        for (int m : delta.members)
            if (sys.pairing(i, m) != 0) { ortho = false; break; }
        if (ortho) out.push_back(i);
    }
    return out;
}

// ------------------------------------------------------------- Weyl orbits

class OrbitPartition {
public:
    std::vector<int> orbit_of;              // per parent root
    std::vector<std::vector<int>> orbits;   // ascending members, rep = front
    std::vector<int> bfs_parent;            // previous root (-1 at reps)
    std::vector<int> bfs_reflector;         // Delta root used to reach this root

    int representative(int root) const { return orbits[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(root)])].front(); }

    /// Delta-reflection word w with w(rep) = root, as reflector indices
    /// applied left to right.
    std::vector<int> word_from_rep(int root) const {
        std::vector<int> w;
        int cur = root;
        while (bfs_parent[static_cast<std::size_t>(cur)] >= 0) {
            w.push_back(bfs_reflector[static_cast<std::size_t>(cur)]);
            cur = bfs_parent[static_cast<std::size_t>(cur)];
        }
        std::reverse(w.begin(), w.end());
        return w;
    }
};

/// Finest partition of the parent roots stable under every s_alpha, alpha in
/// Delta, by breadth-first closure under reflections in all Delta roots.
inline OrbitPartition weyl_orbits(const Subsystem& delta) {
    const RootSystem& sys = *delta.parent;
    int n = sys.count();
    OrbitPartition out;
    out.orbit_of.assign(n, -1);
    out.bfs_parent.assign(n, -1);
    out.bfs_reflector.assign(n, -1);
    for (int start = 0; start < n; ++start) {
        if (out.orbit_of[static_cast<std::size_t>(start)] >= 0) continue;
        int id = static_cast<int>(out.orbits.size());
        std::vector<int> orbit;
        std::vector<int> queue = {start};
        out.orbit_of[static_cast<std::size_t>(start)] = id;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.erase(queue.begin());
            orbit.push_back(cur);
            for (int a : delta.members) {
                int img = sys.reflect(cur, a);
                if (out.orbit_of[static_cast<std::size_t>(img)] < 0) {
                    out.orbit_of[static_cast<std::size_t>(img)] = id;
                    out.bfs_parent[static_cast<std::size_t>(img)] = cur;
                    out.bfs_reflector[static_cast<std::size_t>(img)] = a;
                    queue.push_back(img);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

// ---------------------------------------------------- component utilities

/// Splits a set of roots into connected components of the pairing graph.
inline std::vector<std::vector<int>> pairing_components(const RootSystem& sys,
                                                        const std::vector<int>& roots) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(roots.size(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> stack = {i};
        seen[i] = 1;
        std::vector<int> comp;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            comp.push_back(roots[cur]);
            for (std::size_t j = 0; j < roots.size(); ++j)
                if (!seen[j] && sys.pairing(roots[cur], roots[j]) != 0) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// The unique dominant root of the irreducible subsystem generated by a
/// connected simple system.
inline int component_highest_root(std::shared_ptr<const RootSystem> sys,
                                  const std::vector<int>& component_gens) {
    Subsystem sub = subsystem_closure(sys, component_gens);
    int found = -1;
    for (int m : sub.members) {
        bool dom = true;
        for (int g : component_gens)
            if (sys->pairing(m, g) < 0) { dom = false; break; }
        if (dom) {
            if (found >= 0) throw Error("component has several dominant roots (not irreducible?)");
            found = m;
        }
    }
    if (found < 0) throw Error("component has no dominant root");
    return found;
}

/// "A7", "D4+3A1", ... : irreducible factors classified by (rank, count).
inline std::string classify_subsystem(const Subsystem& sub) {
    const RootSystem& sys = *sub.parent;
    if (sub.members.empty()) return "empty";
    auto comps = pairing_components(sys, sub.members);
    std::map<std::pair<char, int>, int> counts;
    for (const auto& comp : comps) {
        IntMat rows;
        for (int r : comp) {
            IntVec v(sys.dim);
            for (int k = 0; k < sys.dim; ++k) v[static_cast<std::size_t>(k)] = sys.roots[r][k];
            rows.push_back(std::move(v));
        }
        int rank = static_cast<int>(z_rank(rows));
        int cnt = static_cast<int>(comp.size());
        char letter = 0;
        if (cnt == rank * (rank + 1)) letter = 'A';
        else if (rank >= 3 && cnt == 2 * rank * (rank - 1)) letter = 'D';
        else if (rank == 6 && cnt == 72) letter = 'E';
        else if (rank == 7 && cnt == 126) letter = 'E';
        else if (rank == 8 && cnt == 240) letter = 'E';
        if (letter == 0) throw Error("unrecognized irreducible component");
        counts[{letter, rank}]++;
    }
    // render: descending rank, then letter; multiplicity as prefix
    std::vector<std::pair<std::pair<char, int>, int>> items(counts.begin(), counts.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;  // E before D before A at equal rank
    });
    std::string out;
    for (const auto& [key, mult] : items) {
        if (!out.empty()) out += "+";
        if (mult > 1) out += std::to_string(mult);
        out += key.first;
        out += std::to_string(key.second);
    }
    return out;
}

}  // namespace chevlab

#pragma once

// The Chevalley basis of L(Phi,R): structure constants, the Lie bracket,
// nets of ideals and the subalgebras L(sigma), L'(sigma), L_{a1,a2}.
//
// Structure-constant signs come from a bimultiplicative asymmetry function on
// the root lattice: with the Bourbaki order on simple roots,
// eps(a_i,a_j) = -1 if i = j, or if <a_i,a_j> = -1 and i < j, else +1,
// extended bimultiplicatively.  The raw eps gives the lattice algebra with
// [u_a,u_{-a}] = -h_a; rescaling e_g = s(g) u_g by the positivity sign
// s(g) = sign(height g) restores the Chevalley convention [e_a,e_{-a}] = h_a,
// so N(a,b) = s(a)s(b)s(a+b) eps(a,b) whenever a+b is a root.  Any
// sign-consistent choice gives an isomorphic algebra; tests only rely on
// |N| = 1 support and the bracket identities.

#include "chevlab/linalg.hpp"
#include "chevlab/rings.hpp"
#include "chevlab/rootsys.hpp"

#include <map>
#include <memory>
#include <vector>

namespace chevlab {

struct NetViolation : Error {
    NetViolation(const std::string& msg, std::vector<std::pair<int, int>> bad)
        : Error(msg), pairs(std::move(bad)) {}
    std::vector<std::pair<int, int>> pairs;  // (alpha, beta) with sigma_a sigma_b not in sigma_{a+b}
};

class LieVector;

/// Root system plus a fixed choice of Chevalley structure constants.
class Algebra {
public:
    std::shared_ptr<const RootSystem> sys;

    static std::shared_ptr<const Algebra> build(std::shared_ptr<const RootSystem> sys) {
        auto alg = std::make_shared<Algebra>();
        alg->sys = sys;
        int n = sys->count();
        int r = sys->rank;
        // eps on simple pairs
        std::vector<int> eps(static_cast<std::size_t>(r) * r, 1);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                int cij = sys->pairing(sys->simple[static_cast<std::size_t>(i)],
                                       sys->simple[static_cast<std::size_t>(j)]);
                if (i == j || (cij == -1 && i < j)) eps[static_cast<std::size_t>(i) * r + j] = -1;
            }
        alg->n_.assign(static_cast<std::size_t>(n) * n, 0);
        auto s = [&](int root) { return sys->height(root) > 0 ? 1 : -1; };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int sum = sys->sum(a, b);
                if (sum < 0) continue;
                long parity = 0;
                const auto& ca = sys->simple_coords[static_cast<std::size_t>(a)];
                const auto& cb = sys->simple_coords[static_cast<std::size_t>(b)];
                for (int i = 0; i < r; ++i) {
                    if (ca[static_cast<std::size_t>(i)] == 0) continue;
                    for (int j = 0; j < r; ++j)
                        if (eps[static_cast<std::size_t>(i) * r + j] < 0)
                            parity += static_cast<long>(ca[static_cast<std::size_t>(i)]) *
                                      cb[static_cast<std::size_t>(j)];
                }
                int sign = (parity % 2 == 0 ? 1 : -1) * s(a) * s(b) * s(sum);
                alg->n_[static_cast<std::size_t>(a) * n + b] = static_cast<int8_t>(sign);
            }
        // support and antisymmetry are forced by the construction; verify anyway
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int8_t v = alg->n_[static_cast<std::size_t>(a) * n + b];
                if ((v != 0) != (sys->sum(a, b) >= 0))
                    throw Error("structure constant support rule violated");
                if (sys->sum(a, b) >= 0 && v != -alg->n_[static_cast<std::size_t>(b) * n + a])
                    throw Error("structure constants are not antisymmetric");
            }
        return alg;
    }

    int dim() const { return sys->count() + sys->rank; }

    /// N(a,b): +-1 when a+b is a root, 0 otherwise.
    int N(int a, int b) const { return n_[static_cast<std::size_t>(a) * sys->count() + b]; }

    /// A copy with N(a,b) and N(b,a) negated (mutation testing hook).
    std::shared_ptr<const Algebra> with_flipped_sign(int a, int b) const {
        auto alg = std::make_shared<Algebra>(*this);
        std::size_t n = static_cast<std::size_t>(sys->count());
        alg->n_[static_cast<std::size_t>(a) * n + b] = -alg->n_[static_cast<std::size_t>(a) * n + b];
        alg->n_[static_cast<std::size_t>(b) * n + a] = -alg->n_[static_cast<std::size_t>(b) * n + a];
        return alg;
    }

    LieVector zero(const Ring& ring) const;
    LieVector e(const Ring& ring, int root) const;
    LieVector h(const Ring& ring, int i) const;
    LieVector h_of_root(const Ring& ring, int root) const;  // coroot h_alpha

private:
    std::vector<int8_t> n_;
};

/// Sparse element of L(Phi,R) over the Chevalley basis {e_alpha} u {h_i}.
class LieVector {
public:
    LieVector() = default;
    LieVector(const Algebra* alg, Ring ring) : alg_(alg), ring_(std::move(ring)) {}

    const Algebra* algebra() const { return alg_; }
    const Ring& ring() const { return ring_; }

    const std::map<int, RingElement>& e_terms() const { return e_; }
    const std::map<int, RingElement>& h_terms() const { return h_; }

    RingElement e_coeff(int root) const {
        auto it = e_.find(root);
        return it == e_.end() ? ring_.zero() : it->second;
    }
    RingElement h_coeff(int i) const {
        auto it = h_.find(i);
        return it == h_.end() ? ring_.zero() : it->second;
    }

    bool is_zero() const { return e_.empty() && h_.empty(); }

    void add_e(int root, const RingElement& c) {
        if (c.is_zero()) return;
        auto it = e_.find(root);
        if (it == e_.end()) e_.emplace(root, c);
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) e_.erase(it);
        }
    }
    void add_h(int i, const RingElement& c) {
        if (c.is_zero()) return;
        auto it = h_.find(i);
        if (it == h_.end()) h_.emplace(i, c);
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) h_.erase(it);
        }
    }

    LieVector operator+(const LieVector& o) const {
        check_compatible(o);
        LieVector out = *this;
        for (const auto& [k, c] : o.e_) out.add_e(k, c);
        for (const auto& [k, c] : o.h_) out.add_h(k, c);
        return out;
    }
    LieVector operator-() const {
        LieVector out(alg_, ring_);
        for (const auto& [k, c] : e_) out.e_.emplace(k, -c);
        for (const auto& [k, c] : h_) out.h_.emplace(k, -c);
        return out;
    }
    LieVector operator-(const LieVector& o) const { return *this + (-o); }

    LieVector scaled(const RingElement& s) const {
        LieVector out(alg_, ring_);
        for (const auto& [k, c] : e_) out.add_e(k, s * c);
        for (const auto& [k, c] : h_) out.add_h(k, s * c);
        return out;
    }

    bool operator==(const LieVector& o) const {
        return alg_ == o.alg_ && ring_ == o.ring_ && e_ == o.e_ && h_ == o.h_;
    }
    bool operator!=(const LieVector& o) const { return !(*this == o); }

    /// Entries as a dense coordinate vector (e coefficients then h).
    std::vector<RingElement> dense() const {
        std::vector<RingElement> v(static_cast<std::size_t>(alg_->dim()), ring_.zero());
        for (const auto& [k, c] : e_) v[static_cast<std::size_t>(k)] = c;
        for (const auto& [k, c] : h_) v[static_cast<std::size_t>(alg_->sys->count() + k)] = c;
        return v;
    }

    /// Applies a ring map entrywise (used by reductions and embeddings).
    template <class F>
    LieVector map_entries(const Algebra* alg, const Ring& target, F&& f) const {
        LieVector out(alg, target);
        for (const auto& [k, c] : e_) out.add_e(k, f(c));
        for (const auto& [k, c] : h_) out.add_h(k, f(c));
        return out;
    }

private:
    void check_compatible(const LieVector& o) const {
        if (alg_ != o.alg_) throw Error("LieVector algebras differ");
        if (ring_ != o.ring_) throw RingMismatch("LieVector rings differ");
    }

    const Algebra* alg_ = nullptr;
    Ring ring_;
    std::map<int, RingElement> e_;
    std::map<int, RingElement> h_;
};

inline LieVector Algebra::zero(const Ring& ring) const { return LieVector(this, ring); }

inline LieVector Algebra::e(const Ring& ring, int root) const {
    LieVector v(this, ring);
    v.add_e(root, ring.one());
    return v;
}

inline LieVector Algebra::h(const Ring& ring, int i) const {
    LieVector v(this, ring);
    v.add_h(i, ring.one());
    return v;
}

inline LieVector Algebra::h_of_root(const Ring& ring, int root) const {
    LieVector v(this, ring);
    const auto& c = sys->simple_coords[static_cast<std::size_t>(root)];
    for (int i = 0; i < sys->rank; ++i)
        v.add_h(i, ring.from_int(c[static_cast<std::size_t>(i)]));
    return v;
}

/// Lie bracket, bilinear over the basis relations:
/// [e_a,e_b] = N(a,b) e_{a+b};  [e_a,e_{-a}] = h_a;  [h_i,e_b] = <b,a_i> e_b.
inline LieVector bracket(const LieVector& u, const LieVector& v) {
    const Algebra* alg = u.algebra();
    if (alg != v.algebra()) throw Error("bracket across algebras");
    if (u.ring() != v.ring()) throw RingMismatch("bracket across rings");
    const RootSystem& sys = *alg->sys;
    LieVector out(alg, u.ring());
    for (const auto& [a, ca] : u.e_terms()) {
        for (const auto& [b, cb] : v.e_terms()) {
            RingElement c = ca * cb;
            if (c.is_zero()) continue;
            if (sys.neg[static_cast<std::size_t>(a)] == b) {
                const auto& coords = sys.simple_coords[static_cast<std::size_t>(a)];
                for (int i = 0; i < sys.rank; ++i)
                    out.add_h(i, u.ring().from_int(coords[static_cast<std::size_t>(i)]) * c);
            } else {
                int s = sys.sum(a, b);
                if (s >= 0) out.add_e(s, u.ring().from_int(alg->N(a, b)) * c);
            }
        }
        for (const auto& [i, ci] : v.h_terms()) {
            // [e_a, h_i] = -<a, a_i> e_a
            int p = sys.pairing(a, sys.simple[static_cast<std::size_t>(i)]);
            out.add_e(a, u.ring().from_int(-p) * (ca * ci));
        }
    }
    for (const auto& [i, ci] : u.h_terms())
        for (const auto& [b, cb] : v.e_terms()) {
            int p = sys.pairing(b, sys.simple[static_cast<std::size_t>(i)]);
            out.add_e(b, u.ring().from_int(p) * (ci * cb));
        }
    return out;
}

/// [[u,v],w] + [[v,w],u] + [[w,u],v] == 0
inline bool jacobi_holds(const LieVector& u, const LieVector& v, const LieVector& w) {
    LieVector s = bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v);
    return s.is_zero();
}

// -------------------------------------------------------------------- nets

/// Assignment alpha -> sigma_alpha of ideals, constant on W(Delta)-orbits,
/// with sigma = R on Delta and sigma_a sigma_b inside sigma_{a+b}.
class Net {
public:
    std::shared_ptr<const RootSystem> sys;
    Subsystem delta;
    OrbitPartition orbits;
    Ring ring;
    std::vector<Ideal> per_orbit;

    const Ideal& sigma(int root) const {
        return per_orbit[static_cast<std::size_t>(orbits.orbit_of[static_cast<std::size_t>(root)])];
    }
};

/// Validates the closure conditions; returns every violated pair.
inline std::vector<std::pair<int, int>> net_violations(const Net& net) {
    std::vector<std::pair<int, int>> bad;
    const RootSystem& sys = *net.sys;
    for (int a = 0; a < sys.count(); ++a)
        for (int b = 0; b < sys.count(); ++b) {
            int s = sys.sum(a, b);
            if (s < 0) continue;
            if (!ideal_subset(ideal_product(net.sigma(a), net.sigma(b)), net.sigma(s)))
                bad.emplace_back(a, b);
        }
    return bad;
}

/// Builds a net from per-orbit ideals for the non-Delta orbits.
inline Net net_from_orbit_ideals(const Subsystem& delta, const Ring& ring,
                                 const std::map<int, Ideal>& non_delta_assignment) {
    if (!perp(delta).empty())
        throw PerpNonEmpty("Delta-perp is nonempty in " + delta.parent->label);
    Net net;
    net.sys = delta.parent;
    net.delta = delta;
    net.orbits = weyl_orbits(delta);
    net.ring = ring;
    net.per_orbit.resize(net.orbits.orbits.size());
    for (std::size_t k = 0; k < net.orbits.orbits.size(); ++k) {
        int rep = net.orbits.orbits[k].front();
        if (delta.contains(rep)) {
            net.per_orbit[k] = Ideal::unit(ring);
        } else {
            auto it = non_delta_assignment.find(static_cast<int>(k));
            if (it == non_delta_assignment.end())
                throw Error("net assignment misses a non-Delta orbit");
            if (it->second.ring() != ring) throw RingMismatch("net ideal from another ring");
            net.per_orbit[k] = it->second;
        }
    }
    auto bad = net_violations(net);
    if (!bad.empty())
        throw NetViolation("net closure condition fails on " + std::to_string(bad.size()) + " pairs",
                           bad);
    // orbit constancy is structural; re-verify stability all the same
    for (int a : delta.members)
        for (int g = 0; g < net.sys->count(); ++g)
            if (net.orbits.orbit_of[static_cast<std::size_t>(net.sys->reflect(g, a))] !=
                net.orbits.orbit_of[static_cast<std::size_t>(g)])
                throw Error("orbit partition not reflection stable");
    return net;
}

/// Same ideal on every non-Delta orbit.
inline Net uniform_net(const Subsystem& delta, const Ring& ring, const Ideal& ideal) {
    auto orbits = weyl_orbits(delta);
    std::map<int, Ideal> assign;
    for (std::size_t k = 0; k < orbits.orbits.size(); ++k)
        if (!delta.contains(orbits.orbits[k].front())) assign.emplace(static_cast<int>(k), ideal);
    return net_from_orbit_ideals(delta, ring, assign);
}

/// rho_I applied to a whole net.
inline Net reduce_net(const Net& net, const Ideal& I) {
    Net out;
    out.sys = net.sys;
    out.delta = net.delta;
    out.orbits = net.orbits;
    out.ring = quotient_ring(net.ring, I);
    for (const auto& ideal : net.per_orbit) out.per_orbit.push_back(reduce_ideal(ideal, I));
    return out;
}

// ------------------------------------------------------------- subalgebras

struct SubalgebraDescriptor {
    enum Kind { LSigma, LPrimeSigma, LParabolic } kind;
    const Net* net = nullptr;  // LSigma, LPrimeSigma
    int alpha1 = -1, alpha2 = -1;  // LParabolic
};

inline int pair_functional(const RootSystem& sys, int a1, int a2, int gamma) {
    return sys.pairing(gamma, a1) + sys.pairing(gamma, a2);
}

/// v in L(sigma): every e-coefficient in its orbit ideal (toral part free).
inline bool in_L_sigma(const LieVector& v, const Net& net) {
    for (const auto& [root, c] : v.e_terms())
        if (!ideal_contains(net.sigma(root), c)) return false;
    return true;
}

/// v in L_{a1,a2}: no e-coefficient with negative functional value.
inline bool in_L_parabolic(const LieVector& v, int a1, int a2) {
    const RootSystem& sys = *v.algebra()->sys;
    if (sys.pairing(a1, a2) != 0) throw NotOrthogonal("parabolic pair must be orthogonal");
    for (const auto& [root, c] : v.e_terms())
        if (pair_functional(sys, a1, a2, root) < 0) return false;
    return true;
}

/// The module generators xi e_alpha of L'(sigma), xi over the ideal generators.
inline std::vector<LieVector> lprime_seed(const Algebra& alg, const Net& net, const Ring& ring) {
    std::vector<LieVector> out;
    for (int root = 0; root < alg.sys->count(); ++root)
        for (const auto& g : net.sigma(root).generators())
            out.push_back(alg.e(ring, root).scaled(g));
    return out;
}

/// L'(sigma) as an R-module over Z/n: the smallest module containing the
/// seed vectors and closed under bracketing with them.
class LPrimeModule {
public:
    LPrimeModule(const Algebra& alg, const Net& net) : alg_(&alg), ring_(net.ring) {
        if (ring_.kind() != RingKind::Modular)
            throw UnsupportedRing("L'(sigma) module closure needs Z/n coefficients");
        n_ = ring_.modulus();
        auto seed = lprime_seed(alg, net, ring_);
        std::vector<LieVector> frontier;
        for (const auto& v : seed)
            if (insert(v)) frontier.push_back(v);
        while (!frontier.empty()) {
            LieVector w = frontier.back();
            frontier.pop_back();
            for (const auto& b : seed) {
                LieVector c = bracket(b, w);
                if (insert(c)) frontier.push_back(c);
            }
        }
        gens_ = generators_;
    }

    bool contains(const LieVector& v) const { return howell_member(how_, n_, to_vec(v)); }
    const std::vector<LieVector>& module_generators() const { return gens_; }

private:
    IntVec to_vec(const LieVector& v) const {
        auto dense = v.dense();
        IntVec out(dense.size());
        for (std::size_t i = 0; i < dense.size(); ++i) out[i] = dense[i].as_int();
        return out;
    }

    // add to the module if new; returns true when the span grew
    bool insert(const LieVector& v) {
        if (v.is_zero()) return false;
        IntVec row = to_vec(v);
        if (!rows_.empty() && howell_member(how_, n_, row)) return false;
        rows_.push_back(row);
        how_ = howell_form(rows_, n_);
        generators_.push_back(v);
        return true;
    }

    const Algebra* alg_;
    Ring ring_;
    Int n_;
    IntMat rows_;
    IntMat how_;
    std::vector<LieVector> generators_;
    std::vector<LieVector> gens_;
};

inline bool in_subalgebra(const LieVector& v, const SubalgebraDescriptor& d) {
    switch (d.kind) {
        case SubalgebraDescriptor::LSigma: return in_L_sigma(v, *d.net);
        case SubalgebraDescriptor::LParabolic: return in_L_parabolic(v, d.alpha1, d.alpha2);
        case SubalgebraDescriptor::LPrimeSigma: {
            LPrimeModule mod(*v.algebra(), *d.net);
            return mod.contains(v);
        }
    }
    return false;
}

/// Both parts of the L' lemma, checked on module generators and on scaled
/// basis vectors over a finite coefficient ring.
inline bool lemma_Lprime_check(const Algebra& alg, const Net& net) {
    const Ring& R = net.ring;
    LPrimeModule lprime(alg, net);

    // part 1: [L(sigma), L(sigma)] <= L'(sigma) on module generators
    std::vector<LieVector> lsigma_gens;
    for (int i = 0; i < alg.sys->rank; ++i) lsigma_gens.push_back(alg.h(R, i));
    for (const auto& v : lprime_seed(alg, net, R)) lsigma_gens.push_back(v);
    for (const auto& u : lsigma_gens)
        for (const auto& v : lsigma_gens)
            if (!lprime.contains(bracket(u, v))) return false;

    // part 2: a scaled basis vector bracketing L'(sigma) into L(sigma)
    // already lies in L(sigma)
    for (int root = 0; root < alg.sys->count(); ++root)
        for (const auto& xi : enumerate_elements(R)) {
            LieVector v = alg.e(R, root).scaled(xi);
            bool condition = true;
            for (const auto& m : lprime.module_generators())
                if (!in_L_sigma(bracket(v, m), net)) { condition = false; break; }
            if (condition && !in_L_sigma(v, net)) return false;
        }
    return true;
}

}  // namespace chevlab

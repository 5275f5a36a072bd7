#pragma once

// Adjoint-representation group elements.  A root element x_alpha(xi) acts on
// L(Phi,R) by the truncated exponential of ad(xi e_alpha); the quadratic term
// is computed over Z by exact halving and then specialized to the working
// ring, so the matrices are correct in every characteristic.  Elements carry
// their generator word, which supplies the inverse (reversed word, negated
// parameters) without any matrix inversion.

#include "chevlab/chevalley.hpp"

#include <optional>

namespace chevlab {

struct WordLetter {
    int root;
    RingElement xi;
};

class RMatrix {
public:
    RMatrix() = default;
    RMatrix(Ring ring, int n) : ring_(std::move(ring)), n_(n) {
        a_.assign(static_cast<std::size_t>(n) * n, ring_.zero());
    }

    static RMatrix identity(const Ring& ring, int n) {
        RMatrix m(ring, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
        return m;
    }

    const Ring& ring() const { return ring_; }
    int size() const { return n_; }

    RingElement& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const RingElement& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    RMatrix operator*(const RMatrix& o) const {
        if (ring_ != o.ring_) throw RingMismatch("matrix product across rings");
        RMatrix out(ring_, n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const RingElement& x = at(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < n_; ++j) {
                    const RingElement& y = o.at(k, j);
                    if (y.is_zero()) continue;
                    out.at(i, j) = out.at(i, j) + x * y;
                }
            }
        return out;
    }

    bool operator==(const RMatrix& o) const { return ring_ == o.ring_ && a_ == o.a_; }
    bool operator!=(const RMatrix& o) const { return !(*this == o); }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (i == j && !at(i, j).is_one()) return false;
                if (i != j && !at(i, j).is_zero()) return false;
            }
        return true;
    }

    template <class F>
    RMatrix map_entries(const Ring& target, F&& f) const {
        RMatrix out(target, n_);
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f(a_[k]);
        return out;
    }

private:
    Ring ring_;
    int n_ = 0;
    std::vector<RingElement> a_;
};

class GroupElement {
public:
    GroupElement() = default;
    GroupElement(const Algebra* alg, Ring ring, RMatrix m, std::vector<WordLetter> word)
        : alg_(alg), ring_(std::move(ring)), m_(std::move(m)), word_(std::move(word)) {}

    const Algebra* algebra() const { return alg_; }
    const Ring& ring() const { return ring_; }
    const RMatrix& matrix() const { return m_; }
    const std::vector<WordLetter>& word() const { return word_; }

    bool operator==(const GroupElement& o) const { return alg_ == o.alg_ && m_ == o.m_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool is_identity() const { return m_.is_identity(); }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    GroupElement conjugated_by(const GroupElement& h) const;  // h g h^-1

private:
    const Algebra* alg_ = nullptr;
    Ring ring_;
    RMatrix m_;
    std::vector<WordLetter> word_;
};

/// Column of x_alpha(xi) at basis vector b:
/// b + xi [e_a, b] + xi^2 (1/2)[e_a,[e_a,b]], halving done exactly over Z.
inline GroupElement root_element(const Algebra& alg, const Ring& ring, int alpha,
                                 const RingElement& xi) {
    if (xi.ring() != ring) throw RingMismatch("root_element parameter ring");
    Ring z = Ring::integers();
    int n = alg.sys->count();
    int dim = alg.dim();
    RMatrix m(ring, dim);
    RingElement xi2 = xi * xi;
    LieVector ea = alg.e(z, alpha);
    for (int j = 0; j < dim; ++j) {
        LieVector b = j < n ? alg.e(z, j) : alg.h(z, j - n);
        LieVector w1 = bracket(ea, b);
        LieVector w2 = bracket(ea, w1);
        m.at(j, j) = ring.one();
        auto add_scaled = [&](const LieVector& w, const RingElement& scale, bool halve) {
            for (const auto& [root, c] : w.e_terms()) {
                Int v = c.as_int();
                if (halve) {
                    if (v % 2 != 0) throw Error("ad^2 coefficient not even");
                    v /= 2;
                }
                m.at(root, j) = m.at(root, j) + ring.from_int(v) * scale;
            }
            for (const auto& [i, c] : w.h_terms()) {
                Int v = c.as_int();
                if (halve) {
                    if (v % 2 != 0) throw Error("ad^2 coefficient not even");
                    v /= 2;
                }
                m.at(n + i, j) = m.at(n + i, j) + ring.from_int(v) * scale;
            }
        };
        add_scaled(w1, xi, false);
        add_scaled(w2, xi2, true);
        if (!bracket(ea, w2).is_zero()) throw Error("ad(e_alpha)^3 did not vanish");
    }
    return GroupElement(&alg, ring, std::move(m), {{alpha, xi}});
}

inline GroupElement identity_element(const Algebra& alg, const Ring& ring) {
    return GroupElement(&alg, ring, RMatrix::identity(ring, alg.dim()), {});
}

inline GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (alg_ != o.alg_) throw Error("product across algebras");
    std::vector<WordLetter> w = word_;
    w.insert(w.end(), o.word_.begin(), o.word_.end());
    return GroupElement(alg_, ring_, m_ * o.m_, std::move(w));
}

inline GroupElement GroupElement::inverse() const {
    GroupElement out = identity_element(*alg_, ring_);
    for (auto it = word_.rbegin(); it != word_.rend(); ++it)
        out = out * root_element(*alg_, ring_, it->root, -it->xi);
    return out;
}

inline GroupElement GroupElement::conjugated_by(const GroupElement& h) const {
    return h * *this * h.inverse();
}

/// Product of root elements for a word.
inline GroupElement word_element(const Algebra& alg, const Ring& ring,
                                 const std::vector<WordLetter>& word) {
    GroupElement g = identity_element(alg, ring);
    for (const auto& l : word) g = g * root_element(alg, ring, l.root, l.xi);
    return g;
}

/// Adjoint action on a Lie vector.
inline LieVector act(const GroupElement& g, const LieVector& v) {
    if (g.algebra() != v.algebra()) throw Error("act across algebras");
    if (g.ring() != v.ring()) throw RingMismatch("act across rings");
    const Algebra& alg = *g.algebra();
    int n = alg.sys->count();
    int dim = alg.dim();
    std::vector<RingElement> out(static_cast<std::size_t>(dim), g.ring().zero());
    auto accumulate = [&](int j, const RingElement& c) {
        for (int i = 0; i < dim; ++i) {
            const RingElement& m = g.matrix().at(i, j);
            if (!m.is_zero()) out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)] + m * c;
        }
    };
    for (const auto& [root, c] : v.e_terms()) accumulate(root, c);
    for (const auto& [i, c] : v.h_terms()) accumulate(n + i, c);
    LieVector res(&alg, g.ring());
    for (int i = 0; i < n; ++i) res.add_e(i, out[static_cast<std::size_t>(i)]);
    for (int i = 0; i < alg.sys->rank; ++i) res.add_h(i, out[static_cast<std::size_t>(n + i)]);
    return res;
}

/// w_alpha = x_alpha(1) x_{-alpha}(-1) x_alpha(1); conjugation by it maps
/// X_beta onto X_{s_alpha(beta)}.
inline GroupElement weyl_lift(const Algebra& alg, const Ring& ring, int alpha) {
    int na = alg.sys->neg[static_cast<std::size_t>(alpha)];
    return root_element(alg, ring, alpha, ring.one()) *
           root_element(alg, ring, na, -ring.one()) *
           root_element(alg, ring, alpha, ring.one());
}

/// Entrywise rho_I; the reduction homomorphism on the adjoint group.
inline GroupElement reduce_element(const GroupElement& g, const Ideal& I) {
    Ring q = quotient_ring(g.ring(), I);
    RMatrix m = g.matrix().map_entries(q, [&](const RingElement& e) { return reduce_mod(e, I); });
    std::vector<WordLetter> w;
    for (const auto& l : g.word()) w.push_back({l.root, reduce_mod(l.xi, I)});
    return GroupElement(g.algebra(), q, std::move(m), std::move(w));
}

/// g in G(Phi,R,I): the principal congruence subgroup test.
inline bool in_congruence_subgroup(const GroupElement& g, const Ideal& I) {
    return reduce_element(g, I).is_identity();
}

/// g in S(sigma): g and g^-1 move every Lie-generator xi e_alpha of
/// L'(sigma) into L(sigma).  Sufficient because the action is an algebra
/// automorphism and L(sigma) is a subalgebra.
inline bool in_S_sigma(const GroupElement& g, const Net& net) {
    const Algebra& alg = *g.algebra();
    if (g.ring() != net.ring) throw RingMismatch("in_S_sigma ring mismatch");
    GroupElement gi = g.inverse();
    for (int root = 0; root < alg.sys->count(); ++root)
        for (const auto& xi : net.sigma(root).generators()) {
            LieVector v = alg.e(g.ring(), root).scaled(xi);
            if (!in_L_sigma(act(g, v), net)) return false;
            if (!in_L_sigma(act(gi, v), net)) return false;
        }
    return true;
}

/// g in P_{a1,a2} = Stab(L_{a1,a2}), tested on module generators.
inline bool in_parabolic(const GroupElement& g, int a1, int a2) {
    const Algebra& alg = *g.algebra();
    const RootSystem& sys = *alg.sys;
    if (sys.pairing(a1, a2) != 0) throw NotOrthogonal("parabolic pair must be orthogonal");
    GroupElement gi = g.inverse();
    for (int root = 0; root < sys.count(); ++root) {
        if (pair_functional(sys, a1, a2, root) < 0) continue;
        LieVector v = alg.e(g.ring(), root);
        if (!in_L_parabolic(act(g, v), a1, a2)) return false;
        if (!in_L_parabolic(act(gi, v), a1, a2)) return false;
    }
    for (int i = 0; i < sys.rank; ++i) {
        LieVector v = alg.h(g.ring(), i);
        if (!in_L_parabolic(act(g, v), a1, a2)) return false;
        if (!in_L_parabolic(act(gi, v), a1, a2)) return false;
    }
    return true;
}

struct LevelOrbitReport {
    int orbit = 0;
    int representative = 0;
    bool in_delta = false;
    std::vector<RingElement> level_elements;  // { xi : x_rep(xi) in S(sigma) }
    bool matches_sigma = false;
};

struct LevelReport {
    std::vector<LevelOrbitReport> orbits;
    bool exact = false;
    bool equals_net = false;
};

/// lev(S(sigma)) by exhaustive membership over a finite ring, orbit-wise.
inline LevelReport level_of_S(const Algebra& alg, const Net& net) {
    if (!net.ring.is_finite()) throw UnsupportedRing("level computation needs a finite ring");
    LevelReport report;
    report.exact = true;
    report.equals_net = true;
    auto elems = enumerate_elements(net.ring);
    for (std::size_t k = 0; k < net.orbits.orbits.size(); ++k) {
        LevelOrbitReport r;
        r.orbit = static_cast<int>(k);
        r.representative = net.orbits.orbits[k].front();
        r.in_delta = net.delta.contains(r.representative);
        bool match = true;
        for (const auto& xi : elems) {
            bool member = in_S_sigma(root_element(alg, net.ring, r.representative, xi), net);
            if (member) r.level_elements.push_back(xi);
            if (member != ideal_contains(net.sigma(r.representative), xi)) match = false;
        }
        r.matches_sigma = match;
        if (!match) report.equals_net = false;
        report.orbits.push_back(std::move(r));
    }
    return report;
}

struct ReductionWitness {
    GroupElement g2;       // [g1, x_{a1}(1)], over R
    GroupElement reduced;  // rho_I(g2)
    RingElement xi_bar;    // parameter of rho_I(h) = x_gamma(xi_bar)
    int sign = 0;          // rho_I(g2) = x_{gamma+a2}(sign * xi_bar)
};

/// The reduction-step witness: from h with rho_I(h) = x_gamma(xi), and an
/// orthogonal pair with <gamma,a1> = 1, <gamma,a2> = -1, builds
///   g  = h x_{-a1}(1) h^-1,       l = h . e_{-a1},
///   g1 = g (x_{a1}(l^{-a2}) x_{a2}(-l^{-a1})) g^-1,
///   g2 = [g1, x_{a1}(1)]
/// and checks rho_I(g2) = x_{gamma+a2}(+-xi).
inline ReductionWitness reduction_witness(const Algebra& alg, const GroupElement& h, int gamma,
                                          int a1, int a2, const Ideal& I) {
    const RootSystem& sys = *alg.sys;
    if (sys.pairing(a1, a2) != 0) throw PairNotAdmissible("pair not orthogonal");
    if (sys.pairing(gamma, a1) != 1 || sys.pairing(gamma, a2) != -1)
        throw PairNotAdmissible("need <gamma,a1> = 1 and <gamma,a2> = -1");
    const Ring& R = h.ring();
    Ring q = quotient_ring(R, I);

    // recover xi from rho_I(h) = x_gamma(xi)
    GroupElement hbar = reduce_element(h, I);
    std::optional<RingElement> xi_bar;
    for (const auto& xi : enumerate_elements(q))
        if (root_element(alg, q, gamma, xi) == hbar) { xi_bar = xi; break; }
    if (!xi_bar) throw PreconditionViolation("rho_I(h) is not a gamma root element");

    int na1 = sys.neg[static_cast<std::size_t>(a1)];
    GroupElement g = root_element(alg, R, na1, R.one()).conjugated_by(h);
    LieVector l = act(h, alg.e(R, na1));
    RingElement la2 = l.e_coeff(sys.neg[static_cast<std::size_t>(a2)]);
    RingElement la1 = l.e_coeff(na1);
    GroupElement inner = root_element(alg, R, a1, la2) * root_element(alg, R, a2, -la1);
    GroupElement g1 = inner.conjugated_by(g);
    GroupElement x1 = root_element(alg, R, a1, R.one());
    GroupElement g2 = g1 * x1 * g1.inverse() * x1.inverse();

    ReductionWitness out{g2, reduce_element(g2, I), *xi_bar, 0};
    int target = sys.sum(gamma, a2);
    if (target < 0) throw Error("gamma + a2 is not a root");
    if (out.reduced == root_element(alg, q, target, *xi_bar)) out.sign = 1;
    else if (out.reduced == root_element(alg, q, target, -*xi_bar)) out.sign = -1;
    else throw ReductionMismatch("rho_I(g2) is not x_{gamma+a2}(+-xi)");
    return out;
}

/// Determinant after lifting to Z; meaningful for Z and Z/n matrices.
inline Int lifted_determinant(const RMatrix& m) {
    IntMat a(static_cast<std::size_t>(m.size()), IntVec(static_cast<std::size_t>(m.size())));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j).as_int();
    return bareiss_det(std::move(a));
}

}  // namespace chevlab

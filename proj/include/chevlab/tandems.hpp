#pragma once

// Tandems (h x_a(xi) h^-1, h . xi e_a), bitandems with parameter, the special
// bitandem construction, the U'-commutator reduction, and the field-case
// extraction procedure.  All identities are checked as exact matrix/vector
// equalities; the symbolic ones run over polynomial rings in a fresh
// parameter t.

#include "chevlab/group.hpp"
#include "chevlab/starcond.hpp"

#include <optional>

namespace chevlab {

struct Tandem {
    GroupElement g;
    LieVector l;
    // provenance
    GroupElement h;
    int alpha = -1;
    RingElement xi;
};

inline Tandem make_tandem(const Algebra& alg, const GroupElement& h, int alpha,
                          const RingElement& xi) {
    GroupElement g = root_element(alg, h.ring(), alpha, xi).conjugated_by(h);
    LieVector l = act(h, alg.e(h.ring(), alpha).scaled(xi));
    return Tandem{std::move(g), std::move(l), h, alpha, xi};
}

/// g . e_beta = e_beta + [l, e_beta] - l^{-beta} l, exactly.
inline bool verify_tandem_action(const Tandem& t, int beta) {
    const Algebra& alg = *t.g.algebra();
    const Ring& R = t.g.ring();
    LieVector eb = alg.e(R, beta);
    LieVector lhs = act(t.g, eb);
    LieVector rhs = eb + bracket(t.l, eb) -
                    t.l.scaled(t.l.e_coeff(alg.sys->neg[static_cast<std::size_t>(beta)]));
    return lhs == rhs;
}

/// x_a(xi) v = v + xi [e_a, v] - v^{-a} xi^2 e_a as a polynomial identity
/// over Z in xi and one variable per coordinate of v, for every root a.
inline bool verify_formula_sharp(const Algebra& alg) {
    int dim = alg.dim();
    std::vector<std::string> vars = {"x"};
    for (int i = 0; i < dim; ++i) vars.push_back("c" + std::to_string(i));
    Ring P = Ring::poly_over(Ring::integers(), vars);
    RingElement x = P.var("x");
    LieVector v(&alg, P);
    int n = alg.sys->count();
    for (int i = 0; i < n; ++i) v.add_e(i, P.var("c" + std::to_string(i)));
    for (int i = n; i < dim; ++i) v.add_h(i - n, P.var("c" + std::to_string(i)));
    for (int a = 0; a < n; ++a) {
        GroupElement xa = root_element(alg, P, a, x);
        LieVector lhs = act(xa, v);
        LieVector rhs = v + bracket(alg.e(P, a).scaled(x), v) -
                        alg.e(P, a).scaled(x * x * v.e_coeff(alg.sys->neg[static_cast<std::size_t>(a)]));
        if (lhs != rhs) return false;
    }
    return true;
}

// ----------------------------------------------------------------- bitandems

/// The family (g(t), l(t)) = (h x_{a1}(t xi) x_{a2}(t zeta) h^-1, h.(t xi
/// e_{a1} + t zeta e_{a2})); carries provenance only, components on demand.
struct BitandemFamily {
    GroupElement h;
    int a1 = -1, a2 = -1;
    RingElement xi, zeta;

    BitandemFamily(GroupElement h_, int a1_, int a2_, RingElement xi_, RingElement zeta_)
        : h(std::move(h_)), a1(a1_), a2(a2_), xi(std::move(xi_)), zeta(std::move(zeta_)) {
        const RootSystem& sys = *h.algebra()->sys;
        if (sys.pairing(a1, a2) != 0) throw NotOrthogonal("bitandem pair must be orthogonal");
    }

    std::pair<GroupElement, LieVector> at(const RingElement& t) const {
        const Algebra& alg = *h.algebra();
        const Ring& R = h.ring();
        GroupElement inner =
            root_element(alg, R, a1, t * xi) * root_element(alg, R, a2, t * zeta);
        GroupElement g = inner.conjugated_by(h);
        LieVector l = act(h, alg.e(R, a1).scaled(t * xi) + alg.e(R, a2).scaled(t * zeta));
        return {std::move(g), std::move(l)};
    }

    GroupElement group_at(const RingElement& t) const { return at(t).first; }
    LieVector lie_at(const RingElement& t) const { return at(t).second; }
};

struct QuadraticDecomposition {
    LieVector linear;     // [l, v]
    LieVector quadratic;  // w with g(t) v = v + t [l,v] + t^2 w
};

/// Extracts the t- and t^2-parts of g(t) v over R[t] and checks the
/// decomposition identities, including 2w = [l,[l,v]].
inline QuadraticDecomposition bitandem_quadratic_decomposition(const BitandemFamily& b,
                                                               const LieVector& v) {
    const Algebra& alg = *b.h.algebra();
    const Ring& R = b.h.ring();
    if (v.ring() != R) throw RingMismatch("decomposition input ring");
    Ring P = Ring::poly_over(R, {"t"});
    RingElement t = P.var("t");

    // lift h into R[t] through its word, then form g(t) symbolically
    std::vector<WordLetter> hw;
    for (const auto& l : b.h.word()) hw.push_back({l.root, embed(l.xi, P)});
    GroupElement hP = word_element(alg, P, hw);
    GroupElement inner = root_element(alg, P, b.a1, t * embed(b.xi, P)) *
                         root_element(alg, P, b.a2, t * embed(b.zeta, P));
    GroupElement gt = inner.conjugated_by(hP);

    LieVector vP = v.map_entries(&alg, P, [&](const RingElement& c) { return embed(c, P); });
    LieVector image = act(gt, vP);

    auto coeff_part = [&](std::uint32_t k) {
        return image.map_entries(&alg, R, [&](const RingElement& c) { return poly_coeff(c, k); });
    };
    for (const auto& [root, c] : image.e_terms())
        if (poly_degree(c) > 2) throw DecompositionFailure("t^3 term in the action (e part)");
    for (const auto& [i, c] : image.h_terms())
        if (poly_degree(c) > 2) throw DecompositionFailure("t^3 term in the action (h part)");

    if (coeff_part(0) != v) throw DecompositionFailure("constant term is not v");
    QuadraticDecomposition out{coeff_part(1), coeff_part(2)};

    LieVector l1 = b.lie_at(R.one());
    if (out.linear != bracket(l1, v))
        throw DecompositionFailure("linear term differs from [l, v]");
    if (out.quadratic.scaled(R.from_int(2)) != bracket(l1, bracket(l1, v)))
        throw DecompositionFailure("2w differs from [l,[l,v]]");
    return out;
}

/// The special bitandem of a tandem with respect to an orthogonal pair:
/// parameters read off the tandem's Lie component.
inline BitandemFamily special_bitandem(const Tandem& t, int a1, int a2) {
    const RootSystem& sys = *t.g.algebra()->sys;
    RingElement la2 = t.l.e_coeff(sys.neg[static_cast<std::size_t>(a2)]);
    RingElement la1 = t.l.e_coeff(sys.neg[static_cast<std::size_t>(a1)]);
    return BitandemFamily(t.g, a1, a2, la2, -la1);
}

// ------------------------------------------------------ U' factor reduction

struct UPrimeFactor {
    int root;
    RingElement xi;
};

struct UPrimeReduction {
    std::vector<UPrimeFactor> factors;  // of [x_beta(1), prod x_{gamma_i}(xi_i)]
    int nontrivial_in = 0;              // factors with xi outside sigma
    int nontrivial_out = 0;
};

/// Commutator factor calculus from the U'-intersection argument: each factor
/// maps to x_{beta+gamma_i}(N(beta,gamma_i) xi_i) when beta+gamma_i is a
/// root, and vanishes otherwise.  Factors with xi outside sigma are counted
/// on both sides; the count drops strictly when beta separates two factors.
inline UPrimeReduction u_prime_reduce(const Algebra& alg, const Net& net, int a1, int a2,
                                      const std::vector<UPrimeFactor>& factors, int beta) {
    const RootSystem& sys = *net.sys;
    if (pair_functional(sys, a1, a2, beta) != 0)
        throw PreconditionViolation("reducing root must have functional value 0");
    std::vector<char> seen(static_cast<std::size_t>(sys.count()), 0);
    for (const auto& f : factors) {
        if (pair_functional(sys, a1, a2, f.root) != 2)
            throw PreconditionViolation("factor root outside Sigma");
        if (seen[static_cast<std::size_t>(f.root)])
            throw PreconditionViolation("factor roots must be distinct");
        seen[static_cast<std::size_t>(f.root)] = 1;
    }
    UPrimeReduction out;
    for (const auto& f : factors) {
        if (!f.xi.is_zero() && !ideal_contains(net.sigma(f.root), f.xi)) ++out.nontrivial_in;
        int s = sys.sum(beta, f.root);
        if (s < 0) continue;  // the commutator factor is trivial
        out.factors.push_back({s, f.xi.ring().from_int(alg.N(beta, f.root)) * f.xi});
    }
    for (const auto& f : out.factors)
        if (!f.xi.is_zero() && !ideal_contains(net.sigma(f.root), f.xi)) ++out.nontrivial_out;
    return out;
}

// -------------------------------------------------------------- extraction

struct ExtractionResult {
    int case_used = 0;  // 1 or 2
    Tandem tandem;      // (g2, l2)
};

/// One step of the field-case procedure.  Case 1 (l^{-a1} = 0) conjugates
/// x_{a1}(1) and then x_{a2}(1); Case 2 goes through the special bitandem
/// evaluated at the given t.
inline ExtractionResult extract_to_Uprime(const Tandem& t, int gamma, int a1, int a2,
                                          const RingElement& tval) {
    const Algebra& alg = *t.g.algebra();
    const RootSystem& sys = *alg.sys;
    const Ring& R = t.g.ring();
    if (sys.pairing(a1, a2) != 0 || sys.pairing(gamma, a1) != -1 || sys.pairing(gamma, a2) != -1)
        throw PairNotAdmissible("extraction needs <gamma,a1> = <gamma,a2> = -1, a1 orthogonal a2");
    RingElement c = t.l.e_coeff(sys.neg[static_cast<std::size_t>(a1)]);
    if (c.is_zero()) {
        Tandem t1 = make_tandem(alg, t.g, a1, R.one());
        Tandem t2 = make_tandem(alg, t1.g, a2, R.one());
        return {1, std::move(t2)};
    }
    BitandemFamily b = special_bitandem(t, a1, a2);
    GroupElement g1 = b.group_at(tval);
    Tandem t2 = make_tandem(alg, g1, a1, R.one());
    return {2, std::move(t2)};
}

struct ExtractionWitness {
    bool found = false;
    int case_used = 0;
    RingElement t;                   // meaningful in case 2
    std::optional<Tandem> tandem;    // with l2^{gamma+a1+a2} != 0 when found
};

/// Runs the procedure, searching t over the finite ring in case 2; reports
/// NoWitness (found = false) when no t makes the target coefficient nonzero.
inline ExtractionWitness extract_witness(const Tandem& t, int gamma, int a1, int a2) {
    const Algebra& alg = *t.g.algebra();
    const RootSystem& sys = *alg.sys;
    const Ring& R = t.g.ring();
    int ga1 = sys.sum(gamma, a1);
    if (ga1 < 0) throw PairNotAdmissible("gamma + a1 is not a root");
    int target = sys.sum(ga1, a2);
    if (target < 0) throw PairNotAdmissible("gamma + a1 + a2 is not a root");

    ExtractionWitness out;
    RingElement c = t.l.e_coeff(sys.neg[static_cast<std::size_t>(a1)]);
    if (c.is_zero()) {
        ExtractionResult r = extract_to_Uprime(t, gamma, a1, a2, R.zero());
        out.case_used = 1;
        out.t = R.zero();
        if (!r.tandem.l.e_coeff(target).is_zero()) {
            out.found = true;
            out.tandem = std::move(r.tandem);
        }
        return out;
    }
    out.case_used = 2;
    for (const auto& tval : enumerate_elements(R)) {
        ExtractionResult r = extract_to_Uprime(t, gamma, a1, a2, tval);
        if (!r.tandem.l.e_coeff(target).is_zero()) {
            out.found = true;
            out.t = tval;
            out.tandem = std::move(r.tandem);
            return out;
        }
    }
    return out;  // NoWitness
}

// ------------------------------------------------------------- root change

/// Rewrites a tandem with a prescribed provenance root: h' = h w^-1 for an
/// extended-Weyl word w with w(alpha) = beta, xi' = (sign) xi.  The returned
/// tandem has the same components.
inline Tandem tandem_change_root(const Tandem& t, int beta) {
    const Algebra& alg = *t.g.algebra();
    const RootSystem& sys = *alg.sys;
    const Ring& R = t.g.ring();
    // reflection path alpha -> beta
    std::vector<int> prev(static_cast<std::size_t>(sys.count()), -1);
    std::vector<int> via(static_cast<std::size_t>(sys.count()), -1);
    std::vector<int> queue = {t.alpha};
    prev[static_cast<std::size_t>(t.alpha)] = t.alpha;
    while (!queue.empty() && prev[static_cast<std::size_t>(beta)] < 0) {
        int cur = queue.front();
        queue.erase(queue.begin());
        for (int a = 0; a < sys.count(); ++a) {
            int img = sys.reflect(cur, a);
            if (prev[static_cast<std::size_t>(img)] < 0) {
                prev[static_cast<std::size_t>(img)] = cur;
                via[static_cast<std::size_t>(img)] = a;
                queue.push_back(img);
            }
        }
    }
    if (prev[static_cast<std::size_t>(beta)] < 0) throw Error("no reflection path between roots");
    std::vector<int> path;
    for (int cur = beta; cur != t.alpha; cur = prev[static_cast<std::size_t>(cur)])
        path.push_back(via[static_cast<std::size_t>(cur)]);
    std::reverse(path.begin(), path.end());

    GroupElement w = identity_element(alg, R);
    for (int a : path) w = weyl_lift(alg, R, a) * w;  // applies first reflection first
    // sign of w e_alpha relative to e_beta
    LieVector img = act(w, alg.e(R, t.alpha));
    RingElement c = img.e_coeff(beta);
    if (c.is_zero()) throw Error("weyl word did not carry alpha to beta");
    GroupElement h2 = t.h * w.inverse();
    return make_tandem(alg, h2, beta, c * t.xi);
}

}  // namespace chevlab

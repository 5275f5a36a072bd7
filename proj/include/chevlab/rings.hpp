#pragma once

// Exact commutative-ring arithmetic: the integers, Z/n, multivariate
// polynomial rings over a base ring, and dual numbers R[eps] with eps^2 = 0.
// Elements are immutable values in canonical form: residues reduced into
// [0, n), polynomial terms sorted with zero coefficients dropped, so that
// equality is payload equality.
//
// Ideals are finitely generated.  Membership is implemented exactly where it
// is decidable without Groebner machinery: Z (gcd of generators), Z/n (gcd
// with n), and dual numbers over a finite base (closure enumeration).
// Polynomial-ring ideals can be formed but membership raises UnsupportedRing.

#include "chevlab/common.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <variant>
#include <vector>

namespace chevlab {

class Ring;
class RingElement;
struct RingNode;
struct PolyData;
struct DualData;

enum class RingKind { Integer, Modular, Poly, Dual };

struct RingNode {
    RingKind kind;
    Int modulus;                      // Modular
    std::shared_ptr<const RingNode> base;  // Poly, Dual
    std::vector<std::string> vars;    // Poly
};

/// Lightweight immutable handle to a ring descriptor; compares structurally.
class Ring {
public:
    Ring() = default;
    explicit Ring(std::shared_ptr<const RingNode> n) : node_(std::move(n)) {}

    static Ring integers() {
        auto n = std::make_shared<RingNode>();
        n->kind = RingKind::Integer;
        return Ring(n);
    }
    static Ring modular(const Int& m) {
        if (m < 2) throw Error("modular ring needs modulus >= 2");
        auto n = std::make_shared<RingNode>();
        n->kind = RingKind::Modular;
        n->modulus = m;
        return Ring(n);
    }
    static Ring poly_over(const Ring& base, std::vector<std::string> vars) {
        if (vars.empty()) throw Error("polynomial ring needs at least one variable");
        auto n = std::make_shared<RingNode>();
        n->kind = RingKind::Poly;
        n->base = base.node_;
        n->vars = std::move(vars);
        return Ring(n);
    }
    static Ring dual_over(const Ring& base) {
        auto n = std::make_shared<RingNode>();
        n->kind = RingKind::Dual;
        n->base = base.node_;
        return Ring(n);
    }

    bool valid() const { return node_ != nullptr; }
    RingKind kind() const { return node_->kind; }
    const Int& modulus() const { return node_->modulus; }
    Ring base() const { return Ring(node_->base); }
    const std::vector<std::string>& vars() const { return node_->vars; }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < node_->vars.size(); ++i)
            if (node_->vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Ring& o) const { return same(node_.get(), o.node_.get()); }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    bool is_finite() const {
        switch (kind()) {
            case RingKind::Integer: return false;
            case RingKind::Modular: return true;
            case RingKind::Poly: return false;
            case RingKind::Dual: return base().is_finite();
        }
        return false;
    }

    Int cardinality() const {
        switch (kind()) {
            case RingKind::Modular: return modulus();
            case RingKind::Dual: {
                Int b = base().cardinality();
                return b * b;
            }
            default: throw InfiniteRing("infinite ring has no cardinality");
        }
    }

    std::string describe() const {
        switch (kind()) {
            case RingKind::Integer: return "Z";
            case RingKind::Modular: return "Z/" + modulus().str();
            case RingKind::Poly: {
                std::string s = base().describe() + "[";
                for (std::size_t i = 0; i < vars().size(); ++i) {
                    if (i) s += ",";
                    s += vars()[i];
                }
                return s + "]";
            }
            case RingKind::Dual: return base().describe() + "[eps]";
        }
        return "?";
    }

    // element factories are defined after RingElement
    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(const Int& v) const;
    RingElement var(const std::string& name) const;  // Poly only
    RingElement eps() const;                         // Dual only

private:
    static bool same(const RingNode* a, const RingNode* b) {
        if (a == b) return true;
        if (!a || !b) return false;
        if (a->kind != b->kind) return false;
        switch (a->kind) {
            case RingKind::Integer: return true;
            case RingKind::Modular: return a->modulus == b->modulus;
            case RingKind::Poly:
                return a->vars == b->vars && same(a->base.get(), b->base.get());
            case RingKind::Dual: return same(a->base.get(), b->base.get());
        }
        return false;
    }

    std::shared_ptr<const RingNode> node_;
};

using ExpVec = std::vector<std::uint32_t>;

/// An element of a Ring, always in canonical form.
class RingElement {
public:
    RingElement() = default;

    const Ring& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    RingElement inverse() const;  // units only

    // payload access
    const Int& as_int() const { return std::get<Int>(payload_); }
    const PolyData& as_poly() const;
    const DualData& as_dual() const;

    std::string str() const;

    // total order, used only to keep generator lists and reports deterministic
    bool less(const RingElement& o) const { return str() < o.str(); }

    static RingElement make_int(const Ring& r, Int v) {
        if (r.kind() == RingKind::Modular) {
            v %= r.modulus();
            if (v < 0) v += r.modulus();
        }
        RingElement e;
        e.ring_ = r;
        e.payload_ = std::move(v);
        return e;
    }
    static RingElement make_poly(const Ring& r, std::map<ExpVec, RingElement> terms);
    static RingElement make_dual(const Ring& r, RingElement a, RingElement b);

private:
    void check_same_ring(const RingElement& o) const {
        if (ring_ != o.ring_)
            throw RingMismatch("ring mismatch: " + ring_.describe() + " vs " + o.ring_.describe());
    }

    Ring ring_;
    std::variant<Int, std::shared_ptr<const PolyData>, std::shared_ptr<const DualData>> payload_;
};

struct PolyData {
    // exponent vector -> nonzero coefficient in the base ring,
    // lexicographically ordered by the map
    std::map<ExpVec, RingElement> terms;
};

struct DualData {
    RingElement a, b;  // a + b*eps
};

inline const PolyData& RingElement::as_poly() const {
    return *std::get<std::shared_ptr<const PolyData>>(payload_);
}
inline const DualData& RingElement::as_dual() const {
    return *std::get<std::shared_ptr<const DualData>>(payload_);
}

inline RingElement RingElement::make_poly(const Ring& r, std::map<ExpVec, RingElement> terms) {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    RingElement e;
    e.ring_ = r;
    auto d = std::make_shared<PolyData>();
    d->terms = std::move(terms);
    e.payload_ = std::shared_ptr<const PolyData>(d);
    return e;
}

inline RingElement RingElement::make_dual(const Ring& r, RingElement a, RingElement b) {
    RingElement e;
    e.ring_ = r;
    auto d = std::make_shared<DualData>(DualData{std::move(a), std::move(b)});
    e.payload_ = std::shared_ptr<const DualData>(d);
    return e;
}

inline RingElement Ring::zero() const { return from_int(0); }
inline RingElement Ring::one() const { return from_int(1); }

inline RingElement Ring::from_int(const Int& v) const {
    switch (kind()) {
        case RingKind::Integer:
        case RingKind::Modular:
            return RingElement::make_int(*this, v);
        case RingKind::Poly: {
            std::map<ExpVec, RingElement> t;
            RingElement c = base().from_int(v);
            if (!c.is_zero()) t.emplace(ExpVec(vars().size(), 0), std::move(c));
            return RingElement::make_poly(*this, std::move(t));
        }
        case RingKind::Dual:
            return RingElement::make_dual(*this, base().from_int(v), base().zero());
    }
    throw Error("bad ring");
}

inline RingElement Ring::var(const std::string& name) const {
    if (kind() != RingKind::Poly) throw UnsupportedRing("var() needs a polynomial ring");
    int i = var_index(name);
    if (i < 0) throw Error("unknown variable " + name);
    ExpVec e(vars().size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    std::map<ExpVec, RingElement> t;
    t.emplace(std::move(e), base().one());
    return RingElement::make_poly(*this, std::move(t));
}

inline RingElement Ring::eps() const {
    if (kind() != RingKind::Dual) throw UnsupportedRing("eps() needs a dual-number ring");
    return RingElement::make_dual(*this, base().zero(), base().one());
}

inline bool RingElement::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Integer:
        case RingKind::Modular: return as_int() == 0;
        case RingKind::Poly: return as_poly().terms.empty();
        case RingKind::Dual: return as_dual().a.is_zero() && as_dual().b.is_zero();
    }
    return false;
}

inline bool RingElement::is_one() const {
    switch (ring_.kind()) {
        case RingKind::Integer:
        case RingKind::Modular: return as_int() == 1;
        case RingKind::Poly: {
            const auto& t = as_poly().terms;
            if (t.size() != 1) return false;
            const auto& [e, c] = *t.begin();
            return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; }) && c.is_one();
        }
        case RingKind::Dual: return as_dual().a.is_one() && as_dual().b.is_zero();
    }
    return false;
}

inline bool RingElement::is_unit() const {
    switch (ring_.kind()) {
        case RingKind::Integer: return as_int() == 1 || as_int() == -1;
        case RingKind::Modular: return boost::multiprecision::gcd(as_int(), ring_.modulus()) == 1;
        case RingKind::Dual: return as_dual().a.is_unit();
        case RingKind::Poly: {
            const auto& t = as_poly().terms;
            if (t.size() == 1) {
                const auto& [e, c] = *t.begin();
                bool constant = std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
                if (constant) return c.is_unit();
            }
            // nonconstant units exist over Z/n with nilpotents; not decided here
            Ring b = ring_.base();
            while (b.kind() == RingKind::Poly) b = b.base();
            if (b.kind() == RingKind::Integer) return false;
            if (b.kind() == RingKind::Modular) {
                Int m = b.modulus();
                // square-free modulus has no nilpotents, so units are constants
                for (Int p = 2; p * p <= m; ++p)
                    if (m % (p * p) == 0)
                        throw UnsupportedRing("unit test for nonconstant polynomial over " + b.describe());
                return false;
            }
            throw UnsupportedRing("unit test in " + ring_.describe());
        }
    }
    return false;
}

inline RingElement RingElement::operator+(const RingElement& o) const {
    check_same_ring(o);
    switch (ring_.kind()) {
        case RingKind::Integer:
        case RingKind::Modular: return make_int(ring_, as_int() + o.as_int());
        case RingKind::Poly: {
            std::map<ExpVec, RingElement> t = as_poly().terms;
            for (const auto& [e, c] : o.as_poly().terms) {
                auto it = t.find(e);
                if (it == t.end()) t.emplace(e, c);
                else it->second = it->second + c;
            }
            return make_poly(ring_, std::move(t));
        }
        case RingKind::Dual:
            return make_dual(ring_, as_dual().a + o.as_dual().a, as_dual().b + o.as_dual().b);
    }
    throw Error("bad ring");
}

inline RingElement RingElement::operator-() const {
    switch (ring_.kind()) {
        case RingKind::Integer:
        case RingKind::Modular: return make_int(ring_, -as_int());
        case RingKind::Poly: {
            std::map<ExpVec, RingElement> t;
            for (const auto& [e, c] : as_poly().terms) t.emplace(e, -c);
            return make_poly(ring_, std::move(t));
        }
        case RingKind::Dual: return make_dual(ring_, -as_dual().a, -as_dual().b);
    }
    throw Error("bad ring");
}

inline RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

inline RingElement RingElement::operator*(const RingElement& o) const {
    check_same_ring(o);
    switch (ring_.kind()) {
        case RingKind::Integer:
        case RingKind::Modular: return make_int(ring_, as_int() * o.as_int());
        case RingKind::Poly: {
            std::map<ExpVec, RingElement> t;
            for (const auto& [e1, c1] : as_poly().terms) {
                for (const auto& [e2, c2] : o.as_poly().terms) {
                    ExpVec e(e1.size());
                    for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                    RingElement c = c1 * c2;
                    auto it = t.find(e);
                    if (it == t.end()) t.emplace(std::move(e), std::move(c));
                    else it->second = it->second + c;
                }
            }
            return make_poly(ring_, std::move(t));
        }
        case RingKind::Dual: {
            // (a + b eps)(c + d eps) = ac + (ad + bc) eps
            const auto& x = as_dual();
            const auto& y = o.as_dual();
            return make_dual(ring_, x.a * y.a, x.a * y.b + x.b * y.a);
        }
    }
    throw Error("bad ring");
}

inline bool RingElement::operator==(const RingElement& o) const {
    if (ring_ != o.ring_) return false;
    switch (ring_.kind()) {
        case RingKind::Integer:
        case RingKind::Modular: return as_int() == o.as_int();
        case RingKind::Poly: {
            const auto& a = as_poly().terms;
            const auto& b = o.as_poly().terms;
            if (a.size() != b.size()) return false;
            auto it = b.begin();
            for (const auto& [e, c] : a) {
                if (e != it->first || !(c == it->second)) return false;
                ++it;
            }
            return true;
        }
        case RingKind::Dual:
            return as_dual().a == o.as_dual().a && as_dual().b == o.as_dual().b;
    }
    return false;
}

inline RingElement RingElement::inverse() const {
    switch (ring_.kind()) {
        case RingKind::Integer:
            if (!is_unit()) throw Error("not a unit in Z");
            return *this;
        case RingKind::Modular: {
            // extended gcd against the modulus
            Int a = as_int(), m = ring_.modulus();
            Int r0 = m, r1 = a, s0 = 0, s1 = 1;
            while (r1 != 0) {
                Int q = r0 / r1;
                Int r2 = r0 - q * r1;
                Int s2 = s0 - q * s1;
                r0 = r1; r1 = r2; s0 = s1; s1 = s2;
            }
            if (r0 != 1) throw Error("not a unit mod " + m.str());
            return make_int(ring_, s0);
        }
        case RingKind::Dual: {
            // (a + b eps)^-1 = a^-1 - a^-2 b eps
            RingElement ai = as_dual().a.inverse();
            return make_dual(ring_, ai, -(ai * ai * as_dual().b));
        }
        case RingKind::Poly: {
            if (!is_unit()) throw Error("not an invertible polynomial");
            const auto& [e, c] = *as_poly().terms.begin();
            (void)e;
            std::map<ExpVec, RingElement> t;
            t.emplace(ExpVec(ring_.vars().size(), 0), c.inverse());
            return make_poly(ring_, std::move(t));
        }
    }
    throw Error("bad ring");
}

inline std::string RingElement::str() const {
    switch (ring_.kind()) {
        case RingKind::Integer:
        case RingKind::Modular: return as_int().str();
        case RingKind::Dual: {
            std::ostringstream os;
            os << as_dual().a.str() << "+(" << as_dual().b.str() << ")*eps";
            return os.str();
        }
        case RingKind::Poly: {
            if (as_poly().terms.empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (const auto& [e, c] : as_poly().terms) {
                if (!first) os << "+";
                first = false;
                os << "(" << c.str() << ")";
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i]) {
                        os << "*" << ring_.vars()[i];
                        if (e[i] > 1) os << "^" << e[i];
                    }
            }
            return os.str();
        }
    }
    return "?";
}

inline RingElement operator*(const Int& k, const RingElement& e) {
    return e.ring().from_int(k) * e;
}

/// Finitely generated ideal.  Canonical form drops zero generators and sorts.
class Ideal {
public:
    Ideal() = default;
    Ideal(Ring r, std::vector<RingElement> gens) : ring_(std::move(r)) {
        for (auto& g : gens) {
            if (g.ring() != ring_) throw RingMismatch("ideal generator from a different ring");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
        std::sort(gens_.begin(), gens_.end(),
                  [](const RingElement& a, const RingElement& b) { return a.less(b); });
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    }

    static Ideal zero(const Ring& r) { return Ideal(r, {}); }
    static Ideal unit(const Ring& r) { return Ideal(r, {r.one()}); }
    static Ideal principal(const Ring& r, const RingElement& g) { return Ideal(r, {g}); }

    const Ring& ring() const { return ring_; }
    const std::vector<RingElement>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool operator==(const Ideal& o) const { return ring_ == o.ring_ && gens_ == o.gens_; }

private:
    Ring ring_;
    std::vector<RingElement> gens_;
};

namespace detail {

inline Int ideal_gcd_int(const Ideal& I) {
    Int g = 0;
    for (const auto& e : I.generators()) g = boost::multiprecision::gcd(g, e.as_int());
    return g < 0 ? Int(-g) : g;
}

// All elements of a finite ring, each exactly once, in a deterministic order.
inline std::vector<RingElement> enumerate_ring(const Ring& r) {
    switch (r.kind()) {
        case RingKind::Modular: {
            std::vector<RingElement> out;
            for (Int v = 0; v < r.modulus(); ++v) out.push_back(r.from_int(v));
            return out;
        }
        case RingKind::Dual: {
            auto base = enumerate_ring(r.base());
            std::vector<RingElement> out;
            for (const auto& a : base)
                for (const auto& b : base) out.push_back(RingElement::make_dual(r, a, b));
            return out;
        }
        default:
            throw InfiniteRing("cannot enumerate " + r.describe());
    }
}

// Exact element set of a finitely generated ideal in a finite ring:
// additive closure of { r*g : r in R, g in gens }.  Every ideal element is a
// finite sum of such products, so adding one product at a time reaches all.
inline std::set<std::string> ideal_element_set(const Ideal& I) {
    const Ring& R = I.ring();
    auto all = enumerate_ring(R);
    std::vector<RingElement> step;
    for (const auto& g : I.generators())
        for (const auto& r : all) {
            RingElement x = r * g;
            if (!x.is_zero()) step.push_back(x);
        }
    std::map<std::string, RingElement> elems;
    std::vector<RingElement> frontier;
    auto push = [&](const RingElement& x) {
        if (elems.emplace(x.str(), x).second) frontier.push_back(x);
    };
    push(R.zero());
    while (!frontier.empty()) {
        RingElement x = frontier.back();
        frontier.pop_back();
        for (const auto& s : step) push(x + s);
    }
    std::set<std::string> keys;
    for (auto& [k, v] : elems) keys.insert(k);
    return keys;
}

}  // namespace detail

/// Decides x in I for the supported rings.
inline bool ideal_contains(const Ideal& I, const RingElement& x) {
    if (x.ring() != I.ring()) throw RingMismatch("ideal_contains across rings");
    const Ring& R = I.ring();
    switch (R.kind()) {
        case RingKind::Integer: {
            Int g = detail::ideal_gcd_int(I);
            if (g == 0) return x.is_zero();
            return x.as_int() % g == 0;
        }
        case RingKind::Modular: {
            Int g = R.modulus();
            for (const auto& e : I.generators()) g = boost::multiprecision::gcd(g, e.as_int());
            return x.as_int() % g == 0;
        }
        case RingKind::Dual: {
            if (!R.is_finite())
                throw UnsupportedRing("ideal membership in " + R.describe());
            if (I.is_zero_ideal()) return x.is_zero();
            auto elems = detail::ideal_element_set(I);
            return elems.count(x.str()) > 0;
        }
        case RingKind::Poly:
            throw UnsupportedRing("ideal membership in " + R.describe());
    }
    return false;
}

/// I*J, generated by pairwise products of generators.
inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw RingMismatch("ideal_product across rings");
    std::vector<RingElement> gens;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) gens.push_back(a * b);
    return Ideal(I.ring(), std::move(gens));
}

/// I subset of J, via generator membership (J must be decidable).
inline bool ideal_subset(const Ideal& I, const Ideal& J) {
    for (const auto& g : I.generators())
        if (!ideal_contains(J, g)) return false;
    return true;
}

inline bool ideal_eq(const Ideal& I, const Ideal& J) {
    return ideal_subset(I, J) && ideal_subset(J, I);
}

namespace detail {

// Is I exactly the ideal (eps) of a dual-number ring?  Accepts generator
// lists whose a-parts vanish and whose b-parts generate the unit ideal.
inline bool is_eps_ideal(const Ideal& I) {
    const Ring& R = I.ring();
    if (R.kind() != RingKind::Dual || I.generators().empty()) return false;
    std::vector<RingElement> bs;
    for (const auto& g : I.generators()) {
        if (!g.as_dual().a.is_zero()) return false;
        bs.push_back(g.as_dual().b);
    }
    Ideal B(R.base(), bs);
    return ideal_contains(B, R.base().one());
}

}  // namespace detail

/// The quotient ring R/I, where representable.
inline Ring quotient_ring(const Ring& R, const Ideal& I) {
    if (I.ring() != R) throw RingMismatch("quotient by ideal of another ring");
    if (I.is_zero_ideal()) return R;
    switch (R.kind()) {
        case RingKind::Integer: {
            Int m = detail::ideal_gcd_int(I);
            if (m == 0) return R;
            if (m == 1) throw UnsupportedQuotient("quotient is the zero ring");
            return Ring::modular(m);
        }
        case RingKind::Modular: {
            Int m = R.modulus();
            for (const auto& e : I.generators()) m = boost::multiprecision::gcd(m, e.as_int());
            if (m == R.modulus()) return R;
            if (m == 1) throw UnsupportedQuotient("quotient is the zero ring");
            return Ring::modular(m);
        }
        case RingKind::Dual: {
            if (detail::is_eps_ideal(I)) return R.base();
            throw UnsupportedQuotient("unsupported dual-number quotient");
        }
        case RingKind::Poly:
            throw UnsupportedQuotient("polynomial quotients are not supported");
    }
    throw UnsupportedQuotient("unsupported quotient");
}

/// rho_I: the image of x in R/I, canonical.
inline RingElement reduce_mod(const RingElement& x, const Ideal& I) {
    const Ring& R = x.ring();
    if (I.ring() != R) throw RingMismatch("reduce_mod across rings");
    Ring Q = quotient_ring(R, I);
    if (Q == R) return x;
    switch (R.kind()) {
        case RingKind::Integer:
        case RingKind::Modular:
            return Q.from_int(x.as_int());
        case RingKind::Dual:
            return x.as_dual().a;  // eps -> 0
        default:
            throw UnsupportedQuotient("unsupported quotient");
    }
}

/// rho_I applied to an ideal: the image ideal in R/I.
inline Ideal reduce_ideal(const Ideal& J, const Ideal& I) {
    Ring Q = quotient_ring(I.ring(), I);
    std::vector<RingElement> gens;
    for (const auto& g : J.generators()) gens.push_back(reduce_mod(g, I));
    return Ideal(Q, std::move(gens));
}

/// Every element of a finite ring, exactly once.
inline std::vector<RingElement> enumerate_elements(const Ring& r) {
    return detail::enumerate_ring(r);
}

/// Natural map from elements of `from` into `to` where an embedding exists:
/// base ring into its polynomial ring (constants) or dual numbers (a + 0 eps).
inline RingElement embed(const RingElement& x, const Ring& to) {
    if (x.ring() == to) return x;
    if (to.kind() == RingKind::Poly && x.ring() == to.base()) {
        std::map<ExpVec, RingElement> t;
        if (!x.is_zero()) t.emplace(ExpVec(to.vars().size(), 0), x);
        return RingElement::make_poly(to, std::move(t));
    }
    if (to.kind() == RingKind::Dual && x.ring() == to.base())
        return RingElement::make_dual(to, x, to.base().zero());
    throw RingMismatch("no embedding of " + x.ring().describe() + " into " + to.describe());
}

/// Evaluation R[vars] -> R at a full assignment of variable values.
inline RingElement eval_poly(const RingElement& p, const std::vector<RingElement>& values) {
    const Ring& P = p.ring();
    if (P.kind() != RingKind::Poly) throw UnsupportedRing("eval_poly needs a polynomial");
    if (values.size() != P.vars().size()) throw Error("eval_poly: wrong value count");
    Ring B = P.base();
    RingElement acc = B.zero();
    for (const auto& [e, c] : p.as_poly().terms) {
        RingElement term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term = term * values[i];
        acc = acc + term;
    }
    return acc;
}

/// Coefficient of var^k in a univariate polynomial, as a base-ring element.
inline RingElement poly_coeff(const RingElement& p, std::uint32_t k) {
    const Ring& P = p.ring();
    if (P.kind() != RingKind::Poly || P.vars().size() != 1)
        throw UnsupportedRing("poly_coeff needs a univariate polynomial");
    for (const auto& [e, c] : p.as_poly().terms)
        if (e[0] == k) return c;
    return P.base().zero();
}

/// Largest exponent of the single variable appearing in p (zero poly -> 0).
inline std::uint32_t poly_degree(const RingElement& p) {
    const Ring& P = p.ring();
    if (P.kind() != RingKind::Poly || P.vars().size() != 1)
        throw UnsupportedRing("poly_degree needs a univariate polynomial");
    std::uint32_t d = 0;
    for (const auto& [e, c] : p.as_poly().terms) d = std::max(d, e[0]);
    return d;
}

}  // namespace chevlab

#pragma once

// Small exact linear algebra helpers:
//  - integer row echelon + span membership (root-lattice computations),
//  - Howell form over Z/n + span membership (module closures),
//  - Bareiss determinant over Z,
//  - dense rational solve for coordinates in a root basis.
// Everything here works on tiny matrices, so clarity wins over speed.

#include "chevlab/common.hpp"

#include <optional>
#include <vector>

namespace chevlab {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

namespace detail {

inline Int egcd(const Int& a, const Int& b, Int& u, Int& v) {
    Int r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = r1; r1 = r2; u0 = u1; u1 = u2; v0 = v1; v1 = v2;
    }
    if (r0 < 0) { r0 = -r0; u0 = -u0; v0 = -v0; }
    u = u0; v = v0;
    return r0;
}

inline int leading_col(const IntVec& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) return static_cast<int>(i);
    return -1;
}

}  // namespace detail

// ---------------------------------------------------------------- integers

/// Row echelon form over Z via gcd row combinations; rows sorted by pivot.
inline IntMat z_echelon(IntMat rows) {
    if (rows.empty()) return rows;
    std::size_t d = rows[0].size();
    IntMat out;
    std::vector<IntVec> work;
    for (auto& r : rows)
        if (detail::leading_col(r) >= 0) work.push_back(std::move(r));
    for (std::size_t c = 0; c < d; ++c) {
        int pivot = -1;
        for (std::size_t i = 0; i < work.size(); ++i)
            if (detail::leading_col(work[i]) == static_cast<int>(c)) { pivot = static_cast<int>(i); break; }
        if (pivot < 0) continue;
        IntVec p = work[pivot];
        work.erase(work.begin() + pivot);
        for (auto& r : work) {
            if (detail::leading_col(r) != static_cast<int>(c)) continue;
            Int u, v;
            Int g = detail::egcd(p[c], r[c], u, v);
            IntVec np(d), nr(d);
            Int pc = p[c] / g, rc = r[c] / g;
            for (std::size_t j = 0; j < d; ++j) {
                np[j] = u * p[j] + v * r[j];
                nr[j] = pc * r[j] - rc * p[j];
            }
            p = std::move(np);
            r = std::move(nr);
        }
        if (p[c] < 0)
            for (auto& x : p) x = -x;
        out.push_back(std::move(p));
        // rows that lost their pivot here keep circulating for later columns
    }
    return out;
}

/// Is v in the Z-span of the echelonized rows?
inline bool z_member(const IntMat& ech, IntVec v) {
    for (const auto& r : ech) {
        int c = detail::leading_col(r);
        if (c < 0) continue;
        if (v[static_cast<std::size_t>(c)] == 0) continue;
        if (v[static_cast<std::size_t>(c)] % r[static_cast<std::size_t>(c)] != 0) return false;
        Int q = v[static_cast<std::size_t>(c)] / r[static_cast<std::size_t>(c)];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * r[j];
    }
    return detail::leading_col(v) < 0;
}

inline std::size_t z_rank(const IntMat& rows) { return z_echelon(rows).size(); }

// ------------------------------------------------------------------- Z/n

/// Howell-style form over Z/n: echelon rows plus annihilator saturation so
/// that greedy reduction decides span membership exactly.
inline IntMat howell_form(IntMat rows, const Int& n) {
    std::size_t d = rows.empty() ? 0 : rows[0].size();
    auto normalize = [&](IntVec& r) {
        for (auto& x : r) {
            x %= n;
            if (x < 0) x += n;
        }
    };
    std::vector<IntVec> work;
    for (auto& r : rows) {
        normalize(r);
        if (detail::leading_col(r) >= 0) work.push_back(std::move(r));
    }
    std::vector<std::optional<IntVec>> piv(d);
    auto saturate = [&](const IntVec& r, int c) {
        Int g = boost::multiprecision::gcd(r[static_cast<std::size_t>(c)], n);
        if (g == 1) return;
        Int m = n / g;
        IntVec s(d);
        for (std::size_t j = 0; j < d; ++j) s[j] = (r[j] * m) % n;
        if (detail::leading_col(s) >= 0) work.push_back(std::move(s));
    };
    while (!work.empty()) {
        IntVec r = std::move(work.back());
        work.pop_back();
        for (;;) {
            int c = detail::leading_col(r);
            if (c < 0) break;
            auto& slot = piv[static_cast<std::size_t>(c)];
            if (!slot) {
                slot = r;
                saturate(r, c);
                break;
            }
            IntVec& p = *slot;
            Int a = p[static_cast<std::size_t>(c)], b = r[static_cast<std::size_t>(c)];
            Int u, v;
            Int g = detail::egcd(a, b, u, v);
            IntVec np(d), nr(d);
            Int ag = a / g, bg = b / g;
            for (std::size_t j = 0; j < d; ++j) {
                np[j] = (u * p[j] + v * r[j]) % n;
                if (np[j] < 0) np[j] += n;
                nr[j] = (bg * p[j] - ag * r[j]) % n;
                if (nr[j] < 0) nr[j] += n;
            }
            bool changed = (np != p);
            p = std::move(np);
            if (changed) saturate(p, c);
            r = std::move(nr);
        }
    }
    IntMat out;
    for (auto& s : piv)
        if (s) out.push_back(std::move(*s));
    return out;
}

/// Greedy membership against a Howell form.
inline bool howell_member(const IntMat& how, const Int& n, IntVec v) {
    for (auto& x : v) {
        x %= n;
        if (x < 0) x += n;
    }
    for (const auto& r : how) {
        int c = detail::leading_col(r);
        if (c < 0) continue;
        std::size_t cc = static_cast<std::size_t>(c);
        for (std::size_t j = 0; j < cc; ++j)
            if (v[j] != 0) return false;
        if (v[cc] == 0) continue;
        Int a = r[cc];
        Int g = boost::multiprecision::gcd(a, n);
        if (v[cc] % g != 0) return false;
        // x*a = v[c] (mod n): x = (v[c]/g) * (a/g)^{-1} (mod n/g)
        Int m = n / g;
        Int u, w;
        detail::egcd(a / g, m, u, w);
        Int x = ((v[cc] / g) % m) * (u % m) % m;
        if (x < 0) x += m;
        for (std::size_t j = 0; j < v.size(); ++j) {
            v[j] = (v[j] - x * r[j]) % n;
            if (v[j] < 0) v[j] += n;
        }
    }
    return detail::leading_col(v) < 0;
}

// ------------------------------------------------------------ determinants

/// Bareiss fraction-free determinant over Z.
inline Int bareiss_det(IntMat a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// ------------------------------------------------------------ exact solve

/// Solves sum_i x_i * rows[i] = target exactly over Q.
inline std::optional<std::vector<Rat>> solve_combination(const IntMat& rows, const IntVec& target) {
    std::size_t k = rows.size();
    if (k == 0) return detail::leading_col(target) < 0
                           ? std::optional<std::vector<Rat>>(std::vector<Rat>{})
                           : std::nullopt;
    std::size_t d = rows[0].size();
    // augmented system: columns are the unknowns
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(k + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = Rat(rows[j][i]);
        m[i][k] = Rat(target[i]);
    }
    std::size_t row = 0;
    std::vector<int> pivot_of_col(k, -1);
    for (std::size_t col = 0; col < k && row < d; ++col) {
        std::size_t sel = row;
        while (sel < d && m[sel][col] == 0) ++sel;
        if (sel == d) continue;
        std::swap(m[row], m[sel]);
        Rat p = m[row][col];
        for (std::size_t j = col; j <= k; ++j) m[row][j] /= p;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    // consistency
    for (std::size_t i = row; i < d; ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rat> x(k, Rat(0));
    for (std::size_t col = 0; col < k; ++col)
        if (pivot_of_col[col] >= 0) x[col] = m[static_cast<std::size_t>(pivot_of_col[col])][k];
    return x;
}

}  // namespace chevlab

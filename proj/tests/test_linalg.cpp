#include <catch2/catch_amalgamated.hpp>

#include "chevlab/linalg.hpp"

#include <random>

using namespace chevlab;

namespace {

// Brute-force span membership over Z/n by enumerating all coefficient tuples.
bool span_member_bruteforce(const IntMat& rows, const Int& n, const IntVec& v) {
    std::size_t k = rows.size(), d = v.size();
    long nn = n.convert_to<long>();
    std::vector<long> coef(k, 0);
    for (;;) {
        IntVec acc(d, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < d; ++j)
                acc[j] = (acc[j] + coef[i] * rows[i][j]) % n;
        bool eq = true;
        for (std::size_t j = 0; j < d; ++j)
            if (((acc[j] - v[j]) % n + n) % n != 0) eq = false;
        if (eq) return true;
        std::size_t i = 0;
        while (i < k && ++coef[i] == nn) coef[i++] = 0;
        if (i == k) return false;
    }
}

}  // namespace

TEST_CASE("integer echelon span membership", "[linalg]") {
    IntMat rows = {{2, 0, 0}, {0, 3, 0}};
    auto ech = z_echelon(rows);
    CHECK(z_member(ech, {4, 3, 0}));
    CHECK(z_member(ech, {-2, 6, 0}));
    CHECK_FALSE(z_member(ech, {1, 0, 0}));
    CHECK_FALSE(z_member(ech, {0, 0, 1}));
    CHECK(z_rank(rows) == 2);

    // gcd combination: span{(2,2),(3,3)} = {(k,k)}
    auto e2 = z_echelon({{2, 2}, {3, 3}});
    CHECK(z_member(e2, {1, 1}));
    CHECK(z_member(e2, {-5, -5}));
    CHECK_FALSE(z_member(e2, {1, 2}));
    CHECK(z_rank({{2, 2}, {3, 3}}) == 1);
}

TEST_CASE("howell form handles annihilator shifts", "[linalg]") {
    // span of (2,1) over Z/4 contains (0,2) = 2*(2,1)
    IntMat rows = {{2, 1}};
    auto how = howell_form(rows, 4);
    CHECK(howell_member(how, 4, {0, 2}));
    CHECK(howell_member(how, 4, {2, 1}));
    CHECK(howell_member(how, 4, {2, 3}));
    CHECK_FALSE(howell_member(how, 4, {1, 0}));
    CHECK_FALSE(howell_member(how, 4, {2, 0}));
}

TEST_CASE("howell membership agrees with brute force", "[linalg]") {
    std::mt19937_64 rng(12345);
    for (Int n : {Int(4), Int(6), Int(8)}) {
        long nn = n.convert_to<long>();
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t k = 1 + rng() % 3, d = 3;
            IntMat rows(k, IntVec(d));
            for (auto& r : rows)
                for (auto& x : r) x = Int(static_cast<long>(rng() % nn));
            auto how = howell_form(rows, n);
            IntVec v(d);
            for (long a = 0; a < nn; ++a)
                for (long b = 0; b < nn; ++b)
                    for (long c = 0; c < nn; ++c) {
                        v = {Int(a), Int(b), Int(c)};
                        CHECK(howell_member(how, n, v) == span_member_bruteforce(rows, n, v));
                    }
        }
    }
}

TEST_CASE("bareiss determinant", "[linalg]") {
    CHECK(bareiss_det({{2, 0}, {0, 3}}) == 6);
    CHECK(bareiss_det({{0, 1}, {1, 0}}) == -1);
    CHECK(bareiss_det({{1, 2}, {2, 4}}) == 0);
    CHECK(bareiss_det({{3, 1, 0}, {0, 2, 1}, {1, 0, 2}}) == 13);
}

TEST_CASE("rational combination solve", "[linalg]") {
    IntMat rows = {{2, 0}, {1, 1}};
    auto x = solve_combination(rows, {3, 1});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(1));
    CHECK_FALSE(solve_combination({{1, 0}}, {0, 1}).has_value());
    auto half = solve_combination({{2, 0}}, {1, 0});
    REQUIRE(half.has_value());
    CHECK((*half)[0] == Rat(1, 2));
}

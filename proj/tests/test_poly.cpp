#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "hitkernel/poly.hpp"
#include "oracles.hpp"

using hk::Monomial;
using hk::Polynomial;
using hk::WeightVector;

TEST_CASE("binom_mod2") {
    CHECK(hk::binom_mod2(3, 2) == 1);
    CHECK(hk::binom_mod2(2, 3) == 0);
    CHECK(hk::binom_mod2(4, 2) == 0);
    CHECK(hk::binom_mod2(-1, 0) == 0);
    CHECK(hk::binom_mod2(5, -2) == 0);
    // Pascal check against an additive table
    int pascal[16][16] = {};
    for (int a = 0; a < 16; ++a) {
        pascal[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            pascal[a][b] = (pascal[a - 1][b - 1] + (b <= a - 1 ? pascal[a - 1][b] : 0)) % 2;
    }
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            CHECK(hk::binom_mod2(a, b) == (b <= a ? pascal[a][b] : 0));
}

TEST_CASE("sq on monomials: examples") {
    // Sq^1(x1 x2) = x1^2 x2 + x1 x2^2
    Polynomial got = hk::sq_monomial(1, Monomial({1, 1}));
    Polynomial want(2);
    want.add_term(Monomial({2, 1}));
    want.add_term(Monomial({1, 2}));
    CHECK(got == want);
    CHECK(hk::sq_monomial(2, Monomial({3})) == Polynomial::from_monomial(Monomial({5})));
    CHECK(hk::sq_monomial(3, Monomial({2})).is_zero());
    CHECK(hk::sq(0, want) == want);
    // Sq^1(x1^2 + x2^2) = 0
    Polynomial sqs(2);
    sqs.add_term(Monomial({2, 0}));
    sqs.add_term(Monomial({0, 2}));
    CHECK(hk::sq(1, sqs).is_zero());
}

TEST_CASE("sq matches the all-compositions oracle") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t d = 1 + rng() % 3;
        Monomial m(std::vector<std::uint32_t>(d, 0));
        for (auto& e : m.exponents) e = rng() % 9;
        std::uint64_t k = rng() % 11;
        CHECK(hk::sq_monomial(k, m) == oracle::sq_all_compositions(k, m));
    }
}

TEST_CASE("degree additivity and unstability") {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t d = 1 + rng() % 4;
        Monomial m(std::vector<std::uint32_t>(d, 0));
        for (auto& e : m.exponents) e = rng() % 7;
        std::uint64_t k = rng() % 12;
        Polynomial p = hk::sq_monomial(k, m);
        if (k > m.degree()) {
            CHECK(p.is_zero());
        } else if (!p.is_zero()) {
            CHECK(p.degree() == m.degree() + k);
        }
    }
}

TEST_CASE("squaring: Sq^k(p^2) = (Sq^{k/2} p)^2 for even k, zero for odd") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t d = 1 + rng() % 3;
        Polynomial p(d);
        for (int t = 0; t < 3; ++t) {
            // random composition of 6 into d parts keeps the sum homogeneous
            Monomial m(std::vector<std::uint32_t>(d, 0));
            std::uint32_t left = 6;
            for (std::size_t i = 0; i + 1 < d; ++i) {
                std::uint32_t e = rng() % (left + 1);
                m.exponents[i] = e;
                left -= e;
            }
            m.exponents[d - 1] = left;
            p += Polynomial::from_monomial(m);
        }
        if (p.is_zero()) continue;
        Polynomial p2 = p * p;
        for (std::uint64_t k = 0; k <= 8; ++k) {
            Polynomial lhs = hk::sq(k, p2);
            if (k % 2) {
                CHECK(lhs.is_zero());
            } else {
                Polynomial s = hk::sq(k / 2, p);
                CHECK(lhs == s * s);
            }
        }
    }
}

TEST_CASE("weight vectors") {
    CHECK(hk::weight_vector(Monomial({15, 3, 3, 0, 0})) == WeightVector{{3, 3, 1, 1}});
    CHECK(hk::weight_vector(Monomial({1, 1, 1, 1, 1})) == WeightVector{{5}});
    WeightVector w = hk::weight_vector(Monomial({31, 15, 1}));
    CHECK(w == WeightVector{{3, 2, 2, 2, 1}});
    CHECK(w.degree() == 47);
    // squaring shifts the weight vector right
    std::mt19937 rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        Monomial m(std::vector<std::uint32_t>(4, 0));
        for (auto& e : m.exponents) e = rng() % 16;
        Monomial m2 = m;
        for (auto& e : m2.exponents) e *= 2;
        auto w1 = hk::weight_vector(m).entries;
        auto w2 = hk::weight_vector(m2).entries;
        if (m.degree() == 0) continue;
        REQUIRE(w2.size() == w1.size() + 1);
        CHECK(w2[0] == 0);
        for (std::size_t i = 0; i < w1.size(); ++i) CHECK(w2[i + 1] == w1[i]);
    }
}

TEST_CASE("monomial order examples") {
    CHECK(hk::monomial_compare(Monomial({1, 2}), Monomial({2, 1})) < 0);
    CHECK(hk::monomial_compare(Monomial({1, 2}), Monomial({1, 2})) == 0);
    // equal weights (1,1): exponents (1,2) < (3,0)
    CHECK(hk::monomial_compare(Monomial({1, 2}), Monomial({3, 0})) < 0);
    CHECK_THROWS_AS(hk::monomial_compare(Monomial({1}), Monomial({1, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(hk::monomial_compare(Monomial({1, 0}), Monomial({1, 1})),
                    std::invalid_argument);
}

TEST_CASE("order is total on full enumerations") {
    for (std::size_t d = 2; d <= 4; ++d) {
        for (std::uint64_t n = 1; n <= (d == 4 ? 7 : 10); ++n) {
            auto ms = hk::enumerate_monomials(d, n);
            for (std::size_t i = 0; i < ms.size(); ++i) {
                for (std::size_t j = i + 1; j < ms.size(); ++j) {
                    CHECK(hk::monomial_compare(ms[i], ms[j]) < 0);
                    CHECK(hk::monomial_compare(ms[j], ms[i]) > 0);
                }
                CHECK(hk::monomial_compare(ms[i], ms[i]) == 0);
            }
        }
    }
}

TEST_CASE("enumeration sizes and lookup") {
    CHECK(hk::enumerate_monomials(1, 5).size() == 1);
    CHECK(hk::enumerate_monomials(2, 2).size() == 3);
    hk::Enumeration e(5, 8);
    CHECK(e.size() == 495);
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(e.index_of(e.at(i)) == i);
    CHECK_FALSE(e.find(Monomial({8, 1, 0, 0, 0})).has_value());
}

TEST_CASE("weight-restricted enumeration") {
    WeightVector w5{{5}};
    auto full = hk::enumerate_weight_restricted(5, w5, false);
    bool has_square_free = false;
    for (const auto& m : full) {
        CHECK(hk::weight_compare(hk::weight_vector(m), w5) <= 0);
        if (m == Monomial({1, 1, 1, 1, 1})) has_square_free = true;
    }
    CHECK(has_square_free);
    auto strict = hk::enumerate_weight_restricted(5, w5, true);
    CHECK(strict.size() == full.size() - 1);

    // bottom stratum is empty under strict comparison
    WeightVector bottom{{1, 0, 1}};  // the weight of x_i^5-type monomials, minimal at degree 5
    auto at_bottom = hk::enumerate_weight_restricted(5, bottom, true);
    CHECK(at_bottom.empty());

    WeightVector w21{{3, 3, 1, 1}};
    auto l21 = hk::enumerate_weight_restricted(5, w21, false);
    bool has_spike = false;
    for (const auto& m : l21) {
        if (m == Monomial({15, 3, 3, 0, 0})) has_spike = true;
        CHECK(hk::weight_compare(hk::weight_vector(m), WeightVector{{3, 3, 3}}) < 0);
    }
    CHECK(has_spike);
}

TEST_CASE("spikes") {
    CHECK(hk::is_spike(Monomial({15, 3, 3, 0, 0})));
    CHECK_FALSE(hk::is_spike(Monomial({2, 1})));
    CHECK(hk::minimal_spike(5, 47) == Monomial({31, 15, 1, 0, 0}));
    CHECK(hk::minimal_spike(5, 21) == Monomial({15, 3, 3, 0, 0}));
    CHECK(hk::minimal_spike(5, 22) == Monomial({15, 7, 0, 0, 0}));
    CHECK(hk::minimal_spike(2, 2) == Monomial({1, 1}));
    CHECK_THROWS_AS(hk::minimal_spike(1, 2), std::invalid_argument);  // mu(2)=2 > 1
}

TEST_CASE("singer prefilter") {
    // omega = (1,2,0,2) < (3,3,1,1)
    CHECK(hk::singer_prefilter(Monomial({1, 2, 2, 8, 8})) == hk::Prefilter::Hit);
    CHECK(hk::singer_prefilter(hk::minimal_spike(5, 21)) == hk::Prefilter::Unknown);
    // any (3,3,3)-weight monomial at degree 21 stays Unknown
    CHECK(hk::singer_prefilter(Monomial({1, 2, 4, 7, 7})) == hk::Prefilter::Unknown);
}

TEST_CASE("mu and alpha") {
    CHECK(hk::alpha(0) == 0);
    CHECK(hk::alpha(46) == 4);
    CHECK(hk::alpha(1024) == 1);
    CHECK(hk::mu(47) == 3);
    CHECK(hk::mu(0) == 0);
    CHECK(hk::mu(5) == 3);
    // alternate characterization: least count of (2^s - 1) summands
    auto mu_by_parts = [](std::uint64_t n) {
        if (n == 0) return 0u;
        for (unsigned r = 1;; ++r) {
            // can n be written as a sum of r numbers of the form 2^s - 1, s > 0?
            std::function<bool(std::uint64_t, unsigned, unsigned)> rec =
                [&](std::uint64_t left, unsigned parts, unsigned maxs) -> bool {
                if (parts == 0) return left == 0;
                for (unsigned s = maxs; s >= 1; --s) {
                    std::uint64_t v = (std::uint64_t(1) << s) - 1;
                    if (v > left) continue;
                    if (rec(left - v, parts - 1, s)) return true;
                }
                return false;
            };
            if (rec(n, r, 12)) return r;
        }
    };
    for (std::uint64_t n = 0; n <= 120; ++n) CHECK(hk::mu(n) == mu_by_parts(n));
}

TEST_CASE("rendering and parsing") {
    CHECK(hk::to_string(Monomial({3, 0, 1, 0, 7})) == "x1^3 x3 x5^7");
    CHECK(hk::to_string(Monomial({0, 0})) == "1");
    CHECK(hk::parse_monomial("x1^3 x3 x5^7", 5) == Monomial({3, 0, 1, 0, 7}));
    CHECK(hk::parse_monomial("1", 3) == Monomial({0, 0, 0}));
    CHECK(hk::parse_weight("3,3,1,1") == WeightVector{{3, 3, 1, 1}});
    CHECK(hk::to_string(WeightVector{{3, 3, 1, 1}}) == "(3,3,1,1)");
    CHECK_THROWS(hk::parse_monomial("y2", 3));
}

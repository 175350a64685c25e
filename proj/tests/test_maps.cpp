#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitkernel/maps.hpp"

using hk::Monomial;
using hk::PiIndex;
using hk::Polynomial;
using hk::WeightVector;

TEST_CASE("rho examples") {
    CHECK(hk::rho_monomial(1, 5, Monomial({1, 1, 1, 1})) == Monomial({0, 1, 1, 1, 1}));
    CHECK(hk::rho_monomial(5, 5, Monomial({2, 3, 0, 1})) == Monomial({2, 3, 0, 1, 0}));
    // algebra map on products
    std::mt19937 rng(1);
    for (int t = 0; t < 30; ++t) {
        Monomial f(std::vector<std::uint32_t>(3, 0)), g(std::vector<std::uint32_t>(3, 0));
        for (auto& e : f.exponents) e = rng() % 4;
        for (auto& e : g.exponents) e = rng() % 4;
        std::size_t k = 1 + rng() % 4;
        Polynomial pf = Polynomial::from_monomial(f), pg = Polynomial::from_monomial(g);
        CHECK(hk::rho(k, 4, pf * pg) == hk::rho(k, 4, pf) * hk::rho(k, 4, pg));
    }
}

TEST_CASE("pi examples") {
    Polynomial x1 = Polynomial::from_monomial(Monomial({1, 0, 0, 0, 0}));
    PiIndex empty{1, {}};
    CHECK(hk::pi(empty, 5, x1).is_zero());
    PiIndex one{1, {2}};
    CHECK(hk::pi(one, 5, x1) == Polynomial::from_monomial(Monomial({1, 0, 0, 0})));
    CHECK_THROWS_AS(hk::pi(PiIndex{3, {2}}, 5, x1), std::invalid_argument);
}

TEST_CASE("pi is a section of rho") {
    std::mt19937 rng(2);
    for (std::size_t d = 3; d <= 5; ++d) {
        for (const auto& idx : hk::all_pi_indices(d, false)) {
            for (int t = 0; t < 5; ++t) {
                Monomial u(std::vector<std::uint32_t>(d - 1, 0));
                for (auto& e : u.exponents) e = rng() % 5;
                Polynomial pu = Polynomial::from_monomial(u);
                CHECK(hk::pi(idx, d, hk::rho(idx.k, d, pu)) == pu);
            }
        }
    }
}

TEST_CASE("phi examples") {
    // empty K: phi = rho
    for (std::size_t k = 1; k <= 4; ++k) {
        Monomial m({1, 2, 0});
        CHECK(hk::phi(PiIndex{k, {}}, 4, m) == hk::rho_monomial(k, 4, m));
    }
    // paper's worked case (i): K = (j), alpha_0(a_{j-1}) = 1:
    // phi = x_k rho(x) / x_j
    Monomial m({1, 1, 1, 1});
    Monomial got = hk::phi(PiIndex{1, {2}}, 5, m);
    CHECK(got == Monomial({1, 0, 1, 1, 1}));
    // condition failure gives zero (even exponent at the K position)
    Monomial even({2, 1, 1, 1});
    CHECK(hk::phi(PiIndex{1, {2}}, 5, even).arity() == 0);
}

TEST_CASE("phi preserves weights when nonzero") {
    std::mt19937 rng(3);
    for (std::size_t d = 3; d <= 5; ++d) {
        for (const auto& idx : hk::all_pi_indices(d, true)) {
            for (int t = 0; t < 20; ++t) {
                Monomial m(std::vector<std::uint32_t>(d - 1, 0));
                for (auto& e : m.exponents) e = rng() % 16;
                Monomial im = hk::phi(idx, d, m);
                if (im.arity() == 0) continue;
                CHECK(im.degree() == m.degree());
                CHECK(hk::weight_compare(hk::weight_vector(im), hk::weight_vector(m)) == 0);
            }
        }
    }
}

TEST_CASE("admissible-image inclusion at small arity") {
    hk::Workspace ws;
    for (std::size_t d = 2; d <= 4; ++d) {
        for (std::uint64_t n = 1; n <= 10; ++n) {
            for (const auto& w : hk::weights_of_degree(d, n)) {
                auto rep = hk::check_sum_conjecture(ws, d, w);
                CHECK(rep.holds);
            }
        }
    }
}

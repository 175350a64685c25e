#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitkernel/dual.hpp"
#include "hitkernel/fixtures.hpp"
#include "hitkernel/hitspace.hpp"

using hk::Monomial;
using hk::Polynomial;
using hk::dual::DividedElement;
using hk::dual::DividedMonomial;

namespace {
DividedElement dm(std::initializer_list<std::vector<std::uint32_t>> rows) {
    std::vector<DividedMonomial> ts;
    for (const auto& r : rows) ts.push_back(DividedMonomial{r});
    return DividedElement(std::move(ts));
}
}  // namespace

TEST_CASE("dual Steenrod action on one variable") {
    CHECK(hk::dual::dual_sq(1, dm({{2}})) == dm({{1}}));
    CHECK(hk::dual::dual_sq(1, dm({{3}})).is_zero());
    CHECK(hk::dual::dual_sq(0, dm({{5}})) == dm({{5}}));
    // degree drops by k
    auto r = hk::dual::dual_sq(2, dm({{4, 3}}));
    for (const auto& t : r.terms()) CHECK(t.degree() == 5);
}

TEST_CASE("pairing") {
    Polynomial p = Polynomial::from_monomial(Monomial({2, 1}));
    CHECK(hk::dual::pairing(dm({{2, 1}}), p) == 1);
    CHECK(hk::dual::pairing(dm({{1, 2}}), p) == 0);
    CHECK_THROWS_AS(hk::dual::pairing(dm({{1, 1}}), p), std::invalid_argument);
}

TEST_CASE("adjointness of the pairing") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t d = 1 + rng() % 3;
        std::uint64_t deg = 2 + rng() % 9;
        std::uint64_t k = 1 + rng() % 5;
        if (k >= deg) continue;
        hk::Enumeration hi(d, deg), lo(d, deg - k);
        DividedMonomial u{hi.at(rng() % hi.size()).exponents};
        Monomial f = lo.at(rng() % lo.size());
        int lhs = hk::dual::pairing(hk::dual::dual_sq(k, DividedElement({u})),
                                    Polynomial::from_monomial(f));
        int rhs = hk::dual::pairing(DividedElement({u}), hk::sq_monomial(k, f));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("primitives: degenerate and desk-scale dimensions") {
    CHECK(hk::dual::primitives(1, 2).empty());
    auto p0 = hk::dual::primitives(4, 0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == dm({{0, 0, 0, 0}}));
    // duality with the quotient dimension
    hk::Workspace ws;
    CHECK(hk::dual::primitives(3, 7).size() == ws.hit(3, 7).quotient_dim());
    CHECK(hk::dual::primitives(4, 9).size() == ws.hit(4, 9).quotient_dim());
    // pow2 and all-k annihilation agree
    for (std::uint64_t n = 1; n <= 8; ++n)
        CHECK(hk::dual::primitives(2, n).size() == hk::dual::primitives(2, n, true).size());
}

TEST_CASE("primitives pair to zero with hit polynomials") {
    hk::Workspace ws;
    const auto& h = ws.hit(3, 7);
    auto prims = hk::dual::primitives(3, 7);
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p(3);
        for (int j = 0; j < 2; ++j) {
            std::uint64_t k = std::uint64_t(1) << (rng() % 3);
            if (k > 7) continue;
            auto gens = hk::enumerate_monomials(3, 7 - k);
            p += hk::sq(k, Polynomial::from_monomial(gens[rng() % gens.size()]));
        }
        if (p.is_zero()) continue;
        REQUIRE(h.hit_test(p));
        for (const auto& z : prims) CHECK(hk::dual::pairing(z, p) == 0);
    }
}

TEST_CASE("dual Kameko map") {
    CHECK(hk::dual::dual_kameko(DividedMonomial{{0, 0, 0}}) == DividedMonomial{{1, 1, 1}});
    CHECK(hk::dual::dual_kameko(DividedMonomial{{1, 1, 0, 0, 0}}) ==
          DividedMonomial{{3, 3, 1, 1, 1}});
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t d = 1 + rng() % 3;
        DividedMonomial u{std::vector<std::uint32_t>(d, 0)};
        for (auto& j : u.orders) j = rng() % 7;
        DividedElement eu({u});
        for (std::uint64_t k = 0; k <= 6; ++k) {
            CHECK(hk::dual::dual_sq(2 * k + 1, hk::dual::dual_kameko(eu)).is_zero());
            CHECK(hk::dual::dual_sq(2 * k, hk::dual::dual_kameko(eu)) ==
                  hk::dual::dual_kameko(hk::dual::dual_sq(k, eu)));
        }
    }
}

TEST_CASE("dual Kameko maps primitives to primitives at (3,5)") {
    auto prims = hk::dual::primitives(3, 5);
    for (const auto& z : prims) {
        auto up = hk::dual::dual_kameko(z);
        for (std::uint64_t k = 1; k <= 13; ++k) CHECK(hk::dual::dual_sq(k, up).is_zero());
    }
}

TEST_CASE("psi base cases") {
    CHECK(hk::dual::psi(DividedMonomial{{4}}) == hk::lambda::Element(std::vector<hk::lambda::Word>{{4}}));
    // psi_2(a1^(0) a2^(j)) = lambda_0 lambda_j: only t = j survives
    CHECK(hk::dual::psi(DividedMonomial{{0, 3}}) ==
          hk::lambda::Element(std::vector<hk::lambda::Word>{{0, 3}}));
    // psi of a primitive is a cycle
    for (const auto& z : hk::dual::primitives(2, 3)) {
        auto c = hk::lambda::adem_normalize(hk::dual::psi(z));
        CHECK(hk::lambda::differential(c).is_zero());
    }
    for (const auto& z : hk::dual::primitives(3, 7)) {
        auto c = hk::lambda::adem_normalize(hk::dual::psi(z));
        CHECK(hk::lambda::differential(c).is_zero());
    }
}

TEST_CASE("transfer witness fixture passes and corruptions fail") {
    auto w = hk::fixtures::load_witness(hk::fixtures::default_dir());
    REQUIRE(w.z.terms().size() > 0);
    auto rep = hk::dual::verify_transfer_witness(w);
    CHECK(rep.z_annihilated);
    CHECK(rep.pairing_one);
    CHECK(rep.psi_cycle);
    CHECK(rep.psi_matches);
    CHECK(rep.ext_dim_one);

    // negative control: dropping one term of Z breaks annihilation
    auto corrupt = w;
    corrupt.z.toggle(corrupt.z.terms().front());
    auto rep2 = hk::dual::verify_transfer_witness(corrupt);
    CHECK_FALSE(rep2.z_annihilated);

    // negative control: a hit polynomial pairs to zero with every primitive
    auto corrupt2 = w;
    corrupt2.q2 = hk::sq(1, Polynomial::from_monomial(Monomial({1, 2, 4, 7, 6})));
    REQUIRE(corrupt2.q2.degree() == 21);
    auto rep3 = hk::dual::verify_transfer_witness(corrupt2);
    CHECK_FALSE(rep3.pairing_one);
}

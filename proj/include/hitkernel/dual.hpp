#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitkernel/gf2.hpp"
#include "hitkernel/lambda.hpp"
#include "hitkernel/poly.hpp"

namespace hk::dual {

/// a_1^{(j_1)} ... a_d^{(j_d)}; the exponent vector of the dual monomial.
struct DividedMonomial {
    std::vector<std::uint32_t> orders;

    std::size_t arity() const { return orders.size(); }
    std::uint64_t degree() const {
        std::uint64_t s = 0;
        for (auto j : orders) s += j;
        return s;
    }
    bool operator==(const DividedMonomial& o) const { return orders == o.orders; }
    bool operator<(const DividedMonomial& o) const { return orders < o.orders; }
};

/// Homogeneous F_2 sum of divided monomials.
class DividedElement {
public:
    DividedElement() = default;
    explicit DividedElement(std::vector<DividedMonomial> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<DividedMonomial>& terms() const { return terms_; }
    void toggle(const DividedMonomial& m);
    DividedElement& operator+=(const DividedElement& o);
    bool operator==(const DividedElement& o) const { return terms_ == o.terms_; }

private:
    std::vector<DividedMonomial> terms_;  // sorted
};

/// Right Steenrod action (a^{(j)}) Sq^k = C(j-k, k) a^{(j-k)}, Cartan-extended
/// over the factors. Degree drops by k.
DividedElement dual_sq(std::uint64_t k, const DividedElement& e);
DividedElement dual_sq(std::uint64_t k, const DividedMonomial& m);

/// Kronecker pairing against the monomial basis of P_d.
int pairing(const DividedElement& e, const Polynomial& p);

/// Basis of the subspace annihilated by every positive dual operation,
/// computed as the common kernel of the Sq^{2^i} (the spans agree with the
/// all-k family). Dimension equals dim (Q P_d)_n.
std::vector<DividedElement> primitives(std::size_t d, std::uint64_t n,
                                       bool all_k = false, gf2::Budget budget = {});

/// a^{(s)} -> a^{(2s+1)} factorwise; degree n -> 2n + d.
DividedMonomial dual_kameko(const DividedMonomial& m);
DividedElement dual_kameko(const DividedElement& e);

/// Chain-level representation of the Singer transfer:
/// psi_1(a^{(j)}) = lambda_j and
/// psi_d(a^J) = sum over t >= j_d of psi_{d-1}(prefix Sq^{t-j_d}) lambda_t,
/// the sum truncating once Sq^{t-j_d} kills the prefix.
lambda::Element psi(const DividedElement& e);
lambda::Element psi(const DividedMonomial& m);

struct WitnessReport {
    bool z_annihilated = false;        // (1) Sq^k Z = 0 for 1 <= k <= deg
    bool pairing_one = false;          // (2) <Z, q2> = 1
    bool psi_cycle = false;            // (3) d(psi_5(Z)) = 0
    bool psi_matches = false;          // (4) nf(psi_5(Z)) = nf(l3 f0bar + d(bounding))
    bool ext_dim_one = false;          // (5) H^{5,21} = 1
    bool all() const {
        return z_annihilated && pairing_one && psi_cycle && psi_matches && ext_dim_one;
    }
};

struct WitnessData {
    DividedElement z;
    Polynomial q2;
    lambda::Element f0bar;
    lambda::Word bounding;
};

WitnessReport verify_transfer_witness(const WitnessData& w);

}  // namespace hk::dual

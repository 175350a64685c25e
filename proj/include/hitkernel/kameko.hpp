#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hitkernel/hitspace.hpp"
#include "hitkernel/poly.hpp"

namespace hk {

/// n = r(2^t - 1) + 2^t s.
inline std::uint64_t generic_degree(std::uint64_t r, std::uint64_t s, std::uint64_t t) {
    return r * ((std::uint64_t(1) << t) - 1) + (std::uint64_t(1) << t) * s;
}

inline unsigned mu_of_generic(std::uint64_t r, std::uint64_t s, std::uint64_t t) {
    return mu(generic_degree(r, s, t));
}

/// Halve-all-odd-exponents map (P_d)_{2n+d} -> (P_d)_n on monomials; zero
/// when any exponent is even. Degree must satisfy deg = d (mod 2) shape.
std::optional<Monomial> kameko_down(const Monomial& m);
Polynomial kameko_down(const Polynomial& p);

/// Double-and-add-one; section of kameko_down.
Monomial kameko_up(const Monomial& m);

struct KamekoKernel {
    std::size_t d = 0;
    std::uint64_t low_degree = 0;   // n
    std::uint64_t high_degree = 0;  // 2n + d
    std::vector<Monomial> kernel;   // admissible monomials at 2n+d whose image is hit
    bool surjective = false;        // images of the rest span (Q P_d)_n
    std::size_t high_dim = 0;
    std::size_t low_dim = 0;
};

/// Kernel of the induced map (Q P_d)_{2n+d} -> (Q P_d)_n, computed on normal
/// forms; also verifies surjectivity rather than assuming it.
KamekoKernel kernel_kameko_basis(Workspace& ws, std::size_t d, std::uint64_t n);

}  // namespace hk

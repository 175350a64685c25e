#pragma once

#include <cstdint>
#include <vector>

#include "hitkernel/hitspace.hpp"
#include "hitkernel/poly.hpp"

namespace hk {

/// Variable-insertion algebra map P_{d-1} -> P_d: x_j -> x_j for j < k,
/// x_j -> x_{j+1} for j >= k (1-based k, 1 <= k <= d).
Monomial rho_monomial(std::size_t k, std::size_t d, const Monomial& m);
Polynomial rho(std::size_t k, std::size_t d, const Polynomial& p);

/// Index data (k; K) with 1 <= k < k_1 < ... < k_r <= d, 0 <= r < d.
struct PiIndex {
    std::size_t k = 1;
    std::vector<std::size_t> K;
};

bool valid_pi_index(const PiIndex& idx, std::size_t d);
std::vector<PiIndex> all_pi_indices(std::size_t d, bool nonempty_only);

/// Projection P_d -> P_{d-1}: x_j -> x_j (j < k), x_k -> sum of x_{p-1} over
/// p in K, x_j -> x_{j-1} (j > k). A section of rho: pi(rho(u)) = u.
Polynomial pi(const PiIndex& idx, std::size_t d, const Polynomial& p);

/// Sum's linear lift phi_(k;K): P_{d-1} -> P_d on monomials; zero when the
/// exponent-bit conditions fail. Preserves weight vectors when nonzero.
/// Empty K falls back to rho.
Monomial phi(const PiIndex& idx, std::size_t d, const Monomial& m);  // zero => arity 0 sentinel

/// Union of phi images of a monomial set: rho images (the P^0 part) plus
/// nonzero phi images with all exponents positive (the P^+ part).
std::vector<Monomial> phi_bar(std::size_t d, const std::vector<Monomial>& u);

struct ConjectureReport {
    bool holds = true;
    WeightVector omega;
    std::vector<Monomial> violations;   // images not admissible in P_d
    std::size_t image_size = 0;
};

/// Checks the admissible-image inclusion for one weight vector: every element
/// of phi_bar(B_{d-1}(omega)) lies in B_d(omega).
ConjectureReport check_sum_conjecture(Workspace& ws, std::size_t d, const WeightVector& omega);

}  // namespace hk

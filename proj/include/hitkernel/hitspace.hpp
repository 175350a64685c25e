#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hitkernel/gf2.hpp"
#include "hitkernel/poly.hpp"

namespace hk {

enum class GeneratorPolicy { PowersOfTwo, AllK };

std::string to_string(GeneratorPolicy p);
GeneratorPolicy parse_policy(const std::string& s);

/// The subspace A_2^+ P_d in one degree, as a reduced basis over the degree
/// enumeration. Pivot convention makes the non-pivot coordinates exactly the
/// admissible monomials.
class HitSpace {
public:
    /// Builds span{ Sq^k(g) } over the policy's k-range and all monomials g
    /// of degree n - k. With the default policy k runs over powers of two,
    /// which generate the same span since every other Sq^k is decomposable.
    HitSpace(std::size_t d, std::uint64_t n, GeneratorPolicy policy, gf2::Budget budget,
             bool parallel = true);

    std::size_t d() const { return d_; }
    std::uint64_t n() const { return n_; }
    GeneratorPolicy policy() const { return policy_; }
    const Enumeration& enumeration() const { return enum_; }
    const gf2::ReducedBasis& basis() const { return basis_; }
    std::size_t rank() const { return basis_.rank(); }

    /// dim (Q P_d)_n = monomial count minus hit rank.
    std::size_t quotient_dim() const { return enum_.size() - basis_.rank(); }

    bool hit_test(const Polynomial& p) const;
    Polynomial normal_form_q(const Polynomial& p) const;

    gf2::Vector to_vector(const Polynomial& p) const;
    Polynomial to_polynomial(const gf2::Vector& v) const;

private:
    std::size_t d_;
    std::uint64_t n_;
    GeneratorPolicy policy_;
    Enumeration enum_;
    gf2::ReducedBasis basis_;
};

struct AdmissibleBasis {
    std::size_t d = 0;
    std::uint64_t n = 0;
    std::vector<Monomial> monomials;           // ascending enumeration order
    std::vector<WeightVector> weights;         // parallel to monomials
    std::size_t hit_rank = 0;

    std::size_t size() const { return monomials.size(); }
};

AdmissibleBasis admissible_basis(const HitSpace& h);

/// Partition into monomials with a zero exponent (B0) and all positive (B+).
std::pair<AdmissibleBasis, AdmissibleBasis> split_q0_qplus(const AdmissibleBasis& b);

struct OmegaStratum {
    WeightVector omega;
    std::size_t dim = 0;
    std::vector<Monomial> basis;  // admissible monomials of weight exactly omega
};

/// dim Q P_d(omega) = dim P_d(omega) - dim((hit ∩ P_d(omega)) + P_d^-(omega)),
/// computed from the full-degree hit space; the stratum basis consists of the
/// admissible monomials of weight exactly omega.
OmegaStratum q_omega(const HitSpace& h, const WeightVector& omega);

/// All weight vectors realised by monomials of degree n in d variables, in
/// increasing left-lex order.
std::vector<WeightVector> weights_of_degree(std::size_t d, std::uint64_t n);

/// Caches hit spaces per (d, n, policy) so cross-degree operations (Kameko
/// kernels, invariants, the Q0 dimension formula) reuse eliminations.
class Workspace {
public:
    explicit Workspace(gf2::Budget budget = {}, GeneratorPolicy policy = GeneratorPolicy::PowersOfTwo,
                       bool parallel = true)
        : budget_(budget), policy_(policy), parallel_(parallel) {}

    const HitSpace& hit(std::size_t d, std::uint64_t n);
    const AdmissibleBasis& admissible(std::size_t d, std::uint64_t n);

    GeneratorPolicy policy() const { return policy_; }
    gf2::Budget budget() const { return budget_; }
    bool parallel() const { return parallel_; }

private:
    gf2::Budget budget_;
    GeneratorPolicy policy_;
    bool parallel_;
    std::map<std::pair<std::size_t, std::uint64_t>, std::unique_ptr<HitSpace>> spaces_;
    std::map<std::pair<std::size_t, std::uint64_t>, AdmissibleBasis> bases_;
};

/// dim (Q P_d^0)_n = sum over 1 <= r < d of C(d,r) * dim (Q P_r^+)_n.
std::uint64_t dim_q0_formula(Workspace& ws, std::size_t d, std::uint64_t n);

}  // namespace hk

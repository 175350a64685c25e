#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitkernel/gf2.hpp"
#include "hitkernel/hitspace.hpp"
#include "hitkernel/poly.hpp"

namespace hk {

enum class Group { Sym, GL };

Group parse_group(const std::string& s);

/// Linear substitution x_j -> sum of the variables in images[j] (bitmask
/// over variables, bit i = x_{i+1}).
struct Substitution {
    std::vector<std::uint32_t> images;

    std::size_t arity() const { return images.size(); }
    static Substitution identity(std::size_t d);
    bool is_invertible() const;
};

/// Adjacent transpositions tau_1..tau_{d-1}; for GL additionally the
/// transvection tau_d: x_1 -> x_1 + x_2.
std::vector<Substitution> standard_generators(std::size_t d, Group g);

Polynomial apply_substitution(const Substitution& s, const Polynomial& p);
Polynomial apply_substitution(const Substitution& s, const Monomial& m);

/// Matrix of the induced action on (Q P_d)_n in admissible coordinates:
/// column j holds the normal form of s(basis_j).
gf2::Matrix action_matrix_on_q(const HitSpace& h, const AdmissibleBasis& basis,
                               const Substitution& s);

/// Basis of the fixed subspace of (Q P_d)_n under the group generated by the
/// standard generators, as normal-form polynomials.
std::vector<Polynomial> invariants_q(Workspace& ws, std::size_t d, std::uint64_t n, Group g);

/// Fixed classes supported on a sub-list of the admissible basis. The span
/// of the sub-list must be closed under the induced action.
std::vector<Polynomial> invariants_on_subspace(Workspace& ws, std::size_t d, std::uint64_t n,
                                               Group g, const std::vector<Monomial>& subspace);

}  // namespace hk

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitkernel/dual.hpp"
#include "hitkernel/poly.hpp"

namespace hk::fixtures {

/// FNV-1a over a canonical serialization; used to pin fixture and cache
/// payloads against silent edits or truncation.
std::uint64_t fnv1a(const std::string& payload);
std::string hash_hex(const std::string& payload);

/// Directory containing the fixture JSON files. Honors HITKERNEL_FIXTURES,
/// then the compiled-in default.
std::string default_dir();

struct GoldenBasis {
    std::size_t d = 0;
    std::uint64_t n = 0;
    std::vector<Monomial> monomials;
};

/// Loads fixtures/<name>.json of shape {"d":..,"n":..,"monomials":[[..]..],
/// "hash":".."}; throws on a hash or schema mismatch.
GoldenBasis load_golden_basis(const std::string& dir, const std::string& name);

/// Transfer-witness data: Z, q2, f0bar and the bounding word.
dual::WitnessData load_witness(const std::string& dir);

}  // namespace hk::fixtures
